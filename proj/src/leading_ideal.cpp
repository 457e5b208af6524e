#include "arcpart/leading_ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "arcpart/ideal.hpp"
#include "arcpart/parallel.hpp"
#include "arcpart/partition.hpp"

namespace arcpart {

std::vector<SpanningElement> graded_ideal_spanning_set(int r, int n) {
  if (r < 1)
    throw std::invalid_argument("spanning set needs r >= 1");
  std::vector<SpanningElement> out;
  if (n < r)
    return out;
  DiffPolynomial f(Monomial::variable(1, r));
  for (int j = 0; j <= n - r; ++j) {
    if (j > 0)
      f = f.derive();
    for (const Partition& p : enumerate_partitions(n - r - j)) {
      const Monomial m = Monomial::from_partition(p);
      out.push_back({j, m, f * m});
    }
  }
  return out;
}

std::vector<Monomial> GradedEchelon::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(rows.size());
  for (const Row& row : rows)
    out.push_back(basis[static_cast<std::size_t>(row.front().first)]);
  return out;
}

namespace {

using Row = GradedEchelon::Row;

void normalize(Row& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) {
    g = gcd(g, v);
    if (g == 1)
      break;
  }
  if (row.front().second < 0)
    g = -g;
  if (g != 1)
    for (auto& [c, v] : row)
      v /= g;
}

// a * row - b * pivot, where a = pivot_lead / g and b = row_lead / g
Row eliminate(const Row& row, const Row& pivot) {
  const Integer g = gcd(row.front().second, pivot.front().second);
  const Integer a = pivot.front().second / g;
  const Integer b = row.front().second / g;
  Row out;
  out.reserve(row.size() + pivot.size());
  std::size_t x = 0, y = 0;
  while (x < row.size() || y < pivot.size()) {
    if (y == pivot.size() || (x < row.size() && row[x].first < pivot[y].first)) {
      out.emplace_back(row[x].first, a * row[x].second);
      ++x;
    } else if (x == row.size() || pivot[y].first < row[x].first) {
      out.emplace_back(pivot[y].first, -b * pivot[y].second);
      ++y;
    } else {
      Integer v = a * row[x].second - b * pivot[y].second;
      if (v != 0)
        out.emplace_back(row[x].first, std::move(v));
      ++x;
      ++y;
    }
  }
  return out;
}

}  // namespace

void sort_by_order(std::vector<Monomial>& ms, OrderTag order) {
  std::sort(ms.begin(), ms.end(),
            [order](const Monomial& a, const Monomial& b) { return compare(order, a, b) < 0; });
}

GradedEchelon graded_echelon(int r, int n, OrderTag order) {
  GradedEchelon e;
  e.r = r;
  e.weight = n;
  e.order = order;
  for (const Partition& p : enumerate_partitions(n))
    e.basis.push_back(Monomial::from_partition(p));
  std::sort(e.basis.begin(), e.basis.end(),
            [order](const Monomial& a, const Monomial& b) { return compare(order, a, b) > 0; });
  std::map<Monomial, int> column;
  for (std::size_t c = 0; c < e.basis.size(); ++c)
    column.emplace(e.basis[c], static_cast<int>(c));

  struct Pending {
    int j;
    Row row;
  };
  std::vector<Pending> pending;
  for (const SpanningElement& s : graded_ideal_spanning_set(r, n)) {
    Row row;
    for (const auto& [m, c] : s.value.terms())
      row.emplace_back(column.at(m), c);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (!row.empty())
      pending.push_back({s.j, std::move(row)});
  }
  e.spanning_size = pending.size();
  std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
    return a.row.front().first != b.row.front().first ? a.row.front().first < b.row.front().first
                                                      : a.j < b.j;
  });

  std::map<int, Row> pivots;
  for (Pending& p : pending) {
    Row row = std::move(p.row);
    normalize(row);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const int lead = row.front().first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      row = eliminate(row, it->second);
      if (!row.empty())
        normalize(row);
    }
  }
  for (auto& [c, row] : pivots)
    e.rows.push_back(std::move(row));
  return e;
}

std::vector<Monomial> leading_monomials_at_weight(int r, int n, OrderTag order) {
  return graded_echelon(r, n, order).leading_monomials();
}

LeadingIdealResult leading_ideal(int r, int max_weight, OrderTag order, unsigned workers) {
  if (r < 1 || max_weight < 0)
    throw std::invalid_argument("leading ideal needs r >= 1 and a nonnegative weight bound");
  LeadingIdealResult res;
  res.r = r;
  res.order = order;
  res.max_weight = max_weight;
  struct Piece {
    WeightSummary summary;
    std::vector<Monomial> leading;
  };
  // heaviest weights first so the largest eliminations start early
  const std::size_t count = static_cast<std::size_t>(max_weight) + 1;
  auto pieces = parallel_map<Piece>(count, workers, [&](std::size_t k) {
    const int n = max_weight - static_cast<int>(k);
    const GradedEchelon e = graded_echelon(r, n, order);
    return Piece{{n, e.basis.size(), e.rank(), e.standard_count(), e.spanning_size},
                 e.leading_monomials()};
  });
  std::reverse(pieces.begin(), pieces.end());
  std::vector<Monomial> all;
  for (Piece& p : pieces) {
    res.per_weight.push_back(p.summary);
    all.insert(all.end(), p.leading.begin(), p.leading.end());
  }
  res.generators = minimalize(std::move(all));
  sort_by_order(res.generators, order);
  return res;
}

std::vector<Monomial> leading_ideal_minimal_generators(int r, int max_weight, OrderTag order) {
  return leading_ideal(r, max_weight, order).generators;
}

std::vector<Monomial> candidate_generators(int r, int max_weight, OrderTag order) {
  std::vector<Monomial> gens = order == OrderTag::wlex
                                   ? new_part_ideal(r, r, max_weight).generators()
                                   : gordon_ideal(r, r, max_weight).generators();
  sort_by_order(gens, order);
  return gens;
}

CandidateDiff candidate_diff(const std::vector<Monomial>& computed,
                             const std::vector<Monomial>& candidate) {
  const std::set<Monomial> a(computed.begin(), computed.end());
  const std::set<Monomial> b(candidate.begin(), candidate.end());
  CandidateDiff d;
  for (const Monomial& m : computed)
    (b.count(m) ? d.shared : d.extra).push_back(m);
  for (const Monomial& m : candidate)
    if (!a.count(m))
      d.missing.push_back(m);
  return d;
}

}  // namespace arcpart
