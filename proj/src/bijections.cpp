#include "arcpart/bijections.hpp"

#include <vector>

#include "arcpart/predicates.hpp"

namespace arcpart {

namespace {

long len(const Partition& p) { return static_cast<long>(p.length()); }

std::vector<int> as_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

// 1-based slice lambda_a..lambda_b (inclusive), empty when a > b
void append_range(std::vector<int>& out, const Partition& p, long a, long b, int delta = 0) {
  for (long j = a; j <= b; ++j)
    out.push_back(p.at(j) + delta);
}

bool g3_second_domain(const Partition& p) {
  const long m = len(p);
  if (m == 0)
    return false;
  const long last = p.smallest();
  return m > last && last + p.at(m - last) == m;
}

// The proof states case 1 as "lambda_m = 1, lambda_{m-1} >= m"; for m = 1
// there is no lambda_{m-1} and the partition (1) belongs to the set
// difference, so the length-one case is admitted explicitly.
int third_case(const Partition& p) {
  const long m = len(p);
  if (m == 0)
    return 0;
  const long last = p.smallest();
  if (last == 1)
    return (m == 1 || p.at(m - 1) >= m) ? 1 : 0;
  if (last >= m)
    return 0;
  const long inner = last + p.at(m - last + 1);
  const long outer = last + p.at(m - last);
  if (m + 1 > outer)
    return 0;
  if (inner == m + 1)
    return 2;
  if (inner < m + 1)
    return 3;
  return 0;
}

// The proof's characterization of C_1(m,n) assumes m >= 1; the empty
// partition is added for m = 0.
bool g3_fourth_domain(const Partition& p) {
  const long m = len(p);
  if (m == 0)
    return true;
  const long last = p.smallest();
  if (last == 1)
    return false;
  return last >= m + 1 || last + p.at(m + 1 - last) >= m + 2;
}

Partition shift_all(const Partition& p, int delta) {
  std::vector<int> v = as_vector(p);
  for (int& x : v)
    x += delta;
  return Partition(std::move(v));
}

Partition g3_second_forward(const Partition& p) {
  const long m = len(p), last = p.smallest();
  std::vector<int> v;
  for (long j = 1; j <= m - 1; ++j)
    if (j != m - last)
      v.push_back(p.at(j));
  return Partition(std::move(v));
}

Partition g3_second_inverse(const Partition& mu) {
  const long m = len(mu) + 2;
  std::vector<int> v = as_vector(mu);
  if (mu.empty() || mu.smallest() > m - 2) {
    v.push_back(static_cast<int>(m - 1));
    v.push_back(1);
    return Partition(std::move(v));
  }
  // k' = max{1 <= a <= mu_{m-2} : m - a > mu_{m-a-1}}, k = k' + 1
  long kprime = 0;
  for (long a = 1; a <= mu.smallest(); ++a)
    if (m - a > mu.at(m - a - 1))
      kprime = a;
  const long k = kprime + 1;
  v.clear();
  append_range(v, mu, 1, m - k - 1);
  v.push_back(static_cast<int>(m - k));
  append_range(v, mu, m - k, m - 2);
  v.push_back(static_cast<int>(k));
  return Partition(std::move(v));
}

Partition g3_third_forward(const Partition& p) {
  const long m = len(p), last = p.smallest();
  std::vector<int> v;
  switch (third_case(p)) {
  case 1:
    append_range(v, p, 1, m - 1, -1);
    break;
  case 2:
    append_range(v, p, 1, m - last);
    append_range(v, p, m + 2 - last, m, -1);
    break;
  case 3:
    append_range(v, p, 1, m - last, -1);
    append_range(v, p, m + 1 - last, m - 1);
    break;
  default:
    throw DomainError("g3_third_eq: partition matches none of the three cases");
  }
  return Partition(std::move(v));
}

Partition g3_third_inverse(const Partition& mu) {
  const long m = len(mu) + 1;
  std::vector<int> v;
  if (mu.empty() || mu.smallest() > m - 2) {
    v = as_vector(shift_all(mu, 1));
    v.push_back(1);
    return Partition(std::move(v));
  }
  const long u = mu.smallest();
  if (u + mu.at(m - u) <= m - 1) {
    append_range(v, mu, 1, m - 1 - u);
    v.push_back(static_cast<int>(m - u));
    append_range(v, mu, m - u, m - 1, 1);
    return Partition(std::move(v));
  }
  long k = 2;
  if (m > mu.at(m - 2) + 2) {
    // k'' = max{2 <= b <= mu_{m-1} : m > mu_{m-b} + b}, k = k'' + 1
    long kk = 2;
    for (long b = 2; b <= u; ++b)
      if (m > mu.at(m - b) + b)
        kk = b;
    k = kk + 1;
  }
  append_range(v, mu, 1, m - k, 1);
  append_range(v, mu, m - k + 1, m - 1);
  v.push_back(static_cast<int>(k));
  return Partition(std::move(v));
}

}  // namespace

int g3_third_case(const Partition& p) { return third_case(p); }

bool in_domain(BijectionName name, const Partition& p, const BijectionParams& params) {
  switch (name) {
  case BijectionName::rr_second_eq:
    return !p.empty() && p.smallest() == len(p) + params.k - 1;
  case BijectionName::rr_shift:
    return shifted_c_predicate(p, p.length(), params.k, 1);
  case BijectionName::g3_second_eq:
    return g3_second_domain(p);
  case BijectionName::g3_third_eq:
    return third_case(p) != 0;
  case BijectionName::g3_fourth_eq:
    return g3_fourth_domain(p);
  }
  return false;
}

bool in_codomain(BijectionName name, const Partition& p, const BijectionParams& params) {
  switch (name) {
  case BijectionName::rr_second_eq:
    return shifted_c_predicate(p, p.length(), params.k, 1);
  case BijectionName::rr_shift:
    return shifted_c_predicate(p, p.length(), params.k, 2);
  case BijectionName::g3_second_eq:
    return c_predicate(p, 3, 1);
  case BijectionName::g3_third_eq:
    return c_predicate(p, 3, 2);
  case BijectionName::g3_fourth_eq:
    return c_predicate(p, 3, 3);
  }
  return false;
}

Partition bijection_apply(BijectionName name, Direction dir, const Partition& p,
                          const BijectionParams& params) {
  if (params.k < 1)
    throw DomainError("bijection parameter k must be >= 1");
  const bool fwd = dir == Direction::forward;
  if (fwd ? !in_domain(name, p, params) : !in_codomain(name, p, params))
    throw DomainError(to_string(name) + (fwd ? " forward" : " inverse") + ": " + p.to_string() +
                      " is outside the source set");
  switch (name) {
  case BijectionName::rr_second_eq: {
    std::vector<int> v = as_vector(p);
    if (fwd) {
      v.pop_back();
    } else {
      v.push_back(static_cast<int>(len(p) + params.k));
    }
    return Partition(std::move(v));
  }
  case BijectionName::rr_shift:
  case BijectionName::g3_fourth_eq:
    return shift_all(p, fwd ? -1 : 1);
  case BijectionName::g3_second_eq:
    return fwd ? g3_second_forward(p) : g3_second_inverse(p);
  case BijectionName::g3_third_eq:
    return fwd ? g3_third_forward(p) : g3_third_inverse(p);
  }
  throw DomainError("unknown bijection");
}

std::pair<int, int> image_shape(BijectionName name, int weight, int length,
                                const BijectionParams& params) {
  switch (name) {
  case BijectionName::rr_second_eq:
    return {weight - length - params.k + 1, length - 1};
  case BijectionName::rr_shift:
  case BijectionName::g3_fourth_eq:
    return {weight - length, length};
  case BijectionName::g3_second_eq:
    return {weight - length, length - 2};
  case BijectionName::g3_third_eq:
    return {weight - length, length - 1};
  }
  return {weight, length};
}

std::string to_string(BijectionName name) {
  switch (name) {
  case BijectionName::rr_second_eq: return "rr_second_eq";
  case BijectionName::rr_shift: return "rr_shift";
  case BijectionName::g3_second_eq: return "g3_second_eq";
  case BijectionName::g3_third_eq: return "g3_third_eq";
  case BijectionName::g3_fourth_eq: return "g3_fourth_eq";
  }
  return "?";
}

BijectionName parse_bijection(const std::string& s) {
  for (BijectionName b : all_bijections)
    if (to_string(b) == s)
      return b;
  throw std::invalid_argument("unknown bijection '" + s + "'");
}

}  // namespace arcpart
