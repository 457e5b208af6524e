#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the enumeration, predicate or series code under test.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Parts = std::vector<int>;  // largest first

/// p(0..n) by Euler's pentagonal recurrence.
inline std::vector<mpz_class> euler_partition_counts(int n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(n) + 1);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    mpz_class acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m)
        break;
      const int sign = (k % 2) ? 1 : -1;
      acc += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m)
        acc += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = acc;
  }
  return p;
}

/// All partitions of n, plain recursion with no pruning.
inline void partitions_rec(int rest, int cap, Parts& cur, std::vector<Parts>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = std::min(rest, cap); a >= 1; --a) {
    cur.push_back(a);
    partitions_rec(rest - a, a, cur, out);
    cur.pop_back();
  }
}
inline std::vector<Parts> all_partitions(int n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

/// lambda_j with 1-based j counted from the largest part, 0 for j <= 0.
inline int lam(const Parts& p, int j) { return j <= 0 ? 0 : p[static_cast<std::size_t>(j - 1)]; }

inline bool gordon_b(const Parts& p, int r, int i) {
  const int m = static_cast<int>(p.size());
  for (int j = 1; j + r - 1 <= m; ++j)
    if (lam(p, j) - lam(p, j + r - 1) < 2)
      return false;
  return std::count(p.begin(), p.end(), 1) <= i - 1;
}

inline bool congruence_a(const Parts& p, int r, int i) {
  const int mod = 2 * r + 1;
  for (int x : p) {
    const int res = x % mod;
    if (res == 0 || res == i || res == mod - i)
      return false;
  }
  return true;
}

/// New parts p_{i,1..r} straight from the index formulas.
inline std::vector<int> new_parts(const Parts& p, int r, int i) {
  const int m = static_cast<int>(p.size());
  std::vector<int> v;
  int sum = 0;
  bool dead = false;
  for (int l = 1; l <= r; ++l) {
    int val = 0;
    if (!dead)
      val = l == 1    ? lam(p, m)
            : l <= i  ? lam(p, m - sum)
                      : lam(p, m + l - i - sum);
    if (val == 0)
      dead = true;
    v.push_back(val);
    sum += val;
  }
  return v;
}

inline bool c_remark(const Parts& p, int r, int i) {
  const std::vector<int> v = new_parts(p, r, i);
  return std::find(v.begin(), v.end(), 0) != v.end();
}

inline bool c_conjecture(const Parts& p, int r, int i) {
  if (std::count(p.begin(), p.end(), 1) > i - 1)
    return false;
  const std::vector<int> v = new_parts(p, r, i);
  int nonzero = 0, sum = 0;
  for (int l = 0; l < r - 1; ++l) {
    nonzero += v[static_cast<std::size_t>(l)] != 0;
    sum += v[static_cast<std::size_t>(l)];
  }
  if (nonzero < r - 1)
    return true;
  return static_cast<int>(p.size()) <= sum - (r - i);
}

inline mpz_class count_if(int n, const std::function<bool(const Parts&)>& pred) {
  mpz_class c = 0;
  for (const Parts& p : all_partitions(n))
    c += pred(p) ? 1 : 0;
  return c;
}

/// Number of partitions of 0..n into parts accepted by `allowed` (coin-change DP).
inline std::vector<mpz_class> restricted_partition_counts(int n,
                                                          const std::function<bool(int)>& allowed) {
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1);
  c[0] = 1;
  for (int part = 1; part <= n; ++part)
    if (allowed(part))
      for (int w = part; w <= n; ++w)
        c[static_cast<std::size_t>(w)] += c[static_cast<std::size_t>(w - part)];
  return c;
}

using Poly = std::vector<mpz_class>;  // coefficients, truncated by the caller

/// Gaussian binomial by the Pascal recurrence [n,j] = [n-1,j-1] + q^j [n-1,j].
inline Poly q_binomial(int n, int j) {
  if (j < 0 || j > n)
    return {};
  if (j == 0 || j == n)
    return {1};
  const Poly a = q_binomial(n - 1, j - 1), b = q_binomial(n - 1, j);
  Poly out(std::max(a.size(), b.size() + static_cast<std::size_t>(j)));
  for (std::size_t k = 0; k < a.size(); ++k)
    out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k)
    out[k + static_cast<std::size_t>(j)] += b[k];
  return out;
}

// Sparse differential polynomials keyed by exponent vectors (index 0 = x_1).
using Exps = std::vector<int>;
using DPoly = std::map<Exps, mpz_class>;

inline void trim(Exps& e) {
  while (!e.empty() && e.back() == 0)
    e.pop_back();
}

/// D(x_v) = x_{v+1}, extended by Leibniz.
inline DPoly derive(const DPoly& f) {
  DPoly out;
  for (const auto& [e, c] : f)
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) {
        Exps g = e;
        g.resize(std::max(g.size(), v + 2));
        g[v] -= 1;
        g[v + 1] += 1;
        trim(g);
        out[g] += c * e[v];
      }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline int weight(const Exps& e) {
  int w = 0;
  for (std::size_t v = 0; v < e.size(); ++v)
    w += static_cast<int>(v + 1) * e[v];
  return w;
}

/// Leading exponent vectors of the weight-n piece of [x_1^r], by exact
/// rational Gauss-Jordan elimination. `greater(a, b)` is the monomial order.
inline std::vector<Exps> leading_monomials(int r, int n,
                                           const std::function<bool(const Exps&, const Exps&)>& greater) {
  std::vector<Exps> basis;
  for (const Parts& p : all_partitions(n)) {
    Exps e;
    for (int x : p) {
      if (static_cast<int>(e.size()) < x)
        e.resize(static_cast<std::size_t>(x));
      e[static_cast<std::size_t>(x - 1)] += 1;
    }
    basis.push_back(e);
  }
  std::sort(basis.begin(), basis.end(), greater);  // column 0 is the largest
  std::map<Exps, std::size_t> col;
  for (std::size_t k = 0; k < basis.size(); ++k)
    col[basis[k]] = k;

  std::vector<std::vector<mpq_class>> rows;
  DPoly f{{Exps{r}, 1}};
  for (int j = 0; j <= n - r; ++j, f = derive(f)) {
    for (const Parts& p : all_partitions(n - r - j)) {
      std::vector<mpq_class> row(basis.size());
      for (const auto& [e, c] : f) {
        Exps g = e;
        for (int x : p) {
          if (static_cast<int>(g.size()) < x)
            g.resize(static_cast<std::size_t>(x));
          g[static_cast<std::size_t>(x - 1)] += 1;
        }
        trim(g);
        row[col.at(g)] += c;
      }
      rows.push_back(std::move(row));
    }
  }
  std::vector<Exps> leads;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < basis.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != rank && rows[k][c] != 0) {
        const mpq_class factor = rows[k][c] / rows[rank][c];
        for (std::size_t t = c; t < basis.size(); ++t)
          rows[k][t] -= factor * rows[rank][t];
      }
    leads.push_back(basis[c]);
    ++rank;
  }
  return leads;
}

/// Weighted lex: weight first, then the first differing exponent from x_1, larger wins.
inline bool wlex_greater(const Exps& a, const Exps& b) {
  if (weight(a) != weight(b))
    return weight(a) > weight(b);
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t v = 0; v < len; ++v) {
    const int x = v < a.size() ? a[v] : 0, y = v < b.size() ? b[v] : 0;
    if (x != y)
      return x > y;
  }
  return false;
}

/// Weighted revlex: weight first, then the last differing exponent, smaller wins.
inline bool wrevlex_greater(const Exps& a, const Exps& b) {
  if (weight(a) != weight(b))
    return weight(a) > weight(b);
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t v = len; v-- > 0;) {
    const int x = v < a.size() ? a[v] : 0, y = v < b.size() ? b[v] : 0;
    if (x != y)
      return x < y;
  }
  return false;
}

}  // namespace oracle
