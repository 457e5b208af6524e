#include "arcpart/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcpart {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0)
    throw std::invalid_argument("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Integer> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0)
    throw std::invalid_argument("series order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1, Integer(0));
}

TruncatedSeries TruncatedSeries::one(int order) { return monomial(0, order); }

TruncatedSeries TruncatedSeries::monomial(int exponent, int order, const Integer& coeff) {
  TruncatedSeries s(order);
  if (exponent < 0)
    throw std::invalid_argument("negative exponent in a power series");
  if (exponent <= order)
    s.coeffs_[static_cast<std::size_t>(exponent)] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::from_ints(int order, std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  for (long c : coeffs)
    v.emplace_back(c);
  return {order, std::move(v)};
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

int TruncatedSeries::valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0)
      return k;
  return order_ + 1;
}

TruncatedSeries TruncatedSeries::restrict(int new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("cannot raise the order of a truncated series");
  return {new_order, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_order + 1)};
}

TruncatedSeries TruncatedSeries::shift(int s) const {
  TruncatedSeries out(order_);
  out.add_shifted(*this, s);
  return out;
}

TruncatedSeries TruncatedSeries::divide_by_q_power(int s) const {
  if (s < 0 || s > order_)
    throw std::domain_error("cannot divide by q^" + std::to_string(s) + " at order " +
                            std::to_string(order_));
  for (int k = 0; k < s; ++k)
    if (coeffs_[static_cast<std::size_t>(k)] != 0)
      throw std::domain_error("division by q^" + std::to_string(s) +
                              " leaves a nonzero remainder at q^" + std::to_string(k));
  return {order_ - s, std::vector<Integer>(coeffs_.begin() + s, coeffs_.end())};
}

TruncatedSeries TruncatedSeries::scale(const Integer& factor) const {
  TruncatedSeries out(*this);
  for (auto& c : out.coeffs_)
    c *= factor;
  return out;
}

TruncatedSeries TruncatedSeries::invert_unit() const {
  const Integer& c0 = coeffs_[0];
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("invert_unit: constant term must be +-1");
  // c0 is its own inverse
  TruncatedSeries inv(order_);
  inv.coeffs_[0] = c0;
  Integer acc;
  for (int k = 1; k <= order_; ++k) {
    acc = 0;
    for (int j = 1; j <= k; ++j)
      acc += coeffs_[static_cast<std::size_t>(j)] * inv.coeffs_[static_cast<std::size_t>(k - j)];
    inv.coeffs_[static_cast<std::size_t>(k)] = -acc * c0;
  }
  return inv;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  if (rhs.order_ < order_)
    *this = restrict(rhs.order_);
  for (int k = 0; k <= order_; ++k)
    coeffs_[static_cast<std::size_t>(k)] += rhs.coeffs_[static_cast<std::size_t>(k)];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  if (rhs.order_ < order_)
    *this = restrict(rhs.order_);
  for (int k = 0; k <= order_; ++k)
    coeffs_[static_cast<std::size_t>(k)] -= rhs.coeffs_[static_cast<std::size_t>(k)];
  return *this;
}

void TruncatedSeries::add_shifted(const TruncatedSeries& rhs, int s, const Integer& coeff) {
  if (s < 0)
    throw std::invalid_argument("negative shift");
  if (s > order_)
    return;
  if (rhs.order_ < order_ - s)
    throw std::invalid_argument("add_shifted: operand order too small for the target");
  for (int k = s; k <= order_; ++k)
    coeffs_[static_cast<std::size_t>(k)] += coeff * rhs.coeffs_[static_cast<std::size_t>(k - s)];
}

void TruncatedSeries::divide_by_one_minus_q_power(int d) {
  if (d < 1)
    throw std::invalid_argument("1/(1-q^d) needs d >= 1");
  for (int k = d; k <= order_; ++k)
    coeffs_[static_cast<std::size_t>(k)] += coeffs_[static_cast<std::size_t>(k - d)];
}

void TruncatedSeries::multiply_by_one_minus_q_power(int d) {
  if (d < 1)
    throw std::invalid_argument("(1-q^d) needs d >= 1");
  for (int k = order_; k >= d; --k)
    coeffs_[static_cast<std::size_t>(k)] -= coeffs_[static_cast<std::size_t>(k - d)];
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order_, b.order_);
  TruncatedSeries out(n);
  for (int i = 0; i <= n; ++i) {
    const Integer& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai == 0)
      continue;
    for (int j = 0; i + j <= n; ++j)
      out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string TruncatedSeries::to_string() const {
  std::string s;
  for (int k = 0; k <= order_; ++k) {
    const Integer& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0)
      continue;
    if (!s.empty())
      s += c > 0 ? " + " : " - ";
    else if (c < 0)
      s += "-";
    Integer mag = abs(c);
    if (k == 0 || mag != 1)
      s += mag.get_str();
    if (k >= 1)
      s += k == 1 ? "q" : "q^" + std::to_string(k);
  }
  if (s.empty())
    s = "0";
  return s + " + O(q^" + std::to_string(order_ + 1) + ")";
}

int first_difference(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (a[k] != b[k])
      return k;
  return -1;
}

}  // namespace arcpart
