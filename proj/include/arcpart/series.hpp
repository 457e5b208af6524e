#pragma once

#include <span>
#include <string>
#include <vector>

#include "arcpart/integer.hpp"

namespace arcpart {

/// A formal power series c_0 + c_1 q + ... + c_N q^N taken modulo q^{N+1}.
///
/// Binary operations return a series at the smaller of the two orders, so an
/// equality between two results is always an exact statement about the
/// coefficients both operands actually know.
class TruncatedSeries {
public:
  /// The zero series at order N.
  explicit TruncatedSeries(int order = 0);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncatedSeries(int order, std::vector<Integer> coeffs);

  static TruncatedSeries one(int order);
  /// coeff * q^exponent (zero when exponent > order).
  static TruncatedSeries monomial(int exponent, int order, const Integer& coeff = 1);
  static TruncatedSeries from_ints(int order, std::initializer_list<long> coeffs);

  int order() const noexcept { return order_; }
  const Integer& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const Integer> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  /// Index of the first nonzero coefficient, or order()+1 when zero.
  int valuation() const;

  /// Same series viewed at a smaller order.
  TruncatedSeries restrict(int new_order) const;
  /// Multiply by q^s (s >= 0).
  TruncatedSeries shift(int s) const;
  /// Divide by q^s; the first s coefficients must vanish. The result has order N - s.
  /// Throws std::domain_error on a nonzero remainder.
  TruncatedSeries divide_by_q_power(int s) const;
  TruncatedSeries scale(const Integer& factor) const;
  /// Multiplicative inverse; requires constant term +-1.
  TruncatedSeries invert_unit() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  /// this += coeff * q^s * rhs, keeping this series' order (rhs must reach order() - s).
  void add_shifted(const TruncatedSeries& rhs, int s, const Integer& coeff = 1);

  /// In-place multiplication by 1/(1 - q^d).
  void divide_by_one_minus_q_power(int d);
  /// In-place multiplication by (1 - q^d).
  void multiply_by_one_minus_q_power(int d);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

  std::string to_string() const;

private:
  int order_;
  std::vector<Integer> coeffs_;
};

/// First index at which the two series differ (both restricted to the common
/// order), or -1 if they agree.
int first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

}  // namespace arcpart
