#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "arcpart/integer.hpp"
#include "arcpart/monomial.hpp"

namespace arcpart {

/// A polynomial in x_1, x_2, ... with integer coefficients, acted on by the
/// derivation D(x_v) = x_{v+1}.
class DiffPolynomial {
public:
  DiffPolynomial() = default;
  explicit DiffPolynomial(const Monomial& m, const Integer& coeff = 1);

  void add_term(const Monomial& m, const Integer& coeff);
  const std::map<Monomial, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// The common weight of all terms, or nullopt if the terms differ in weight
  /// (the zero polynomial has no weight).
  std::optional<int> weight() const;

  /// One application of D, by the Leibniz rule.
  DiffPolynomial derive() const;
  DiffPolynomial operator*(const Monomial& m) const;
  DiffPolynomial& operator+=(const DiffPolynomial& rhs);

  std::string to_string() const;
  friend bool operator==(const DiffPolynomial&, const DiffPolynomial&) = default;

private:
  std::map<Monomial, Integer> terms_;  // no zero coefficients
};

/// D^j(f).
DiffPolynomial derive(const DiffPolynomial& f, int j);

enum class OrderTag {
  wlex,     // weight, then the first differing exponent from x_1; larger exponent is larger
  wrevlex,  // weight, then the last differing exponent; larger exponent is smaller
};

/// Total order on monomials.
std::strong_ordering compare(OrderTag order, const Monomial& a, const Monomial& b);

std::string to_string(OrderTag t);
OrderTag parse_order(const std::string& s);

}  // namespace arcpart
