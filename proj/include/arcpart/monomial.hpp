#pragma once

#include <compare>
#include <string>
#include <vector>

#include "arcpart/partition.hpp"

namespace arcpart {

/// A monomial x_1^{e_1} x_2^{e_2} ... in the variables x_v of weight v.
///
/// Exponents are stored densely with trailing zeros trimmed, so equal
/// monomials have equal storage. The monomial x_{a_1}...x_{a_k} corresponds to
/// the partition with parts a_1..a_k; weight is the partition's weight and
/// degree its length.
class Monomial {
public:
  Monomial() = default;
  /// exps[v-1] is the exponent of x_v; negative entries are rejected.
  explicit Monomial(std::vector<int> exps);
  static Monomial variable(int v, int power = 1);
  static Monomial from_partition(const Partition& p);
  Partition to_partition() const;

  int exponent(int v) const noexcept;
  /// Largest variable index present, 0 for the unit monomial.
  int max_variable() const noexcept { return static_cast<int>(exps_.size()); }
  /// Smallest variable index present, 0 for the unit monomial.
  int min_variable() const noexcept;
  int weight() const noexcept { return weight_; }
  int degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return exps_.empty(); }
  const std::vector<int>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const noexcept;
  /// this / gcd(this, f): the generator of (this) : f.
  Monomial colon(const Monomial& f) const;
  /// Requires divisor | this.
  Monomial quotient(const Monomial& divisor) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  /// Renders as x1^2*x3, or 1 for the unit monomial.
  std::string to_string() const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Storage order (a total order used for containers; not a monomial order).
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
  void trim_and_measure();
  std::vector<int> exps_;
  int weight_ = 0;
  int degree_ = 0;
};

/// Removes generators divisible by another one (and duplicates). The result
/// is sorted by weight, then storage order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

}  // namespace arcpart
