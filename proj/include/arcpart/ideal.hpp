#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arcpart/monomial.hpp"

namespace arcpart {

enum class IdealFamily {
  zero,      // no generators
  gordon,    // I_{r,i} = (x_1^i, x_j^{r-n} x_{j+1}^n : j >= 1, 0 <= n <= r-1)
  new_part,  // I'_{r,i}, from the block construction with a one-integer first block
  j_ideal,   // J_k^l in k[x_k, x_{k+1}, ...]
  block,     // block ideal with r blocks, c integers in the first block, variables from x_m
  custom,    // produced by colon/sum or given explicitly
};

/// Parameters shared by the families. `a` is i (gordon, new_part), l (j_ideal)
/// or c (block); `b` is k (j_ideal) or m (block).
struct IdealParams {
  int r = 2;
  int a = 1;
  int b = 1;
};

/// A monomial ideal known through its minimal generators of weight <= W.
///
/// The ring is k[x_s, x_{s+1}, ...] with s = min_variable(); generators only
/// involve those variables. Families whose membership has a closed
/// combinatorial description also carry it as an intrinsic predicate.
class MonomialIdeal {
public:
  using Membership = std::function<bool(const Partition&)>;

  MonomialIdeal(IdealFamily family, IdealParams params, int weight_bound, int min_variable,
                std::vector<Monomial> generators, Membership intrinsic = {});

  IdealFamily family() const noexcept { return family_; }
  const IdealParams& params() const noexcept { return params_; }
  int weight_bound() const noexcept { return weight_bound_; }
  int min_variable() const noexcept { return min_variable_; }
  /// Minimal generators sorted by weight, then storage order.
  const std::vector<Monomial>& generators() const noexcept { return generators_; }

  /// Divisibility by some generator; meaningful for weight <= weight_bound().
  bool contains(const Monomial& m) const;
  /// The family's own membership rule, if it has one.
  std::optional<bool> intrinsic_contains(const Monomial& m) const;
  bool has_intrinsic() const noexcept { return static_cast<bool>(intrinsic_); }

  /// (I : f), generated by g / gcd(g, f).
  MonomialIdeal colon(const Monomial& f) const;
  /// (I, f_1, ..., f_k).
  MonomialIdeal sum(const std::vector<Monomial>& extra) const;

  std::string describe() const;

private:
  IdealFamily family_;
  IdealParams params_;
  int weight_bound_;
  int min_variable_;
  std::vector<Monomial> generators_;
  Membership intrinsic_;
};

MonomialIdeal zero_ideal(int weight_bound, int min_variable = 1);
MonomialIdeal gordon_ideal(int r, int i, int weight_bound);
MonomialIdeal new_part_ideal(int r, int i, int weight_bound);
/// J_k^l = (x_k^l, x_k^{l-s} x_{k+1}^{r-l+s} (1 <= s <= l-1), J_{k+1}) with
/// J_{k+1} = (x_t^{r-n} x_{t+1}^n : t >= k+1, 0 <= n <= r-1).
MonomialIdeal j_ideal(int r, int l, int k, int weight_bound);
MonomialIdeal block_ideal(int r, int c, int m, int weight_bound);
MonomialIdeal custom_ideal(std::vector<Monomial> generators, int weight_bound, int min_variable = 1);

/// Dispatches on the family tag.
MonomialIdeal ideal_generators(IdealFamily family, const IdealParams& params, int weight_bound);

std::string to_string(IdealFamily f);
IdealFamily parse_ideal_family(const std::string& s);

}  // namespace arcpart
