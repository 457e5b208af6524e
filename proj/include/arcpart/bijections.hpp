#pragma once

#include <stdexcept>
#include <string>

#include "arcpart/partition.hpp"

namespace arcpart {

/// The explicit bijections behind the Andrews-type systems.
///
///  rr_second_eq  c_2^k(m,n) \ c_1^k(m,n)  ->  c_1^k(m-1, n-m-k+1)   delete the last part m+k-1
///  rr_shift      c_1^k(m,n)               ->  c_2^k(m, n-m)         subtract 1 from each part
///  g3_second_eq  C_3(m,n) \ C_2(m,n)      ->  C_1(m-2, n-m)         remove lambda_m and lambda_{m-lambda_m}
///  g3_third_eq   C_2(m,n) \ C_1(m,n)      ->  C_2(m-1, n-m)         three-case map
///  g3_fourth_eq  C_1(m,n)                 ->  C_3(m, n-m)           subtract 1 from each part
///
/// where C_i = partitions counted by the r = 3 new-part condition.
enum class BijectionName { rr_second_eq, rr_shift, g3_second_eq, g3_third_eq, g3_fourth_eq };
enum class Direction { forward, inverse };

/// Input outside the source set of the requested map.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

struct BijectionParams {
  int k = 1;  // rr_* maps only
};

/// Source set of the forward map, as characterized by the case analysis of
/// the combinatorial proof (not by new parts).
bool in_domain(BijectionName name, const Partition& p, const BijectionParams& params = {});
/// Source set of the inverse map, i.e. the counted set on the right-hand side.
bool in_codomain(BijectionName name, const Partition& p, const BijectionParams& params = {});

/// Applies the map. Throws DomainError when the input is not in the source set.
Partition bijection_apply(BijectionName name, Direction dir, const Partition& p,
                          const BijectionParams& params = {});

/// (weight, length) of the image of a source partition of the given weight and length.
std::pair<int, int> image_shape(BijectionName name, int weight, int length,
                                const BijectionParams& params = {});

/// Which of the three cases of g3_third_eq applies (1, 2 or 3); 0 if none.
int g3_third_case(const Partition& p);

std::string to_string(BijectionName name);
BijectionName parse_bijection(const std::string& s);
inline constexpr BijectionName all_bijections[] = {
    BijectionName::rr_second_eq, BijectionName::rr_shift, BijectionName::g3_second_eq,
    BijectionName::g3_third_eq, BijectionName::g3_fourth_eq};

}  // namespace arcpart
