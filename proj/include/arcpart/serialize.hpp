#pragma once

#include "arcpart/ideal.hpp"
#include "arcpart/leading_ideal.hpp"
#include "arcpart/partition.hpp"
#include "arcpart/report.hpp"
#include "arcpart/series.hpp"

namespace arcpart {

/// {"order": N, "coeffs": ["c0", "c1", ...]} with decimal strings.
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

/// Parts as an array, largest first.
Json to_json(const Partition& p);
/// The monomial's partition.
Json to_json(const Monomial& m);
Json to_json(const std::vector<Monomial>& ms);

/// {family, params, weight_bound, min_variable, generators}
Json to_json(const MonomialIdeal& ideal);

/// {r, order, max_weight, generators, candidate_diff: {missing, extra}}
Json to_json(const LeadingIdealResult& res, const CandidateDiff& diff);

}  // namespace arcpart
