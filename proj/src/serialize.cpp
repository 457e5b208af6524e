#include "arcpart/serialize.hpp"

#include <stdexcept>

namespace arcpart {

Json to_json(const TruncatedSeries& s) {
  Json coeffs = Json::array();
  for (const Integer& c : s.coeffs())
    coeffs.push_back(c.get_str());
  return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

TruncatedSeries series_from_json(const Json& j) {
  const int order = j.at("order").get<int>();
  const Json& cs = j.at("coeffs");
  if (!cs.is_array() || cs.size() != static_cast<std::size_t>(order) + 1)
    throw std::invalid_argument("series JSON needs order+1 coefficients");
  std::vector<Integer> v;
  for (const Json& c : cs)
    v.emplace_back(c.get<std::string>());
  return {order, std::move(v)};
}

Json to_json(const Partition& p) {
  Json a = Json::array();
  for (int x : p.parts())
    a.push_back(x);
  return a;
}

Json to_json(const Monomial& m) { return to_json(m.to_partition()); }

Json to_json(const std::vector<Monomial>& ms) {
  Json a = Json::array();
  for (const Monomial& m : ms)
    a.push_back(to_json(m));
  return a;
}

Json to_json(const MonomialIdeal& ideal) {
  Json params = Json::object();
  const IdealParams& p = ideal.params();
  switch (ideal.family()) {
  case IdealFamily::gordon:
  case IdealFamily::new_part:
    params = {{"r", p.r}, {"i", p.a}};
    break;
  case IdealFamily::j_ideal:
    params = {{"r", p.r}, {"l", p.a}, {"k", p.b}};
    break;
  case IdealFamily::block:
    params = {{"r", p.r}, {"c", p.a}, {"m", p.b}};
    break;
  case IdealFamily::zero:
  case IdealFamily::custom:
    break;
  }
  return {{"family", to_string(ideal.family())},
          {"params", std::move(params)},
          {"weight_bound", ideal.weight_bound()},
          {"min_variable", ideal.min_variable()},
          {"generators", to_json(ideal.generators())}};
}

Json to_json(const LeadingIdealResult& res, const CandidateDiff& diff) {
  return {{"r", res.r},
          {"order", to_string(res.order)},
          {"max_weight", res.max_weight},
          {"generators", to_json(res.generators)},
          {"candidate_diff", {{"missing", to_json(diff.missing)}, {"extra", to_json(diff.extra)}}}};
}

}  // namespace arcpart
