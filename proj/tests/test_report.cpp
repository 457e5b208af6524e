#include <doctest.h>

#include "arcpart/campaigns.hpp"
#include "arcpart/serialize.hpp"

using namespace arcpart;

namespace {

Json without_time(const Report& r) {
  Json j = to_json(r);
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST_CASE("series JSON round-trip") {
  const TruncatedSeries s = product_side(4, 2, 30) * TruncatedSeries::from_ints(30, {-3, 0, 7});
  const Json j = to_json(s);
  CHECK(j["order"] == 30);
  CHECK(j["coeffs"].size() == 31);
  CHECK(j["coeffs"][0] == "-3");
  CHECK(series_from_json(j) == s);
  CHECK(series_from_json(Json::parse(j.dump())) == s);
  Json bad = j;
  bad["coeffs"].erase(bad["coeffs"].size() - 1);
  CHECK_THROWS(series_from_json(bad));
}

TEST_CASE("ideal and partition JSON") {
  CHECK(to_json(Partition{3, 1, 1}).dump() == "[3,1,1]");
  const Json ideal = to_json(j_ideal(3, 2, 2, 8));
  CHECK(ideal["family"] == "J");
  CHECK(ideal["params"]["l"] == 2);
  CHECK(ideal["weight_bound"] == 8);
  CHECK(ideal["min_variable"] == 2);
  CHECK(ideal["generators"].is_array());
}

TEST_CASE("report status") {
  Report r;
  CHECK(r.status() == Status::pass);
  Check ok{"fine", "", true, "", ""};
  r.record(ok);
  CHECK(r.status() == Status::pass);
  CHECK(exit_code(r) == 0);
  Check bad{"broken", "q^3", false, "1", "2"};
  r.record(bad, true);
  CHECK(r.status() == Status::finding);
  CHECK(exit_code(r) == 1);
  r.record(bad);
  CHECK(r.status() == Status::fail);
  CHECK(r.checks == 3);
  CHECK(r.mismatches.size() == 2);
  const Json j = to_json(r);
  CHECK(j["schema"] == report_schema);
  CHECK(j["mismatches"][0]["kind"] == "finding");
  CHECK(j["mismatches"][1]["kind"] == "failure");
}

TEST_CASE("report rendering") {
  Report r;
  r.command = "demo";
  r.table("t", {"a", "b"}).rows.push_back({1, "x"});
  r.table("t", {"a", "b"}).rows.push_back({2, "y"});
  CHECK(r.tables.size() == 1);
  const std::string csv = render(r, Format::csv);
  CHECK(csv.find("a,b") != std::string::npos);
  CHECK(csv.find("2,y") != std::string::npos);
  CHECK(render(r, Format::text).find("demo: pass") != std::string::npos);
  CHECK(Json::parse(render(r, Format::json))["command"] == "demo");
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("campaign reports are deterministic") {
  GordonParams g;
  g.r = 3;
  g.max_n = 12;
  g.workers = 1;
  const Json a = without_time(run_verify_gordon(g));
  g.workers = 3;
  CHECK(without_time(run_verify_gordon(g)) == a);

  ConjectureParams c;
  c.r = 4;
  c.max_n = 12;
  c.series_order = 12;
  c.workers = 2;
  CHECK(without_time(run_verify_conjecture(c)).dump() ==
        without_time(run_verify_conjecture(c)).dump());
}

TEST_CASE("small campaigns pass") {
  CountParams cp{CountFamily::gordon_b(2, 2), 9};
  const Report count_report = run_count(cp);
  CHECK(count_report.data["value"] == "5");

  SeriesParams sp;
  sp.kind = SeriesKind::product;
  sp.order = 9;
  CHECK(series_from_json(run_series(sp).data) == product_side(2, 2, 9));

  CHECK(run_verify_rrk({1, 6, 10}).status() == Status::pass);
  CHECK(run_verify_gordon3({12, 6, 12, 10}).status() == Status::pass);
  CHECK(run_verify_recursion({3, 2, 4, 12, 0}).status() == Status::pass);
  CHECK(run_verify_lz({3, 4, 12}).status() == Status::pass);
  CHECK(run_verify_bijections({12, 2}).status() == Status::pass);

  HilbertParams hp;
  hp.family = IdealFamily::block;
  hp.params = {3, 2, 2};
  hp.order = 15;
  CHECK(run_hilbert(hp).status() == Status::pass);

  LeadingIdealParams lp;
  lp.r = 2;
  lp.max_weight = 9;
  lp.order = OrderTag::wrevlex;
  CHECK(run_leading_ideal(lp).status() == Status::pass);
}

TEST_CASE("campaign parameter errors") {
  CHECK_THROWS_AS(run_verify_lz({3, 6, 5}), ParameterError);
  CHECK_THROWS_AS(run_verify_recursion({3, 1, 2, 10, 0}), ParameterError);
  CHECK_THROWS_AS(run_leading_ideal({2, 1, OrderTag::wlex, 1}), ParameterError);
  CHECK_THROWS_AS(parse_series_kind("nope"), ParameterError);
  CHECK_THROWS_AS(parse_method("nope"), ParameterError);
}
