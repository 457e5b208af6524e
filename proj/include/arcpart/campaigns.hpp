#pragma once

#include <optional>
#include <string>

#include "arcpart/counting.hpp"
#include "arcpart/diffpoly.hpp"
#include "arcpart/hilbert.hpp"
#include "arcpart/ideal.hpp"
#include "arcpart/qseries.hpp"
#include "arcpart/report.hpp"

namespace arcpart {

// One function per CLI subcommand. Each fills Report::args with its
// parameters, so the report identifies the campaign that produced it.

struct CountParams {
  CountFamily family;
  int n = 0;
};
Report run_count(const CountParams& p);

enum class SeriesKind {
  partition,       // sum p(n) q^n
  product,         // product side (r, i)
  andrews_gordon,  // Andrews-Gordon multi-sum (r, i)
  double_r3,
  chain_r3,
  conjecture,      // chain form for i = r (r)
  qbinomial,       // (n, j)
  lemma_qbin,      // (n, j)
  h_closed,        // closed form (form, r, c, m)
};
struct SeriesParams {
  SeriesKind kind = SeriesKind::product;
  int r = 2;
  int i = 2;
  int n = 0;
  int j = 0;
  int c = 1;
  int m = 1;
  ClosedForm form = ClosedForm::general;
  int order = 20;
};
Report run_series(const SeriesParams& p);
std::string to_string(SeriesKind k);
SeriesKind parse_series_kind(const std::string& s);

struct GordonParams {
  int r = 3;
  int max_n = 20;
  unsigned workers = 1;
};
/// A_{r,i}(n) = B_{r,i}(n) = [q^n] product side = [q^n] Andrews-Gordon sum, every i.
Report run_verify_gordon(const GordonParams& p);

struct RrkParams {
  int max_k = 3;
  int max_m = 12;
  int max_n = 20;
};
/// c^k_{2,i}(m,n) = b^k_{2,i}(m,n), the system on both sides, and the
/// fixed-length refinement c^1_{2,i}(m,n) = b_{2,i}(m,n).
Report run_verify_rrk(const RrkParams& p);

struct Gordon3Params {
  int max_n = 20;         // C_{3,i}(n) = B_{3,i}(n)
  int max_m = 15;         // system range in m
  int system_max_n = 20;  // system range in n
  int bijection_max_n = 20;
};
Report run_verify_gordon3(const Gordon3Params& p);

struct ConjectureParams {
  int r = 4;
  int max_n = 20;
  int series_order = 20;  // conjecture_sum(r) against the Andrews-Gordon sum; 0 skips it
  int forms_max_n = 0;    // predicate-form agreement range; 0 uses max_n
  unsigned workers = 1;
};
/// C_{r,i}(n) against B_{r,i}(n): disagreements are findings.
Report run_verify_conjecture(const ConjectureParams& p);

struct RecursionParams {
  int r = 3;
  int max_k = 4;          // lemma range
  int d_max = 6;          // coefficient tables
  int order = 20;
  int convergence_d = 0;  // 0 uses order + 2
};
Report run_verify_recursion(const RecursionParams& p);

struct LzParams {
  int r = 3;
  int d_max = 6;
  int order = 20;
};
Report run_verify_lz(const LzParams& p);

enum class HpMethod { standard, exact_sequence, both };
struct HilbertParams {
  IdealFamily family = IdealFamily::gordon;
  IdealParams params;
  int order = 20;
  HpMethod method = HpMethod::both;
  /// block family only: compare with this closed form (defaults to r2/r3/general by r)
  std::optional<ClosedForm> closed_form;
};
Report run_hilbert(const HilbertParams& p);
HpMethod parse_method(const std::string& s);

struct LeadingIdealParams {
  int r = 2;
  int max_weight = 10;
  OrderTag order = OrderTag::wlex;
  unsigned workers = 1;
};
/// Leading ideal of [x_1^r] up to weight W; the wrevlex comparison with
/// I_{r,r} is a check, the wlex comparison with I'_{r,r} is a finding.
Report run_leading_ideal(const LeadingIdealParams& p);

struct BijectionCampaignParams {
  int max_n = 20;
  int max_k = 3;  // rr_* maps are checked for k = 1..max_k
};
Report run_verify_bijections(const BijectionCampaignParams& p);

}  // namespace arcpart
