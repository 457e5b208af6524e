// arcpart: runs one verification campaign and prints its report.
//
// Exit codes: 0 pass, 1 fail or finding, 2 usage error.

#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "arcpart/campaigns.hpp"
#include "arcpart/parallel.hpp"

using namespace arcpart;

namespace {

constexpr int usage_exit = 2;

struct Common {
  std::string format = "json";
  unsigned workers = 0;
};

void add_common(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--workers", common.workers, "worker threads (default ARCPART_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of partition identities, q-series and Hilbert series"};
  app.require_subcommand(1);
  Common common;
  // Set by the chosen subcommand's callback; run after parsing so campaign
  // errors are not mistaken for parse errors.
  std::function<Report()> campaign;

  const auto nonneg = CLI::NonNegativeNumber;

  // count
  auto* count_cmd = app.add_subcommand("count", "count partitions of n in a family");
  std::string family_name;
  CountFamily family;
  int count_n = 0;
  std::optional<int> count_length;
  std::string count_form = "remark";
  count_cmd->add_option("--family", family_name, "A, B, C, c2k, b2k, c3 or b3")->required();
  count_cmd->add_option("--r", family.r, "r (A, B, C)")->check(nonneg);
  count_cmd->add_option("--i", family.i, "i")->check(nonneg);
  count_cmd->add_option("--k", family.k, "k (c2k, b2k)")->check(nonneg);
  count_cmd->add_option("--n", count_n, "weight")->required()->check(nonneg);
  count_cmd->add_option("--length", count_length, "fixed number of parts")->check(nonneg);
  count_cmd->add_option("--form", count_form, "C condition: conjecture or remark");
  add_common(count_cmd, common);
  count_cmd->callback([&] {
    family.tag = parse_family(family_name);
    family.length = count_length;
    family.form = parse_cform(count_form);
    campaign = [&] { return run_count({family, count_n}); };
  });

  // series
  auto* series_cmd = app.add_subcommand("series", "print a truncated q-series");
  SeriesParams sp;
  std::string series_kind = "product", series_form = "general";
  series_cmd->add_option("--kind", series_kind,
                         "partition, product, andrews-gordon, double-r3, chain-r3, conjecture, "
                         "qbinomial, lemma-qbin or h-closed");
  series_cmd->add_option("--r", sp.r)->check(nonneg);
  series_cmd->add_option("--i", sp.i)->check(nonneg);
  series_cmd->add_option("--n", sp.n)->check(nonneg);
  series_cmd->add_option("--j", sp.j)->check(nonneg);
  series_cmd->add_option("--c", sp.c)->check(nonneg);
  series_cmd->add_option("--m", sp.m)->check(nonneg);
  series_cmd->add_option("--form", series_form, "closed form for h-closed: r2, r3 or general");
  series_cmd->add_option("--order", sp.order, "truncation order N")->check(nonneg);
  add_common(series_cmd, common);
  series_cmd->callback([&] {
    sp.kind = parse_series_kind(series_kind);
    sp.form = parse_closed_form(series_form);
    campaign = [&] { return run_series(sp); };
  });

  // verify-gordon
  auto* gordon_cmd = app.add_subcommand("verify-gordon", "A = B = product = Andrews-Gordon sum");
  GordonParams gp;
  gordon_cmd->add_option("--r", gp.r)->check(nonneg);
  gordon_cmd->add_option("--max-n", gp.max_n)->check(nonneg);
  add_common(gordon_cmd, common);
  gordon_cmd->callback([&] {
    campaign = [&] {
      gp.workers = common.workers;
      return run_verify_gordon(gp);
    };
  });

  // verify-rrk
  auto* rrk_cmd = app.add_subcommand("verify-rrk", "k-th Rogers-Ramanujan type identities");
  RrkParams rp;
  rrk_cmd->add_option("--max-k", rp.max_k)->check(nonneg);
  rrk_cmd->add_option("--max-m", rp.max_m)->check(nonneg);
  rrk_cmd->add_option("--max-n", rp.max_n)->check(nonneg);
  add_common(rrk_cmd, common);
  rrk_cmd->callback([&] { campaign = [&] { return run_verify_rrk(rp); }; });

  // verify-gordon3
  auto* g3_cmd = app.add_subcommand("verify-gordon3", "C_{3,i} = B_{3,i}, its system and bijections");
  Gordon3Params g3;
  g3_cmd->add_option("--max-n", g3.max_n)->check(nonneg);
  g3_cmd->add_option("--max-m", g3.max_m)->check(nonneg);
  g3_cmd->add_option("--system-max-n", g3.system_max_n)->check(nonneg);
  g3_cmd->add_option("--bijection-max-n", g3.bijection_max_n)->check(nonneg);
  add_common(g3_cmd, common);
  g3_cmd->callback([&] { campaign = [&] { return run_verify_gordon3(g3); }; });

  // verify-conjecture
  auto* conj_cmd = app.add_subcommand("verify-conjecture", "C_{r,i} against B_{r,i}");
  ConjectureParams cp;
  conj_cmd->add_option("--r", cp.r)->check(nonneg);
  conj_cmd->add_option("--max-n", cp.max_n)->check(nonneg);
  conj_cmd->add_option("--order", cp.series_order, "chain-sum comparison order, 0 skips")
      ->check(nonneg);
  conj_cmd->add_option("--forms-max-n", cp.forms_max_n, "predicate-form range, 0 uses max-n")
      ->check(nonneg);
  add_common(conj_cmd, common);
  conj_cmd->callback([&] {
    campaign = [&] {
      cp.workers = common.workers;
      return run_verify_conjecture(cp);
    };
  });

  // verify-recursion
  auto* rec_cmd = app.add_subcommand("verify-recursion", "H lemma, coefficient tables, convergence");
  RecursionParams rec;
  rec_cmd->add_option("--r", rec.r)->check(nonneg);
  rec_cmd->add_option("--max-k", rec.max_k)->check(nonneg);
  rec_cmd->add_option("--d-max", rec.d_max)->check(nonneg);
  rec_cmd->add_option("--order", rec.order)->check(nonneg);
  rec_cmd->add_option("--convergence-d", rec.convergence_d, "0 uses order + 2")->check(nonneg);
  add_common(rec_cmd, common);
  rec_cmd->callback([&] { campaign = [&] { return run_verify_recursion(rec); }; });

  // verify-lz
  auto* lz_cmd = app.add_subcommand("verify-lz", "G_t recursion and the divisibility hypothesis");
  LzParams lz;
  lz_cmd->add_option("--r", lz.r)->check(nonneg);
  lz_cmd->add_option("--d-max", lz.d_max)->check(nonneg);
  lz_cmd->add_option("--order", lz.order)->check(nonneg);
  add_common(lz_cmd, common);
  lz_cmd->callback([&] { campaign = [&] { return run_verify_lz(lz); }; });

  // hilbert
  auto* hp_cmd = app.add_subcommand("hilbert", "Hilbert-Poincare series of a monomial ideal");
  HilbertParams hp;
  std::string hp_family = "I", hp_method = "both";
  std::optional<std::string> hp_closed;
  int hp_i = 1, hp_l = 1, hp_k = 1, hp_c = 1, hp_m = 1;
  hp_cmd->add_option("--family", hp_family, "zero, I, Iprime, J or block");
  hp_cmd->add_option("--r", hp.params.r)->check(nonneg);
  hp_cmd->add_option("--i", hp_i, "I, Iprime")->check(nonneg);
  hp_cmd->add_option("--l", hp_l, "J")->check(nonneg);
  hp_cmd->add_option("--k", hp_k, "J")->check(nonneg);
  hp_cmd->add_option("--c", hp_c, "block")->check(nonneg);
  hp_cmd->add_option("--m", hp_m, "block")->check(nonneg);
  hp_cmd->add_option("--order", hp.order)->check(nonneg);
  hp_cmd->add_option("--method", hp_method, "standard, exact-sequence or both");
  hp_cmd->add_option("--closed-form", hp_closed, "block only: r2, r3 or general");
  add_common(hp_cmd, common);
  hp_cmd->callback([&] {
    hp.family = parse_ideal_family(hp_family);
    hp.method = parse_method(hp_method);
    if (hp_closed)
      hp.closed_form = parse_closed_form(*hp_closed);
    switch (hp.family) {
    case IdealFamily::gordon:
    case IdealFamily::new_part:
      hp.params.a = hp_i;
      break;
    case IdealFamily::j_ideal:
      hp.params.a = hp_l;
      hp.params.b = hp_k;
      break;
    case IdealFamily::block:
      hp.params.a = hp_c;
      hp.params.b = hp_m;
      break;
    case IdealFamily::zero:
      break;
    case IdealFamily::custom:
      throw ParameterError("the custom family is library-only");
    }
    campaign = [&] { return run_hilbert(hp); };
  });

  // leading-ideal
  auto* li_cmd = app.add_subcommand("leading-ideal", "truncated leading ideal of [x_1^r]");
  LeadingIdealParams lp;
  std::string li_order = "wlex";
  li_cmd->add_option("--r", lp.r)->check(nonneg);
  li_cmd->add_option("--max-weight", lp.max_weight)->check(nonneg);
  li_cmd->add_option("--monomial-order", li_order, "wlex or wrevlex");
  add_common(li_cmd, common);
  li_cmd->callback([&] {
    lp.order = parse_order(li_order);
    campaign = [&] {
      lp.workers = common.workers;
      return run_leading_ideal(lp);
    };
  });

  // verify-bijections
  auto* bij_cmd = app.add_subcommand("verify-bijections", "exhaustive checks of the explicit maps");
  BijectionCampaignParams bp;
  bij_cmd->add_option("--max-n", bp.max_n)->check(nonneg);
  bij_cmd->add_option("--max-k", bp.max_k)->check(nonneg);
  add_common(bij_cmd, common);
  bij_cmd->callback([&] { campaign = [&] { return run_verify_bijections(bp); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "arcpart: " << e.what() << "\n";
    return usage_exit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "arcpart: " << e.what() << "\n";
    return usage_exit;
  }
  if (common.workers == 0)
    common.workers = default_workers();

  try {
    const Report report = campaign();
    std::cout << render(report, parse_format(common.format));
    return exit_code(report);
  } catch (const std::invalid_argument& e) {
    std::cerr << "arcpart: " << e.what() << "\n";
    return usage_exit;
  }
}
