#include "arcpart/campaigns.hpp"

#include <chrono>
#include <map>
#include <set>

#include "arcpart/andrews.hpp"
#include "arcpart/bijections.hpp"
#include "arcpart/leading_ideal.hpp"
#include "arcpart/parallel.hpp"
#include "arcpart/recursion.hpp"
#include "arcpart/serialize.hpp"

namespace arcpart {

namespace {

using Clock = std::chrono::steady_clock;

void finish(Report& r, Clock::time_point start) {
  r.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
}

Check equal_counts(std::string name, std::string location, const Integer& expected,
                   const Integer& got) {
  Check c;
  c.name = std::move(name);
  if (expected != got) {
    c.holds = false;
    c.location = std::move(location);
    c.expected = to_string(expected);
    c.got = to_string(got);
  }
  return c;
}

Check flag(std::string name, bool holds, std::string location = {}, std::string expected = "true",
           std::string got = "false") {
  Check c;
  c.name = std::move(name);
  c.holds = holds;
  if (!holds) {
    c.location = std::move(location);
    c.expected = std::move(expected);
    c.got = std::move(got);
  }
  return c;
}

std::string at(int m, int n) { return "m=" + std::to_string(m) + ",n=" + std::to_string(n); }

void record_system(Report& report, const SystemReport& s) {
  Table& t = report.table("system", {"system", "side", "k", "equation", "checked", "holds"});
  for (const EquationResult& eq : s.equations) {
    t.rows.push_back({to_string(s.system), to_string(s.side), s.k, eq.equation, eq.checked,
                      eq.holds});
    Check c;
    c.name = to_string(s.system) + "/" + to_string(s.side) + " k=" + std::to_string(s.k) + ": " +
             eq.equation;
    if (!eq.holds) {
      c.holds = false;
      c.location = at(eq.first_failure->m, eq.first_failure->n);
      c.expected = to_string(eq.first_failure->rhs);
      c.got = to_string(eq.first_failure->lhs);
    }
    report.record(c);
  }
}

// The source set of each map read as a set difference of counted sets.
bool set_difference_domain(BijectionName name, const Partition& p, int k) {
  const std::size_t m = p.length();
  switch (name) {
  case BijectionName::rr_second_eq:
    return shifted_c_predicate(p, m, k, 2) && !shifted_c_predicate(p, m, k, 1);
  case BijectionName::rr_shift:
    return shifted_c_predicate(p, m, k, 1);
  case BijectionName::g3_second_eq:
    return c_predicate(p, 3, 3) && !c_predicate(p, 3, 2);
  case BijectionName::g3_third_eq:
    return c_predicate(p, 3, 2) && !c_predicate(p, 3, 1);
  case BijectionName::g3_fourth_eq:
    return c_predicate(p, 3, 1);
  }
  return false;
}

bool uses_k(BijectionName name) {
  return name == BijectionName::rr_second_eq || name == BijectionName::rr_shift;
}

void check_bijection(Report& report, BijectionName name, int k, int max_n) {
  const BijectionParams params{k};
  const std::string tag = to_string(name) + (uses_k(name) ? " k=" + std::to_string(k) : "");
  std::size_t domain = 0, inverse_checked = 0;
  bool characterizations = true, in_codomain_ok = true, shape_ok = true, round_trip = true,
       injective = true, onto = true;
  std::set<Partition> images;
  auto first = [&report, &tag](bool& ok, const std::string& what, const Partition& p) {
    if (ok)
      report.record(flag(tag + ": " + what, false, p.to_string()));
    ok = false;
  };
  for (int n = 0; n <= max_n; ++n) {
    for (const Partition& p : enumerate_partitions(n)) {
      const bool verbatim = in_domain(name, p, params);
      if (verbatim != set_difference_domain(name, p, k))
        first(characterizations, "proof domain equals the set difference", p);
      if (verbatim) {
        ++domain;
        const Partition image = bijection_apply(name, Direction::forward, p, params);
        if (!in_codomain(name, image, params))
          first(in_codomain_ok, "image lies in the codomain", p);
        const auto [w, len] = image_shape(name, p.weight(), static_cast<int>(p.length()), params);
        if (image.weight() != w || static_cast<int>(image.length()) != len)
          first(shape_ok, "image weight and length", p);
        if (!images.insert(image).second)
          first(injective, "injective", p);
        if (in_codomain(name, image, params) &&
            bijection_apply(name, Direction::inverse, image, params) != p)
          first(round_trip, "inverse(forward(p)) = p", p);
      }
      if (in_codomain(name, p, params)) {
        ++inverse_checked;
        const Partition pre = bijection_apply(name, Direction::inverse, p, params);
        if (!in_domain(name, pre, params) ||
            bijection_apply(name, Direction::forward, pre, params) != p)
          first(onto, "forward(inverse(p)) = p", p);
      }
    }
  }
  for (bool ok : {characterizations, in_codomain_ok, shape_ok, injective, round_trip, onto})
    if (ok)
      report.record(flag(tag, true));
  report.table("bijections", {"map", "k", "max_n", "domain", "codomain_checked", "holds"})
      .rows.push_back({to_string(name), uses_k(name) ? Json(k) : Json(nullptr), max_n, domain,
                       inverse_checked,
                       characterizations && in_codomain_ok && shape_ok && injective && round_trip &&
                           onto});
}

}  // namespace

Report run_count(const CountParams& p) {
  const auto start = Clock::now();
  p.family.validate();
  Report report;
  report.command = "count";
  report.args = {{"family", to_string(p.family.tag)}, {"r", p.family.r},   {"i", p.family.i},
                 {"k", p.family.k},                   {"n", p.n},          {"form", to_string(p.family.form)}};
  if (p.family.length)
    report.args["length"] = *p.family.length;
  const Integer value = count(p.family, p.n);
  report.data = {{"family", p.family.describe()}, {"n", p.n}, {"value", to_string(value)}};
  report.table("count", {"family", "n", "value"})
      .rows.push_back({p.family.describe(), p.n, to_string(value)});
  finish(report, start);
  return report;
}

std::string to_string(SeriesKind k) {
  switch (k) {
  case SeriesKind::partition: return "partition";
  case SeriesKind::product: return "product";
  case SeriesKind::andrews_gordon: return "andrews-gordon";
  case SeriesKind::double_r3: return "double-r3";
  case SeriesKind::chain_r3: return "chain-r3";
  case SeriesKind::conjecture: return "conjecture";
  case SeriesKind::qbinomial: return "qbinomial";
  case SeriesKind::lemma_qbin: return "lemma-qbin";
  case SeriesKind::h_closed: return "h-closed";
  }
  return "?";
}

SeriesKind parse_series_kind(const std::string& s) {
  for (SeriesKind k : {SeriesKind::partition, SeriesKind::product, SeriesKind::andrews_gordon,
                       SeriesKind::double_r3, SeriesKind::chain_r3, SeriesKind::conjecture,
                       SeriesKind::qbinomial, SeriesKind::lemma_qbin, SeriesKind::h_closed})
    if (to_string(k) == s)
      return k;
  throw ParameterError("unknown series kind '" + s + "'");
}

Report run_series(const SeriesParams& p) {
  const auto start = Clock::now();
  if (p.order < 0)
    throw ParameterError("series order must be nonnegative");
  Report report;
  report.command = "series";
  report.args = {{"kind", to_string(p.kind)}, {"order", p.order}};
  TruncatedSeries s;
  switch (p.kind) {
  case SeriesKind::partition:
    s = partition_series(p.order);
    break;
  case SeriesKind::product:
    report.args["r"] = p.r;
    report.args["i"] = p.i;
    s = product_side(p.r, p.i, p.order);
    break;
  case SeriesKind::andrews_gordon:
    report.args["r"] = p.r;
    report.args["i"] = p.i;
    s = andrews_gordon_sum(p.r, p.i, p.order);
    break;
  case SeriesKind::double_r3:
    s = double_sum_r3(p.order);
    break;
  case SeriesKind::chain_r3:
    s = chain_sum_r3(p.order);
    break;
  case SeriesKind::conjecture:
    report.args["r"] = p.r;
    s = conjecture_sum(p.r, p.order);
    break;
  case SeriesKind::qbinomial:
  case SeriesKind::lemma_qbin:
    report.args["n"] = p.n;
    report.args["j"] = p.j;
    s = p.kind == SeriesKind::qbinomial ? q_binomial(p.n, p.j, p.order)
                                        : lemma_qbin_sum(p.n, p.j, p.order);
    break;
  case SeriesKind::h_closed:
    report.args["form"] = to_string(p.form);
    report.args["r"] = p.r;
    report.args["c"] = p.c;
    report.args["m"] = p.m;
    s = h_closed_form(p.form, p.r, p.c, p.m, p.order);
    break;
  }
  report.data = to_json(s);
  Table& t = report.table("series", {"n", "coeff"});
  for (int k = 0; k <= s.order(); ++k)
    t.rows.push_back({k, to_string(s[k])});
  finish(report, start);
  return report;
}

Report run_verify_gordon(const GordonParams& p) {
  const auto start = Clock::now();
  require_gordon_params(p.r, 1);
  if (p.max_n < 0)
    throw ParameterError("max-n must be nonnegative");
  Report report;
  report.command = "verify-gordon";
  report.args = {{"r", p.r}, {"max_n", p.max_n}};
  struct Piece {
    std::vector<std::vector<Json>> rows;
    std::vector<Check> checks;
  };
  auto pieces = parallel_map<Piece>(static_cast<std::size_t>(p.r), p.workers, [&](std::size_t k) {
    const int i = static_cast<int>(k) + 1;
    const TruncatedSeries product = product_side(p.r, i, p.max_n);
    const TruncatedSeries sum = andrews_gordon_sum(p.r, i, p.max_n);
    Piece piece;
    for (int n = 0; n <= p.max_n; ++n) {
      const Integer a = count(CountFamily::gordon_a(p.r, i), n);
      const Integer b = count(CountFamily::gordon_b(p.r, i), n);
      const std::string where = "r=" + std::to_string(p.r) + ",i=" + std::to_string(i) +
                                ",n=" + std::to_string(n);
      piece.rows.push_back({p.r, i, n, to_string(a), to_string(b), to_string(product[n]),
                            to_string(sum[n])});
      piece.checks.push_back(equal_counts("A = B", where, a, b));
      piece.checks.push_back(equal_counts("B = [q^n] product side", where, b, product[n]));
      piece.checks.push_back(equal_counts("B = [q^n] Andrews-Gordon sum", where, b, sum[n]));
    }
    return piece;
  });
  Table& t = report.table("counts", {"r", "i", "n", "A", "B", "product", "sum"});
  for (Piece& piece : pieces) {
    t.rows.insert(t.rows.end(), piece.rows.begin(), piece.rows.end());
    report.record_all(piece.checks);
  }
  finish(report, start);
  return report;
}

Report run_verify_rrk(const RrkParams& p) {
  const auto start = Clock::now();
  if (p.max_k < 1 || p.max_m < 0 || p.max_n < 0)
    throw ParameterError("verify-rrk needs max-k >= 1 and nonnegative bounds");
  Report report;
  report.command = "verify-rrk";
  report.args = {{"max_k", p.max_k}, {"max_m", p.max_m}, {"max_n", p.max_n}};
  Table& t = report.table("counts", {"k", "i", "m", "n", "c", "b"});
  for (int k = 1; k <= p.max_k; ++k) {
    for (int i = 1; i <= 2; ++i) {
      for (int n = 0; n <= p.max_n; ++n) {
        report.record(equal_counts("c^k_{2,i}(n) = b^k_{2,i}(n)",
                                   "k=" + std::to_string(k) + ",i=" + std::to_string(i) +
                                       ",n=" + std::to_string(n),
                                   count(CountFamily::shifted_b(k, i), n),
                                   count(CountFamily::shifted_c(k, i), n)));
        for (int m = 0; m <= p.max_m; ++m) {
          const Integer c = count(CountFamily::shifted_c(k, i, m), n);
          const Integer b = count(CountFamily::shifted_b(k, i, m), n);
          if (c != 0 || b != 0)
            t.rows.push_back({k, i, m, n, to_string(c), to_string(b)});
          report.record(equal_counts("c^k_{2,i}(m,n) = b^k_{2,i}(m,n)",
                                     "k=" + std::to_string(k) + ",i=" + std::to_string(i) + "," +
                                         at(m, n),
                                     b, c));
        }
      }
    }
    record_system(report, andrews_system_check(AndrewsSystem::rr_k, SystemSide::c, k, p.max_m,
                                               p.max_n));
    record_system(report, andrews_system_check(AndrewsSystem::rr_k, SystemSide::b, k, p.max_m,
                                               p.max_n));
  }
  // fixing the length keeps the k = 1 identity: c^1_{2,i}(m,n) = b_{2,i}(m,n)
  for (int i = 1; i <= 2; ++i)
    for (int n = 0; n <= p.max_n; ++n)
      for (int m = 0; m <= n; ++m)
        report.record(equal_counts("c^1_{2,i}(m,n) = B_{2,i}(m,n)",
                                   "i=" + std::to_string(i) + "," + at(m, n),
                                   count(CountFamily::gordon_b(2, i, m), n),
                                   count(CountFamily::shifted_c(1, i, m), n)));
  finish(report, start);
  return report;
}

Report run_verify_gordon3(const Gordon3Params& p) {
  const auto start = Clock::now();
  if (p.max_n < 0 || p.max_m < 0 || p.system_max_n < 0 || p.bijection_max_n < 0)
    throw ParameterError("verify-gordon3 needs nonnegative bounds");
  Report report;
  report.command = "verify-gordon3";
  report.args = {{"max_n", p.max_n},
                 {"max_m", p.max_m},
                 {"system_max_n", p.system_max_n},
                 {"bijection_max_n", p.bijection_max_n}};
  Table& t = report.table("counts", {"i", "n", "C", "B"});
  for (int i = 1; i <= 3; ++i) {
    for (int n = 0; n <= p.max_n; ++n) {
      const Integer c = count(CountFamily::new_part(3, i), n);
      const Integer b = count(CountFamily::gordon_b(3, i), n);
      t.rows.push_back({i, n, to_string(c), to_string(b)});
      report.record(equal_counts("C_{3,i}(n) = B_{3,i}(n)",
                                 "i=" + std::to_string(i) + ",n=" + std::to_string(n), b, c));
    }
    for (int m = 0; m <= p.max_m; ++m)
      for (int n = 0; n <= p.system_max_n; ++n)
        report.record(equal_counts("C_{3,i}(m,n) = B_{3,i}(m,n)",
                                   "i=" + std::to_string(i) + "," + at(m, n),
                                   count(CountFamily::gordon_b(3, i, m), n),
                                   count(CountFamily::new_part(3, i, m), n)));
  }
  record_system(report, andrews_system_check(AndrewsSystem::gordon3, SystemSide::c, 1, p.max_m,
                                             p.system_max_n));
  record_system(report, andrews_system_check(AndrewsSystem::gordon3, SystemSide::b, 1, p.max_m,
                                             p.system_max_n));
  for (BijectionName b : {BijectionName::g3_second_eq, BijectionName::g3_third_eq,
                          BijectionName::g3_fourth_eq})
    check_bijection(report, b, 1, p.bijection_max_n);
  finish(report, start);
  return report;
}

Report run_verify_conjecture(const ConjectureParams& p) {
  const auto start = Clock::now();
  require_gordon_params(p.r, 1);
  if (p.max_n < 0 || p.series_order < 0 || p.forms_max_n < 0)
    throw ParameterError("verify-conjecture needs nonnegative bounds");
  const int forms_max_n = p.forms_max_n > 0 ? p.forms_max_n : p.max_n;
  Report report;
  report.command = "verify-conjecture";
  report.args = {{"r", p.r},
                 {"max_n", p.max_n},
                 {"series_order", p.series_order},
                 {"forms_max_n", forms_max_n}};
  struct Piece {
    std::vector<std::vector<Json>> rows;
    std::vector<Check> counts;
    std::vector<Check> forms;
  };
  auto pieces = parallel_map<Piece>(static_cast<std::size_t>(p.r), p.workers, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) + 1;
    Piece piece;
    for (int n = 0; n <= p.max_n; ++n) {
      const Integer c = count(CountFamily::new_part(p.r, i), n);
      const Integer b = count(CountFamily::gordon_b(p.r, i), n);
      piece.rows.push_back({p.r, i, n, to_string(c), to_string(b), c == b});
      piece.counts.push_back(equal_counts(
          "C_{r,i}(n) = B_{r,i}(n)",
          "r=" + std::to_string(p.r) + ",i=" + std::to_string(i) + ",n=" + std::to_string(n), b,
          c));
    }
    std::size_t disagreements = 0;
    for (int n = 0; n <= forms_max_n; ++n)
      for (const Partition& lam : enumerate_partitions(n))
        if (c_predicate(lam, p.r, i, CForm::conjecture) != c_predicate(lam, p.r, i, CForm::remark)) {
          if (disagreements++ == 0)
            piece.forms.push_back(flag("conjecture and remark forms of the C condition agree",
                                       false,
                                       "r=" + std::to_string(p.r) + ",i=" + std::to_string(i) +
                                           "," + lam.to_string(),
                                       std::to_string(c_predicate(lam, p.r, i, CForm::remark)),
                                       std::to_string(c_predicate(lam, p.r, i, CForm::conjecture))));
        }
    if (disagreements == 0)
      piece.forms.push_back(flag("conjecture and remark forms of the C condition agree", true));
    return piece;
  });
  Table& t = report.table("counts", {"r", "i", "n", "C", "B", "equal"});
  for (Piece& piece : pieces) {
    t.rows.insert(t.rows.end(), piece.rows.begin(), piece.rows.end());
    report.record_all(piece.counts, true);
    report.record_all(piece.forms, true);
  }
  if (p.series_order > 0 && p.r >= 3) {
    const TruncatedSeries chain = conjecture_sum(p.r, p.series_order);
    const TruncatedSeries ag = andrews_gordon_sum(p.r, p.r, p.series_order);
    report.record(compare_series("conjecture_sum(r) = andrews_gordon_sum(r, r), r=" +
                                     std::to_string(p.r),
                                 ag, chain, p.series_order),
                  true);
    Table& s = report.table("series", {"n", "conjecture_sum", "andrews_gordon_sum"});
    for (int k = 0; k <= p.series_order; ++k)
      s.rows.push_back({k, to_string(chain[k]), to_string(ag[k])});
  }
  finish(report, start);
  return report;
}

Report run_verify_recursion(const RecursionParams& p) {
  const auto start = Clock::now();
  require_gordon_params(p.r, 1);
  if (p.max_k < 1 || p.d_max < 3 || p.order < 1)
    throw ParameterError("verify-recursion needs max-k >= 1, d-max >= 3, order >= 1");
  const int conv_d = p.convergence_d > 0 ? p.convergence_d : p.order + 2;
  Report report;
  report.command = "verify-recursion";
  report.args = {{"r", p.r},
                 {"max_k", p.max_k},
                 {"d_max", p.d_max},
                 {"order", p.order},
                 {"convergence_d", conv_d}};
  Table& t = report.table("groups", {"group", "checks", "failures"});
  auto group = [&](const std::string& name, const std::vector<Check>& cs) {
    std::size_t bad = 0;
    for (const Check& c : cs)
      bad += c.holds ? 0 : 1;
    t.rows.push_back({name, cs.size(), bad});
    report.record_all(cs);
  };
  for (int k = 1; k <= p.max_k; ++k)
    group("H lemma k=" + std::to_string(k), h_lemma_check(p.r, k, p.order));
  for (int i = 1; i <= p.r; ++i) {
    const int l = p.r - i + 1;
    const std::string tag = " i=" + std::to_string(i) + " (l=" + std::to_string(l) + ")";
    const CoefficientTable b = hp_coefficient_table(p.r, i, p.d_max, p.order);
    const CoefficientTable a = lz_coefficient_table(p.r, l, p.d_max, p.order);
    group("B table recursion" + tag, table_recursion_check(b));
    group("A table recursion" + tag, table_recursion_check(a));
    group("B table valuations" + tag, table_valuation_check(b));
    group("A table valuations" + tag, table_valuation_check(a));
    group("A = B" + tag, coefficient_equality_check(p.r, i, p.d_max, p.order));
    group("convergence" + tag, convergence_check(p.r, i, conv_d, p.order));
  }
  finish(report, start);
  return report;
}

Report run_verify_lz(const LzParams& p) {
  const auto start = Clock::now();
  if (p.r < 2 || p.d_max < 1 || p.order < p.d_max + 2)
    throw ParameterError("verify-lz needs r >= 2, d-max >= 1 and order >= d-max + 2");
  Report report;
  report.command = "verify-lz";
  report.args = {{"r", p.r}, {"d_max", p.d_max}, {"order", p.order}};
  const LzSeries g(p.r, (p.r - 1) * p.d_max + p.r, p.order);
  report.data = {{"working_order", g.working_order()}, {"t_max", g.t_max()}};
  for (int l = 1; l <= p.r; ++l)
    report.record(compare_series("G_" + std::to_string(l) + " = product side with i=" +
                                     std::to_string(p.r + 1 - l),
                                 product_side(p.r, p.r + 1 - l, p.order), g(l), p.order));
  report.record_all(lz_resubstitution_check(g));
  Table& t = report.table("hypothesis", {"d", "i", "t", "valuation", "required"});
  for (int d = 1; d <= p.d_max; ++d)
    for (int i = 1; i <= p.r; ++i) {
      const int idx = (p.r - 1) * d + i;
      t.rows.push_back({d, i, idx, (g(idx) - TruncatedSeries::one(p.order)).valuation(),
                        i == p.r ? d + 2 : d + 1});
    }
  report.record_all(empirical_hypothesis_check(p.r, p.d_max, p.order));
  finish(report, start);
  return report;
}

HpMethod parse_method(const std::string& s) {
  if (s == "standard") return HpMethod::standard;
  if (s == "exact-sequence") return HpMethod::exact_sequence;
  if (s == "both") return HpMethod::both;
  throw ParameterError("unknown method '" + s + "' (expected standard, exact-sequence or both)");
}

Report run_hilbert(const HilbertParams& p) {
  const auto start = Clock::now();
  const MonomialIdeal ideal = ideal_generators(p.family, p.params, p.order);
  Report report;
  report.command = "hilbert";
  report.args = {{"family", to_string(p.family)},
                 {"r", p.params.r},
                 {"a", p.params.a},
                 {"b", p.params.b},
                 {"order", p.order},
                 {"method", p.method == HpMethod::both             ? "both"
                            : p.method == HpMethod::standard       ? "standard"
                                                                   : "exact-sequence"}};
  std::optional<TruncatedSeries> std_series, es_series;
  if (p.method != HpMethod::exact_sequence)
    std_series = standard_monomial_series(ideal, p.order);
  if (p.method != HpMethod::standard)
    es_series = hp_via_exact_sequence(ideal, p.order);
  const TruncatedSeries& hp = std_series ? *std_series : *es_series;
  if (std_series && es_series)
    report.record(compare_series("standard monomials = exact sequence", *std_series, *es_series,
                                 p.order));

  const IdealParams& q = p.params;
  switch (p.family) {
  case IdealFamily::zero:
    report.record(compare_series("HP = partition series", partition_series(p.order), hp, p.order));
    break;
  case IdealFamily::gordon:
  case IdealFamily::new_part:
    for (int n = 0; n <= p.order; ++n) {
      const CountFamily fam = p.family == IdealFamily::gordon ? CountFamily::gordon_b(q.r, q.a)
                                                              : CountFamily::new_part(q.r, q.a);
      report.record(equal_counts("[q^n] HP = " + fam.describe() + "(n)",
                                 "n=" + std::to_string(n), count(fam, n), hp[n]));
    }
    break;
  case IdealFamily::block: {
    const ClosedForm form = p.closed_form ? *p.closed_form
                            : q.r == 2    ? ClosedForm::r2
                            : q.r == 3    ? ClosedForm::r3
                                          : ClosedForm::general;
    report.args["closed_form"] = to_string(form);
    report.record(compare_series("HP = closed form (" + to_string(form) + ")",
                                 h_closed_form(form, q.r, q.a, q.b, p.order), hp, p.order));
    break;
  }
  case IdealFamily::j_ideal:
  case IdealFamily::custom:
    break;
  }
  if (ideal.has_intrinsic()) {
    std::size_t bad = 0;
    for (int n = 0; n <= p.order; ++n)
      for (const Partition& lam : enumerate_partitions(n)) {
        const Monomial m = Monomial::from_partition(lam);
        const bool div = ideal.contains(m);
        if (div != *ideal.intrinsic_contains(m) && bad++ == 0)
          report.record(flag("divisibility membership = intrinsic membership", false,
                             lam.to_string(), div ? "in ideal" : "not in ideal",
                             div ? "not in ideal" : "in ideal"));
      }
    if (bad == 0)
      report.record(flag("divisibility membership = intrinsic membership", true));
  }
  report.data = {{"ideal", to_json(ideal)}, {"series", to_json(hp)}};
  Table& t = report.table("series", {"n", "standard", "exact_sequence"});
  for (int n = 0; n <= p.order; ++n)
    t.rows.push_back({n, std_series ? Json(to_string((*std_series)[n])) : Json(nullptr),
                      es_series ? Json(to_string((*es_series)[n])) : Json(nullptr)});
  finish(report, start);
  return report;
}

Report run_leading_ideal(const LeadingIdealParams& p) {
  const auto start = Clock::now();
  if (p.r < 2 || p.max_weight < p.r)
    throw ParameterError("leading-ideal needs r >= 2 and max-weight >= r");
  Report report;
  report.command = "leading-ideal";
  report.args = {{"r", p.r}, {"max_weight", p.max_weight}, {"monomial_order", to_string(p.order)}};
  const LeadingIdealResult res = leading_ideal(p.r, p.max_weight, p.order, p.workers);
  const TruncatedSeries all = partition_series(p.max_weight);
  Table& w = report.table("weights", {"n", "monomials", "leading", "standard", "B_rr", "spanning"});
  for (const WeightSummary& s : res.per_weight) {
    const Integer b = count(CountFamily::gordon_b(p.r, p.r), s.weight);
    const std::string where = "n=" + std::to_string(s.weight);
    w.rows.push_back({s.weight, s.monomials, s.leading, s.standard, to_string(b), s.spanning});
    report.record(equal_counts("leading + standard = p(n)", where, all[s.weight],
                               Integer(static_cast<unsigned long>(s.leading + s.standard))));
    report.record(equal_counts("standard monomials = B_{r,r}(n)", where, b,
                               Integer(static_cast<unsigned long>(s.standard))));
  }
  const std::vector<Monomial> cand = candidate_generators(p.r, p.max_weight, p.order);
  const CandidateDiff diff = candidate_diff(res.generators, cand);
  // the wrevlex answer is known; the wlex candidate is a guess
  const bool finding = p.order == OrderTag::wlex;
  const std::string cand_name = p.order == OrderTag::wlex ? "I'_{r,r}" : "I_{r,r}";
  for (const Monomial& m : diff.extra)
    report.record(flag("leading generator outside " + cand_name, false,
                       m.to_partition().to_string(), "absent", "present"),
                  finding);
  for (const Monomial& m : diff.missing)
    report.record(flag(cand_name + " generator not a leading generator", false,
                       m.to_partition().to_string(), "present", "absent"),
                  finding);
  if (diff.empty())
    report.record(flag("leading ideal generators = " + cand_name + " generators", true));
  Table& g = report.table("generators", {"weight", "generator", "in_candidate"});
  const std::set<Monomial> cset(cand.begin(), cand.end());
  for (const Monomial& m : res.generators)
    g.rows.push_back({m.weight(), m.to_partition().to_string(), cset.count(m) > 0});
  report.data = to_json(res, diff);
  report.data["shared"] = diff.shared.size();
  finish(report, start);
  return report;
}

Report run_verify_bijections(const BijectionCampaignParams& p) {
  const auto start = Clock::now();
  if (p.max_n < 0 || p.max_k < 1)
    throw ParameterError("verify-bijections needs max-n >= 0 and max-k >= 1");
  Report report;
  report.command = "verify-bijections";
  report.args = {{"max_n", p.max_n}, {"max_k", p.max_k}};
  for (BijectionName b : all_bijections) {
    if (uses_k(b))
      for (int k = 1; k <= p.max_k; ++k)
        check_bijection(report, b, k, p.max_n);
    else
      check_bijection(report, b, 1, p.max_n);
  }
  finish(report, start);
  return report;
}

}  // namespace arcpart
