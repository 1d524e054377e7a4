// barq: exact verification toolkit for bar cochains, the slope-determinant
// 2-cocycle on Thompson-type PL maps, and the induced metrics.
//
// Subcommands: thompson-verify, homotopy-check, metrics, probe, pair.
// Exit codes: 0 = all checks passed, 1 = a check failed, 2 = usage error.

#include "barq/checks.hpp"
#include "barq/gs.hpp"
#include "barq/homotopy.hpp"
#include "barq/metrics.hpp"
#include "barq/report.hpp"
#include "barq/serialize.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace barq;

struct GlobalOpts {
  int threads = 0;
  std::uint64_t seed = 12345;
  std::string format = "json";
  std::string out;
  bool no_timing = false;
  bool serial = false;

  par::Mode mode() const { return serial ? par::Mode::serial : par::Mode::parallel; }
};

int emit(const GlobalOpts& g, RunReport& report, const CsvTable& table, const Timer& timer) {
  report.include_timing = !g.no_timing;
  report.elapsed_ms = timer.elapsed_ms();
  const std::string text = (g.format == "csv") ? to_csv(table) : report.to_json().dump(2);
  write_output(text, g.out);
  return report.pass ? 0 : 1;
}

std::string rat_str(const Rat& r) { return rat_to_string(r); }

// --- thompson-verify ---------------------------------------------------------

struct ThompsonOpts {
  std::string golden_path;
};

int run_thompson(const GlobalOpts& g, const ThompsonOpts& opts) {
  Timer timer;
  const GoldenValues golden =
      opts.golden_path.empty() ? golden_defaults() : golden_from_file(opts.golden_path);
  const PLMap f = builtin_f();
  const PLMap gg = builtin_g();

  RunReport report;
  report.command = "thompson-verify";
  report.params["seed"] = g.seed;
  report.params["golden"] = opts.golden_path.empty() ? "<built-in>" : opts.golden_path;

  CsvTable table;
  table.header = {"check", "computed", "expected", "ok"};
  Json checks = Json::array();
  auto add = [&](const std::string& name, const std::string& computed, const std::string& expected,
                 bool ok) {
    checks.push_back(Json{{"name", name}, {"computed", computed}, {"expected", expected}, {"ok", ok}});
    table.rows.push_back({name, computed, expected, ok ? "true" : "false"});
    report.pass = report.pass && ok;
  };

  add("f_in_fprime", is_in_f_prime(f) ? "true" : "false", "true", is_in_f_prime(f));
  add("g_in_fprime", is_in_f_prime(gg) ? "true" : "false", "true", is_in_f_prime(gg));
  const bool commute = compose(f, gg) == compose(gg, f);
  add("fg_commute", commute ? "true" : "false", "true", commute);

  const std::int64_t afg = gs_evaluate(f, gg);
  add("alpha_f_g", std::to_string(afg), std::to_string(golden.alpha_f_g), afg == golden.alpha_f_g);
  const std::int64_t agf = gs_evaluate(gg, f);
  add("alpha_g_f", std::to_string(agf), std::to_string(golden.alpha_g_f), agf == golden.alpha_g_f);

  const Cochain alpha = gs_cochain();
  const Rat z2 = pair_chain(pullback(alpha, psi2()), zeta_cycle(2), g.mode());
  add("zeta2_pairing", rat_str(z2), std::to_string(golden.zeta2_pairing),
      z2 == Rat(golden.zeta2_pairing));
  const Rat z4 = pair_chain(pullback(cup(alpha, alpha), psi4()), zeta_cycle(4), g.mode());
  add("zeta4_pairing", rat_str(z4), std::to_string(golden.zeta4_pairing),
      z4 == Rat(golden.zeta4_pairing));
  const std::int64_t z8 = zeta8_pairing(g.mode());
  add("zeta8_pairing", std::to_string(z8), std::to_string(golden.zeta8_pairing),
      z8 == golden.zeta8_pairing);
  add("zeta8_nonzero", std::to_string(z8), "!= 0", z8 != 0);

  Json contribs = Json::array();
  for (const auto& [pair_name, a, b] :
       {std::tuple<const char*, const PLMap&, const PLMap&>{"alpha(f,g)", f, gg},
        std::tuple<const char*, const PLMap&, const PLMap&>{"alpha(g,f)", gg, f}}) {
    Json rows = Json::array();
    for (const GsContribution& c : gs_contributions(a, b)) {
      rows.push_back(Json{{"x", c.x.str()}, {"det", c.det}});
    }
    contribs.push_back(Json{{"pairing", pair_name}, {"breakpoints", rows}});
  }

  report.results["checks"] = checks;
  report.results["contributions"] = contribs;
  return emit(g, report, table, timer);
}

// --- homotopy-check ----------------------------------------------------------

struct HomotopyOpts {
  std::string group = "s3";
  int degree = 2;
  int trials = 3;
  int range = 9;
  bool shifted_lift = false;
};

int run_homotopy(const GlobalOpts& g, const HomotopyOpts& opts) {
  Timer timer;
  const Group group = Group::parse(opts.group);
  if (!group.is_finite()) {
    throw std::invalid_argument("homotopy-check needs a finite group (c<n> or s<n>)");
  }
  if (opts.degree < 1 || opts.degree > 3) {
    throw std::invalid_argument("--degree must be between 1 and 3");
  }
  Rng rng(g.seed);

  RunReport report;
  report.command = "homotopy-check";
  report.params["group"] = group.name();
  report.params["degree"] = opts.degree;
  report.params["trials"] = opts.trials;
  report.params["seed"] = g.seed;

  CsvTable table;
  table.header = {"trial", "check", "pass", "counterexample"};
  Json results = Json::array();
  auto add = [&](int trial, const CheckResult& r) {
    Json j;
    j["trial"] = trial;
    j["check"] = r.name;
    j["pass"] = r.pass;
    if (!r.pass) {
      j["counterexample"] = r.counterexample;
      j["detail"] = r.detail;
    }
    results.push_back(j);
    table.rows.push_back({std::to_string(trial), r.name, r.pass ? "true" : "false",
                          r.counterexample});
    report.pass = report.pass && r.pass;
  };

  const Mean mean(group);
  {
    const SplittingReport sr = splitting_check(mean, rng, 20);
    CheckResult r;
    r.name = "mean_splits_constants";
    r.pass = sr.invariant && sr.splits_constants;
    r.counterexample = sr.counterexample;
    add(0, r);
  }

  for (int trial = 1; trial <= opts.trials; ++trial) {
    const Cochain w = random_table_cochain(rng, group, opts.degree, opts.range);
    add(trial, check_averaging_homotopy(group, w, g.mode()));
    add(trial, check_lambda0_homotopy(group, w, g.mode()));
    add(trial, check_lambda_anticommutes(group, w, g.mode()));

    const Cochain w1c = random_one_constant_cochain(rng, group, opts.degree, opts.range);
    add(trial, check_one_constant_homotopy(group, w1c, g.mode()));

    const Cochain z = random_cocycle(rng, group, opts.degree, opts.range);
    add(trial, check_bockstein_comparison(group, z, g.mode()));
    add(trial, check_comparison_vanishing(group, z, g.mode()));

    if (opts.shifted_lift) {
      const Cochain shift = random_table_cochain(rng, group, opts.degree - 1, opts.range);
      const Cochain shifted = bockstein_with_lift_shift(z, group, shift);
      const Cochain ds = codifferential(shift, group);
      CheckResult r;
      r.name = "shifted_lift_defect";
      const std::size_t total = tuple_space_size(group, opts.degree);
      for (std::size_t i = 0; i < total; ++i) {
        const Tuple t = tuple_from_index(group, opts.degree, i);
        if (shifted(t) != z(t) + ds(t)) {
          r.pass = false;
          r.counterexample = tuple_str(group, t);
          r.detail = "lift shift must move the output by exactly d(shift)";
          break;
        }
      }
      add(trial, r);
    }
  }

  report.results["checks"] = results;
  return emit(g, report, table, timer);
}

// --- metrics -----------------------------------------------------------------

struct MetricsOpts {
  std::string cocycle = "random-coboundary";
  std::string group = "s3";
  int range = 9;
  std::int64_t radius = 20;
  std::int64_t window = 1000;
  int samples = 200;
  int word_len = 6;
  std::vector<std::string> elements;
};

int run_metrics_random_coboundary(const GlobalOpts& g, const MetricsOpts& opts, RunReport& report,
                                  CsvTable& table) {
  const Group group = Group::parse(opts.group);
  if (!group.is_finite()) {
    throw std::invalid_argument("--cocycle random-coboundary needs a finite group");
  }
  Rng rng(g.seed);
  const Cochain phi = random_table_cochain(rng, group, 1, opts.range);
  const Cochain w = materialize(codifferential(phi, group), group);
  report.params["group"] = group.name();
  report.params["definition"] = "w = d(phi) for a random bounded phi";

  table.header = {"element", "osc_norm", "lipschitz_length", "2*length_bound", "within_bound"};
  Json rows = Json::array();
  std::vector<Rat> lengths;
  bool rows_ok = true;
  for (const Element& e : group.elements()) {
    const Rat osc = osc_norm_exact(w, e, group);
    const Rat len = lipschitz_length_exact(phi, group, e);
    lengths.push_back(len);
    const Rat bound = Rat(2) * len;
    const bool ok = osc <= bound;
    rows_ok = rows_ok && ok;
    rows.push_back(Json{{"element", group.element_str(e)},
                        {"osc_norm", rat_str(osc)},
                        {"lipschitz_length", rat_str(len)},
                        {"bound", rat_str(bound)},
                        {"within_bound", ok}});
    table.rows.push_back({group.element_str(e), rat_str(osc), rat_str(len), rat_str(bound),
                          ok ? "true" : "false"});
  }

  const CheckResult axioms = check_pseudometric_axioms(group, w, g.mode());
  const CheckResult mechanism = check_osc_mechanism(group, w, g.mode());
  const CompareReport cmp = compare_constructions(phi, group);
  const LengthComparisonReport min_report = lipschitz_wrt_length(phi, group, lengths);
  const Cochain eta = random_table_cochain(rng, group, 1, opts.range);
  const StabilityReport stab = coboundary_stability(w, eta, group);

  report.results["norms"] = rows;
  report.results["pseudometric_axioms"] =
      Json{{"pass", axioms.pass}, {"counterexample", axioms.counterexample}};
  report.results["osc_mechanism"] =
      Json{{"pass", mechanism.pass}, {"counterexample", mechanism.counterexample}};
  report.results["comparison"] = Json{{"pass", cmp.ok},
                                      {"max_slack", rat_str(cmp.max_slack)},
                                      {"tight_count", cmp.tight_count},
                                      {"total", cmp.total}};
  report.results["length_minimality"] = Json{{"displacement_bounded", min_report.displacement_bounded},
                                             {"minimal", min_report.minimal}};
  report.results["coboundary_stability"] = Json{{"pass", stab.ok},
                                                {"max_distance", rat_str(stab.max_distance)},
                                                {"bound", rat_str(stab.bound)}};
  report.pass = rows_ok && axioms.pass && mechanism.pass && cmp.ok &&
                min_report.displacement_bounded && min_report.minimal && stab.ok;
  return 0;
}

int run_metrics_delta_abs(const MetricsOpts& opts, RunReport& report, CsvTable& table) {
  if (opts.window < opts.radius) {
    throw std::invalid_argument("--window must be at least --radius");
  }
  const Group z1 = Group::free_abelian(1);
  const Cochain phi = abs_cochain_z();
  const Cochain w = codifferential(phi, z1);
  const std::vector<Element> window = z_window(opts.window);
  report.params["group"] = z1.name();
  report.params["definition"] = "phi = |.| on Z, w = d(phi)";
  report.params["radius"] = opts.radius;
  report.params["window"] = opts.window;

  table.header = {"g", "osc_norm", "osc_closed_form", "lipschitz_length", "length_closed_form", "ok"};
  Json rows = Json::array();
  for (std::int64_t v = -opts.radius; v <= opts.radius; ++v) {
    const Element e = ZVec{v};
    const Rat osc = osc_norm(w, e, window);
    const Rat len = lipschitz_length(phi, z1, e, window);
    const bool ok = (osc == abs_osc_norm_z(v)) && (len == abs_length_z(v));
    report.pass = report.pass && ok;
    rows.push_back(Json{{"g", v},
                        {"osc_norm", rat_str(osc)},
                        {"osc_closed_form", rat_str(abs_osc_norm_z(v))},
                        {"lipschitz_length", rat_str(len)},
                        {"length_closed_form", rat_str(abs_length_z(v))},
                        {"ok", ok}});
    table.rows.push_back({std::to_string(v), rat_str(osc), rat_str(abs_osc_norm_z(v)), rat_str(len),
                          rat_str(abs_length_z(v)), ok ? "true" : "false"});
  }
  report.results["rows"] = rows;
  report.results["note"] =
      "windowed values shown; on these radii they agree with the closed forms, and the "
      "comparison bound osc = 2 * length is tight at every g";
  return 0;
}

int run_metrics_gs(const GlobalOpts& g, const MetricsOpts& opts, RunReport& report,
                   CsvTable& table) {
  const Group fp = Group::fprime();
  const Cochain w = gs_cochain();
  Rng rng(g.seed);
  std::vector<Element> domain;
  domain.reserve(static_cast<std::size_t>(opts.samples));
  for (int i = 0; i < opts.samples; ++i) {
    domain.push_back(random_fprime_word(rng, opts.word_len));
  }
  report.params["group"] = fp.name();
  report.params["definition"] = "w = slope-determinant 2-cocycle";
  report.params["samples"] = opts.samples;
  report.params["word_len"] = opts.word_len;
  report.params["note"] = "sampled domains give certified lower bounds, not exact norms";

  std::vector<std::string> exprs = opts.elements;
  if (exprs.empty()) exprs = {"f", "g", "f.g", "inv(f)", "f*1", "1*g"};

  table.header = {"element", "osc_norm_lower_bound", "samples"};
  Json rows = Json::array();
  for (const std::string& expr : exprs) {
    const Element e = parse_element(fp, expr);
    const Rat bound = osc_norm(w, e, domain);
    rows.push_back(Json{{"element", expr},
                        {"osc_norm_lower_bound", rat_str(bound)},
                        {"samples", domain.size()}});
    table.rows.push_back({expr, rat_str(bound), std::to_string(domain.size())});
  }
  report.results["rows"] = rows;
  return 0;
}

int run_metrics(const GlobalOpts& g, const MetricsOpts& opts) {
  Timer timer;
  RunReport report;
  report.command = "metrics";
  report.params["cocycle"] = opts.cocycle;
  report.params["seed"] = g.seed;
  CsvTable table;
  if (opts.cocycle == "random-coboundary") {
    run_metrics_random_coboundary(g, opts, report, table);
  } else if (opts.cocycle == "delta-abs") {
    run_metrics_delta_abs(opts, report, table);
  } else if (opts.cocycle == "gs") {
    run_metrics_gs(g, opts, report, table);
  } else {
    throw std::invalid_argument("--cocycle must be random-coboundary, delta-abs or gs");
  }
  return emit(g, report, table, timer);
}

// --- probe -------------------------------------------------------------------

struct ProbeOpts {
  std::string cochain = "gs";
  std::string group = "fprime";
  int degree = 2;
  int p = 1;
  std::vector<std::string> tail;
  std::string samples = "400";
  int word_len = 6;
  int range = 9;
};

int run_probe(const GlobalOpts& g, const ProbeOpts& opts) {
  Timer timer;
  RunReport report;
  report.command = "probe";
  CsvTable table;

  Group group = Group::parse(opts.group);
  std::optional<Cochain> w;
  if (opts.cochain == "gs") {
    group = Group::fprime();
    w = gs_cochain();
  } else if (opts.cochain == "gs-cup2") {
    group = Group::fprime();
    w = cup(gs_cochain(), gs_cochain()).memoized();
  } else if (opts.cochain == "random") {
    if (!group.is_finite()) {
      throw std::invalid_argument("--cochain random needs a finite group");
    }
    Rng table_rng(g.seed + 1);
    w = random_table_cochain(table_rng, group, opts.degree, opts.range);
  } else {
    throw std::invalid_argument("--cochain must be gs, gs-cup2 or random");
  }

  const int degree = w->degree();
  if (opts.p < 1 || opts.p > degree) {
    throw std::invalid_argument("--p must be between 1 and the cochain degree " +
                                std::to_string(degree));
  }
  if (static_cast<int>(opts.tail.size()) != degree - opts.p) {
    throw std::invalid_argument("--tail must supply exactly degree - p = " +
                                std::to_string(degree - opts.p) + " elements");
  }
  Tuple tail;
  for (const std::string& expr : opts.tail) tail.push_back(parse_element(group, expr));

  report.params["cochain"] = opts.cochain;
  report.params["group"] = group.name();
  report.params["degree"] = degree;
  report.params["p"] = opts.p;
  report.params["tail"] = opts.tail;
  report.params["seed"] = g.seed;

  ProbeResult result{Rat(0), false, 0};
  if (opts.samples == "all") {
    if (!group.is_finite()) {
      throw std::invalid_argument("--samples all needs a finite group");
    }
    result = probe_p_bounded_all(*w, opts.p, tail, group);
  } else {
    const long n = std::stol(opts.samples);
    if (n < 1) throw std::invalid_argument("--samples must be a positive count or 'all'");
    Rng rng(g.seed);
    std::vector<Tuple> samples;
    samples.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
      Tuple t;
      for (int k = 0; k < opts.p; ++k) t.push_back(random_element(rng, group, opts.word_len));
      samples.push_back(std::move(t));
    }
    result = probe_p_bounded(*w, opts.p, tail, samples);
  }

  report.params["samples"] = opts.samples;
  report.results["max_abs"] = rat_str(result.max_abs);
  report.results["exact_sup"] = result.exact;
  report.results["sample_count"] = result.sample_count;
  report.results["note"] = result.exact
                               ? "finite tuple space scanned exhaustively; this is the sup"
                               : "sampled lower bound; boundedness is never claimed from samples";
  table.header = {"max_abs", "exact_sup", "sample_count"};
  table.rows.push_back({rat_str(result.max_abs), result.exact ? "true" : "false",
                        std::to_string(result.sample_count)});
  return emit(g, report, table, timer);
}

// --- pair --------------------------------------------------------------------

struct PairOpts {
  std::string chain = "zeta2";
  std::string cochain = "gs-power";
  std::string expect;
};

Chain resolve_chain(const std::string& spec) {
  if (spec == "zeta2") return zeta_cycle(2);
  if (spec == "zeta4") return zeta_cycle(4);
  if (spec == "zeta6") return zeta_cycle(6);
  if (spec == "zeta8") return zeta_cycle(8);
  if (!spec.empty() && spec[0] == '@') return chain_from_file(spec.substr(1));
  throw std::invalid_argument("--chain must be zeta2|zeta4|zeta6|zeta8 or @file.json");
}

Cochain resolve_pair_cochain(const std::string& spec, const Chain& chain, std::uint64_t seed,
                             RunReport& report) {
  const Group& cg = chain.group();
  if (spec == "gs-power") {
    if (cg.kind() != Group::Kind::free_abelian) {
      throw std::invalid_argument("--cochain gs-power needs a chain over a free abelian group");
    }
    const int rank = static_cast<int>(std::get<ZVec>(cg.identity()).size());
    if (chain.degree() != rank) {
      throw std::invalid_argument("gs-power needs chain degree equal to the group rank");
    }
    std::vector<Element> images;
    if (rank == 2) {
      images = {builtin_f(), builtin_g()};
    } else if (rank == 4) {
      for (const PLMap& m : psi4_images()) images.emplace_back(m);
    } else if (rank == 6) {
      // Six pairwise-disjoint supports: the four rank-4 images squeezed into
      // [0,1/2] plus the two half-interval embeddings of f and g into [1/2,1].
      for (const PLMap& m : psi4_images()) images.emplace_back(star_product(m, PLMap::identity()));
      images.emplace_back(star_product(PLMap::identity(), builtin_f()));
      images.emplace_back(star_product(PLMap::identity(), builtin_g()));
    } else if (rank == 8) {
      for (const PLMap& m : zeta8_images(psi4_images())) images.emplace_back(m);
    } else {
      throw std::invalid_argument("gs-power supports ranks 2, 4, 6 and 8");
    }
    const Homomorphism psi = Homomorphism::from_generators(cg, std::move(images), Group::fprime());
    Cochain power = gs_cochain();
    for (int k = 2; k <= rank / 2; ++k) power = cup(power, gs_cochain());
    report.params["cochain_degree"] = rank;
    return pullback(power, psi).memoized();
  }
  if (spec == "delta-poly") {
    if (cg.kind() != Group::Kind::free_abelian) {
      throw std::invalid_argument("--cochain delta-poly needs a chain over a free abelian group");
    }
    const int rank = static_cast<int>(std::get<ZVec>(cg.identity()).size());
    Rng rng(seed);
    const Cochain eta = random_polynomial_cochain_zd(rng, rank, chain.degree() - 1);
    report.params["cochain_degree"] = chain.degree();
    return codifferential(eta, cg);
  }
  if (!spec.empty() && spec[0] == '@') {
    TableCochain tc = table_cochain_from_file(spec.substr(1));
    if (!(tc.group == cg)) {
      throw std::invalid_argument("cochain file group does not match the chain group");
    }
    report.params["cochain_degree"] = tc.cochain.degree();
    return tc.cochain;
  }
  throw std::invalid_argument("--cochain must be gs-power, delta-poly or @file.json");
}

int run_pair(const GlobalOpts& g, const PairOpts& opts) {
  Timer timer;
  RunReport report;
  report.command = "pair";
  report.params["chain"] = opts.chain;
  report.params["cochain"] = opts.cochain;
  report.params["seed"] = g.seed;

  const Chain chain = resolve_chain(opts.chain);
  report.params["chain_degree"] = chain.degree();
  report.params["chain_terms"] = chain.terms().size();
  const Cochain w = resolve_pair_cochain(opts.cochain, chain, g.seed, report);
  if (w.degree() != chain.degree()) {
    throw std::invalid_argument("cochain degree must match chain degree");
  }
  const Rat value = pair_chain(w, chain, g.mode());

  report.results["value"] = rat_str(value);

  if (opts.cochain == "delta-poly") {
    // Pairing against a coboundary certifies the chain is a cycle.
    report.results["cycle_certificate"] = (value == 0);
    report.pass = (value == 0);
  }
  if (!opts.expect.empty()) {
    const Rat expected = rat_from_string(opts.expect);
    report.results["expected"] = opts.expect;
    report.results["matches_expected"] = (value == expected);
    report.pass = report.pass && (value == expected);
  }

  CsvTable table;
  table.header = {"chain", "cochain", "value", "pass"};
  table.rows.push_back({opts.chain, opts.cochain, rat_str(value), report.pass ? "true" : "false"});
  return emit(g, report, table, timer);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "barq: exact computations in the bar complex: contracting-operator identities, the "
      "slope-determinant 2-cocycle on PL homeomorphism groups, cycle pairings and "
      "cocycle-induced metrics"};
  app.require_subcommand(1);

  GlobalOpts gopts;
  app.add_option("--threads", gopts.threads, "worker thread count (0 = runtime default)");
  app.add_option("--seed", gopts.seed, "PRNG seed for randomized inputs")->capture_default_str();
  app.add_option("--format", gopts.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", gopts.out, "write the report to this file instead of stdout");
  app.add_flag("--no-timing", gopts.no_timing,
               "omit elapsed_ms so identical runs produce byte-identical reports");
  app.add_flag("--serial", gopts.serial, "use the serial reference kernels");

  ThompsonOpts topts;
  CLI::App* thompson = app.add_subcommand(
      "thompson-verify", "evaluate the slope-determinant cocycle and its cycle pairings "
                         "against reference values");
  thompson->fallthrough();
  thompson->add_option("--golden", topts.golden_path,
                       "JSON file overriding the built-in reference values");

  HomotopyOpts hopts;
  CLI::App* homotopy = app.add_subcommand(
      "homotopy-check", "verify the contracting-operator identities exhaustively on a "
                        "finite group, on randomized cochains");
  homotopy->fallthrough();
  homotopy->add_option("--group", hopts.group, "finite group (c<n> or s<n>)")
      ->capture_default_str();
  homotopy->add_option("--degree", hopts.degree, "cochain degree (1..3)")->capture_default_str();
  homotopy->add_option("--trials", hopts.trials, "randomized trials")->capture_default_str();
  homotopy->add_option("--range", hopts.range, "entry range for random tables")
      ->capture_default_str();
  homotopy->add_flag("--shifted-lift", hopts.shifted_lift,
                     "also verify the non-canonical lift moves the output by d(shift)");

  MetricsOpts mopts;
  CLI::App* metrics = app.add_subcommand(
      "metrics", "norms and lengths induced by cocycles, with axiom and stability checks");
  metrics->fallthrough();
  metrics->add_option("--cocycle", mopts.cocycle, "random-coboundary | delta-abs | gs")
      ->capture_default_str();
  metrics->add_option("--group", mopts.group, "finite group for random-coboundary")
      ->capture_default_str();
  metrics->add_option("--range", mopts.range, "entry range for random tables")
      ->capture_default_str();
  metrics->add_option("--radius", mopts.radius, "report rows for g in [-radius, radius] on Z")
      ->capture_default_str();
  metrics->add_option("--window", mopts.window, "oscillation window radius on Z")
      ->capture_default_str();
  metrics->add_option("--samples", mopts.samples, "sampled domain size on infinite groups")
      ->capture_default_str();
  metrics->add_option("--word-len", mopts.word_len, "max generator word length for samples")
      ->capture_default_str();
  metrics->add_option("--element", mopts.elements,
                      "element expression to report (repeatable; gs only)");

  ProbeOpts popts;
  CLI::App* probe = app.add_subcommand(
      "probe", "bound |w| over the first p arguments with the remaining arguments fixed");
  probe->fallthrough();
  probe->add_option("--cochain", popts.cochain, "gs | gs-cup2 | random")->capture_default_str();
  probe->add_option("--group", popts.group, "group for --cochain random")->capture_default_str();
  probe->add_option("--degree", popts.degree, "degree for --cochain random")
      ->capture_default_str();
  probe->add_option("--p", popts.p, "number of leading arguments to range over")
      ->capture_default_str();
  probe->add_option("--tail", popts.tail, "fixed trailing arguments (element expressions)");
  probe->add_option("--samples", popts.samples, "sample count, or 'all' for finite groups")
      ->capture_default_str();
  probe->add_option("--word-len", popts.word_len, "max generator word length for samples")
      ->capture_default_str();
  probe->add_option("--range", popts.range, "entry range for random tables")
      ->capture_default_str();

  PairOpts paopts;
  CLI::App* pair = app.add_subcommand("pair", "evaluate a cochain against a chain, exactly");
  pair->fallthrough();
  pair->add_option("--chain", paopts.chain, "zeta2|zeta4|zeta6|zeta8 or @file.json")
      ->capture_default_str();
  pair->add_option("--cochain", paopts.cochain, "gs-power | delta-poly | @file.json")
      ->capture_default_str();
  pair->add_option("--expect", paopts.expect, "fail unless the value equals this rational");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gopts.threads > 0) par::set_threads(gopts.threads);
    if (thompson->parsed()) return run_thompson(gopts, topts);
    if (homotopy->parsed()) return run_homotopy(gopts, hopts);
    if (metrics->parsed()) return run_metrics(gopts, mopts);
    if (probe->parsed()) return run_probe(gopts, popts);
    if (pair->parsed()) return run_pair(gopts, paopts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 2;
}
