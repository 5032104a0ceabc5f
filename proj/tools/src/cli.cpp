#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "ecdlp/analysis.hpp"
#include "ecdlp/attack.hpp"
#include "ecdlp/curve.hpp"
#include "ecdlp/dlp_oracles.hpp"
#include "ecdlp/error.hpp"
#include "ecdlp/experiment.hpp"
#include "ecdlp/verification.hpp"
#include "ecdlp/version.hpp"
#include "report.hpp"

namespace ecdlp::cli {

namespace {

using nlohmann::ordered_json;

struct GroupFlags {
  u64 q = 0, a = 0, b = 0, gx = 0, gy = 0, order = 0;
};

struct TargetFlags {
  u64 qx = 0, qy = 0;
};

struct AttackFlags {
  std::optional<unsigned> n_prime;
  unsigned l = 0;
  std::string solver = "exhaustive";
  u64 seed = 1;
  bool accident_check = true;
  u64 enumeration_budget = kDefaultEnumerationBudget;
};

struct OutputFlags {
  std::string manifest;
  std::string log;
  bool timing = false;
};

struct SolveFlags {
  GroupFlags group;
  TargetFlags target;
  AttackFlags attack;
  OutputFlags output;
  u64 max_iterations = 0;
};

struct ExperimentFlags {
  GroupFlags group;
  AttackFlags attack;
  OutputFlags output;
  u64 trials = 0;
  std::optional<u64> m;
  unsigned threads = 1;
  std::string csv;
  std::string json;
};

struct VerifyFlags {
  std::string suite = "all";
  u64 seed = 1;
  std::string report;
};

struct ParamsFlags {
  u64 order = 0;
  std::optional<unsigned> n_prime;
  unsigned l = 0;
};

struct FindCurveFlags {
  u64 q = 0;
  std::optional<u64> order_min, order_max;
};

struct DlpFlags {
  GroupFlags group;
  TargetFlags target;
  std::string method = "bsgs";
};

void add_group_flags(CLI::App* app, GroupFlags& g) {
  app->add_option("--q", g.q, "Field prime")->required();
  app->add_option("--a", g.a, "Curve coefficient a")->required();
  app->add_option("--b", g.b, "Curve coefficient b")->required();
  app->add_option("--gx", g.gx, "Generator x")->required();
  app->add_option("--gy", g.gy, "Generator y")->required();
  app->add_option("--order", g.order, "Prime order of the generator")->required();
}

void add_target_flags(CLI::App* app, TargetFlags& t) {
  app->add_option("--qx", t.qx, "Target Q, x coordinate")->required();
  app->add_option("--qy", t.qy, "Target Q, y coordinate")->required();
}

void add_attack_flags(CLI::App* app, AttackFlags& f) {
  app->add_option("--nprime", f.n_prime, "Interpolation degree n' (default: smallest with C(6n',3n') >= p)")
      ->check(CLI::Range(1u, 64u));
  app->add_option("--l", f.l, "Kernel dimension l (0 = 3n')")->capture_default_str();
  app->add_option("--solver", f.solver, "Problem L solver")
      ->check(CLI::IsMember({"alg2", "exhaustive", "alg2-then-exhaustive"}))
      ->capture_default_str();
  app->add_option("--seed", f.seed, "Random seed")->capture_default_str();
  app->add_option("--accident-check", f.accident_check, "Look for r P = +-r' Q collisions")
      ->capture_default_str();
  app->add_option("--enumeration-budget", f.enumeration_budget, "Largest subset count the exhaustive solver scans")
      ->capture_default_str();
}

void add_output_flags(CLI::App* app, OutputFlags& o) {
  app->add_option("--manifest", o.manifest, "Write a JSON run manifest");
  app->add_option("--log", o.log, "Write per-iteration JSON lines");
  app->add_flag("--timing", o.timing, "Include wall-clock times in outputs");
}

GroupSpec build_group(const GroupFlags& g) {
  Curve curve(PrimeModulus(g.q), g.a, g.b);
  if (!curve.contains(g.gx, g.gy)) {
    throw ValidationError("generator P = (" + std::to_string(g.gx) + ", " + std::to_string(g.gy) +
                          ") is not on the curve");
  }
  return GroupSpec(curve, curve.point(g.gx, g.gy), g.order);
}

Point build_target(const GroupSpec& group, const TargetFlags& t) {
  if (!group.curve().contains(t.qx, t.qy)) {
    throw ValidationError("target Q = (" + std::to_string(t.qx) + ", " + std::to_string(t.qy) +
                          ") is not on the curve");
  }
  return group.curve().point(t.qx, t.qy);
}

ordered_json group_echo(const GroupFlags& g) {
  return {{"q", g.q}, {"a", g.a}, {"b", g.b}, {"gx", g.gx}, {"gy", g.gy}, {"order", g.order}};
}

unsigned resolve_n_prime(const AttackFlags& f, u64 p) {
  return f.n_prime ? *f.n_prime : select_parameters(p).n_prime;
}

void add_attack_echo(ordered_json& cfg, const AttackFlags& f, unsigned n_prime, unsigned l) {
  cfg["nprime"] = n_prime;
  cfg["l"] = l;
  cfg["solver"] = f.solver;
  cfg["seed"] = f.seed;
  cfg["accident-check"] = f.accident_check;
  cfg["enumeration-budget"] = f.enumeration_budget;
}

// "-" selects the command's standard output.
void write_file(const std::string& path, const std::string& content, std::ostream& out) {
  if (path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot open '" + path + "' for writing");
  file << content;
  if (!file) throw ValidationError("failed writing '" + path + "'");
}

ordered_json manifest_header(std::string_view command, const ordered_json& config, u64 seed) {
  return {{"artifact", "ecdlp"}, {"version", kVersion}, {"command", command}, {"config", config}, {"seed", seed}};
}

std::string show(const Point& p) {
  if (p.is_identity()) return "O";
  return "(" + std::to_string(p.x().residue()) + ", " + std::to_string(p.y().residue()) + ")";
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_solve(const SolveFlags& f, std::ostream& out, std::ostream& err) {
  const GroupSpec group = build_group(f.group);
  const Point target = build_target(group, f.target);
  const u64 p = group.order().value();

  AttackConfig cfg{group, target};
  cfg.n_prime = resolve_n_prime(f.attack, p);
  cfg.l = f.attack.l;
  cfg.solver = parse_solver_kind(f.attack.solver);
  cfg.seed = f.attack.seed;
  cfg.accident_check = f.attack.accident_check;
  cfg.enumeration_budget = f.attack.enumeration_budget;
  validate(cfg);
  cfg.max_iterations = f.max_iterations != 0 ? f.max_iterations : default_max_iterations(cfg);

  const auto start = std::chrono::steady_clock::now();
  AttackOutcome outcome = run_attack(cfg);
  const double wall = seconds_since(start);

  const u64 successes = outcome.m ? 1 : 0;
  const ProportionInterval ci = wilson_interval(successes, outcome.iterations_used);
  if (!f.output.manifest.empty() || !f.output.log.empty()) {
    ordered_json config = group_echo(f.group);
    config["qx"] = f.target.qx;
    config["qy"] = f.target.qy;
    add_attack_echo(config, f.attack, cfg.n_prime, cfg.resolved_l());
    config["max-iterations"] = cfg.max_iterations;

    ordered_json records = ordered_json::array();
    std::string lines;
    for (const auto& rec : outcome.log) {
      records.push_back(to_json(rec));
      lines += records.back().dump() + '\n';
    }
    if (!f.output.log.empty()) write_file(f.output.log, lines, out);
    if (!f.output.manifest.empty()) {
      ordered_json manifest = manifest_header("solve", config, cfg.seed);
      manifest["records"] = records;
      ordered_json summary{{"success", outcome.m.has_value()},
                           {"m", outcome.m ? ordered_json(*outcome.m) : ordered_json(nullptr)},
                           {"iterations", outcome.iterations_used},
                           {"per_iteration_rate", outcome.iterations_used
                                                      ? static_cast<double>(successes) / outcome.iterations_used
                                                      : 0.0},
                           {"ci95", {ci.low, ci.high}},
                           {"model", to_json(success_model(p, cfg.n_prime, cfg.resolved_l()))}};
      if (f.output.timing) summary["wall_time_s"] = wall;
      manifest["summary"] = summary;
      write_file(f.output.manifest, manifest.dump(2) + '\n', out);
    }
  }

  if (!outcome.m) {
    err << "no logarithm found: " << outcome.failure << '\n';
    return kExhausted;
  }
  out << "m = " << *outcome.m << '\n';
  out << "verified: " << *outcome.m << " * " << show(group.generator()) << " = " << show(target)
      << '\n';
  out << "iterations: " << outcome.iterations_used << " of " << cfg.max_iterations << '\n';
  out << "route: " << to_string(outcome.log.back().route) << '\n';
  if (f.output.timing) out << "wall time: " << fixed(wall, 3) << " s\n";
  return kOk;
}

int cmd_experiment(const ExperimentFlags& f, std::ostream& out) {
  ExperimentConfig cfg{.group = build_group(f.group)};
  const u64 p = cfg.group.order().value();
  cfg.n_prime = resolve_n_prime(f.attack, p);
  cfg.l = f.attack.l;
  cfg.solver = parse_solver_kind(f.attack.solver);
  cfg.trials = f.trials;
  cfg.seed = f.attack.seed;
  cfg.fixed_m = f.m;
  cfg.accident_check = f.attack.accident_check;
  cfg.threads = f.threads;
  cfg.enumeration_budget = f.attack.enumeration_budget;

  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result = run_experiment(cfg);
  const double wall = seconds_since(start);

  if (!f.csv.empty()) {
    std::ostringstream csv;
    write_trials_csv(csv, result, cfg.solver, f.output.timing);
    write_file(f.csv, csv.str(), out);
  }

  ordered_json config = group_echo(f.group);
  add_attack_echo(config, f.attack, cfg.n_prime, cfg.resolved_l());
  config["trials"] = f.trials;
  if (f.m) config["m"] = *f.m;
  config["threads"] = f.threads;

  ordered_json summary = to_json(result.summary);
  summary["solver"] = f.attack.solver;
  if (f.output.timing) summary["wall_time_s"] = wall;
  if (!f.json.empty()) write_file(f.json, summary.dump(2) + '\n', out);

  if (!f.output.manifest.empty() || !f.output.log.empty()) {
    ordered_json records = ordered_json::array();
    std::string lines;
    for (const auto& r : result.records) {
      records.push_back(to_json(r, f.output.timing));
      lines += records.back().dump() + '\n';
    }
    if (!f.output.log.empty()) write_file(f.output.log, lines, out);
    if (!f.output.manifest.empty()) {
      ordered_json manifest = manifest_header("experiment", config, cfg.seed);
      manifest["records"] = records;
      manifest["summary"] = summary;
      write_file(f.output.manifest, manifest.dump(2) + '\n', out);
    }
  }

  if (f.csv != "-" && f.json != "-" && f.output.manifest != "-" && f.output.log != "-") {
    const ExperimentSummary& s = result.summary;
    out << "trials      " << s.trials << '\n';
    out << "successes   " << s.successes << '\n';
    out << "rate        " << fixed(s.rate) << "  95% CI [" << fixed(s.ci95.low) << ", " << fixed(s.ci95.high)
        << "]\n";
    out << "accidents   " << s.accidents << '\n';
    out << "model       per-iteration " << fixed(s.model.per_iteration) << " (C = " << s.model.subsets
        << "), alg2 conditional " << fixed(s.model.alg2_conditional) << ", overall " << fixed(s.model.overall)
        << '\n';
    if (f.output.timing) out << "wall time   " << fixed(wall, 3) << " s\n";
  }
  return kOk;
}

int cmd_verify(const VerifyFlags& f, std::ostream& out) {
  std::vector<SuiteResult> results = run_suites(f.suite, f.seed);
  bool all = true;
  for (const SuiteResult& r : results) {
    out << '[' << r.name << "] " << (r.passed ? "PASS" : "FAIL") << '\n';
    for (const std::string& line : r.lines) out << "  " << line << '\n';
    all = all && r.passed;
    if (!f.report.empty() && !r.report.empty()) write_file(f.report, r.report, out);
  }
  return all ? kOk : kInvariant;
}

int cmd_params(const ParamsFlags& f, std::ostream& out) {
  if (!is_prime(f.order)) throw ValidationError("order " + std::to_string(f.order) + " is not prime");
  ParameterChoice choice = select_parameters(f.order);
  const unsigned n = f.n_prime ? *f.n_prime : choice.n_prime;
  const unsigned l = f.l != 0 ? f.l : 3 * n;
  const ProbabilityModel m = success_model(f.order, n, l);
  out << "p = " << f.order << '\n';
  out << "n' = " << n << '\n';
  out << "l = " << l << '\n';
  out << "C = C(" << 3 * n + l << ", " << l << ") = " << m.subsets << '\n';
  if (!f.n_prime && f.l == 0) out << "stirling estimate = " << fixed(choice.stirling_estimate, 1) << '\n';
  out << "per-iteration success = " << fixed(m.per_iteration) << '\n';
  out << "alg2 conditional = " << fixed(m.alg2_conditional) << " (" << u64{l} * l << "/" << m.subsets << ")\n";
  out << "overall with alg2 = " << fixed(m.overall) << '\n';
  out << "0.6 (ln p)^2 / p = " << fixed(m.headline_ln) << '\n';
  out << "0.6 (log2 p)^2 / p = " << fixed(m.headline_log2) << '\n';
  return kOk;
}

int cmd_find_curve(const FindCurveFlags& f, std::ostream& out) {
  const PrimeModulus q(f.q);
  const u64 span = static_cast<u64>(2.0 * std::sqrt(static_cast<double>(f.q))) + 1;
  const u64 lo = f.order_min.value_or(f.q + 1 > span ? f.q + 1 - span : 2);
  const u64 hi = f.order_max.value_or(f.q + 1 + span);
  if (lo > hi) throw ValidationError("--order-min exceeds --order-max");
  const GroupSpec g = find_prime_order_curve(q, lo, hi);
  const Curve& c = g.curve();
  out << "curve      " << format_curve(c) << '\n';
  out << "order      " << g.order().value() << '\n';
  out << "generator  " << show(g.generator()) << '\n';
  out << "flags      --q " << f.q << " --a " << c.a().residue() << " --b " << c.b().residue() << " --gx "
      << g.generator().x().residue() << " --gy " << g.generator().y().residue() << " --order "
      << g.order().value() << '\n';
  return kOk;
}

int cmd_dlp(const DlpFlags& f, std::ostream& out) {
  const GroupSpec group = build_group(f.group);
  const Point target = build_target(group, f.target);
  const u64 m = f.method == "bsgs" ? solve_bsgs(group, target) : solve_exhaustive_dlp(group, target);
  out << "m = " << m << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Las Vegas ECDLP attack via kernels of Veronese point matrices", "ecdlp"};
  app.set_config("--config", "", "Read flags from a key = value file or a run manifest");
  app.config_formatter(std::make_shared<FlatConfig>(&app));
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SolveFlags solve;
  auto* s = app.add_subcommand("solve", "Recover m from Q = m P");
  add_group_flags(s, solve.group);
  add_target_flags(s, solve.target);
  add_attack_flags(s, solve.attack);
  s->add_option("--max-iterations", solve.max_iterations, "Iteration budget (0 = ten times the expected count)")
      ->capture_default_str();
  add_output_flags(s, solve.output);

  ExperimentFlags exp;
  auto* e = app.add_subcommand("experiment", "Single-iteration success rate over many random instances");
  add_group_flags(e, exp.group);
  add_attack_flags(e, exp.attack);
  e->add_option("--trials", exp.trials, "Number of trials")->required()->check(CLI::PositiveNumber);
  e->add_option("--m", exp.m, "Fixed logarithm for every trial (default: uniform per trial)");
  e->add_option("--threads", exp.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  e->add_option("--csv", exp.csv, "Per-trial CSV ('-' for stdout)");
  e->add_option("--json", exp.json, "Summary JSON ('-' for stdout)");
  add_output_flags(e, exp.output);

  VerifyFlags verify;
  auto* v = app.add_subcommand("verify", "Run the property suites");
  v->add_option("--suite", verify.suite, "Suite to run")
      ->check(CLI::IsMember({"theorem1", "kernel-dim", "partitions", "problem-l", "all"}))
      ->capture_default_str();
  v->add_option("--seed", verify.seed, "Random seed")->capture_default_str();
  v->add_option("--report", verify.report, "Write the partition audit CSV");

  ParamsFlags params;
  auto* pa = app.add_subcommand("params", "Pick n' and l for a group order and show the success model");
  pa->add_option("--order", params.order, "Prime group order")->required();
  pa->add_option("--nprime", params.n_prime, "Override n'")->check(CLI::Range(1u, 64u));
  pa->add_option("--l", params.l, "Override l (0 = 3n')");

  FindCurveFlags find;
  auto* fc = app.add_subcommand("find-curve", "Scan (a, b) for a curve of prime order");
  fc->add_option("--q", find.q, "Field prime")->required();
  fc->add_option("--order-min", find.order_min, "Smallest acceptable order (default: Hasse bound)");
  fc->add_option("--order-max", find.order_max, "Largest acceptable order (default: Hasse bound)");

  DlpFlags dlp;
  auto* d = app.add_subcommand("dlp", "Reference logarithm by baby-step giant-step or linear scan");
  add_group_flags(d, dlp.group);
  add_target_flags(d, dlp.target);
  d->add_option("--method", dlp.method, "Oracle")->check(CLI::IsMember({"bsgs", "exhaustive"}))->capture_default_str();

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    sub->allow_config_extras(CLI::config_extras_mode::error);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, out, err);
    if (e->parsed()) return cmd_experiment(exp, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (pa->parsed()) return cmd_params(params, out);
    if (fc->parsed()) return cmd_find_curve(find, out);
    if (d->parsed()) return cmd_dlp(dlp, out);
  } catch (const ValidationError& ex) {
    err << "validation error: " << ex.what() << '\n';
    return kValidation;
  } catch (const BudgetExceeded& ex) {
    err << "budget exceeded: " << ex.what() << '\n';
    return kExhausted;
  } catch (const std::overflow_error& ex) {
    err << "budget exceeded: " << ex.what() << '\n';
    return kExhausted;
  } catch (const InvariantViolation& ex) {
    err << "invariant violation: " << ex.what() << '\n';
    return kInvariant;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}

}  // namespace ecdlp::cli
