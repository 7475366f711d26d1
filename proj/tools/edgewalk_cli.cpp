// Command-line surface: instance generation, partial colorings, the two full
// pipelines, discrepancy evaluation, brute-force oracle, verification, and
// multi-run benchmarks. Machine-readable JSON goes to stdout (or --output);
// a short human summary goes to stderr. Exit codes: 0 success, 1 algorithmic
// failure (retries exhausted; a report is still emitted), 2 usage or parse
// error, 3 numeric failure.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "edgewalk/bench.hpp"
#include "edgewalk/coloring.hpp"
#include "edgewalk/instances.hpp"
#include "edgewalk/io.hpp"
#include "edgewalk/oracle.hpp"
#include "edgewalk/report.hpp"
#include "edgewalk/rng.hpp"
#include "edgewalk/walk.hpp"

namespace ew = edgewalk;
using nlohmann::json;

namespace {

struct Options {
  std::string input;
  std::string matrix;
  std::string output;
  std::string coloring;
  std::string x_path;
  std::string x0_path;
  std::string gen;
  std::string gen_json;
  int n = 0;
  int m = 0;
  double p = 0.5;
  int k = 2;
  int degree = 0;
  std::uint64_t seed = 1;
  int runs = 1;
  double delta = 0.08;
  bool delta_set = false;
  double gamma = 0.0;
  double big_c = 4.0;
  int retries = 64;
  double tol = 1e-9;
  double c_override = -1.0;
  double bound = -1.0;
};

void emit(const json& j, const std::string& output_path) {
  const std::string text = j.dump() + "\n";
  if (output_path.empty()) {
    std::cout << text;
  } else {
    ew::write_file(output_path, text);
  }
}

struct Loaded {
  std::optional<ew::SetSystem> sys;
  ew::ConstraintSet cs;  // raw scale, thresholds unset
};

Loaded load_instance(const Options& opt) {
  Loaded out;
  if (!opt.gen_json.empty()) {
    const ew::GeneratorSpec spec =
        ew::parse_generator_spec_json(ew::read_file(opt.gen_json));
    const ew::Instance inst = ew::generate(spec);
    if (std::holds_alternative<ew::SetSystem>(inst)) {
      out.sys = std::get<ew::SetSystem>(inst);
      out.cs = ew::indicator_matrix(*out.sys);
    } else {
      out.cs = std::get<ew::ConstraintSet>(inst);
    }
    return out;
  }
  if (!opt.gen.empty()) {
    ew::GeneratorSpec spec;
    spec.kind = ew::parse_generator_kind(opt.gen);
    spec.n = opt.n;
    spec.m = spec.kind == ew::GeneratorKind::kSingleton ? opt.n : opt.m;
    spec.seed = opt.seed;
    switch (spec.kind) {
      case ew::GeneratorKind::kBernoulli: spec.param = opt.p; break;
      case ew::GeneratorKind::kKUniform: spec.param = opt.k; break;
      case ew::GeneratorKind::kLowDegree: spec.param = opt.k; break;
      default: spec.param = 0.0; break;
    }
    if (spec.kind == ew::GeneratorKind::kMatrixGaussian) {
      out.cs = ew::generate_matrix(spec);
    } else {
      out.sys = ew::generate_sets(spec);
      out.cs = ew::indicator_matrix(*out.sys);
    }
  } else if (!opt.input.empty()) {
    out.sys = ew::load_set_system(opt.input);
    out.cs = ew::indicator_matrix(*out.sys);
  } else if (!opt.matrix.empty()) {
    out.cs = ew::load_matrix(opt.matrix);
  } else {
    throw ew::ValidationError(
        "no instance: pass --input, --matrix, --gen or --gen-json");
  }
  return out;
}

// Default per-row threshold: alpha(m, n) in unit-row scale, the same rule the
// Spencer recursion applies in its first round.
void apply_thresholds(ew::ConstraintSet& cs, const Options& opt) {
  const double c =
      opt.c_override >= 0.0 ? opt.c_override : ew::default_alpha(cs.m, cs.n);
  cs.set_uniform_threshold(c);
}

ew::WalkParams walk_params(const Options& opt, int n, int m) {
  ew::WalkParams p = ew::WalkParams::make(opt.delta, n, m, opt.seed, opt.big_c);
  if (opt.gamma > 0.0) {
    p.gamma = opt.gamma;
    p.t_steps = long(std::ceil(p.k1 / (p.gamma * p.gamma)));
  }
  p.max_retries = opt.retries;
  p.eps_slack = opt.tol;
  return p;
}

int cmd_gen(const Options& opt) {
  if (opt.output.empty())
    throw ew::ValidationError("gen requires --output PATH");
  Loaded inst = load_instance(opt);
  json j;
  j["kind"] = opt.gen.empty() ? "json" : opt.gen;
  j["seed"] = opt.seed;
  j["path"] = opt.output;
  if (inst.sys) {
    ew::save_set_system(*inst.sys, opt.output);
    j["n"] = inst.sys->n;
    j["m"] = inst.sys->m();
  } else {
    ew::save_matrix(inst.cs, opt.output);
    j["n"] = inst.cs.n;
    j["m"] = inst.cs.m;
  }
  emit(j, "");
  std::cerr << "wrote " << opt.gen << " instance to " << opt.output << "\n";
  return 0;
}

int cmd_partial(const Options& opt) {
  Loaded inst = load_instance(opt);
  apply_thresholds(inst.cs, opt);
  const ew::FractionalColoring x0 = ew::FractionalColoring::zeros(inst.cs.n);
  ew::WalkParams params = walk_params(opt, inst.cs.n, inst.cs.m);
  ew::PartialColorInfo info;
  try {
    ew::partial_color(inst.cs, x0, params, &info);
  } catch (const ew::RetryError& e) {
    json j = ew::to_json(e.best(), opt.seed, e.attempts());
    j["error"] = e.what();
    emit(j, opt.output);
    std::cerr << "partial coloring failed: " << e.what() << "\n";
    return 1;
  }
  json j = ew::to_json(info.outcome, opt.seed, info.attempts);
  const ew::VerifyReport ver = ew::verify_partial(
      info.outcome.x.x, x0.x, inst.cs.normalized(), opt.delta, opt.tol);
  j["verified"] = ver.ok;
  j["feasibility_sum"] = info.feasibility.sum;
  emit(j, opt.output);
  std::cerr << "partial coloring: success after " << info.attempts
            << " attempt(s), " << info.outcome.n_active_vars << "/"
            << inst.cs.n << " coordinates near +-1\n";
  return 0;
}

int cmd_pipeline(const Options& opt, bool beck_fiala) {
  Loaded inst = load_instance(opt);
  if (!inst.sys)
    throw ew::ValidationError("this command needs a set system instance");
  ew::PipelineResult res;
  try {
    if (beck_fiala) {
      ew::BeckFialaParams params;
      params.degree_t = opt.degree;
      params.seed = opt.seed;
      params.big_c = opt.big_c;
      if (opt.delta_set) params.delta = opt.delta;
      params.walk_retries = opt.retries;
      res = ew::beck_fiala_color(*inst.sys, params);
    } else {
      ew::SpencerParams params;
      params.seed = opt.seed;
      params.big_c = opt.big_c;
      if (opt.delta_set) params.delta = opt.delta;
      params.walk_retries = opt.retries;
      res = ew::spencer_color(*inst.sys, params);
    }
  } catch (const ew::RetryExhaustedError& e) {
    json j;
    j["error"] = e.what();
    j["seed"] = opt.seed;
    emit(j, opt.output);
    std::cerr << "pipeline failed: " << e.what() << "\n";
    return 1;
  }
  json j = ew::to_json(res);
  j["n"] = inst.sys->n;
  j["m"] = inst.sys->m();
  emit(j, opt.output);
  std::cerr << (beck_fiala ? "beck-fiala" : "spencer") << ": discrepancy "
            << res.report.max_abs << " (bound " << res.bound << ") in "
            << res.rounds.size() << " round(s)\n";
  return 0;
}

int cmd_disc(const Options& opt) {
  Loaded inst = load_instance(opt);
  if (!inst.sys)
    throw ew::ValidationError("disc needs a set system instance");
  if (opt.coloring.empty())
    throw ew::ValidationError("disc requires --coloring PATH");
  const ew::Coloring chi = ew::load_coloring(opt.coloring);
  ew::DiscrepancyReport rep = ew::discrepancy(chi, *inst.sys);
  if (opt.bound >= 0.0) {
    rep.bound = opt.bound;
    rep.satisfied = rep.max_abs <= opt.bound;
  }
  emit(ew::to_json(rep), opt.output);
  std::cerr << "discrepancy " << rep.max_abs << "\n";
  return 0;
}

int cmd_brute(const Options& opt) {
  Loaded inst = load_instance(opt);
  if (!inst.sys)
    throw ew::ValidationError("brute needs a set system instance");
  const ew::OracleResult res = ew::brute_force_disc(*inst.sys);
  json j;
  j["opt_disc"] = res.opt_disc;
  j["argmin"] = res.argmin.chi;
  j["n_enumerated"] = res.n_enumerated;
  emit(j, opt.output);
  std::cerr << "optimal discrepancy " << res.opt_disc << " over "
            << res.n_enumerated << " colorings\n";
  return 0;
}

int cmd_verify(const Options& opt) {
  Loaded inst = load_instance(opt);
  apply_thresholds(inst.cs, opt);
  if (opt.x_path.empty())
    throw ew::ValidationError("verify requires --x PATH");
  const std::vector<double> x = ew::load_point(opt.x_path);
  std::vector<double> x0(inst.cs.n, 0.0);
  if (!opt.x0_path.empty()) x0 = ew::load_point(opt.x0_path);
  const ew::VerifyReport rep =
      ew::verify_partial(x, x0, inst.cs, opt.delta, opt.tol);
  emit(ew::to_json(rep), opt.output);
  std::cerr << "verify: " << (rep.ok ? "ok" : "violated") << ", " << rep.n_near
            << " near-unit coordinates\n";
  return rep.ok ? 0 : 1;
}

int cmd_bench(const Options& opt) {
  Loaded inst = load_instance(opt);
  apply_thresholds(inst.cs, opt);
  const ew::ConstraintSet unit = inst.cs.normalized();
  const ew::FractionalColoring x0 = ew::FractionalColoring::zeros(unit.n);
  ew::WalkParams params = walk_params(opt, unit.n, unit.m);
  const ew::BenchStats st = ew::run_bench(
      unit, inst.sys ? &*inst.sys : nullptr, x0, params, opt.runs);
  json j = ew::bench_json(st, unit.n, unit.m, opt.seed);
  j["delta"] = params.delta;
  j["gamma"] = params.gamma;
  j["t_steps"] = params.t_steps;
  emit(j, opt.output);
  std::cerr << "bench: " << st.successes << "/" << st.runs
            << " successes, mean active vars " << st.mean_active_vars << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("EDGEWALK_THREADS")) {
    const int cap = std::atoi(env);
#ifdef _OPENMP
    if (cap > 0) omp_set_num_threads(cap);
#else
    (void)cap;
#endif
  }

  CLI::App app{"edgewalk: constructive discrepancy minimization"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd, bool with_walk) {
    cmd->add_option("--input", opt.input, "set-system text file");
    cmd->add_option("--matrix", opt.matrix, "constraint matrix CSV file");
    cmd->add_option("--output", opt.output, "write the JSON report here");
    cmd->add_option("--gen", opt.gen,
                    "generate the instance inline: bernoulli, k-uniform, "
                    "low-degree, singleton, matrix-gaussian");
    cmd->add_option("--gen-json", opt.gen_json,
                    "generate from a JSON spec file "
                    "{\"kind\",\"n\",\"m\",\"param\",\"seed\"}");
    cmd->add_option("--n", opt.n, "universe size for --gen");
    cmd->add_option("--m", opt.m, "number of sets/rows for --gen");
    cmd->add_option("--p", opt.p, "bernoulli membership probability");
    cmd->add_option("--k", opt.k,
                    "subset size (k-uniform) or degree (low-degree)");
    cmd->add_option("--seed", opt.seed, "seed; fully determines all output");
    if (with_walk) {
      cmd->add_option("--delta", opt.delta, "near-hit tolerance")
          ->each([&](const std::string&) { opt.delta_set = true; });
      cmd->add_option("--gamma", opt.gamma, "step size (default: derived)");
      cmd->add_option("--big-c", opt.big_c, "step-size constant C");
      cmd->add_option("--retries", opt.retries, "retry budget");
      cmd->add_option("--tol", opt.tol, "containment slack");
      cmd->add_option("--c", opt.c_override,
                      "uniform threshold override in unit-row scale");
    }
  };

  auto* gen = app.add_subcommand("gen", "generate an instance file");
  add_common(gen, false);
  auto* partial = app.add_subcommand("partial", "boosted partial coloring");
  add_common(partial, true);
  auto* spencer = app.add_subcommand("spencer", "full recursive coloring");
  add_common(spencer, true);
  auto* beckfiala =
      app.add_subcommand("beckfiala", "bounded-degree full coloring");
  add_common(beckfiala, true);
  beckfiala->add_option("--degree", opt.degree,
                        "degree bound t (default: measured)");
  auto* disc = app.add_subcommand("disc", "evaluate a coloring");
  add_common(disc, false);
  disc->add_option("--coloring", opt.coloring, "coloring file or report JSON");
  disc->add_option("--bound", opt.bound, "compare against this bound");
  auto* brute = app.add_subcommand("brute", "exact minimum discrepancy");
  add_common(brute, false);
  auto* verify =
      app.add_subcommand("verify", "check partial-coloring conditions");
  add_common(verify, true);
  verify->add_option("--x", opt.x_path, "point file or report JSON");
  verify->add_option("--x0", opt.x0_path, "starting point file (default 0)");
  auto* bench = app.add_subcommand("bench", "multi-run walk statistics");
  add_common(bench, true);
  bench->add_option("--runs", opt.runs, "number of independent runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    json j;
    j["error"] = std::string("usage: ") + e.what();
    std::cout << j.dump() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(opt);
    if (partial->parsed()) return cmd_partial(opt);
    if (spencer->parsed()) return cmd_pipeline(opt, false);
    if (beckfiala->parsed()) return cmd_pipeline(opt, true);
    if (disc->parsed()) return cmd_disc(opt);
    if (brute->parsed()) return cmd_brute(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (bench->parsed()) return cmd_bench(opt);
  } catch (const ew::NumericError& e) {
    json j;
    j["error"] = e.what();
    std::cout << j.dump() << "\n";
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const ew::RetryExhaustedError& e) {
    json j;
    j["error"] = e.what();
    std::cout << j.dump() << "\n";
    std::cerr << "failed: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json j;
    j["error"] = e.what();
    std::cout << j.dump() << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
