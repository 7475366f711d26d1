// Acceptance suite: every release gate in one binary, one PASS/FAIL line per
// criterion, nonzero exit when anything fails. Heavier than the unit tests;
// the scale run (criterion 8) dominates the runtime.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "edgewalk/bench.hpp"
#include "edgewalk/coloring.hpp"
#include "edgewalk/instances.hpp"
#include "edgewalk/kernels.hpp"
#include "edgewalk/oracle.hpp"
#include "edgewalk/rng.hpp"
#include "edgewalk/subspace.hpp"
#include "edgewalk/walk.hpp"

namespace ew = edgewalk;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t_start;

void report(int id, bool pass, const std::string& detail) {
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  std::printf("%s criterion %2d: %s  [t=%.1fs]\n", pass ? "PASS" : "FAIL", id,
              detail.c_str(), elapsed);
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

ew::SetSystem bernoulli(int n, int m, double p, std::uint64_t seed) {
  ew::GeneratorSpec spec;
  spec.kind = ew::GeneratorKind::kBernoulli;
  spec.n = n;
  spec.m = m;
  spec.param = p;
  spec.seed = seed;
  return ew::generate_sets(spec);
}

double max_set_sum(const ew::SetSystem& sys, const std::vector<int>& chi) {
  double worst = 0.0;
  for (const auto& s : sys.sets) {
    long long sum = 0;
    for (int i : s) sum += chi[i];
    worst = std::max(worst, std::abs(double(sum)));
  }
  return worst;
}

std::string run_command(const std::string& args) {
  const std::string cmd =
      std::string(EDGEWALK_CLI_BIN) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

}  // namespace

int main() {
  t_start = std::chrono::steady_clock::now();

  // Criteria 1-5 share one 200-run experiment: bernoulli n = m = 64,
  // p = 1/2, unit rows, c_j = 4 sqrt(ln 32), delta = 0.08, derived gamma.
  {
    const int n = 64, m = 64, runs = 200;
    const ew::SetSystem sys = bernoulli(n, m, 0.5, 1);
    ew::ConstraintSet cs = ew::indicator_matrix(sys);
    cs.set_uniform_threshold(4.0 * std::sqrt(std::log(32.0)));
    const ew::ConstraintSet unit = cs.normalized();
    const ew::FractionalColoring x0 = ew::FractionalColoring::zeros(n);
    const ew::WalkParams params = ew::WalkParams::make(0.08, n, m, 1);
    const ew::BenchStats st = ew::run_bench(unit, &sys, x0, params, runs);

    report(1,
           st.success_rate >= 0.05 && st.verifier_disagreements == 0,
           fmt("success rate %.3f >= 0.05 (verified independently)",
               st.success_rate, 0));
    report(2, st.contained_clean >= int(std::ceil(0.99 * runs)),
           fmt("%.0f of 200 runs fully contained (need >= 198)",
               double(st.contained_clean), 0));
    report(3, st.mean_active_vars >= 0.50 * n,
           fmt("mean active vars %.2f >= %.1f", st.mean_active_vars, 0.50 * n));
    report(4, st.mean_active_disc <= 0.30 * n,
           fmt("mean active rows %.2f <= %.1f", st.mean_active_disc, 0.30 * n));
    report(5, st.mean_norm_sq <= 1.02 * n,
           fmt("mean ||X_T||^2 = %.2f <= %.2f", st.mean_norm_sq, 1.02 * n));
  }

  // Criterion 6: sampler variances on 20 random subspaces of R^32.
  {
    const int n = 32, samples = 10000;
    bool pass = true;
    double worst_rel = 0.0, worst_dir = 0.0;
    for (int t = 0; t < 20; ++t) {
      ew::Rng mk(ew::mix64(100 + t, 1));
      std::vector<std::vector<double>> constraints(t + 1);
      for (auto& w : constraints) {
        w.resize(n);
        for (auto& v : w) v = mk.normal();
      }
      const ew::OrthoBasis basis = ew::complement_basis(n, constraints);
      ew::Rng rng(ew::mix64(200 + t, 2));
      std::vector<double> sq(n, 0.0);
      for (int s = 0; s < samples; ++s) {
        const auto g = ew::sample_gaussian(basis, rng);
        for (int i = 0; i < n; ++i) sq[i] += g[i] * g[i];
      }
      double total = 0.0;
      for (int i = 0; i < n; ++i) {
        const double var = sq[i] / samples;
        worst_dir = std::max(worst_dir, var);
        if (var > 1.05) pass = false;
        total += var;
      }
      const double rel = std::abs(total - basis.dim()) / basis.dim();
      worst_rel = std::max(worst_rel, rel);
      if (rel > 0.05) pass = false;
    }
    report(6, pass,
           fmt("variance sums within %.1f%% of dim (worst direction %.3f)",
               worst_rel * 100.0, worst_dir));
  }

  // Criterion 7: oracle sandwich on 50 random n = m = 12 instances.
  {
    bool pass = true;
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const ew::SetSystem sys = bernoulli(12, 12, 0.5, seed);
      const ew::OracleResult opt = ew::brute_force_disc(sys);
      ew::SpencerParams params;
      params.seed = seed;
      const ew::PipelineResult res = ew::spencer_color(sys, params);
      if (res.report.max_abs < double(opt.opt_disc) ||
          res.report.max_abs > res.bound)
        pass = false;
      ++checked;
    }
    report(7, pass && checked == 50,
           "brute force <= spencer discrepancy <= bound on 50 instances");
  }

  // Criterion 8: scale run at n = m = 1024 against the random baseline.
  {
    const int n = 1024;
    const ew::SetSystem sys = bernoulli(n, n, 0.5, 1);
    ew::SpencerParams params;
    params.seed = 1;
    bool completed = true;
    ew::PipelineResult res;
    try {
      res = ew::spencer_color(sys, params);
    } catch (const std::exception&) {
      completed = false;
    }
    double median = 0.0;
    if (completed) {
      std::vector<double> base(100);
      for (int k = 0; k < 100; ++k) {
        ew::Rng rng = ew::Rng::stream(ew::mix64(1, k), ew::kStreamBaseline);
        std::vector<int> chi(n);
        for (auto& c : chi) c = (rng.next_u64() & 1u) ? 1 : -1;
        base[k] = max_set_sum(sys, chi);
      }
      median = ew::quantile(base, 0.5);
    }
    const bool pass = completed && res.report.max_abs <= res.bound &&
                      res.report.max_abs <= median;
    report(8, pass,
           fmt("discrepancy %.0f <= random-coloring median %.0f and bound",
               completed ? res.report.max_abs : -1.0, median));
    if (completed)
      std::printf("      (soft benchmark: discrepancy %.0f %s 13 sqrt(n) = "
                  "416, untuned constants)\n",
                  res.report.max_abs,
                  res.report.max_abs < 416.0 ? "<" : ">=");
  }

  // Criterion 9: bounded-degree pipeline at n = m = 256, t = 4.
  {
    ew::GeneratorSpec spec;
    spec.kind = ew::GeneratorKind::kLowDegree;
    spec.n = 256;
    spec.m = 256;
    spec.param = 4;
    spec.seed = 1;
    const ew::SetSystem sys = ew::generate_sets(spec);
    const int freq = sys.max_frequency();
    ew::BeckFialaParams params;
    params.degree_t = 4;
    params.seed = 1;
    bool completed = true;
    ew::PipelineResult res;
    try {
      res = ew::beck_fiala_color(sys, params);
    } catch (const std::exception&) {
      completed = false;
    }
    const bool pass =
        completed && freq == 4 && res.report.max_abs <= 160.0;
    report(9, pass,
           fmt("discrepancy %.0f <= 160 with max frequency %.0f = t",
               completed ? res.report.max_abs : -1.0, double(freq)));
  }

  // Criterion 10: repeated seeded commands give byte-identical reports.
  {
    const std::array<std::string, 3> commands = {
        "bench --gen bernoulli --n 64 --m 64 --p 0.5 --runs 20 --seed 1",
        "spencer --gen bernoulli --n 32 --m 32 --p 0.5 --seed 1",
        "brute --gen bernoulli --n 12 --m 12 --p 0.5 --seed 4",
    };
    bool pass = true;
    for (const auto& cmd : commands) {
      const std::string a = run_command(cmd);
      const std::string b = run_command(cmd);
      if (a.empty() || a != b) pass = false;
    }
    report(10, pass, "seeded CLI reports are byte-identical across reruns");
  }

  std::printf("%d/10 criteria passed\n", 10 - failures);
  return failures;
}
