#include "edgewalk/bench.hpp"

#include <algorithm>
#include <cmath>

#include "edgewalk/oracle.hpp"
#include "edgewalk/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edgewalk {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const double pos = q * double(values.size() - 1);
  return values[std::size_t(pos)];
}

namespace {

double max_set_sum(const SetSystem& sys, const std::vector<int>& chi) {
  double worst = 0.0;
  for (const auto& s : sys.sets) {
    long long sum = 0;
    for (int i : s) sum += chi[i];
    worst = std::max(worst, std::abs(double(sum)));
  }
  return worst;
}

}  // namespace

BenchStats run_bench(const ConstraintSet& unit_cs, const SetSystem* sys,
                     const FractionalColoring& x0, const WalkParams& params,
                     int runs) {
  if (runs < 1) throw ValidationError("runs must be at least 1");
  const int n = unit_cs.n;

  BenchStats st;
  st.runs = runs;
  st.n_active_vars.assign(runs, 0);
  st.n_active_disc.assign(runs, 0);
  st.norm_sq.assign(runs, 0.0);
  st.success.assign(runs, 0);
  st.contained.assign(runs, 0);
  st.disc_rounded.assign(runs, 0.0);
  st.disc_baseline.assign(runs, 0.0);

  int disagreements = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : disagreements)
#endif
  for (int k = 0; k < runs; ++k) {
    WalkParams p = params;
    p.seed = mix64(params.seed, std::uint64_t(k));
    const WalkOutcome out = edge_walk(unit_cs, x0, p);

    // Independent verification in the original (unit) scale.
    const VerifyReport ver =
        verify_partial(out.x.x, x0.x, unit_cs, p.delta, p.eps_slack);
    if (ver.ok != out.success) ++disagreements;

    st.n_active_vars[k] = out.n_active_vars;
    st.n_active_disc[k] = out.n_active_disc;
    st.norm_sq[k] = out.norm_sq;
    st.success[k] = out.success ? 1 : 0;
    st.contained[k] = out.contained ? 1 : 0;

    if (sys) {
      std::vector<int> chi(n);
      for (int i = 0; i < n; ++i) chi[i] = out.x.x[i] >= 0.0 ? 1 : -1;
      st.disc_rounded[k] = max_set_sum(*sys, chi);

      Rng base = Rng::stream(mix64(params.seed, std::uint64_t(k)),
                             kStreamBaseline);
      std::vector<int> random_chi(n);
      for (int i = 0; i < n; ++i)
        random_chi[i] = (base.next_u64() & 1u) ? 1 : -1;
      st.disc_baseline[k] = max_set_sum(*sys, random_chi);
    }
  }

  st.verifier_disagreements = disagreements;
  for (int k = 0; k < runs; ++k) {
    st.successes += st.success[k];
    st.contained_clean += st.contained[k];
    st.mean_active_vars += st.n_active_vars[k];
    st.mean_active_disc += st.n_active_disc[k];
    st.mean_norm_sq += st.norm_sq[k];
  }
  st.success_rate = double(st.successes) / runs;
  st.mean_active_vars /= runs;
  st.mean_active_disc /= runs;
  st.mean_norm_sq /= runs;
  return st;
}

}  // namespace edgewalk
