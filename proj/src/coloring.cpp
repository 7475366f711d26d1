#include "edgewalk/coloring.hpp"

#include <algorithm>
#include <cmath>

#include "edgewalk/kernels.hpp"
#include "edgewalk/rng.hpp"

namespace edgewalk {

namespace {

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

// Stream salts inside a pipeline run.
constexpr std::uint64_t kSaltRound = 1000;
constexpr std::uint64_t kSaltRounding = 2000;
constexpr std::uint64_t kSaltCorollary = 3000;

struct RecursionOutput {
  FractionalColoring x;
  std::vector<RoundInfo> rounds;
  double worst_feasibility_sum = 0.0;
};

// Shared Spencer/Beck-Fiala recursion: rounds restrict the rows to the
// still-unfixed coordinates, walk from the current restricted point, and fix
// every coordinate that lands within delta of +-1.
//
// threshold_rule receives the restricted constraint set (norms already cached)
// and the restricted dimension; it must set the thresholds and return the
// value recorded as RoundInfo::alpha.
template <typename ThresholdRule>
RecursionOutput run_recursion(const SetSystem& sys, double delta,
                              int max_rounds, int walk_retries, double big_c,
                              std::uint64_t seed, bool enforce_feasibility,
                              bool check_invariants,
                              ThresholdRule threshold_rule) {
  const int n = sys.n;
  const int m = sys.m();
  const ConstraintSet full = indicator_matrix(sys);

  RecursionOutput out;
  std::vector<double> x(n, 0.0);
  std::vector<bool> fixed(n, false);

  for (int r = 0; r < max_rounds; ++r) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (!fixed[i]) idx.push_back(i);
    const int n_r = int(idx.size());
    if (n_r == 0) break;

    std::vector<double> flat(std::size_t(m) * n_r);
    for (int j = 0; j < m; ++j) {
      const double* row = full.row(j);
      double* dst = flat.data() + std::size_t(j) * n_r;
      for (int p = 0; p < n_r; ++p) dst[p] = row[idx[p]];
    }
    ConstraintSet restricted(n_r, m, std::move(flat));
    const double alpha = threshold_rule(restricted, n_r);

    std::vector<double> x0(n_r);
    for (int p = 0; p < n_r; ++p) x0[p] = x[idx[p]];

    WalkParams params = WalkParams::make(
        delta, n_r, m, mix64(seed, kSaltRound + std::uint64_t(r)), big_c);
    params.max_retries = walk_retries;
    params.enforce_feasibility = enforce_feasibility;
    params.check_invariants = check_invariants;

    PartialColorInfo info;
    FractionalColoring xr =
        partial_color(restricted, FractionalColoring(std::move(x0)), params,
                      &info);
    out.worst_feasibility_sum =
        std::max(out.worst_feasibility_sum, info.feasibility.sum);
    out.rounds.push_back({n_r, alpha, info.attempts});

    int newly = 0;
    for (int p = 0; p < n_r; ++p) {
      x[idx[p]] = xr.x[p];
      if (std::abs(xr.x[p]) >= 1.0 - delta) {
        fixed[idx[p]] = true;
        ++newly;
      }
    }
    // Forced by the walk's success condition; each round at least halves the
    // number of unfixed coordinates.
    if (2 * newly < n_r)
      throw std::logic_error("round fixed fewer than half the coordinates");
  }

  out.x = FractionalColoring(std::move(x));
  return out;
}

}  // namespace

double default_alpha(int m, int n_r) {
  return 4.0 * std::sqrt(std::max(0.0, std::log(32.0 * m / double(n_r))));
}

double default_spencer_delta(int m) {
  if (double(m) < std::exp(2.0)) return 1.0 / 64.0;
  return 1.0 / (8.0 * std::log(double(m)));
}

double beck_fiala_series(double big_c_bf) {
  double sum = 0.0;
  for (int r = 0;; ++r) {
    const double term =
        std::exp(-big_c_bf * big_c_bf * std::pow(2.0, r + 1) / 16.0) /
        std::pow(2.0, r);
    sum += term;
    if (term < 1e-18) break;
  }
  return sum;
}

Coloring round_randomized(const FractionalColoring& x, const ConstraintSet& cs,
                          int retries, Rng& rng, int* used) {
  const int n = x.n();
  if (cs.n != n)
    throw ValidationError("rounding rows do not match point dimension");
  const double limit = std::sqrt(double(n));
  std::vector<int> chi(n);
  std::vector<double> y(n);
  const int attempts = std::max(1, retries);
  for (int a = 1; a <= attempts; ++a) {
    for (int i = 0; i < n; ++i) {
      chi[i] = rng.uniform() < (1.0 + x.x[i]) / 2.0 ? 1 : -1;
      y[i] = double(chi[i]) - x.x[i];
    }
    bool ok = true;
    for (int j = 0; j < cs.m && ok; ++j)
      ok = std::abs(kernels::dot(cs.row(j), y.data(), n)) <= limit;
    if (ok) {
      if (used) *used = a;
      return Coloring(std::move(chi));
    }
  }
  throw RetryExhaustedError("randomized rounding failed after " +
                            std::to_string(attempts) + " attempts");
}

PipelineResult spencer_color(const SetSystem& sys,
                             const SpencerParams& params) {
  const int n = sys.n;
  const int m = sys.m();
  if (n < 1 || m < 1)
    throw ValidationError("spencer_color needs n >= 1 and m >= 1");

  const double delta =
      params.delta > 0.0 ? params.delta : default_spencer_delta(m);
  const int max_rounds =
      params.max_rounds > 0 ? params.max_rounds : std::max(1, 2 * ceil_log2(n));
  const int walk_retries =
      params.walk_retries > 0 ? params.walk_retries
                              : 8 * std::max(1, ceil_log2(n));

  auto rule = [&](ConstraintSet& restricted, int n_r) {
    const double alpha = params.alpha_rule(m, n_r);
    restricted.set_uniform_threshold(alpha);
    return alpha;
  };
  RecursionOutput rec =
      run_recursion(sys, delta, max_rounds, walk_retries, params.big_c,
                    params.seed, /*enforce_feasibility=*/true,
                    params.check_invariants, rule);

  double bound = std::sqrt(double(n));
  for (const auto& r : rec.rounds) bound += r.alpha * std::sqrt(double(r.n_r));

  Rng rounding_rng =
      Rng::stream(mix64(params.seed, kSaltRounding), kStreamRounding);
  int rounding_used = 0;
  Coloring chi = round_randomized(rec.x, indicator_matrix(sys),
                                  params.rounding_retries, rounding_rng,
                                  &rounding_used);

  PipelineResult res;
  res.report = discrepancy(chi, sys);
  res.report.bound = bound;
  res.report.satisfied = res.report.max_abs <= bound;
  res.chi = std::move(chi);
  res.x = std::move(rec.x);
  res.bound = bound;
  res.rounds = std::move(rec.rounds);
  res.seed = params.seed;
  res.feasibility_sum = rec.worst_feasibility_sum;
  return res;
}

PipelineResult beck_fiala_color(const SetSystem& sys,
                                const BeckFialaParams& params) {
  const int n = sys.n;
  const int m = sys.m();
  if (n < 1 || m < 1)
    throw ValidationError("beck_fiala_color needs n >= 1 and m >= 1");

  const int measured = sys.max_frequency();
  const int t = params.degree_t > 0 ? params.degree_t : std::max(1, measured);
  if (measured > t)
    throw ValidationError("max element frequency " + std::to_string(measured) +
                          " exceeds degree bound t = " + std::to_string(t));

  const double series = beck_fiala_series(params.big_c_bf);
  if (!(series < 1.0 / 16.0))
    throw ValidationError("Beck-Fiala constant too small: series = " +
                          std::to_string(series) + " must stay below 1/16");

  const double delta =
      params.delta > 0.0 ? params.delta
                         : std::min(1.0 / double(n), 1.0 / 16.0);
  const int max_rounds =
      params.max_rounds > 0 ? params.max_rounds : std::max(1, 2 * ceil_log2(n));
  const int walk_retries =
      params.walk_retries > 0 ? params.walk_retries
                              : 8 * std::max(1, ceil_log2(n));

  const double raw_cap = params.big_c_bf * std::sqrt(double(t));
  auto rule = [&](ConstraintSet& restricted, int /*n_r*/) {
    std::vector<double> th(restricted.m, 0.0);
    for (int j = 0; j < restricted.m; ++j)
      th[j] = restricted.zero_row[j] ? 0.0 : raw_cap / restricted.norms[j];
    restricted.set_thresholds(std::move(th));
    return raw_cap;
  };
  RecursionOutput rec =
      run_recursion(sys, delta, max_rounds, walk_retries, params.big_c,
                    params.seed, /*enforce_feasibility=*/false,
                    params.check_invariants, rule);

  const double bound =
      2.0 * raw_cap * std::max(1, ceil_log2(n)) + double(n) * delta;

  // Nearest-integer rounding; zero rounds up.
  std::vector<int> chi(n);
  for (int i = 0; i < n; ++i) chi[i] = rec.x.x[i] >= 0.0 ? 1 : -1;

  PipelineResult res;
  res.chi = Coloring(std::move(chi));
  res.report = discrepancy(res.chi, sys);
  res.report.bound = bound;
  res.report.satisfied = res.report.max_abs <= bound;
  res.x = std::move(rec.x);
  res.bound = bound;
  res.rounds = std::move(rec.rounds);
  res.seed = params.seed;
  res.feasibility_sum = rec.worst_feasibility_sum;
  return res;
}

FractionalColoring partial_coloring_corollary(const SetSystem& sys,
                                              const std::vector<double>& deltas,
                                              std::uint64_t seed,
                                              PartialColorInfo* info) {
  const int n = sys.n;
  const int m = sys.m();
  if (int(deltas.size()) != m)
    throw ValidationError("need one discrepancy target per set");
  for (double d : deltas)
    if (!(d >= 0.0)) throw ValidationError("targets must be nonnegative");

  ConstraintSet cs = indicator_matrix(sys);
  std::vector<double> th(m, 0.0);
  for (int j = 0; j < m; ++j)
    if (!cs.zero_row[j]) th[j] = deltas[j] / cs.norms[j];
  cs.set_thresholds(std::move(th));

  const double delta = std::min(1.0 / std::max(1, n), 1.0 / 16.0);
  WalkParams params =
      WalkParams::make(delta, n, m, mix64(seed, kSaltCorollary));
  return partial_color(cs, FractionalColoring::zeros(n), params, info);
}

}  // namespace edgewalk
