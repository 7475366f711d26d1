#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "edgewalk/subspace.hpp"
#include "edgewalk/types.hpp"

namespace edgewalk {

// Largest step size of the form delta / sqrt(big_c * ln(2*m*n/gamma)),
// obtained by three fixed-point iterations from gamma_0 = delta. All logs in
// parameter formulas are natural logs.
double derive_gamma(double delta, int n, int m, double big_c);

// All knobs of one walk. `make` derives gamma and the step count from the
// instance size; passing gamma = 0 to edge_walk is an error.
struct WalkParams {
  double delta = 0.05;   // near-hit tolerance, must be in (0, 0.1)
  double gamma = 0.0;    // step size
  double big_c = 4.0;    // constant C in the step-size bound
  double k1 = 16.0 / 3.0;
  long t_steps = 0;      // ceil(k1 / gamma^2)
  int max_retries = 64;
  std::uint64_t seed = 1;
  double eps_slack = 1e-9;

  bool enforce_feasibility = true;

  // Test hooks. eager_checks disables the lazy margin schedule (every row is
  // rechecked every step); reference_basis rebuilds the basis from scratch at
  // every activation instead of downdating; check_invariants turns on the
  // self-checks (pinned values, orthonormality, span equivalence against a
  // fresh complement basis).
  bool eager_checks = false;
  bool reference_basis = false;
  bool check_invariants = false;
  bool record_trace = false;

  static WalkParams make(double delta, int n, int m, std::uint64_t seed,
                         double big_c = 4.0);
};

// Live state of a walk: the point, the monotone active sets, the orthonormal
// basis of the subspace orthogonal to everything active, and the cached
// constraint inner products (stale between scheduled rechecks, pinned once a
// row activates).
struct WalkState {
  std::vector<double> x;
  long step = 0;
  std::vector<bool> active_vars;
  std::vector<bool> active_disc;
  OrthoBasis basis;
  std::vector<double> cached_ips;
};

struct WalkOutcome {
  FractionalColoring x;
  bool success = false;    // conditions (i) and (ii) below
  bool contained = false;  // no checkpoint left the polytope beyond eps_slack
  int n_active_vars = 0;   // |{i : |x_i| >= 1 - delta}|
  int n_active_disc = 0;
  long steps = 0;          // steps actually walked (early exit at dim 0)
  double norm_sq = 0.0;    // ||x||^2 at termination
  std::vector<double> final_ips;  // fresh <x - x0, v_j> per row
  std::vector<long> trace_dims;   // per-step subspace dims if recorded
};

// Active sets at a point: variables with |x_i| >= 1 - delta and rows with
// |<x - x0, v_j>| >= c_j - delta. Rows must be unit-norm.
std::pair<std::vector<int>, std::vector<int>> active_sets(
    const std::vector<double>& x, const std::vector<double>& x0,
    const ConstraintSet& cs, double delta);

// One run of the constrained Gaussian walk. Rows must be unit-norm with no
// zero rows (see ConstraintSet::normalized). The feasibility condition is not
// enforced here; the success guarantee simply does not apply without it.
//
// Success means: every |<x - x0, v_j>| <= c_j + eps_slack, every
// |x_i| <= 1 + eps_slack at every recorded checkpoint, and at least n/2
// coordinates ended with |x_i| >= 1 - delta.
WalkOutcome edge_walk(const ConstraintSet& cs, const FractionalColoring& x0,
                      const WalkParams& params);

// Thrown when boosting runs out of retries; carries the best attempt.
class RetryError : public RetryExhaustedError {
 public:
  RetryError(std::string what, WalkOutcome best, int attempts)
      : RetryExhaustedError(std::move(what)),
        best_(std::move(best)),
        attempts_(attempts) {}
  const WalkOutcome& best() const { return best_; }
  int attempts() const { return attempts_; }

 private:
  WalkOutcome best_;
  int attempts_;
};

struct PartialColorInfo {
  int attempts = 0;
  FeasibilityResult feasibility;
  WalkOutcome outcome;
};

// Boosted partial coloring on arbitrary rows: normalizes rows (zero rows are
// dropped; thresholds are multiples of the row norms, so the returned point
// satisfies |<x - x0, v_j>| <= c_j * ||v_j||_2 in the original scale), checks
// the feasibility condition, and retries edge_walk with derived seeds
// (mix64(seed, k) for attempt k) until success.
FractionalColoring partial_color(const ConstraintSet& cs,
                                 const FractionalColoring& x0,
                                 const WalkParams& params,
                                 PartialColorInfo* info = nullptr);

}  // namespace edgewalk
