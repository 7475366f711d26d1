#pragma once

#include <cstdint>
#include <vector>

#include "edgewalk/types.hpp"
#include "edgewalk/walk.hpp"

namespace edgewalk {

// Per-run and aggregate statistics over independent seeded walks on one
// instance. Run k uses walk seed mix64(seed, k); runs are independent and may
// execute concurrently, with results stored by run index so the aggregate is
// schedule-independent.
struct BenchStats {
  int runs = 0;
  int successes = 0;           // verified by verify_partial, original scale
  int contained_clean = 0;     // runs with zero checkpoint violations
  int verifier_disagreements = 0;  // verify_partial vs the walk's own flag
  double success_rate = 0.0;
  double mean_active_vars = 0.0;
  double mean_active_disc = 0.0;
  double mean_norm_sq = 0.0;

  std::vector<int> n_active_vars;
  std::vector<int> n_active_disc;
  std::vector<double> norm_sq;
  std::vector<char> success;
  std::vector<char> contained;

  // Max |set sum| of each sign-rounded run, and of an equal count of uniform
  // random colorings (stream label distinct from the walk's).
  std::vector<double> disc_rounded;
  std::vector<double> disc_baseline;
};

// Quantiles at q in [0,1] by the sorted-index rule floor(q * (N-1)).
double quantile(std::vector<double> values, double q);

// Runs `runs` seeded walks of `params` on the unit-row constraint set.
// `sys` supplies the set sums for the rounded-coloring and random-baseline
// discrepancies; pass nullptr for pure matrix instances.
BenchStats run_bench(const ConstraintSet& unit_cs, const SetSystem* sys,
                     const FractionalColoring& x0, const WalkParams& params,
                     int runs);

}  // namespace edgewalk
