#pragma once

#include <vector>

#include "edgewalk/types.hpp"

namespace edgewalk {

struct OracleResult {
  int opt_disc = 0;
  Coloring argmin;
  std::uint64_t n_enumerated = 0;  // 2^n colorings covered (half walked)
};

// Exact minimum discrepancy by enumerating 2^(n-1) colorings in Gray-code
// order with incremental set-sum updates (the chi -> -chi symmetry covers the
// other half). Hard cap n <= 24. Ties are broken toward the lexicographically
// smallest optimal coloring, with -1 ordered below +1 and the pair
// {chi, -chi} collapsed to its lexicographically smaller member.
OracleResult brute_force_disc(const SetSystem& sys);

// Single-threaded reference walk over the full Gray sequence; the parallel
// version must match it exactly.
OracleResult brute_force_disc_serial(const SetSystem& sys);

struct VerifyReport {
  bool ok = false;
  bool cond_threshold = false;  // |<x - x0, v_j>| <= c_j ||v_j|| + eps
  bool cond_near = false;       // |x_i| >= 1 - delta for at least n/2 indices
  int n_near = 0;
  std::vector<int> violating_rows;
};

// Independent check of the two partial-coloring conditions. Evaluates inner
// products directly from the rows in the original scale; shares no cache with
// the walk.
VerifyReport verify_partial(const std::vector<double>& x,
                            const std::vector<double>& x0,
                            const ConstraintSet& cs, double delta,
                            double eps_slack = 1e-9);

}  // namespace edgewalk
