#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "edgewalk/types.hpp"
#include "edgewalk/walk.hpp"

namespace edgewalk {

// Default per-round threshold alpha(m, n_r) = 4 sqrt(max(0, ln(32 m / n_r))).
// Keeps the feasibility budget at m exp(-alpha^2/16) = n_r/32 <= n_r/16 for
// every m and n_r, and degrades to exact-zero drift thresholds once
// m <= n_r/32.
double default_alpha(int m, int n_r);

// Default near-hit tolerance 1/(8 ln m), replaced by 1/64 when m < e^2
// (the formula is useless or out of range there).
double default_spencer_delta(int m);

struct SpencerParams {
  double delta = 0.0;  // 0 = default_spencer_delta(m)
  std::function<double(int, int)> alpha_rule = default_alpha;
  int max_rounds = 0;        // 0 = 2 ceil(log2 n)
  int walk_retries = 0;      // per round; 0 = 8 ceil(log2 n)
  int rounding_retries = 64;
  double big_c = 4.0;
  std::uint64_t seed = 1;
  bool check_invariants = false;
};

struct BeckFialaParams {
  int degree_t = 0;      // 0 = measured max frequency
  double big_c_bf = 5.0;
  double delta = 0.0;    // 0 = min(1/n, 1/16)
  int max_rounds = 0;    // 0 = 2 ceil(log2 n)
  int walk_retries = 0;  // 0 = 8 ceil(log2 n)
  double big_c = 4.0;    // walk constant, distinct from big_c_bf
  std::uint64_t seed = 1;
  bool check_invariants = false;
};

struct RoundInfo {
  int n_r = 0;          // unfixed coordinates entering the round
  double alpha = 0.0;   // threshold in unit-row scale (Spencer) or the raw
                        // per-round cap C sqrt(t) (Beck-Fiala)
  int retries_used = 0;
};

struct PipelineResult {
  Coloring chi;
  FractionalColoring x;  // fractional point before the final rounding
  DiscrepancyReport report;
  double bound = 0.0;
  std::vector<RoundInfo> rounds;
  std::uint64_t seed = 0;
  double feasibility_sum = 0.0;  // worst per-round sum_j exp(-c_j^2/16)
};

// Recursive partial coloring with thresholds alpha(m, n_r) per round and
// unbiased randomized rounding at the end. The reported bound is
// B = sum_r alpha(m, n_r) sqrt(n_r) + sqrt(n).
PipelineResult spencer_color(const SetSystem& sys, const SpencerParams& params);

// Unbiased rounding of x to signs: chi_i = +1 with probability (1 + x_i)/2,
// accepted only when max_j |<chi - x, v_j>| <= sqrt(n) over the given rows
// (original scale). Throws RetryError when retries run out.
Coloring round_randomized(const FractionalColoring& x, const ConstraintSet& cs,
                          int retries, Rng& rng, int* used = nullptr);

// Bounded-degree pipeline: validates that every element lies in at most
// degree_t sets, runs the recursion with per-round thresholds
// c_j = C sqrt(t) / ||v_j|| on the restricted rows, delta = 1/n, and rounds
// deterministically by sign. Reported bound is 2 C sqrt(t) ceil(log2 n) plus
// the n*delta rounding slack.
//
// The series sum_r 2^-r exp(-C^2 2^(r+1) / 16) < 1/16 is verified numerically
// at construction. The per-round entropy budget itself may still exceed n/16
// on instances with many mid-sized sets; the walk runs regardless (only the
// success-probability guarantee needs the budget) and the achieved sum is
// reported in feasibility_sum.
PipelineResult beck_fiala_color(const SetSystem& sys,
                                const BeckFialaParams& params);

// Evaluates the Beck-Fiala parameter series for a given C.
double beck_fiala_series(double big_c_bf);

// Partial coloring with per-set discrepancy targets: requires
// sum_S exp(-Delta_S^2 / 16 |S|) <= n/16 and returns x with at least n/2
// near-unit coordinates and |sum_{i in S} x_i| <= Delta_S + n * delta.
FractionalColoring partial_coloring_corollary(const SetSystem& sys,
                                              const std::vector<double>& deltas,
                                              std::uint64_t seed,
                                              PartialColorInfo* info = nullptr);

}  // namespace edgewalk
