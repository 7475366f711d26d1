#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgewalk {

// Default slack on the cube constraint. The exact walk keeps points inside
// [-1,1]^n; floating point drift gets this documented tolerance.
inline constexpr double kEpsBox = 1e-9;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Invalid arguments or violated preconditions (dimension mismatches,
// negative thresholds, infeasible inputs, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A retry-boosted procedure ran out of attempts.
class RetryExhaustedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// NaN or other numeric breakdown inside an algorithm; carries the step index.
class NumericError : public std::runtime_error {
 public:
  NumericError(long step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what),
        step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

// A set system over universe {0, ..., n-1}. Sets are sorted, duplicate-free
// index lists; the empty system (m = 0) is allowed. Immutable after
// construction and safe to share across threads.
struct SetSystem {
  int n = 0;
  std::vector<std::vector<int>> sets;

  SetSystem() = default;
  SetSystem(int n_, std::vector<std::vector<int>> sets_);

  int m() const { return int(sets.size()); }

  // Max number of sets any single element belongs to.
  int max_frequency() const;
};

// m real n-vectors (row-major) with cached norms and per-row thresholds.
// Thresholds are dimensionless multiples of the row norm. Rows with zero norm
// are flagged and excluded from the walk's discrepancy constraints.
struct ConstraintSet {
  int n = 0;
  int m = 0;
  std::vector<double> data;        // m * n, row-major
  std::vector<double> norms;       // Euclidean norms
  std::vector<double> norms_sq;    // exact |S_j| for indicator rows
  std::vector<double> thresholds;  // c_j >= 0
  std::vector<bool> zero_row;

  ConstraintSet() = default;
  ConstraintSet(int n_, std::vector<std::vector<double>> rows);
  ConstraintSet(int n_, int m_, std::vector<double> flat);

  const double* row(int j) const { return data.data() + std::size_t(j) * n; }
  double* row(int j) { return data.data() + std::size_t(j) * n; }

  void set_uniform_threshold(double c);
  void set_thresholds(std::vector<double> c);

  // Copy with unit-norm rows; zero rows are dropped. `orig_index[k]` maps
  // row k of the result back to this set's row index. Thresholds carry over
  // unchanged (they are multiples of the norm, so the constraint
  // |<x - x0, v_j>| <= c_j * ||v_j|| becomes |<x - x0, v^_j>| <= c_j).
  ConstraintSet normalized(std::vector<int>* orig_index = nullptr) const;

 private:
  void init_norms();
};

// A point x in [-1-eps, 1+eps]^n. Also used as the walk's starting point.
struct FractionalColoring {
  std::vector<double> x;

  FractionalColoring() = default;
  explicit FractionalColoring(std::vector<double> x_, double eps_box = kEpsBox);
  static FractionalColoring zeros(int n) {
    return FractionalColoring(std::vector<double>(n, 0.0));
  }

  int n() const { return int(x.size()); }
};

// A full +-1 coloring.
struct Coloring {
  std::vector<int> chi;  // entries exactly -1 or +1

  Coloring() = default;
  explicit Coloring(std::vector<int> chi_);

  int n() const { return int(chi.size()); }
};

// Per-constraint inner products and their max absolute value, optionally
// compared against a guarantee.
struct DiscrepancyReport {
  std::vector<double> per_constraint;
  double max_abs = 0.0;
  std::optional<double> bound;
  bool satisfied = true;  // max_abs <= bound when a bound is present
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

// Rows are the 0/1 indicator vectors of the sets; norms_sq[j] == |S_j| exactly
// and thresholds start at 0 (callers set them).
ConstraintSet indicator_matrix(const SetSystem& sys);

// Exact integer set sums of a +-1 coloring; empty systems have discrepancy 0.
DiscrepancyReport discrepancy(const Coloring& chi, const SetSystem& sys);

// Per-row inner products <x - x0, v_j> against arbitrary rows.
DiscrepancyReport drift_report(const ConstraintSet& cs,
                               const std::vector<double>& x,
                               const std::vector<double>& x0);

struct FeasibilityResult {
  double sum = 0.0;     // sum_j exp(-c_j^2 / 16)
  double budget = 0.0;  // n / 16
  bool feasible = false;
};

// The partial-coloring entropy budget: sum_j exp(-c_j^2/16) <= n/16.
// The boundary is classified feasible within 1e-12 relative slack, so that
// exact-budget threshold choices are not flipped by floating point rounding.
FeasibilityResult check_feasibility(const std::vector<double>& thresholds,
                                    int n);

}  // namespace edgewalk
