#include "edgewalk/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "edgewalk/kernels.hpp"

namespace edgewalk {

SetSystem::SetSystem(int n_, std::vector<std::vector<int>> sets_)
    : n(n_), sets(std::move(sets_)) {
  if (n < 0) throw ValidationError("universe size must be nonnegative");
  for (std::size_t j = 0; j < sets.size(); ++j) {
    const auto& s = sets[j];
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] >= n)
        throw ValidationError("set " + std::to_string(j) + ": index " +
                              std::to_string(s[k]) + " out of range [0," +
                              std::to_string(n) + ")");
      if (k > 0 && s[k] <= s[k - 1])
        throw ValidationError("set " + std::to_string(j) +
                              ": indices must be strictly increasing");
    }
  }
}

int SetSystem::max_frequency() const {
  std::vector<int> freq(n, 0);
  int best = 0;
  for (const auto& s : sets)
    for (int i : s) best = std::max(best, ++freq[i]);
  return best;
}

ConstraintSet::ConstraintSet(int n_, std::vector<std::vector<double>> rows)
    : n(n_), m(int(rows.size())) {
  data.reserve(std::size_t(m) * n);
  for (const auto& r : rows) {
    if (int(r.size()) != n)
      throw ValidationError("row length " + std::to_string(r.size()) +
                            " does not match dimension " + std::to_string(n));
    data.insert(data.end(), r.begin(), r.end());
  }
  init_norms();
}

ConstraintSet::ConstraintSet(int n_, int m_, std::vector<double> flat)
    : n(n_), m(m_), data(std::move(flat)) {
  if (data.size() != std::size_t(m) * n)
    throw ValidationError("matrix data size does not match m*n");
  init_norms();
}

void ConstraintSet::init_norms() {
  norms.resize(m);
  norms_sq.resize(m);
  thresholds.assign(m, 0.0);
  zero_row.resize(m);
  for (int j = 0; j < m; ++j) {
    const double sq = kernels::norm_sq(row(j), n);
    if (std::isnan(sq))
      throw ValidationError("row " + std::to_string(j) + " contains NaN");
    norms_sq[j] = sq;
    norms[j] = std::sqrt(sq);
    zero_row[j] = (norms[j] == 0.0);
  }
}

void ConstraintSet::set_uniform_threshold(double c) {
  if (c < 0) throw ValidationError("threshold must be nonnegative");
  thresholds.assign(m, c);
}

void ConstraintSet::set_thresholds(std::vector<double> c) {
  if (int(c.size()) != m)
    throw ValidationError("threshold count does not match m");
  for (double v : c)
    if (!(v >= 0)) throw ValidationError("threshold must be nonnegative");
  thresholds = std::move(c);
}

ConstraintSet ConstraintSet::normalized(std::vector<int>* orig_index) const {
  ConstraintSet out;
  out.n = n;
  if (orig_index) orig_index->clear();
  std::vector<double> flat;
  std::vector<double> th;
  for (int j = 0; j < m; ++j) {
    if (zero_row[j]) continue;
    const double inv = 1.0 / norms[j];
    const double* r = row(j);
    for (int i = 0; i < n; ++i) flat.push_back(r[i] * inv);
    th.push_back(thresholds[j]);
    if (orig_index) orig_index->push_back(j);
  }
  out.m = int(th.size());
  out.data = std::move(flat);
  out.init_norms();
  out.thresholds = std::move(th);
  return out;
}

FractionalColoring::FractionalColoring(std::vector<double> x_, double eps_box)
    : x(std::move(x_)) {
  for (double v : x)
    if (!(std::abs(v) <= 1.0 + eps_box))
      throw ValidationError("coordinate " + std::to_string(v) +
                            " outside [-1,1] plus slack");
}

Coloring::Coloring(std::vector<int> chi_) : chi(std::move(chi_)) {
  for (int v : chi)
    if (v != 1 && v != -1)
      throw ValidationError("coloring entries must be exactly -1 or +1");
}

ConstraintSet indicator_matrix(const SetSystem& sys) {
  ConstraintSet cs;
  cs.n = sys.n;
  cs.m = sys.m();
  cs.data.assign(std::size_t(cs.m) * cs.n, 0.0);
  cs.norms.resize(cs.m);
  cs.norms_sq.resize(cs.m);
  cs.thresholds.assign(cs.m, 0.0);
  cs.zero_row.resize(cs.m);
  for (int j = 0; j < cs.m; ++j) {
    for (int i : sys.sets[j]) cs.row(j)[i] = 1.0;
    cs.norms_sq[j] = double(sys.sets[j].size());
    cs.norms[j] = std::sqrt(cs.norms_sq[j]);
    cs.zero_row[j] = sys.sets[j].empty();
  }
  return cs;
}

DiscrepancyReport discrepancy(const Coloring& chi, const SetSystem& sys) {
  if (chi.n() != sys.n)
    throw ValidationError("coloring length " + std::to_string(chi.n()) +
                          " does not match universe size " +
                          std::to_string(sys.n));
  DiscrepancyReport rep;
  rep.per_constraint.resize(sys.m());
  for (int j = 0; j < sys.m(); ++j) {
    long long sum = 0;
    for (int i : sys.sets[j]) sum += chi.chi[i];
    rep.per_constraint[j] = double(sum);
    rep.max_abs = std::max(rep.max_abs, std::abs(rep.per_constraint[j]));
  }
  return rep;
}

DiscrepancyReport drift_report(const ConstraintSet& cs,
                               const std::vector<double>& x,
                               const std::vector<double>& x0) {
  if (int(x.size()) != cs.n || int(x0.size()) != cs.n)
    throw ValidationError("point length does not match constraint dimension");
  std::vector<double> diff(cs.n);
  for (int i = 0; i < cs.n; ++i) diff[i] = x[i] - x0[i];
  DiscrepancyReport rep;
  rep.per_constraint.resize(cs.m);
  for (int j = 0; j < cs.m; ++j) {
    rep.per_constraint[j] = kernels::dot(cs.row(j), diff.data(), cs.n);
    rep.max_abs = std::max(rep.max_abs, std::abs(rep.per_constraint[j]));
  }
  return rep;
}

FeasibilityResult check_feasibility(const std::vector<double>& thresholds,
                                    int n) {
  FeasibilityResult res;
  for (double c : thresholds) {
    if (!(c >= 0)) throw ValidationError("threshold must be nonnegative");
    res.sum += std::exp(-c * c / 16.0);
  }
  res.budget = double(n) / 16.0;
  res.feasible = res.sum <= res.budget * (1.0 + 1e-12);
  return res;
}

}  // namespace edgewalk
