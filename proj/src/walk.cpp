#include "edgewalk/walk.hpp"

#include <algorithm>
#include <cmath>

#include "edgewalk/kernels.hpp"
#include "edgewalk/rng.hpp"

namespace edgewalk {

double derive_gamma(double delta, int n, int m, double big_c) {
  if (!(delta > 0.0 && delta < 0.1))
    throw ValidationError("delta must lie in (0, 0.1)");
  if (n < 1) throw ValidationError("dimension must be positive");
  if (!(big_c >= 1.0)) throw ValidationError("big_c must be at least 1");
  const double mn = double(std::max(m, 1)) * double(std::max(n, 1));
  double gamma = delta;
  for (int it = 0; it < 3; ++it)
    gamma = delta / std::sqrt(big_c * std::log(2.0 * mn / gamma));
  return gamma;
}

WalkParams WalkParams::make(double delta, int n, int m, std::uint64_t seed,
                            double big_c) {
  WalkParams p;
  p.delta = delta;
  p.big_c = big_c;
  p.seed = seed;
  p.gamma = derive_gamma(delta, n, m, big_c);
  p.t_steps = long(std::ceil(p.k1 / (p.gamma * p.gamma)));
  return p;
}

std::pair<std::vector<int>, std::vector<int>> active_sets(
    const std::vector<double>& x, const std::vector<double>& x0,
    const ConstraintSet& cs, double delta) {
  if (int(x.size()) != cs.n || int(x0.size()) != cs.n)
    throw ValidationError("point length does not match constraint dimension");
  std::vector<int> vars, rows;
  for (int i = 0; i < cs.n; ++i)
    if (std::abs(x[i]) >= 1.0 - delta) vars.push_back(i);
  std::vector<double> dx(cs.n);
  for (int i = 0; i < cs.n; ++i) dx[i] = x[i] - x0[i];
  for (int j = 0; j < cs.m; ++j)
    if (std::abs(kernels::dot(cs.row(j), dx.data(), cs.n)) >=
        cs.thresholds[j] - delta)
      rows.push_back(j);
  return {std::move(vars), std::move(rows)};
}

namespace {

// A row with margin mu (distance of |ip| from activation) is rechecked after
// max(1, floor((mu / 8*gamma)^2)) steps: the per-step increment of the inner
// product is Gaussian with variance at most gamma^2, so crossing the margin
// inside the window is an 8-sigma event. A full pass runs whenever the basis
// changes and once at the end, which keeps the reported outcome exact.
long recheck_interval(double margin, double gamma) {
  const double steps = margin / (8.0 * gamma);
  const double sq = steps * steps;
  if (sq < 2.0) return 1;
  if (sq > 9.0e17) return 900000000000000000L;
  return long(sq);
}

struct Walker {
  const ConstraintSet& cs;
  const FractionalColoring& x0;
  const WalkParams& params;
  const int n;
  const int m;

  WalkState st;
  std::vector<double> pinned_x;
  std::vector<double> pinned_ip;
  std::vector<bool> ip_pinned;
  std::vector<int> unfrozen;       // ascending
  std::vector<int> inactive_rows;  // ascending
  std::vector<long> next_check;
  std::vector<double> dx_scratch;
  long violations = 0;

  Walker(const ConstraintSet& cs_, const FractionalColoring& x0_,
         const WalkParams& p)
      : cs(cs_), x0(x0_), params(p), n(cs_.n), m(cs_.m) {}

  void refresh_rows(const std::vector<int>& rows, long step) {
    for (int i = 0; i < n; ++i) dx_scratch[i] = st.x[i] - x0.x[i];
    bool nan_seen = false;
    const std::size_t work = rows.size() * std::size_t(n);
#ifdef _OPENMP
    if (work >= kernels::kParallelMinWork) {
#pragma omp parallel for schedule(static) reduction(|| : nan_seen)
      for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(rows.size()); ++idx) {
        const int j = rows[idx];
        const double v = kernels::dot(cs.row(j), dx_scratch.data(), n);
        st.cached_ips[j] = v;
        nan_seen = nan_seen || std::isnan(v);
      }
    } else
#endif
    {
      (void)work;
      for (int j : rows) {
        const double v = kernels::dot(cs.row(j), dx_scratch.data(), n);
        st.cached_ips[j] = v;
        nan_seen = nan_seen || std::isnan(v);
      }
    }
    if (nan_seen) throw NumericError(step, "NaN constraint inner product");
  }

  // Decides activation for freshly evaluated rows; returns new activations.
  void process_rows(const std::vector<int>& rows, long t,
                    std::vector<int>& new_rows) {
    const double eps = params.eps_slack;
    for (int j : rows) {
      const double aip = std::abs(st.cached_ips[j]);
      const double c = cs.thresholds[j];
      if (aip > c + eps) ++violations;
      if (aip >= c - params.delta) {
        st.active_disc[j] = true;
        pinned_ip[j] = st.cached_ips[j];
        ip_pinned[j] = true;
        new_rows.push_back(j);
      } else if (!params.eager_checks) {
        next_check[j] = t + recheck_interval(c - params.delta - aip,
                                             params.gamma);
      }
    }
  }

  std::vector<std::vector<double>> active_constraint_vectors() const {
    std::vector<std::vector<double>> out;
    for (int i = 0; i < n; ++i)
      if (st.active_vars[i]) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        out.push_back(std::move(e));
      }
    for (int j = 0; j < m; ++j)
      if (st.active_disc[j]) out.emplace_back(cs.row(j), cs.row(j) + n);
    return out;
  }

  void rebuild_reference_basis() {
    st.basis = complement_basis(n, active_constraint_vectors());
    for (int i = 0; i < n; ++i)
      if (st.active_vars[i]) st.basis.clear_coordinate(i);
  }

  void self_check(long step) const {
    for (int i = 0; i < n; ++i)
      if (st.active_vars[i] && st.x[i] != pinned_x[i])
        throw std::logic_error("frozen coordinate moved at step " +
                               std::to_string(step));
    if (st.basis.orthonormality_defect() > 1e-8)
      throw std::logic_error("basis lost orthonormality at step " +
                             std::to_string(step));
    // Fresh-recompute oracle: the incrementally downdated span must match a
    // complement basis built from scratch on the same active constraints.
    OrthoBasis fresh = complement_basis(n, active_constraint_vectors());
    if (fresh.dim() != st.basis.dim())
      throw std::logic_error("basis dimension mismatch vs fresh complement");
    for (int k = 0; k < st.basis.dim(); ++k) {
      const auto b = st.basis.vector(k);
      const auto p = fresh.project(b);
      double res = 0.0;
      for (int i = 0; i < n; ++i) res += (b[i] - p[i]) * (b[i] - p[i]);
      if (std::sqrt(res) > 1e-6)
        throw std::logic_error("incremental basis left the fresh span");
    }
    for (int k = 0; k < fresh.dim(); ++k) {
      const auto b = fresh.vector(k);
      const auto p = st.basis.project(b);
      double res = 0.0;
      for (int i = 0; i < n; ++i) res += (b[i] - p[i]) * (b[i] - p[i]);
      if (std::sqrt(res) > 1e-6)
        throw std::logic_error("fresh basis left the incremental span");
    }
  }

  WalkOutcome run() {
    const double delta = params.delta;
    const double gamma = params.gamma;
    const double eps = params.eps_slack;

    Rng rng = Rng::stream(params.seed, kStreamWalk);

    st.x = x0.x;
    st.active_vars.assign(n, false);
    st.active_disc.assign(m, false);
    st.cached_ips.assign(m, 0.0);
    pinned_x.assign(n, 0.0);
    pinned_ip.assign(m, 0.0);
    ip_pinned.assign(m, false);
    next_check.assign(m, 1);
    dx_scratch.assign(n, 0.0);

    // Active sets at the starting point.
    for (int i = 0; i < n; ++i) {
      if (std::abs(st.x[i]) >= 1.0 - delta) {
        st.active_vars[i] = true;
        pinned_x[i] = st.x[i];
      } else {
        unfrozen.push_back(i);
      }
    }
    for (int j = 0; j < m; ++j) {
      if (0.0 >= cs.thresholds[j] - delta) {
        st.active_disc[j] = true;
        pinned_ip[j] = 0.0;
        ip_pinned[j] = true;
      } else {
        inactive_rows.push_back(j);
        if (!params.eager_checks)
          next_check[j] =
              recheck_interval(cs.thresholds[j] - delta, gamma);
      }
    }

    st.basis = complement_basis(n, active_constraint_vectors());
    for (int i = 0; i < n; ++i)
      if (st.active_vars[i]) st.basis.clear_coordinate(i);

    WalkOutcome out;
    if (params.record_trace)
      out.trace_dims.reserve(std::min(params.t_steps, long(1) << 20));

    std::vector<double> u(n);
    std::vector<int> new_vars, new_rows, candidates;

    for (long t = 1; t <= params.t_steps; ++t) {
      if (st.basis.dim() == 0) break;  // every further step is zero

      st.basis.sample_gaussian_into(rng, u.data());
      for (int i : unfrozen) st.x[i] += gamma * u[i];

      new_vars.clear();
      for (int i : unfrozen) {
        const double xi = st.x[i];
        if (std::isnan(xi))
          throw NumericError(t, "NaN coordinate in walk state");
        const double axi = std::abs(xi);
        if (axi > 1.0 + eps) ++violations;
        if (axi >= 1.0 - delta) {
          st.active_vars[i] = true;
          pinned_x[i] = xi;
          new_vars.push_back(i);
        }
      }

      const bool full_pass = !new_vars.empty() || params.eager_checks;
      candidates.clear();
      for (int j : inactive_rows)
        if (full_pass || next_check[j] <= t) candidates.push_back(j);

      new_rows.clear();
      if (!candidates.empty()) {
        refresh_rows(candidates, t);
        process_rows(candidates, t, new_rows);
        if (!full_pass && !new_rows.empty()) {
          // Off-schedule activation: the basis is changing anyway, so give
          // every remaining row a fresh look at the same point.
          candidates.clear();
          for (int j : inactive_rows)
            if (!st.active_disc[j]) candidates.push_back(j);
          if (!candidates.empty()) {
            refresh_rows(candidates, t);
            process_rows(candidates, t, new_rows);
          }
        }
      }

      if (!new_vars.empty() || !new_rows.empty()) {
        std::sort(new_rows.begin(), new_rows.end());
        if (params.reference_basis) {
          rebuild_reference_basis();
        } else {
          for (int i : new_vars) st.basis.downdate_coordinate_in_place(i);
          for (int j : new_rows)
            st.basis.downdate_in_place({cs.row(j), std::size_t(n)});
        }
        if (!new_vars.empty()) {
          std::vector<int> keep;
          keep.reserve(unfrozen.size());
          for (int i : unfrozen)
            if (!st.active_vars[i]) keep.push_back(i);
          unfrozen.swap(keep);
        }
        if (!new_rows.empty()) {
          std::vector<int> keep;
          keep.reserve(inactive_rows.size());
          for (int j : inactive_rows)
            if (!st.active_disc[j]) keep.push_back(j);
          inactive_rows.swap(keep);
        }
        if (params.check_invariants) self_check(t);
      }

      if (params.record_trace) out.trace_dims.push_back(st.basis.dim());
      st.step = t;
    }

    // Closing full pass: every reported quantity comes from fresh inner
    // products and a fresh coordinate scan.
    out.final_ips.assign(m, 0.0);
    {
      for (int i = 0; i < n; ++i) dx_scratch[i] = st.x[i] - x0.x[i];
      for (int j = 0; j < m; ++j) {
        const double v = kernels::dot(cs.row(j), dx_scratch.data(), n);
        out.final_ips[j] = v;
        if (std::isnan(v))
          throw NumericError(st.step, "NaN constraint inner product");
        if (std::abs(v) > cs.thresholds[j] + eps) ++violations;
        if (!st.active_disc[j] && std::abs(v) >= cs.thresholds[j] - delta)
          st.active_disc[j] = true;
      }
      for (int i = 0; i < n; ++i) {
        if (std::isnan(st.x[i]))
          throw NumericError(st.step, "NaN coordinate in walk state");
        if (std::abs(st.x[i]) > 1.0 + eps) ++violations;
        if (!st.active_vars[i] && std::abs(st.x[i]) >= 1.0 - delta)
          st.active_vars[i] = true;  // cannot happen; scan is exact
      }
    }
    if (params.check_invariants) {
      for (int j = 0; j < m; ++j)
        if (ip_pinned[j] &&
            std::abs(out.final_ips[j] - pinned_ip[j]) > 1e-9)
          throw std::logic_error("pinned inner product drifted");
    }

    out.n_active_vars = 0;
    for (int i = 0; i < n; ++i) out.n_active_vars += st.active_vars[i];
    out.n_active_disc = 0;
    for (int j = 0; j < m; ++j) out.n_active_disc += st.active_disc[j];
    out.steps = st.step;
    out.contained = (violations == 0);
    out.success = out.contained && 2 * out.n_active_vars >= n;
    out.norm_sq = kernels::norm_sq(st.x.data(), n);
    out.x = FractionalColoring(std::move(st.x), /*eps_box=*/0.5);
    return out;
  }
};

}  // namespace

WalkOutcome edge_walk(const ConstraintSet& cs, const FractionalColoring& x0,
                      const WalkParams& params) {
  if (x0.n() != cs.n)
    throw ValidationError("x0 length does not match constraint dimension");
  if (!(params.gamma > 0.0) || params.t_steps <= 0)
    throw ValidationError("gamma/t_steps not set; use WalkParams::make");
  if (!(params.delta > 0.0 && params.delta < 0.1))
    throw ValidationError("delta must lie in (0, 0.1)");
  if (!(params.eps_slack >= 0.0))
    throw ValidationError("eps_slack must be nonnegative");
  for (int j = 0; j < cs.m; ++j) {
    if (cs.zero_row[j] || std::abs(cs.norms[j] - 1.0) > 1e-8)
      throw ValidationError(
          "edge_walk requires unit-norm rows; normalize the constraint set");
    if (!(cs.thresholds[j] >= 0.0))
      throw ValidationError("thresholds must be nonnegative");
  }
  Walker w(cs, x0, params);
  return w.run();
}

FractionalColoring partial_color(const ConstraintSet& cs,
                                 const FractionalColoring& x0,
                                 const WalkParams& params,
                                 PartialColorInfo* info) {
  std::vector<int> orig_index;
  const ConstraintSet unit = cs.normalized(&orig_index);
  const FeasibilityResult feas = check_feasibility(unit.thresholds, cs.n);
  if (params.enforce_feasibility && !feas.feasible)
    throw ValidationError(
        "infeasible thresholds: sum exp(-c^2/16) = " +
        std::to_string(feas.sum) + " exceeds n/16 = " +
        std::to_string(feas.budget));

  WalkOutcome best;
  bool have_best = false;
  const int attempts = std::max(1, params.max_retries);
  for (int k = 0; k < attempts; ++k) {
    WalkParams p = params;
    p.seed = mix64(params.seed, std::uint64_t(k));
    WalkOutcome out = edge_walk(unit, x0, p);
    if (out.success) {
      if (info) {
        info->attempts = k + 1;
        info->feasibility = feas;
        info->outcome = out;
      }
      return std::move(out.x);
    }
    const bool better =
        !have_best || (out.contained && !best.contained) ||
        (out.contained == best.contained &&
         out.n_active_vars > best.n_active_vars);
    if (better) {
      best = std::move(out);
      have_best = true;
    }
  }
  if (info) {
    info->attempts = attempts;
    info->feasibility = feas;
    info->outcome = best;
  }
  throw RetryError("partial coloring failed after " +
                       std::to_string(attempts) + " attempts",
                   std::move(best), attempts);
}

}  // namespace edgewalk
