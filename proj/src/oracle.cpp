#include "edgewalk/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edgewalk {

namespace {

// Colorings are bitmasks over n <= 24 coordinates: bit i set means chi_i = +1.
// Coordinate n-1 is fixed to +1 and the chi -> -chi symmetry supplies the
// other half of the cube.
struct BlockScan {
  int best = 0;
  std::uint32_t best_rep = 0;
  bool valid = false;
};

std::uint32_t gray(std::uint32_t k) { return k ^ (k >> 1); }

std::uint32_t pair_rep(std::uint32_t mask, std::uint32_t full) {
  return (mask & 1u) ? (~mask & full) : mask;
}

// Lexicographic order on (chi_0, ..., chi_{n-1}) with -1 below +1.
bool lex_less(std::uint32_t a, std::uint32_t b, int n) {
  for (int i = 0; i < n; ++i) {
    const std::uint32_t ba = (a >> i) & 1u;
    const std::uint32_t bb = (b >> i) & 1u;
    if (ba != bb) return ba < bb;
  }
  return false;
}

// Walks colorings k_begin..k_end (exclusive) of the Gray sequence.
BlockScan scan_block(const SetSystem& sys,
                     const std::vector<std::vector<int>>& sets_of,
                     std::uint64_t k_begin, std::uint64_t k_end) {
  const int n = sys.n;
  const int m = sys.m();
  const std::uint32_t full = (n >= 32) ? ~0u : ((1u << n) - 1u);

  std::uint32_t mask = std::uint32_t(gray(std::uint32_t(k_begin)));
  if (n >= 1) mask |= 1u << (n - 1);

  std::vector<int> sums(m, 0);
  std::vector<int> count(n + 1, 0);
  int cur_max = 0;
  for (int j = 0; j < m; ++j) {
    int s = 0;
    for (int i : sys.sets[j]) s += (mask >> i) & 1u ? 1 : -1;
    sums[j] = s;
    ++count[std::abs(s)];
    cur_max = std::max(cur_max, std::abs(s));
  }

  BlockScan out;
  auto consider = [&]() {
    if (!out.valid || cur_max < out.best) {
      out.best = cur_max;
      out.best_rep = pair_rep(mask, full);
      out.valid = true;
    } else if (cur_max == out.best) {
      const std::uint32_t rep = pair_rep(mask, full);
      if (lex_less(rep, out.best_rep, n)) out.best_rep = rep;
    }
  };

  consider();
  for (std::uint64_t k = k_begin + 1; k < k_end; ++k) {
    const int flip = std::countr_zero(std::uint32_t(k));
    mask ^= 1u << flip;
    const int delta = (mask >> flip) & 1u ? 2 : -2;
    for (int j : sets_of[flip]) {
      const int old = std::abs(sums[j]);
      sums[j] += delta;
      const int now = std::abs(sums[j]);
      --count[old];
      ++count[now];
      if (now > cur_max) cur_max = now;
    }
    while (cur_max > 0 && count[cur_max] == 0) --cur_max;
    consider();
  }
  return out;
}

OracleResult run_scan(const SetSystem& sys, int blocks) {
  const int n = sys.n;
  if (n > 24) throw ValidationError("brute force capped at n <= 24");

  OracleResult res;
  res.n_enumerated = std::uint64_t(1) << n;
  if (n == 0) {
    res.opt_disc = 0;
    res.argmin = Coloring(std::vector<int>{});
    return res;
  }

  std::vector<std::vector<int>> sets_of(n);
  for (int j = 0; j < sys.m(); ++j)
    for (int i : sys.sets[j]) sets_of[i].push_back(j);

  const std::uint64_t total = std::uint64_t(1) << (n - 1);
  const std::uint64_t nb = std::min<std::uint64_t>(blocks, total);
  std::vector<BlockScan> parts(nb);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::int64_t b = 0; b < std::int64_t(nb); ++b) {
    const std::uint64_t begin = total * b / nb;
    const std::uint64_t end = total * (b + 1) / nb;
    parts[b] = scan_block(sys, sets_of, begin, end);
  }

  // Merge in fixed block order.
  BlockScan best;
  for (const auto& p : parts) {
    if (!p.valid) continue;
    if (!best.valid || p.best < best.best) {
      best = p;
    } else if (p.best == best.best && lex_less(p.best_rep, best.best_rep, n)) {
      best.best_rep = p.best_rep;
    }
  }

  res.opt_disc = best.best;
  std::vector<int> chi(n);
  for (int i = 0; i < n; ++i) chi[i] = (best.best_rep >> i) & 1u ? 1 : -1;
  res.argmin = Coloring(std::move(chi));
  return res;
}

}  // namespace

OracleResult brute_force_disc(const SetSystem& sys) {
  return run_scan(sys, 64);
}

OracleResult brute_force_disc_serial(const SetSystem& sys) {
  return run_scan(sys, 1);
}

VerifyReport verify_partial(const std::vector<double>& x,
                            const std::vector<double>& x0,
                            const ConstraintSet& cs, double delta,
                            double eps_slack) {
  if (int(x.size()) != cs.n || int(x0.size()) != cs.n)
    throw ValidationError("point length does not match constraint dimension");
  VerifyReport rep;
  rep.cond_threshold = true;
  for (int j = 0; j < cs.m; ++j) {
    // Plain left-to-right accumulation, on purpose distinct from the walk's
    // unrolled kernels.
    const double* row = cs.row(j);
    double ip = 0.0;
    for (int i = 0; i < cs.n; ++i) ip += row[i] * (x[i] - x0[i]);
    if (std::abs(ip) > cs.thresholds[j] * cs.norms[j] + eps_slack) {
      rep.cond_threshold = false;
      rep.violating_rows.push_back(j);
    }
  }
  for (int i = 0; i < cs.n; ++i)
    if (std::abs(x[i]) >= 1.0 - delta) ++rep.n_near;
  rep.cond_near = 2 * rep.n_near >= cs.n;
  rep.ok = rep.cond_threshold && rep.cond_near;
  return rep;
}

}  // namespace edgewalk
