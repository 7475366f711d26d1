#include "edgewalk/subspace.hpp"

#include <cmath>
#include <cstring>

#include "edgewalk/kernels.hpp"

namespace edgewalk {

OrthoBasis OrthoBasis::identity(int n) {
  OrthoBasis b;
  b.n_ = n;
  b.d_ = n;
  b.stride_ = n;
  b.a_.assign(std::size_t(n) * n, 0.0);
  for (int i = 0; i < n; ++i) b.a_[std::size_t(i) * n + i] = 1.0;
  return b;
}

std::vector<double> OrthoBasis::vector(int k) const {
  std::vector<double> v(n_);
  for (int i = 0; i < n_; ++i) v[i] = a_[std::size_t(i) * stride_ + k];
  return v;
}

std::vector<double> OrthoBasis::project(std::span<const double> v) const {
  std::vector<double> coef(std::size_t(d_), 0.0);
  if (d_ > 0)
    kernels::mat_tvec(a_.data(), n_, d_, stride_, v.data(), coef.data());
  std::vector<double> out(n_, 0.0);
  if (d_ > 0)
    kernels::mat_vec(a_.data(), n_, d_, stride_, coef.data(), out.data());
  return out;
}

void OrthoBasis::downdate_in_place(std::span<const double> w) {
  if (d_ == 0) return;
  const double wn = std::sqrt(kernels::norm_sq(w.data(), n_));
  std::vector<double> coef(d_);
  kernels::mat_tvec(a_.data(), n_, d_, stride_, w.data(), coef.data());
  const double pn = std::sqrt(kernels::norm_sq(coef.data(), d_));
  if (pn <= kRankTol * wn) return;  // w already orthogonal to the span

  // Rotate adjacent coefficient pairs so all projection mass lands in the
  // last slot, applying the same rotations to the frame columns; the last
  // column then spans the removed direction and is dropped.
  const double inv = 1.0 / pn;
  for (int k = 0; k < d_; ++k) coef[k] *= inv;
  std::vector<kernels::Rotation> rot(d_ - 1);
  for (int k = 0; k + 1 < d_; ++k) {
    const double a = coef[k];
    const double b = coef[k + 1];
    const double r = std::sqrt(a * a + b * b);
    if (r == 0.0) {
      rot[k] = {1.0, 0.0};
      continue;
    }
    rot[k] = {b / r, a / r};
    coef[k + 1] = r;
  }
  if (d_ > 1)
    kernels::apply_rotations(a_.data(), n_, stride_, rot.data(), rot.size());
  --d_;
}

void OrthoBasis::downdate_coordinate_in_place(int i) {
  if (d_ == 0) return;
  double* row = a_.data() + std::size_t(i) * stride_;
  const double pn = std::sqrt(kernels::norm_sq(row, d_));
  if (pn <= kRankTol) {
    std::memset(row, 0, sizeof(double) * d_);
    return;
  }
  const double inv = 1.0 / pn;
  std::vector<double> coef(row, row + d_);
  for (int k = 0; k < d_; ++k) coef[k] *= inv;
  std::vector<kernels::Rotation> rot(d_ - 1);
  for (int k = 0; k + 1 < d_; ++k) {
    const double a = coef[k];
    const double b = coef[k + 1];
    const double r = std::sqrt(a * a + b * b);
    if (r == 0.0) {
      rot[k] = {1.0, 0.0};
      continue;
    }
    rot[k] = {b / r, a / r};
    coef[k + 1] = r;
  }
  if (d_ > 1)
    kernels::apply_rotations(a_.data(), n_, stride_, rot.data(), rot.size());
  --d_;
  std::memset(row, 0, sizeof(double) * (d_ + 1));
}

void OrthoBasis::clear_coordinate(int i) {
  if (d_ == 0) return;
  std::memset(a_.data() + std::size_t(i) * stride_, 0, sizeof(double) * d_);
}

void OrthoBasis::sample_gaussian_into(Rng& rng, double* out) const {
  if (d_ == 0) {
    std::memset(out, 0, sizeof(double) * n_);
    return;
  }
  std::vector<double> g(d_);
  for (int k = 0; k < d_; ++k) g[k] = rng.normal();
  kernels::mat_vec(a_.data(), n_, d_, stride_, g.data(), out);
}

double OrthoBasis::orthonormality_defect() const {
  double worst = 0.0;
  for (int k = 0; k < d_; ++k) {
    const auto bk = vector(k);
    for (int l = k; l < d_; ++l) {
      const auto bl = vector(l);
      const double ip = kernels::dot(bk.data(), bl.data(), n_);
      worst = std::max(worst, std::abs(ip - (k == l ? 1.0 : 0.0)));
    }
  }
  return worst;
}

namespace {

// Orthonormalizes `candidate` against d column vectors held in `frame`
// (row-major, given stride), with one re-orthogonalization pass. Returns the
// final residual norm; `candidate` is left normalized when it is accepted.
double orthogonalize_against(std::vector<double>& candidate, const double* frame,
                             int n, int d, int stride) {
  std::vector<double> coef(std::max(d, 1));
  for (int pass = 0; pass < 2; ++pass) {
    if (d == 0) break;
    kernels::mat_tvec(frame, n, d, stride, candidate.data(), coef.data());
    std::vector<double> delta(n, 0.0);
    kernels::mat_vec(frame, n, d, stride, coef.data(), delta.data());
    for (int i = 0; i < n; ++i) candidate[i] -= delta[i];
  }
  return std::sqrt(kernels::norm_sq(candidate.data(), n));
}

}  // namespace

OrthoBasis complement_basis(
    int n, const std::vector<std::vector<double>>& constraints) {
  for (const auto& w : constraints)
    if (int(w.size()) != n)
      throw ValidationError("constraint length does not match dimension");

  if (constraints.empty()) return OrthoBasis::identity(n);

  // Orthonormal frame Q spanning the constraints, row-major n x q.
  const int q_cap = std::min<int>(int(constraints.size()), n);
  std::vector<double> qframe(std::size_t(n) * q_cap, 0.0);
  int q = 0;
  for (const auto& w : constraints) {
    const double wn = std::sqrt(kernels::norm_sq(w.data(), n));
    if (wn == 0.0) continue;
    std::vector<double> cand = w;
    const double res = orthogonalize_against(cand, qframe.data(), n, q, q_cap);
    if (res <= kRankTol * wn) continue;  // dependent constraint
    const double inv = 1.0 / res;
    for (int i = 0; i < n; ++i) qframe[std::size_t(i) * q_cap + q] = cand[i] * inv;
    ++q;
    if (q == n) break;
  }

  OrthoBasis basis;
  basis.n_ = n;
  basis.d_ = 0;
  basis.stride_ = std::max(n - q, 1);
  basis.a_.assign(std::size_t(n) * basis.stride_, 0.0);
  const int want = n - q;

  // Sweep standard basis vectors, then seeded Gaussian candidates if rank
  // bookkeeping ever leaves the sweep short.
  Rng fallback(0x9E3779B97F4A7C15ULL);
  for (int attempt = 0; attempt < 2 * n && basis.d_ < want; ++attempt) {
    std::vector<double> cand(n, 0.0);
    if (attempt < n) {
      cand[attempt] = 1.0;
    } else {
      for (int i = 0; i < n; ++i) cand[i] = fallback.normal();
    }
    double res = orthogonalize_against(cand, qframe.data(), n, q, q_cap);
    if (res <= 1e-6) continue;
    res = orthogonalize_against(cand, basis.a_.data(), n, basis.d_,
                                basis.stride_);
    if (res <= 1e-6) continue;
    const double inv = 1.0 / res;
    for (int i = 0; i < n; ++i)
      basis.a_[std::size_t(i) * basis.stride_ + basis.d_] = cand[i] * inv;
    ++basis.d_;
  }
  return basis;
}

OrthoBasis downdate(const OrthoBasis& basis, std::span<const double> w) {
  if (int(w.size()) != basis.dim_ambient())
    throw ValidationError("vector length does not match basis dimension");
  OrthoBasis out = basis;
  out.downdate_in_place(w);
  return out;
}

std::vector<double> sample_gaussian(const OrthoBasis& basis, Rng& rng) {
  std::vector<double> out(basis.dim_ambient());
  basis.sample_gaussian_into(rng, out.data());
  return out;
}

}  // namespace edgewalk
