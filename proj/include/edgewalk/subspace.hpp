#pragma once

#include <span>
#include <vector>

#include "edgewalk/rng.hpp"
#include "edgewalk/types.hpp"

namespace edgewalk {

// A residual is treated as zero when its norm is at most this fraction of the
// input vector's norm; dependent constraints then leave the basis untouched,
// which makes downdating idempotent.
inline constexpr double kRankTol = 1e-8;

// An orthonormal basis of a subspace of R^n, stored as an n x d column frame
// in row-major layout: row i holds coordinate i of every basis vector, so the
// sampling product B*g streams rows contiguously. Treat values as immutable;
// the in-place mutators below are for exclusively owned copies (the walk).
class OrthoBasis {
 public:
  OrthoBasis() = default;

  // Identity basis of R^n.
  static OrthoBasis identity(int n);

  int dim_ambient() const { return n_; }
  int dim() const { return d_; }

  const double* frame() const { return a_.data(); }
  int stride() const { return stride_; }

  // k-th basis vector, materialized (column k of the frame).
  std::vector<double> vector(int k) const;

  // Component sum_k <v, b_k> b_k of v inside the span.
  std::vector<double> project(std::span<const double> v) const;

  // Restricts the span to the orthogonal complement of w inside it. If w is
  // orthogonal to the span (within kRankTol) the basis is unchanged,
  // otherwise dim drops by exactly one. Cost O(n*d).
  void downdate_in_place(std::span<const double> w);

  // Same, specialised to w = e_i: the projection coefficients are row i of
  // the frame, and the row is zeroed afterwards so later samples have an
  // exact zero in coordinate i.
  void downdate_coordinate_in_place(int i);

  // Zeroes row i of the frame. Only valid when e_i is already orthogonal to
  // the span up to rounding; turns those residuals into exact zeros.
  void clear_coordinate(int i);

  // Draws sum_k g_k b_k with g_k independent standard normals, consuming
  // exactly dim() draws. The empty basis yields the zero vector.
  void sample_gaussian_into(Rng& rng, double* out) const;

  // Max pairwise |<b_i,b_j> - delta_ij|; for tests, O(n*d^2).
  double orthonormality_defect() const;

 private:
  friend OrthoBasis complement_basis(int n,
                                     const std::vector<std::vector<double>>&);

  int n_ = 0;
  int d_ = 0;
  int stride_ = 0;
  std::vector<double> a_;  // n_ rows x stride_ cols, first d_ cols live
};

// Orthonormal basis of {u : <u,w> = 0 for every constraint w}. Rank-deficient
// constraint sets are fine; dim() is n minus the constraint rank. Built by
// repeated orthogonalization with one re-orthogonalization pass.
OrthoBasis complement_basis(int n,
                            const std::vector<std::vector<double>>& constraints);

// Value-semantics downdate per the module contract.
OrthoBasis downdate(const OrthoBasis& basis, std::span<const double> w);

// Convenience wrapper returning a fresh vector.
std::vector<double> sample_gaussian(const OrthoBasis& basis, Rng& rng);

}  // namespace edgewalk
