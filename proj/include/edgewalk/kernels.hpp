#pragma once

#include <cstddef>
#include <vector>

// Dense kernels for the walk's inner loop. Every parallel variant partitions
// work over independent output slots (or combines fixed-size blocks in a fixed
// order), so results are bit-identical to the serial reference for any thread
// count. That property is load-bearing: seeded runs must not depend on the
// machine's core count, and the test suite asserts serial == parallel bitwise.
namespace edgewalk::kernels {

// Work threshold (in flops) below which the parallel variants fall back to the
// serial path. Falling back is safe because both paths compute identical bits.
inline constexpr std::size_t kParallelMinWork = 1u << 15;

// Dot product with a fixed 8-way unrolled summation order.
double dot(const double* a, const double* b, std::size_t n);

// Squared Euclidean norm, same summation order as dot(a, a, n).
double norm_sq(const double* a, std::size_t n);

// y[i] += alpha * x[i].
void axpy_serial(double alpha, const double* x, double* y, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);

// out = B * g for B an n x d row-major matrix with row stride `stride`
// (basis vectors are columns; row i holds coordinate i across basis vectors).
void mat_vec_serial(const double* B, std::size_t n, std::size_t d,
                    std::size_t stride, const double* g, double* out);
void mat_vec(const double* B, std::size_t n, std::size_t d, std::size_t stride,
             const double* g, double* out);

// out = B^T * w, accumulated over fixed 256-row blocks combined in block
// order. Entries of w that are exactly zero are skipped.
void mat_tvec_serial(const double* B, std::size_t n, std::size_t d,
                     std::size_t stride, const double* w, double* out);
void mat_tvec(const double* B, std::size_t n, std::size_t d, std::size_t stride,
              const double* w, double* out);

// A plane rotation acting on adjacent columns (k, k+1):
//   col_k'   = c * col_k - s * col_{k+1}
//   col_k+1' = s * col_k + c * col_{k+1}
struct Rotation {
  double c;
  double s;
};

// Applies rotations[k] to columns (k, k+1) for k = 0..count-1, in order,
// to every row of B.
void apply_rotations_serial(double* B, std::size_t n, std::size_t stride,
                            const Rotation* rotations, std::size_t count);
void apply_rotations(double* B, std::size_t n, std::size_t stride,
                     const Rotation* rotations, std::size_t count);

}  // namespace edgewalk::kernels
