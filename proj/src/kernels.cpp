#include "edgewalk/kernels.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace edgewalk::kernels {

double dot(const double* a, const double* b, std::size_t n) {
  double acc0 = 0, acc1 = 0, acc2 = 0, acc3 = 0;
  double acc4 = 0, acc5 = 0, acc6 = 0, acc7 = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 += a[i + 0] * b[i + 0];
    acc1 += a[i + 1] * b[i + 1];
    acc2 += a[i + 2] * b[i + 2];
    acc3 += a[i + 3] * b[i + 3];
    acc4 += a[i + 4] * b[i + 4];
    acc5 += a[i + 5] * b[i + 5];
    acc6 += a[i + 6] * b[i + 6];
    acc7 += a[i + 7] * b[i + 7];
  }
  double tail = 0;
  for (; i < n; ++i) tail += a[i] * b[i];
  return (((acc0 + acc1) + (acc2 + acc3)) + ((acc4 + acc5) + (acc6 + acc7))) +
         tail;
}

double norm_sq(const double* a, std::size_t n) { return dot(a, a, n); }

void axpy_serial(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#ifdef _OPENMP
  if (n >= kParallelMinWork) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i)
      y[i] += alpha * x[i];
    return;
  }
#endif
  axpy_serial(alpha, x, y, n);
}

void mat_vec_serial(const double* B, std::size_t n, std::size_t d,
                    std::size_t stride, const double* g, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = dot(B + i * stride, g, d);
}

void mat_vec(const double* B, std::size_t n, std::size_t d, std::size_t stride,
             const double* g, double* out) {
#ifdef _OPENMP
  if (n * d >= kParallelMinWork) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i)
      out[i] = dot(B + std::size_t(i) * stride, g, d);
    return;
  }
#endif
  mat_vec_serial(B, n, d, stride, g, out);
}

namespace {

constexpr std::size_t kRowBlock = 256;

void accumulate_block(const double* B, std::size_t stride, const double* w,
                      std::size_t begin, std::size_t end, std::size_t d,
                      double* part) {
  for (std::size_t k = 0; k < d; ++k) part[k] = 0.0;
  for (std::size_t i = begin; i < end; ++i) {
    const double wi = w[i];
    if (wi == 0.0) continue;
    const double* row = B + i * stride;
    for (std::size_t k = 0; k < d; ++k) part[k] += wi * row[k];
  }
}

}  // namespace

void mat_tvec_serial(const double* B, std::size_t n, std::size_t d,
                     std::size_t stride, const double* w, double* out) {
  const std::size_t nb = (n + kRowBlock - 1) / kRowBlock;
  std::vector<double> part(d);
  for (std::size_t k = 0; k < d; ++k) out[k] = 0.0;
  for (std::size_t b = 0; b < nb; ++b) {
    accumulate_block(B, stride, w, b * kRowBlock,
                     std::min(n, (b + 1) * kRowBlock), d, part.data());
    for (std::size_t k = 0; k < d; ++k) out[k] += part[k];
  }
}

void mat_tvec(const double* B, std::size_t n, std::size_t d, std::size_t stride,
              const double* w, double* out) {
#ifdef _OPENMP
  const std::size_t nb = (n + kRowBlock - 1) / kRowBlock;
  if (n * d >= kParallelMinWork && nb > 1) {
    std::vector<double> parts(nb * d);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < std::ptrdiff_t(nb); ++b)
      accumulate_block(B, stride, w, std::size_t(b) * kRowBlock,
                       std::min(n, std::size_t(b + 1) * kRowBlock), d,
                       parts.data() + std::size_t(b) * d);
    // Combine per-block partials in fixed block order.
    for (std::size_t k = 0; k < d; ++k) {
      double acc = 0.0;
      for (std::size_t b = 0; b < nb; ++b) acc += parts[b * d + k];
      out[k] = acc;
    }
    return;
  }
#endif
  mat_tvec_serial(B, n, d, stride, w, out);
}

void apply_rotations_serial(double* B, std::size_t n, std::size_t stride,
                            const Rotation* rotations, std::size_t count) {
  for (std::size_t i = 0; i < n; ++i) {
    double* row = B + i * stride;
    for (std::size_t k = 0; k < count; ++k) {
      const double a = row[k];
      const double b = row[k + 1];
      row[k] = rotations[k].c * a - rotations[k].s * b;
      row[k + 1] = rotations[k].s * a + rotations[k].c * b;
    }
  }
}

void apply_rotations(double* B, std::size_t n, std::size_t stride,
                     const Rotation* rotations, std::size_t count) {
#ifdef _OPENMP
  if (n * count >= kParallelMinWork) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < std::ptrdiff_t(n); ++i) {
      double* row = B + std::size_t(i) * stride;
      for (std::size_t k = 0; k < count; ++k) {
        const double a = row[k];
        const double b = row[k + 1];
        row[k] = rotations[k].c * a - rotations[k].s * b;
        row[k + 1] = rotations[k].s * a + rotations[k].c * b;
      }
    }
    return;
  }
#endif
  apply_rotations_serial(B, n, stride, rotations, count);
}

}  // namespace edgewalk::kernels
