#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "edgewalk/kernels.hpp"
#include "edgewalk/rng.hpp"

namespace ker = edgewalk::kernels;

namespace {

std::vector<double> random_vec(std::size_t n, edgewalk::Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal();
  return v;
}

}  // namespace

// The parallel kernels must reproduce the serial reference bit for bit; the
// walk's determinism across thread counts rests on this.
TEST_CASE("parallel kernels match serial bitwise") {
  edgewalk::Rng rng(123);
  for (std::size_t n : {3u, 64u, 801u, 4096u}) {
    for (std::size_t d : {1u, 7u, 96u, 333u}) {
      auto frame = random_vec(n * d, rng);
      auto g = random_vec(d, rng);
      auto w = random_vec(n, rng);

      std::vector<double> a(n), b(n);
      ker::mat_vec_serial(frame.data(), n, d, d, g.data(), a.data());
      ker::mat_vec(frame.data(), n, d, d, g.data(), b.data());
      CHECK(std::memcmp(a.data(), b.data(), sizeof(double) * n) == 0);

      std::vector<double> c(d), e(d);
      ker::mat_tvec_serial(frame.data(), n, d, d, w.data(), c.data());
      ker::mat_tvec(frame.data(), n, d, d, w.data(), e.data());
      CHECK(std::memcmp(c.data(), e.data(), sizeof(double) * d) == 0);

      if (d >= 2) {
        std::vector<ker::Rotation> rot(d - 1);
        for (std::size_t k = 0; k + 1 < d; ++k) {
          const double t = 0.1 + 0.003 * double(k);
          rot[k] = {std::cos(t), std::sin(t)};
        }
        auto f1 = frame, f2 = frame;
        ker::apply_rotations_serial(f1.data(), n, d, rot.data(), rot.size());
        ker::apply_rotations(f2.data(), n, d, rot.data(), rot.size());
        CHECK(std::memcmp(f1.data(), f2.data(),
                          sizeof(double) * f1.size()) == 0);
      }
    }
  }
}

TEST_CASE("dot and axpy basics") {
  std::vector<double> a{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> b{1, 1, 1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(ker::dot(a.data(), b.data(), 10) == doctest::Approx(55.0));
  CHECK(ker::norm_sq(b.data(), 10) == doctest::Approx(10.0));

  std::vector<double> y(10, 1.0);
  ker::axpy(2.0, a.data(), y.data(), 10);
  CHECK(y[0] == doctest::Approx(3.0));
  CHECK(y[9] == doctest::Approx(21.0));

  std::vector<double> y2(10, 1.0);
  ker::axpy_serial(2.0, a.data(), y2.data(), 10);
  CHECK(std::memcmp(y.data(), y2.data(), sizeof(double) * 10) == 0);
}

TEST_CASE("rotations are orthogonal transforms") {
  edgewalk::Rng rng(7);
  const std::size_t n = 50, d = 20;
  auto frame = random_vec(n * d, rng);
  const double before = ker::norm_sq(frame.data(), frame.size());
  std::vector<ker::Rotation> rot(d - 1);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double t = 0.05 * double(k + 1);
    rot[k] = {std::cos(t), std::sin(t)};
  }
  ker::apply_rotations(frame.data(), n, d, rot.data(), rot.size());
  const double after = ker::norm_sq(frame.data(), frame.size());
  CHECK(after == doctest::Approx(before).epsilon(1e-12));
}
