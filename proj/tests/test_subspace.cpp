#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "edgewalk/kernels.hpp"
#include "edgewalk/rng.hpp"
#include "edgewalk/subspace.hpp"

using namespace edgewalk;

namespace {

std::vector<double> unit(int n, int i) {
  std::vector<double> e(n, 0.0);
  e[i] = 1.0;
  return e;
}

std::vector<double> random_vec(int n, Rng& rng) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal();
  return v;
}

// Mutual projection residuals between two bases of (supposedly) one span.
double span_distance(const OrthoBasis& a, const OrthoBasis& b) {
  double worst = 0.0;
  for (int k = 0; k < a.dim(); ++k) {
    const auto v = a.vector(k);
    const auto p = b.project(v);
    double res = 0.0;
    for (int i = 0; i < a.dim_ambient(); ++i)
      res += (v[i] - p[i]) * (v[i] - p[i]);
    worst = std::max(worst, std::sqrt(res));
  }
  for (int k = 0; k < b.dim(); ++k) {
    const auto v = b.vector(k);
    const auto p = a.project(v);
    double res = 0.0;
    for (int i = 0; i < b.dim_ambient(); ++i)
      res += (v[i] - p[i]) * (v[i] - p[i]);
    worst = std::max(worst, std::sqrt(res));
  }
  return worst;
}

}  // namespace

TEST_CASE("complement_basis") {
  SUBCASE("no constraints yields a full basis") {
    const OrthoBasis b = complement_basis(3, {});
    CHECK(b.dim() == 3);
    CHECK(b.orthonormality_defect() <= 1e-8);
  }
  SUBCASE("full rank yields the empty basis") {
    const OrthoBasis b =
        complement_basis(3, {unit(3, 0), unit(3, 1), unit(3, 2)});
    CHECK(b.dim() == 0);
  }
  SUBCASE("two independent constraints in R^3 leave a line") {
    const OrthoBasis b =
        complement_basis(3, {{1, 0, 0}, {1, 1, 0}});
    REQUIRE(b.dim() == 1);
    const auto v = b.vector(0);
    CHECK(std::abs(v[0]) <= 1e-10);
    CHECK(std::abs(v[1]) <= 1e-10);
    CHECK(std::abs(std::abs(v[2]) - 1.0) <= 1e-10);
  }
  SUBCASE("dependent constraints do not reduce the dimension") {
    const OrthoBasis b =
        complement_basis(4, {{1, 2, 0, 0}, {2, 4, 0, 0}, {0, 0, 1, 0}});
    CHECK(b.dim() == 2);
  }
  SUBCASE("rank tolerance treats near-dependent as dependent") {
    std::vector<double> w{1.0, 2.0, 0.0, 0.0};
    std::vector<double> nearly = w;
    nearly[2] = 1e-12;
    const OrthoBasis b = complement_basis(4, {w, nearly});
    CHECK(b.dim() == 3);
  }
}

TEST_CASE("downdate") {
  SUBCASE("removing e0 from the identity leaves span{e1,e2}") {
    const OrthoBasis full = OrthoBasis::identity(3);
    const std::vector<double> e0 = unit(3, 0);
    const OrthoBasis b = downdate(full, e0);
    REQUIRE(b.dim() == 2);
    CHECK(b.orthonormality_defect() <= 1e-8);
    const OrthoBasis expect = complement_basis(3, {e0});
    CHECK(span_distance(b, expect) <= 1e-10);
  }
  SUBCASE("vector orthogonal to the span is a no-op") {
    const OrthoBasis line = complement_basis(3, {unit(3, 0), unit(3, 1)});
    REQUIRE(line.dim() == 1);
    const std::vector<double> w{1.0, 1.0, 0.0};
    const OrthoBasis same = downdate(line, w);
    CHECK(same.dim() == 1);
    CHECK(span_distance(line, same) <= 1e-12);
  }
  SUBCASE("idempotent after the first application") {
    Rng rng(11);
    const int n = 8;
    OrthoBasis b = OrthoBasis::identity(n);
    const auto w = random_vec(n, rng);
    const OrthoBasis once = downdate(b, w);
    const OrthoBasis twice = downdate(once, w);
    CHECK(once.dim() == n - 1);
    CHECK(twice.dim() == n - 1);
    CHECK(span_distance(once, twice) <= 1e-10);
  }
  SUBCASE("zero vector is a no-op") {
    const OrthoBasis b = OrthoBasis::identity(4);
    const OrthoBasis same = downdate(b, std::vector<double>(4, 0.0));
    CHECK(same.dim() == 4);
  }
}

TEST_CASE("orthonormality after long downdate sequences") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 24 + int(rng.below(9));
    OrthoBasis b = OrthoBasis::identity(n);
    std::vector<std::vector<double>> used;
    const int k = 1 + int(rng.below(std::uint64_t(n)));
    for (int s = 0; s < k; ++s) {
      auto w = random_vec(n, rng);
      b.downdate_in_place(w);
      used.push_back(std::move(w));
      CHECK(b.orthonormality_defect() <= 1e-8);
    }
    // Span equivalence against a fresh complement on the same constraints.
    const OrthoBasis fresh = complement_basis(n, used);
    CHECK(b.dim() == fresh.dim());
    CHECK(span_distance(b, fresh) <= 1e-6);
  }
}

TEST_CASE("coordinate downdate pins the row to exact zeros") {
  Rng rng(5);
  const int n = 12;
  OrthoBasis b = OrthoBasis::identity(n);
  b.downdate_in_place(random_vec(n, rng));
  b.downdate_coordinate_in_place(4);
  CHECK(b.dim() == n - 2);
  Rng g(99);
  for (int rep = 0; rep < 10; ++rep) {
    const auto s = sample_gaussian(b, g);
    CHECK(s[4] == 0.0);
  }
  const OrthoBasis fresh = complement_basis(n, {unit(n, 4)});
  CHECK(b.orthonormality_defect() <= 1e-8);
}

TEST_CASE("sampler") {
  SUBCASE("empty basis returns the zero vector") {
    const OrthoBasis none =
        complement_basis(2, {unit(2, 0), unit(2, 1)});
    REQUIRE(none.dim() == 0);
    Rng rng(1);
    for (int rep = 0; rep < 5; ++rep) {
      const auto s = sample_gaussian(none, rng);
      CHECK(s[0] == 0.0);
      CHECK(s[1] == 0.0);
    }
  }
  SUBCASE("axis line in R^2: unit variance on it, exact zero off it") {
    const OrthoBasis b = complement_basis(2, {unit(2, 1)});
    REQUIRE(b.dim() == 1);
    Rng rng(42);
    const int samples = 100000;
    double sq0 = 0.0;
    for (int s = 0; s < samples; ++s) {
      const auto g = sample_gaussian(b, rng);
      sq0 += g[0] * g[0];
      CHECK(g[1] == 0.0);
    }
    const double var0 = sq0 / samples;
    CHECK(var0 >= 0.97);
    CHECK(var0 <= 1.03);
  }
  SUBCASE("coordinate variances sum to the dimension") {
    const int n = 16;
    const OrthoBasis b = complement_basis(n, {});
    Rng rng(7);
    const int samples = 10000;
    std::vector<double> sq(n, 0.0);
    for (int s = 0; s < samples; ++s) {
      const auto g = sample_gaussian(b, rng);
      for (int i = 0; i < n; ++i) sq[i] += g[i] * g[i];
    }
    double total = 0.0;
    for (int i = 0; i < n; ++i) total += sq[i] / samples;
    CHECK(total >= 0.95 * n);
    CHECK(total <= 1.05 * n);
  }
  SUBCASE("projection variance onto any unit vector is at most one") {
    Rng mk(13);
    const int n = 24;
    const OrthoBasis b =
        complement_basis(n, {random_vec(n, mk), random_vec(n, mk)});
    auto u = random_vec(n, mk);
    const double norm = std::sqrt(kernels::norm_sq(u.data(), n));
    for (auto& v : u) v /= norm;
    Rng rng(77);
    const int samples = 100000;
    double sq = 0.0;
    for (int s = 0; s < samples; ++s) {
      const auto g = sample_gaussian(b, rng);
      const double ip = kernels::dot(g.data(), u.data(), n);
      sq += ip * ip;
    }
    CHECK(sq / samples <= 1.05);
  }
  SUBCASE("gaussian tails under the subspace sampler") {
    const int n = 8;
    Rng mk(3);
    const OrthoBasis b = complement_basis(n, {random_vec(n, mk)});
    auto u = unit(n, 2);
    Rng rng(31);
    const int samples = 100000;
    int over1 = 0, over2 = 0, over3 = 0;
    for (int s = 0; s < samples; ++s) {
      const auto g = sample_gaussian(b, rng);
      const double ip = std::abs(kernels::dot(g.data(), u.data(), n));
      over1 += ip >= 1.0;
      over2 += ip >= 2.0;
      over3 += ip >= 3.0;
    }
    CHECK(double(over1) / samples <= 2.0 * std::exp(-0.5) + 0.01);
    CHECK(double(over2) / samples <= 2.0 * std::exp(-2.0) + 0.01);
    CHECK(double(over3) / samples <= 2.0 * std::exp(-4.5) + 0.01);
  }
}

TEST_CASE("downdate dimension validation") {
  const OrthoBasis b = OrthoBasis::identity(3);
  CHECK_THROWS_AS(downdate(b, std::vector<double>(2, 1.0)), ValidationError);
}
