#include "edgewalk/instances.hpp"

#include <algorithm>
#include <cmath>

#include "edgewalk/rng.hpp"

namespace edgewalk {

GeneratorKind parse_generator_kind(const std::string& name) {
  if (name == "bernoulli") return GeneratorKind::kBernoulli;
  if (name == "k-uniform") return GeneratorKind::kKUniform;
  if (name == "low-degree") return GeneratorKind::kLowDegree;
  if (name == "singleton") return GeneratorKind::kSingleton;
  if (name == "matrix-gaussian") return GeneratorKind::kMatrixGaussian;
  throw ValidationError("unknown generator kind: " + name);
}

std::string generator_kind_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kBernoulli: return "bernoulli";
    case GeneratorKind::kKUniform: return "k-uniform";
    case GeneratorKind::kLowDegree: return "low-degree";
    case GeneratorKind::kSingleton: return "singleton";
    case GeneratorKind::kMatrixGaussian: return "matrix-gaussian";
  }
  throw ValidationError("unknown generator kind");
}

namespace {

// Uniform k-subset of {0,...,n-1} via partial Fisher-Yates, returned sorted.
std::vector<int> sample_subset(int n, int k, Rng& rng) {
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < k; ++i) {
    const int j = i + int(rng.below(std::uint64_t(n - i)));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> out(pool.begin(), pool.begin() + k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SetSystem generate_sets(const GeneratorSpec& spec) {
  if (spec.n < 0 || spec.m < 0)
    throw ValidationError("n and m must be nonnegative");
  Rng rng = Rng::stream(spec.seed, kStreamInstance);

  switch (spec.kind) {
    case GeneratorKind::kBernoulli: {
      const double p = spec.param;
      if (!(p >= 0.0 && p <= 1.0))
        throw ValidationError("bernoulli p must lie in [0,1]");
      std::vector<std::vector<int>> sets(spec.m);
      for (int j = 0; j < spec.m; ++j)
        for (int i = 0; i < spec.n; ++i)
          if (rng.uniform() < p) sets[j].push_back(i);
      return SetSystem(spec.n, std::move(sets));
    }
    case GeneratorKind::kKUniform: {
      const int k = int(spec.param);
      if (double(k) != spec.param || k < 1 || k > spec.n)
        throw ValidationError("k must be an integer in [1, n]");
      std::vector<std::vector<int>> sets(spec.m);
      for (int j = 0; j < spec.m; ++j) sets[j] = sample_subset(spec.n, k, rng);
      return SetSystem(spec.n, std::move(sets));
    }
    case GeneratorKind::kLowDegree: {
      const int t = int(spec.param);
      if (double(t) != spec.param || t < 1)
        throw ValidationError("degree t must be a positive integer");
      const int per_element = std::min(t, spec.m);
      std::vector<std::vector<int>> sets(spec.m);
      for (int i = 0; i < spec.n; ++i)
        for (int j : sample_subset(spec.m, per_element, rng))
          sets[j].push_back(i);
      return SetSystem(spec.n, std::move(sets));
    }
    case GeneratorKind::kSingleton: {
      std::vector<std::vector<int>> sets(spec.n);
      for (int i = 0; i < spec.n; ++i) sets[i] = {i};
      return SetSystem(spec.n, std::move(sets));
    }
    case GeneratorKind::kMatrixGaussian:
      throw ValidationError("matrix-gaussian yields a matrix, not a set system");
  }
  throw ValidationError("unknown generator kind");
}

ConstraintSet generate_matrix(const GeneratorSpec& spec) {
  if (spec.kind != GeneratorKind::kMatrixGaussian)
    throw ValidationError("generator kind yields a set system, not a matrix");
  if (spec.n < 1 || spec.m < 0)
    throw ValidationError("matrix generation needs n >= 1, m >= 0");
  Rng rng = Rng::stream(spec.seed, kStreamInstance);
  std::vector<double> flat(std::size_t(spec.m) * spec.n);
  for (int j = 0; j < spec.m; ++j) {
    double* row = flat.data() + std::size_t(j) * spec.n;
    double sq = 0.0;
    do {
      sq = 0.0;
      for (int i = 0; i < spec.n; ++i) {
        row[i] = rng.normal();
        sq += row[i] * row[i];
      }
    } while (sq == 0.0);
    const double inv = 1.0 / std::sqrt(sq);
    for (int i = 0; i < spec.n; ++i) row[i] *= inv;
  }
  return ConstraintSet(spec.n, spec.m, std::move(flat));
}

Instance generate(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorKind::kMatrixGaussian)
    return generate_matrix(spec);
  return generate_sets(spec);
}

}  // namespace edgewalk
