#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "edgewalk/types.hpp"

namespace edgewalk {

enum class GeneratorKind {
  kBernoulli,      // each element joins each set independently w.p. p
  kKUniform,       // each set is a uniform k-subset
  kLowDegree,      // each element joins exactly min(t, m) distinct sets
  kSingleton,      // the n singleton sets
  kMatrixGaussian  // m unit-normalized Gaussian rows
};

GeneratorKind parse_generator_kind(const std::string& name);
std::string generator_kind_name(GeneratorKind kind);

// Deterministic per (spec, seed); the generator stream label is distinct from
// the walk's, so instance and algorithm randomness reseed independently.
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::kBernoulli;
  int n = 0;
  int m = 0;
  double param = 0.0;  // p, k, or t depending on kind
  std::uint64_t seed = 1;
};

using Instance = std::variant<SetSystem, ConstraintSet>;

Instance generate(const GeneratorSpec& spec);

// Checked accessors; throw ValidationError when the kind does not match.
SetSystem generate_sets(const GeneratorSpec& spec);
ConstraintSet generate_matrix(const GeneratorSpec& spec);

}  // namespace edgewalk
