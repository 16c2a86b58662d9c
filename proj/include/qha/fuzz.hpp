#pragma once

#include <cstdint>

#include "qha/algebra.hpp"
#include "qha/linrep.hpp"

namespace qha::fuzz {

/// splitmix64; fully specified, so seeds reproduce across platforms.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  /// Uniform-ish value in [0, n); n > 0.
  int below(int n);
  bool chance(int percent);
};

struct AlgebraLimits {
  int max_vertices = 5;
  int max_arrows = 8;
  int max_relations = 4;
  int min_relation_len = 2;
  int max_relation_len = 3;
};

/// Random validated monomial presentation within the limits (relations are
/// random composable walks; may be empty).
Presentation random_presentation(Rng& rng, const AlgebraLimits& limits = {});

/// Rejection-samples random_presentation until build() succeeds.
Algebra random_finite_algebra(Rng& rng, const AlgebraLimits& limits = {}, int max_attempts = 500);

SimpleSet random_simple_set(Rng& rng, int num_vertices);
/// Random subset of `within`.
SimpleSet random_subset(Rng& rng, const SimpleSet& within);

PathModuleSum random_path_sum(Rng& rng, const Algebra& a, int max_gens = 4);

/// Random valid representation: a path-module sum, a quotient of one by a
/// random submodule, or a syzygy of such.
Rep random_rep(Rng& rng, const Algebra& a);

SubRep random_submodule(Rng& rng, const Rep& m);

/// Random mono (a submodule inclusion) or epi (a quotient projection) with
/// domain/codomain derived from random_rep.
RepMorphism random_mono(Rng& rng, const Algebra& a);
RepMorphism random_epi(Rng& rng, const Algebra& a);

}  // namespace qha::fuzz
