#include "qha/fuzz.hpp"

#include <string>

#include "qha/error.hpp"

namespace qha::fuzz {

std::uint64_t Rng::next() {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

bool Rng::chance(int percent) { return below(100) < percent; }

Presentation random_presentation(Rng& rng, const AlgebraLimits& limits) {
  Presentation p;
  const int nv = 1 + rng.below(limits.max_vertices);
  for (int v = 1; v <= nv; ++v) p.quiver.vertices.push_back(std::to_string(v));
  // mostly forward arrows so that rejection sampling (cycles without taming
  // relations are infinite-dimensional) keeps arrow-rich algebras; loops and
  // back-edges still appear and must be killed by relations to survive
  const int na = 1 + rng.below(limits.max_arrows);
  for (int i = 1; i <= na; ++i) {
    int src = rng.below(nv), tgt;
    if (rng.chance(70))
      tgt = src + rng.below(nv - src);
    else
      tgt = rng.below(nv);
    p.quiver.arrows.push_back({"a" + std::to_string(i), src, tgt});
  }

  std::vector<std::vector<int>> arrows_from(nv);
  for (int i = 0; i < na; ++i) arrows_from[p.quiver.arrows[i].source].push_back(i);

  const int want = na == 0 ? 0 : rng.below(limits.max_relations + 1);
  for (int r = 0; r < want; ++r) {
    const int len = limits.min_relation_len +
                    rng.below(limits.max_relation_len - limits.min_relation_len + 1);
    std::vector<int> word{rng.below(na)};
    while (static_cast<int>(word.size()) < len) {
      const auto& outs = arrows_from[p.quiver.arrows[word.back()].target];
      if (outs.empty()) break;
      word.push_back(outs[rng.below(static_cast<int>(outs.size()))]);
    }
    if (static_cast<int>(word.size()) == len) p.relations.push_back(std::move(word));
  }
  return validate(p);
}

Algebra random_finite_algebra(Rng& rng, const AlgebraLimits& limits, int max_attempts) {
  for (int i = 0; i < max_attempts; ++i) {
    Presentation p = random_presentation(rng, limits);
    try {
      return build(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InfiniteDimensional) throw;
    }
  }
  fail(ErrorKind::Internal, "could not sample a finite-dimensional algebra");
}

SimpleSet random_simple_set(Rng& rng, int num_vertices) {
  SimpleSet s(num_vertices);
  for (int v = 0; v < num_vertices; ++v)
    if (rng.chance(50)) s.insert(v);
  return s;
}

SimpleSet random_subset(Rng& rng, const SimpleSet& within) {
  SimpleSet s(within.universe());
  for (int v : within.vertices())
    if (rng.chance(50)) s.insert(v);
  return s;
}

PathModuleSum random_path_sum(Rng& rng, const Algebra& a, int max_gens) {
  std::vector<PathId> gens;
  const int k = rng.below(max_gens + 1);
  for (int i = 0; i < k; ++i) gens.push_back(rng.below(a.dim()));
  return PathModuleSum::of(std::move(gens));
}

SubRep random_submodule(Rng& rng, const Rep& m) {
  std::vector<std::pair<int, QMat>> gens;
  const int k = rng.below(3);
  for (int i = 0; i < k; ++i) {
    std::vector<int> candidates;
    for (int v = 0; v < static_cast<int>(m.dims.size()); ++v)
      if (m.dims[v] > 0) candidates.push_back(v);
    if (candidates.empty()) break;
    const int v = candidates[rng.below(static_cast<int>(candidates.size()))];
    QMat vec(m.dims[v], 1);
    for (int r = 0; r < m.dims[v]; ++r) vec.at(r, 0) = rng.below(5) - 2;
    gens.emplace_back(v, std::move(vec));
  }
  return submodule_generated(m, gens);
}

Rep random_rep(Rng& rng, const Algebra& a) {
  Rep base = rep_of_path_sum(a, random_path_sum(rng, a, 1 + rng.below(4)));
  switch (rng.below(3)) {
    case 0:
      return base;
    case 1:
      return quotient(random_submodule(rng, base).incl).rep;
    default:
      return syzygy(base, 1);
  }
}

RepMorphism random_mono(Rng& rng, const Algebra& a) {
  Rep m = random_rep(rng, a);
  return random_submodule(rng, m).incl;
}

RepMorphism random_epi(Rng& rng, const Algebra& a) {
  Rep m = random_rep(rng, a);
  if (rng.chance(50)) return top(m).proj;
  return quotient(random_submodule(rng, m).incl).proj;
}

}  // namespace qha::fuzz
