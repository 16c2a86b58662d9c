#pragma once

#include <utility>
#include <vector>

#include "qha/algebra.hpp"
#include "qha/pathmod.hpp"
#include "qha/rational.hpp"

namespace qha {

/// Exact rational representation of the bound quiver: a space per vertex and a
/// matrix per arrow acting source -> target (right modules, leftmost arrow of
/// a path acting first). Construction asserts that every relation composite
/// vanishes. Immutable value type.
struct Rep {
  const Algebra* alg = nullptr;
  std::vector<int> dims;
  std::vector<QMat> act;  // per arrow: dims[target] x dims[source]

  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  void validate() const;  // throws Internal on shape/relation violations
};

struct RepMorphism {
  Rep dom;
  Rep cod;
  std::vector<QMat> map;  // per vertex: cod.dims[v] x dom.dims[v]

  void validate() const;  // commuting square per arrow
  bool is_mono() const;
  bool is_epi() const;
};

RepMorphism identity_morphism(const Rep& m);
RepMorphism zero_morphism(const Rep& dom, const Rep& cod);
/// g ∘ f.
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);

/// A submodule carried with its inclusion, so induced arrow actions are
/// always well-defined.
struct SubRep {
  Rep rep;
  RepMorphism incl;  // rep -> ambient
};

struct QuotRep {
  Rep rep;
  RepMorphism proj;  // ambient -> rep
};

Rep zero_rep(const Algebra& a);
Rep simple_rep(const Algebra& a, int vertex);
/// P(i): basis paths_from(i), arrows act by right concatenation.
Rep projective_rep(const Algebra& a, int vertex);
/// I(i): basis paths_to(i), an arrow deletes the leading arrow of a path.
Rep injective_rep(const Algebra& a, int vertex);
/// Λ = ⊕_i P(i) and D(Λ) = ⊕_i I(i).
Rep regular_rep(const Algebra& a);
Rep coregular_rep(const Algebra& a);
Rep direct_sum(const std::vector<Rep>& parts);
Rep rep_of_path_module(const Algebra& a, PathId p);
Rep rep_of_path_sum(const Algebra& a, const PathModuleSum& m);

/// rad M: at each vertex the sum of the images of all incoming arrow maps.
SubRep radical(const Rep& m);

struct TopInfo {
  std::vector<int> mult;  // per-vertex multiplicity of S(v) in top M
  Rep rep;                // semisimple quotient
  RepMorphism proj;
};
TopInfo top(const Rep& m);

/// soc M: at each vertex the intersection of the kernels of all outgoing
/// arrow maps (arrows act as zero on it).
Rep socle(const Rep& m);

SubRep kernel(const RepMorphism& f);
/// Cokernel of a monomorphism.
QuotRep quotient(const RepMorphism& incl);

/// P(M) = ⊕ P(i)^{m_i} with m_i the top multiplicities, mapping onto M by
/// lifting a chosen basis of top M. Surjectivity is verified (LiftFailure).
RepMorphism projective_cover(const Rep& m);

/// Ω^m(M): iterated kernel of minimal projective covers; Ω^0(M) = M.
Rep syzygy(const Rep& m, int steps);

/// Finite(d): exact pd (minimal d with Ω^d projective, computed from the
/// minimal resolution). AtLeast(k): pd >= k, either because the cutoff was
/// reached or because syzygy dimensions exceeded the budget (minimal syzygy
/// multiplicities can grow exponentially when pd is infinite).
/// cutoff < 0 selects 2·dim Λ; dim_budget <= 0 selects max(128, 4·dim Λ).
struct PdBound {
  static PdBound finite(int d) { return {true, d}; }
  static PdBound at_least(int k) { return {false, k}; }
  bool decided = false;
  int value = 0;
};
PdBound pd_bounded(const Rep& m, int cutoff = -1, int dim_budget = 0);

/// t_V(M) by peeling V-isotypic top layers: K_0 = M, K_{n+1} = kernel of
/// K_n ->> (V-part of top K_n); stops when top K_n has no V-component.
SubRep torsion_radical(const Rep& m, const SimpleSet& v);
/// M / t_V(M); always lies in F(V).
Rep q_tv(const Rep& m, const SimpleSet& v);
/// rad(t_V(M)).
Rep f_tv(const Rep& m, const SimpleSet& v);
/// Least i with t_V(F_{t_V}^i(M)) = 0.
int layer_length(const Rep& m, const SimpleSet& v);
int loewy_length(const Rep& m);
/// All composition factors lie in V.
bool in_fv(const Rep& m, const SimpleSet& v);
/// Jordan-Hoelder multiplicities: S(v) occurs dim M_v times.
std::vector<int> composition_factors(const Rep& m);

/// Basis of Hom(M, N) from the commuting-square linear system.
std::vector<RepMorphism> hom_space(const Rep& m, const Rep& n);

enum class Iso { Yes, No, Undecided };
/// Searches the hom space for an invertible element over a deterministic
/// coefficient grid; full grid enumeration is a proof of No, a budget
/// exhaustion is reported as Undecided, never as No.
Iso is_isomorphic(const Rep& m, const Rep& n, long budget = 20000);

/// Induced map t_V(f) : t_V(M) -> t_V(N).
RepMorphism torsion_map(const RepMorphism& f, const SimpleSet& v);

/// Smallest subrepresentation containing the given vectors
/// (vertex, column vector).
SubRep submodule_generated(const Rep& m, const std::vector<std::pair<int, QMat>>& gens);

}  // namespace qha
