#pragma once

#include <initializer_list>
#include <tuple>
#include <vector>

#include "qha/algebra.hpp"
#include "qha/homdim.hpp"

namespace qha {

/// A subset V of the simple modules, identified by their vertices.
class SimpleSet {
 public:
  SimpleSet() = default;
  explicit SimpleSet(int num_vertices) : mask_(num_vertices, false) {}

  static SimpleSet empty(int num_vertices) { return SimpleSet(num_vertices); }
  static SimpleSet all(int num_vertices);
  static SimpleSet of(int num_vertices, const std::vector<int>& vertices);
  static SimpleSet of(int num_vertices, std::initializer_list<int> vertices);

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(int v) const { return mask_[v]; }
  void insert(int v) { mask_[v] = true; }
  void erase(int v) { mask_[v] = false; }
  SimpleSet complement() const;
  std::vector<int> vertices() const;
  int size() const;
  bool operator==(const SimpleSet&) const = default;

 private:
  std::vector<bool> mask_;
};

/// True if a precedes b in the lexicographic order on sorted vertex lists
/// (the deterministic tie-break used by the optimizers).
bool lex_less(const SimpleSet& a, const SimpleSet& b);

/// Formal multiset of basis paths p_j, representing the right module ⊕ p_jΛ.
/// The empty multiset is the zero module. Generators are kept sorted; equality
/// of generator multisets is *not* isomorphism of modules.
struct PathModuleSum {
  std::vector<PathId> gens;

  bool is_zero() const { return gens.empty(); }
  static PathModuleSum zero() { return {}; }
  static PathModuleSum of(std::vector<PathId> g);
  bool operator==(const PathModuleSum&) const = default;
};

/// P(i) = e_iΛ.
PathModuleSum projective_module(const Algebra& a, int vertex);

std::size_t dim(const Algebra& a, const PathModuleSum& m);
int loewy_length(const Algebra& a, const PathModuleSum& m);  // 0 for the zero module

/// Per-vertex multiplicities of the composition factors (targets of all basis
/// paths q with p_j·q != 0).
std::vector<int> composition_factors(const Algebra& a, const PathModuleSum& m);

/// rad(⊕ p_jΛ) = ⊕_j ⊕_{α : p_jα != 0} p_jαΛ.
PathModuleSum radical_module(const Algebra& a, const PathModuleSum& m);

/// Torsion radical t_V(M). Uses that pΛ is local with top S(target(p)):
/// if target(p) lies outside V the summand is torsion, otherwise t_V descends
/// to the radical ⊕ pαΛ.
PathModuleSum torsion_radical(const Algebra& a, const PathModuleSum& m, const SimpleSet& v);

/// F_{t_V}(M) = rad(t_V(M)).
PathModuleSum f_tv(const Algebra& a, const PathModuleSum& m, const SimpleSet& v);

/// Least i >= 0 with t_V(F_{t_V}^i(M)) = 0, by direct iteration.
int layer_length(const Algebra& a, const PathModuleSum& m, const SimpleSet& v);

/// Layer length of every pΛ in one bottom-up sweep over the path trie:
/// ll(p) = max over nonzero extensions pα of ll(pα), plus 1 when target(p)
/// lies outside V.
std::vector<int> layer_length_paths(const Algebra& a, const SimpleSet& v);

/// ℓℓ^{t_V}(Λ) = max over vertices of the layer length of P(i).
int layer_length_algebra(const Algebra& a, const SimpleSet& v);

/// σ(p): basis paths q with p·q = 0 and p·q' != 0 for every proper prefix q'.
/// The result is pairwise prefix-incomparable and Ω(pΛ) = ⊕_{q∈σ(p)} qΛ.
std::vector<PathId> min_annihilators(const Algebra& a, PathId p);

/// Exact projective/injective dimensions via the σ-graph: pd(pΛ) = 0 when
/// σ(p) = ∅, else 1 + max over σ(p); infinite exactly when p reaches a cycle.
/// Injective dimensions are projective dimensions over the opposite algebra.
/// Tables are built once in the constructor; reads are concurrency-safe.
class PathHom {
 public:
  explicit PathHom(const Algebra& a);
  explicit PathHom(Algebra&&) = delete;  // the engine keeps a reference

  const Algebra& algebra() const { return *alg_; }
  const Algebra& opposite_algebra() const { return op_; }

  const std::vector<PathId>& min_annihilators(PathId p) const { return sigma_[p]; }
  HomDim pd_path_module(PathId p) const { return pd_[p]; }
  HomDim pd_simple(int vertex) const;
  HomDim id_simple(int vertex) const;
  HomDim gldim() const;

  /// (S^{<∞}, S^{∞}, S_inj^{<∞})
  std::tuple<SimpleSet, SimpleSet, SimpleSet> simple_classes() const;

 private:
  const Algebra* alg_;
  Algebra op_;
  std::vector<std::vector<PathId>> sigma_;
  std::vector<HomDim> pd_;         // pd of pΛ over *alg_
  std::vector<HomDim> pd_simple_;  // per vertex
  std::vector<HomDim> id_simple_;
};

}  // namespace qha
