#pragma once

#include <optional>

#include "qha/homdim.hpp"
#include "qha/pathmod.hpp"

namespace qha {

/// pd V = max over members, -1 for V = ∅, infinite if any member is.
HomDim pd_set(const PathHom& h, const SimpleSet& v);
HomDim id_set(const PathHom& h, const SimpleSet& v);

/// (d+2)(n+1)-2 with d = min{pd V, id V} and n = ℓℓ^{t_V}(Λ); Infinite when
/// d is infinite.
HomDim bound_db(const PathHom& h, const SimpleSet& v);

/// max{0, ℓℓ^{t_V}(Λ) - 2}; requires V ⊆ S^{<∞} (VNotInFinitePdClass).
int bound_dsg(const PathHom& h, const SimpleSet& v);

/// bound_dsg at V = S^{<∞}.
int corollary_dsg(const PathHom& h);

struct ClassicalBounds {
  int ll_minus_1;  // LL(Λ) - 1
  HomDim gldim;    // pd of the full set of simples
  int dsg;         // max{0, LL(Λ) - 2}
};
ClassicalBounds classical_bounds(const PathHom& h);

struct BoundReport {
  SimpleSet v;
  HomDim a;  // pd V
  HomDim c;  // id V
  HomDim d;  // min{a, c}
  int n;     // ℓℓ^{t_V}(Λ)
  HomDim db_bound;
  std::optional<int> dsg_bound;  // nullopt when V ⊄ S^{<∞}
  ClassicalBounds classical;
};
BoundReport bound_report(const PathHom& h, const SimpleSet& v);

struct OptimizeDb {
  SimpleSet best_v;
  HomDim best;
};
struct OptimizeDsg {
  SimpleSet best_v;
  int best;
};

/// Exact minimum of bound_db over all 2^|S| subsets (no pruning); ties broken
/// by the lexicographically smallest V. Throws TooManySimples past max_simples.
OptimizeDb optimize_db(const PathHom& h, int max_simples = 20);
/// Same over subsets of S^{<∞} for the singularity bound.
OptimizeDsg optimize_dsg(const PathHom& h, int max_simples = 20);

}  // namespace qha
