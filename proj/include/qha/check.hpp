#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qha/fuzz.hpp"
#include "qha/linrep.hpp"
#include "qha/pathmod.hpp"

namespace qha {

/// Individual cross-engine / invariant checks. Each returns a description of
/// the violation, or nullopt when the property holds. Shared by `qha check`
/// and the test suites.
namespace checks {

using Failure = std::optional<std::string>;

/// σ(p) pairwise prefix-incomparable and dim pΛ + Σ dim qΛ = dim P(target p),
/// for every basis path.
Failure sigma_contract(const PathHom& h);

/// Basis bookkeeping: subword closure, Σ|paths_from| = Σ|paths_to| = dim Λ,
/// LL(Λ) = LL(Λ^op), and the linear engine agreeing on dim Λ and LL via the
/// regular and coregular representations.
Failure dims_and_loewy(const PathHom& h);

/// pd/id of every simple against the linear engine's bounded-resolution
/// computation (exact agreement whenever the latter decides Finite).
/// `corrupt` deliberately misreports one value; used to verify the harness
/// flags violations.
Failure pd_cross_engine(const PathHom& h, bool corrupt = false);

/// Sweep vs. iterative layer length on every P(i), and both against the
/// linear engine on Λ and D(Λ) (which must also agree with each other).
Failure layer_cross_engine(const PathHom& h, const Rep& regular, const Rep& coregular,
                           const SimpleSet& v);

/// ℓℓ^{t_V}(Λ) at V = S^{<∞} is never 1 and vanishes iff gldim is finite.
Failure finite_pd_layer_special(const PathHom& h);

/// bound_db(∅) = LL-1; when gldim is finite, bound_db(S) = gldim and
/// ℓℓ^{t_S}(Λ) = 0.
Failure classical_recovery(const PathHom& h);

/// Torsion-pair axioms on a module: t_V(M) = M iff top M avoids V;
/// t_V(M) = 0 iff all factors lie in V; M/t_V(M) ∈ F(V); dim additivity;
/// the layer-length shift identity for 0 <= j <= ℓℓ(M); ℓℓ(M) <= ℓℓ(Λ).
Failure torsion_axioms(const PathHom& h, const Rep& m, const SimpleSet& v);

/// For V ⊆ S^{<∞} and ℓℓ(M) > 0: ℓℓ^{t_V}(Ω¹(t_V(M))) <= ℓℓ^{t_V}(Λ) - 1.
Failure syzygy_drop(const PathHom& h, const Rep& m, const SimpleSet& v);

/// t_V preserves monos and epis (per-vertex rank check on the induced map).
Failure torsion_functor_exact(const RepMorphism& f, const SimpleSet& v);

/// Membership in F(V) is closed under submodules, quotients and (split)
/// extensions, tested through a random submodule of M/t_V(M).
Failure fv_closure(fuzz::Rng& rng, const Rep& m, const SimpleSet& v);

}  // namespace checks

struct CheckOptions {
  std::uint64_t seed = 1;
  int cases = 50;
  bool corrupt = false;  // test-only hook: inject a wrong value, expect exit 3
};

struct CheckIssue {
  std::string property;
  std::string detail;
};

struct CheckReport {
  int checked = 0;
  std::vector<CheckIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Runs the full invariant suite on one algebra plus `cases` fuzzed modules,
/// subsets and morphisms derived from the seed.
CheckReport run_checks(const Algebra& a, const CheckOptions& opt);

}  // namespace qha
