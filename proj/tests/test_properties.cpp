#include <doctest.h>

#include <algorithm>

#include "qha/check.hpp"
#include "support/fixtures.hpp"

using namespace qha;

namespace {

std::vector<PathId> brute_sigma(const Algebra& a, PathId p) {
  std::vector<PathId> out;
  for (PathId q : paths_from(a, a.path(p).target)) {
    if (multiply(a, p, q).has_value()) continue;
    bool minimal = true;
    for (PathId pre = a.path(q).prefix; pre >= 0; pre = a.path(pre).prefix)
      if (!multiply(a, p, pre).has_value()) minimal = false;
    if (minimal) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("full invariant suite passes on the corpus") {
  for (const Algebra& a : {fixtures::e41(10), fixtures::e42(9), fixtures::n3(), fixtures::l2(),
                           fixtures::a2()}) {
    CheckReport r = run_checks(a, {11, 12, false});
    for (const auto& i : r.issues) MESSAGE(i.property, ": ", i.detail);
    CHECK(r.ok());
  }
}

TEST_CASE("full invariant suite passes on fuzzed algebras") {
  fuzz::Rng rng(2024);
  for (int i = 0; i < 40; ++i) {
    Algebra a = fuzz::random_finite_algebra(rng);
    CheckReport r = run_checks(a, {rng.next(), 6, false});
    for (const auto& iss : r.issues) MESSAGE(iss.property, ": ", iss.detail);
    CHECK(r.ok());
  }
}

TEST_CASE("corrupt hook is detected by the suite") {
  CheckReport r = run_checks(fixtures::n3(), {1, 2, true});
  CHECK(!r.ok());
}

TEST_CASE("semisimple and single-vertex edge algebras") {
  Algebra semis = build(parse("vertices 1 2 3\n"));
  CHECK(semis.dim() == 3);
  CHECK(loewy_length(semis) == 1);
  CHECK(run_checks(semis, {3, 8, false}).ok());
  {
    PathHom h(semis);
    CHECK(h.gldim() == HomDim::finite(0));
    CHECK(layer_length_algebra(semis, SimpleSet::all(3)) == 0);
    CHECK(layer_length_algebra(semis, SimpleSet::empty(3)) == 1);
  }

  Algebra point = build(parse("vertices 1\n"));
  CHECK(point.dim() == 1);
  CHECK(run_checks(point, {4, 4, false}).ok());
}

TEST_CASE("sigma agrees with brute force on fuzzed algebras") {
  fuzz::Rng rng(55);
  for (int i = 0; i < 25; ++i) {
    Algebra a = fuzz::random_finite_algebra(rng);
    for (PathId p = 0; p < a.dim(); ++p) CHECK(min_annihilators(a, p) == brute_sigma(a, p));
  }
}

TEST_CASE("path-module dimensions agree with the linear engine") {
  fuzz::Rng rng(77);
  for (int i = 0; i < 20; ++i) {
    Algebra a = fuzz::random_finite_algebra(rng);
    for (int k = 0; k < 5; ++k) {
      PathModuleSum m = fuzz::random_path_sum(rng, a);
      Rep r = rep_of_path_sum(a, m);
      CHECK(dim(a, m) == static_cast<std::size_t>(r.total_dim()));
      CHECK(loewy_length(a, m) == loewy_length(r));
      SimpleSet v = fuzz::random_simple_set(rng, a.num_vertices());
      CHECK(dim(a, torsion_radical(a, m, v)) ==
            static_cast<std::size_t>(torsion_radical(r, v).rep.total_dim()));
      CHECK(layer_length(a, m, v) == layer_length(r, v));
      auto pf = composition_factors(a, m);
      CHECK(pf == composition_factors(r));
    }
  }
}

TEST_CASE("pd of path modules agrees with bounded resolutions") {
  fuzz::Rng rng(99);
  for (int i = 0; i < 15; ++i) {
    Algebra a = fuzz::random_finite_algebra(rng);
    PathHom h(a);
    for (int k = 0; k < 4; ++k) {
      const PathId p = rng.below(a.dim());
      const PdBound oracle = pd_bounded(rep_of_path_module(a, p), 2 * a.dim());
      const HomDim claimed = h.pd_path_module(p);
      if (oracle.decided) {
        CHECK(claimed.is_finite());
        CHECK(claimed.value() == oracle.value);
      } else {
        CHECK((claimed.is_infinite() || claimed.value() >= oracle.value));
      }
    }
  }
}

TEST_CASE("print/parse round-trip on fuzzed presentations") {
  fuzz::Rng rng(123);
  for (int i = 0; i < 50; ++i) {
    Presentation p = fuzz::random_presentation(rng);
    if (p.quiver.num_vertices() == 0) continue;
    CHECK(parse(print(p)) == p);
  }
}
