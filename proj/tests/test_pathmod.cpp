#include <doctest.h>

#include <algorithm>

#include "qha/error.hpp"
#include "qha/pathmod.hpp"
#include "support/fixtures.hpp"

using namespace qha;

namespace {

// brute-force σ(p): scan every basis path from target(p), test the product and
// the products of all proper prefixes directly through multiply()
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

std::vector<PathId> words(const Algebra& a, const std::vector<std::vector<std::string>>& ws) {
  std::vector<PathId> out;
  for (const auto& w : ws) out.push_back(fixtures::word(a, w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("min_annihilators on the fixtures") {
  Algebra n3 = fixtures::n3();
  CHECK(min_annihilators(n3, fixtures::word(n3, {"a"})) ==
        std::vector<PathId>{fixtures::word(n3, {"b"})});
  CHECK(min_annihilators(n3, fixtures::word(n3, {"b"})).empty());  // sink

  Algebra e = fixtures::e41(10);
  CHECK(min_annihilators(e, fixtures::word(e, {"a1"})) ==
        words(e, {{"a1"}, {"a2"}, {"a11"}, {"a12"}}));
}

TEST_CASE("min_annihilators agrees with brute force on the corpus") {
  for (const Algebra& a : {fixtures::e41(10), fixtures::e42(9), fixtures::n3(), fixtures::l2()})
    for (PathId p = 0; p < a.dim(); ++p) CHECK(min_annihilators(a, p) == brute_sigma(a, p));
}

TEST_CASE("pd of path modules") {
  Algebra n3 = fixtures::n3();
  PathHom h(n3);
  CHECK(h.pd_path_module(fixtures::word(n3, {"a"})) == HomDim::finite(1));
  CHECK(h.pd_path_module(fixtures::word(n3, {"b"})) == HomDim::finite(0));

  Algebra l2 = fixtures::l2();
  PathHom hl(l2);
  CHECK(hl.pd_path_module(fixtures::word(l2, {"x"})).is_infinite());

  Algebra e = fixtures::e41(10);
  PathHom he(e);
  CHECK(he.pd_path_module(fixtures::word(e, {"a2"})) == HomDim::finite(1));
}

TEST_CASE("pd/id tables reproduce the first family (m = 10)") {
  const int m = 10;
  Algebra a = fixtures::e41(m);
  PathHom h(a);
  for (int i = 1; i <= m + 2; ++i) {
    const HomDim pd = h.pd_simple(fixtures::vx(a, std::to_string(i)));
    const HomDim id = h.id_simple(fixtures::vx(a, std::to_string(i)));
    if (i == 1)
      CHECK(pd.is_infinite());
    else if (i <= m - 1)
      CHECK(pd == HomDim::finite(1));
    else
      CHECK(pd == HomDim::finite(0));
    if (i == 1 || i == 2 || i >= m)
      CHECK(id.is_infinite());
    else
      CHECK(id == HomDim::finite(1));
  }
}

TEST_CASE("pd/id tables reproduce the second family (m = 9)") {
  const int m = 9;
  Algebra a = fixtures::e42(m);
  PathHom h(a);
  CHECK(h.pd_simple(fixtures::vx(a, "1")) == HomDim::finite(m - 1));
  CHECK(h.pd_simple(fixtures::vx(a, std::to_string(m + 1))) == HomDim::finite(m - 2));
  CHECK(h.id_simple(fixtures::vx(a, "1")) == HomDim::finite(0));
  CHECK(h.id_simple(fixtures::vx(a, std::to_string(m + 1))) == HomDim::finite(1));
  CHECK(h.id_simple(fixtures::vx(a, std::to_string(2 * m - 1))) == HomDim::finite(m - 1));
}

TEST_CASE("pd/id of the short fixtures") {
  Algebra an3 = fixtures::n3();
  PathHom n3(an3);
  CHECK(n3.pd_simple(0) == HomDim::finite(2));
  CHECK(n3.pd_simple(1) == HomDim::finite(1));
  CHECK(n3.pd_simple(2) == HomDim::finite(0));
  CHECK(n3.id_simple(0) == HomDim::finite(0));

  Algebra aa2 = fixtures::a2();
  PathHom a2(aa2);
  CHECK(a2.id_simple(0) == HomDim::finite(0));  // S(1) is injective here
}

TEST_CASE("simple_classes") {
  Algebra a41 = fixtures::e41(10);
  PathHom he(a41);
  const auto [fin41, inf41, fin_inj41] = he.simple_classes();
  CHECK(inf41.vertices() == std::vector<int>{0});
  CHECK(fin41.size() == 11);
  CHECK(fin_inj41.size() == 7);

  Algebra a42 = fixtures::e42(9);
  PathHom h42(a42);
  CHECK(std::get<0>(h42.simple_classes()).size() == 17);  // S^{<∞} = S

  Algebra al2 = fixtures::l2();
  PathHom hl(al2);
  CHECK(std::get<0>(hl.simple_classes()).size() == 0);
}

TEST_CASE("torsion_radical on path modules") {
  const int m = 10;
  Algebra a = fixtures::e41(m);
  const SimpleSet v = fixtures::range_set(a, 3, m - 1);
  const PathModuleSum p1 = projective_module(a, 0);
  CHECK(torsion_radical(a, p1, v) == p1);  // top P(1) = S(1) with 1 outside V

  // generators ending outside V are fixed
  PathModuleSum mixed = PathModuleSum::of({fixtures::word(a, {"a2"}), a.trivial[m]});
  CHECK(torsion_radical(a, mixed, SimpleSet::empty(a.num_vertices())) == mixed);

  Algebra n3 = fixtures::n3();
  const SimpleSet v3 = SimpleSet::of(3, {2});
  CHECK(torsion_radical(n3, PathModuleSum{{fixtures::word(n3, {"b"})}}, v3).is_zero());
}

TEST_CASE("f_tv on path modules") {
  const int m = 10;
  Algebra a = fixtures::e41(m);
  const SimpleSet v = fixtures::range_set(a, 3, m - 1);
  // rad P(1) = S(1) ⊕ S(m+1) ⊕ S(m+2) ⊕ (uniserial 2..m-1)
  CHECK(f_tv(a, projective_module(a, 0), v) ==
        PathModuleSum::of({fixtures::word(a, {"a1"}), fixtures::word(a, {"a2"}),
                           fixtures::word(a, {"a11"}), fixtures::word(a, {"a12"})}));
  CHECK(f_tv(a, PathModuleSum::zero(), v).is_zero());

  Algebra n3 = fixtures::n3();
  CHECK(f_tv(n3, projective_module(n3, 1), SimpleSet::of(3, {2})) ==
        PathModuleSum{{fixtures::word(n3, {"b"})}});
}

TEST_CASE("layer lengths of the first family") {
  const int m = 10;
  Algebra a = fixtures::e41(m);
  const SimpleSet v = fixtures::range_set(a, 3, m - 1);
  CHECK(layer_length(a, projective_module(a, 0), v) == 2);
  CHECK(layer_length(a, projective_module(a, 1), v) == 2);
  for (int i = 3; i <= m + 2; ++i)
    CHECK(layer_length(a, projective_module(a, fixtures::vx(a, std::to_string(i))), v) == 1);
  CHECK(layer_length_algebra(a, v) == 2);
}

TEST_CASE("layer length at V = {} is the Loewy length") {
  for (const Algebra& a : {fixtures::e41(10), fixtures::e42(9), fixtures::n3(), fixtures::l2()}) {
    const SimpleSet empty = SimpleSet::empty(a.num_vertices());
    CHECK(layer_length_algebra(a, empty) == loewy_length(a));
    for (int i = 0; i < a.num_vertices(); ++i) {
      const PathModuleSum p = projective_module(a, i);
      CHECK(layer_length(a, p, empty) == loewy_length(a, p));
    }
  }
}

TEST_CASE("layer lengths of the second family") {
  Algebra a = fixtures::e42(9);
  CHECK(layer_length_algebra(a, fixtures::range_set(a, 2, 9)) == 2);
}

TEST_CASE("layer length on the composite-zero chain") {
  Algebra n3 = fixtures::n3();
  CHECK(layer_length(n3, projective_module(n3, 0), SimpleSet::of(3, {2})) == 2);
}

TEST_CASE("composition factors") {
  Algebra n3 = fixtures::n3();
  CHECK(composition_factors(n3, projective_module(n3, 0)) == std::vector<int>{1, 1, 0});

  Algebra l2 = fixtures::l2();
  CHECK(composition_factors(l2, projective_module(l2, 0)) == std::vector<int>{2});

  Algebra e = fixtures::e41(10);
  auto factors = composition_factors(e, projective_module(e, fixtures::vx(e, "11")));
  CHECK(factors[fixtures::vx(e, "11")] == 1);
  int total = 0;
  for (int c : factors) total += c;
  CHECK(total == 1);  // P(m+1) is simple
}

TEST_CASE("torsion vanishing matches composition factors") {
  // t_V(M) = 0 iff every factor lies in V; t_V(M) = M iff every generator
  // target lies outside V
  for (const Algebra& a : {fixtures::e41(10), fixtures::n3()}) {
    for (int i = 0; i < a.num_vertices(); ++i) {
      const PathModuleSum p = projective_module(a, i);
      const auto factors = composition_factors(a, p);
      SimpleSet support(a.num_vertices());
      for (int v = 0; v < a.num_vertices(); ++v)
        if (factors[v] > 0) support.insert(v);
      CHECK(torsion_radical(a, p, support).is_zero());
      CHECK(torsion_radical(a, p, SimpleSet::empty(a.num_vertices())) == p);
    }
  }
}

TEST_CASE("layer-length shift identity on path modules") {
  Algebra a = fixtures::e41(10);
  const SimpleSet v = fixtures::range_set(a, 3, 9);
  for (int i = 0; i < a.num_vertices(); ++i) {
    PathModuleSum x = projective_module(a, i);
    const int ll = layer_length(a, x, v);
    for (int j = 0; j <= ll; ++j) {
      CHECK(layer_length(a, x, v) == ll - j);
      if (j < ll) x = f_tv(a, x, v);
    }
  }
}

TEST_CASE("finite-pd layer length is 0/never-1 and detects finite gldim") {
  for (const Algebra& a : {fixtures::e41(10), fixtures::e42(9), fixtures::n3(), fixtures::l2(),
                           fixtures::a2()}) {
    PathHom h(a);
    const int n = layer_length_algebra(a, std::get<0>(h.simple_classes()));
    CHECK(n != 1);
    CHECK((n == 0) == h.gldim().is_finite());
  }
}

TEST_CASE("sweep layer lengths agree with the iterative definition") {
  for (const Algebra& a : {fixtures::e41(10), fixtures::e42(9), fixtures::n3(), fixtures::l2()}) {
    for (int bits = 0; bits < (1 << std::min(a.num_vertices(), 5)); ++bits) {
      SimpleSet v(a.num_vertices());
      for (int i = 0; i < std::min(a.num_vertices(), 5); ++i)
        if (bits >> i & 1) v.insert(i);
      const auto sweep = layer_length_paths(a, v);
      for (int i = 0; i < a.num_vertices(); ++i)
        CHECK(sweep[a.trivial[i]] == layer_length(a, projective_module(a, i), v));
    }
  }
}
