#include <doctest.h>

#include "qha/bounds.hpp"
#include "qha/error.hpp"
#include "support/fixtures.hpp"

using namespace qha;

TEST_CASE("pd_set / id_set") {
  Algebra a = fixtures::e41(10);
  PathHom h(a);
  CHECK(pd_set(h, SimpleSet::empty(a.num_vertices())) == HomDim::finite(-1));
  const SimpleSet v = fixtures::range_set(a, 3, 9);
  CHECK(pd_set(h, v) == HomDim::finite(1));
  CHECK(id_set(h, v) == HomDim::finite(1));
  CHECK(pd_set(h, SimpleSet::of(a.num_vertices(), {0})).is_infinite());
}

TEST_CASE("bound_db on the first family") {
  Algebra a = fixtures::e41(10);
  PathHom h(a);
  CHECK(bound_db(h, fixtures::range_set(a, 3, 9)) == HomDim::finite(7));
  CHECK(bound_db(h, SimpleSet::empty(a.num_vertices())) == HomDim::finite(8));  // LL - 1
  CHECK(bound_db(h, SimpleSet::all(a.num_vertices())).is_infinite());           // gldim infinite
}

TEST_CASE("bound_db recovers gldim on the second family") {
  Algebra a = fixtures::e42(9);
  PathHom h(a);
  CHECK(bound_db(h, SimpleSet::all(a.num_vertices())) == HomDim::finite(8));
  CHECK(bound_db(h, fixtures::range_set(a, 2, 9)) == HomDim::finite(7));
}

TEST_CASE("bound_dsg") {
  Algebra a = fixtures::e41(10);
  PathHom h(a);
  CHECK(bound_dsg(h, fixtures::range_set(a, 3, 9)) == 0);
  CHECK(bound_dsg(h, SimpleSet::empty(a.num_vertices())) == 7);  // max{0, LL-2}
  CHECK_THROWS_WITH_AS(bound_dsg(h, SimpleSet::of(a.num_vertices(), {0, 2})),
                       doctest::Contains("VNotInFinitePdClass"), Error);
}

TEST_CASE("corollary_dsg") {
  Algebra l2 = fixtures::l2();
  PathHom hl(l2);
  CHECK(corollary_dsg(hl) == 0);  // S^{<∞} = {} and LL = 2

  Algebra e42 = fixtures::e42(9);
  PathHom h42(e42);
  CHECK(corollary_dsg(h42) == 0);  // finite gldim forces layer length 0

  Algebra e41 = fixtures::e41(10);
  PathHom h41(e41);
  CHECK(corollary_dsg(h41) == bound_dsg(h41, std::get<0>(h41.simple_classes())));
}

TEST_CASE("classical bounds") {
  Algebra e41 = fixtures::e41(10);
  PathHom h41(e41);
  ClassicalBounds c41 = classical_bounds(h41);
  CHECK(c41.ll_minus_1 == 8);
  CHECK(c41.gldim.is_infinite());
  CHECK(c41.dsg == 7);

  Algebra e42 = fixtures::e42(9);
  PathHom h42(e42);
  ClassicalBounds c42 = classical_bounds(h42);
  CHECK(c42.ll_minus_1 == 8);
  CHECK(c42.gldim == HomDim::finite(8));
  CHECK(c42.dsg == 7);

  Algebra a2 = fixtures::a2();
  PathHom ha(a2);
  ClassicalBounds ca = classical_bounds(ha);
  CHECK(ca.ll_minus_1 == 1);
  CHECK(ca.gldim == HomDim::finite(1));
  CHECK(ca.dsg == 0);
}

TEST_CASE("bound_report carries n/a for illegal dsg sets") {
  Algebra a = fixtures::e41(10);
  PathHom h(a);
  BoundReport r = bound_report(h, SimpleSet::of(a.num_vertices(), {0}));
  CHECK(!r.dsg_bound.has_value());
  CHECK(r.db_bound.is_infinite());
  BoundReport good = bound_report(h, fixtures::range_set(a, 3, 9));
  REQUIRE(good.dsg_bound.has_value());
  CHECK(*good.dsg_bound == 0);
  CHECK(good.a == HomDim::finite(1));
  CHECK(good.c == HomDim::finite(1));
  CHECK(good.d == HomDim::finite(1));
  CHECK(good.n == 2);
}

TEST_CASE("optimizer finds the family bounds and is self-consistent") {
  Algebra e41 = fixtures::e41(10);
  PathHom h41(e41);
  OptimizeDb r41 = optimize_db(h41);
  CHECK(r41.best.is_finite());
  CHECK(r41.best.value() <= 7);
  CHECK(bound_db(h41, r41.best_v) == r41.best);
  CHECK(optimize_dsg(h41).best == 0);

  Algebra e42 = fixtures::e42(9);
  PathHom h42(e42);
  OptimizeDb r42 = optimize_db(h42);
  CHECK(r42.best.value() <= 7);
  CHECK(bound_db(h42, r42.best_v) == r42.best);
  CHECK(optimize_dsg(h42).best == 0);

  Algebra a2 = fixtures::a2();
  PathHom ha(a2);
  CHECK(optimize_db(ha).best.value() <= 1);  // classical gldim bound
}

TEST_CASE("optimizer value is a lower bound for every subset") {
  Algebra a = fixtures::n3();
  PathHom h(a);
  OptimizeDb best = optimize_db(h);
  for (int bits = 0; bits < 8; ++bits) {
    SimpleSet v(3);
    for (int i = 0; i < 3; ++i)
      if (bits >> i & 1) v.insert(i);
    CHECK(!(bound_db(h, v) < best.best));
  }
}

TEST_CASE("optimizer refuses oversized simple sets") {
  Algebra big = fixtures::e42(11);
  PathHom h(big);  // 21 vertices
  CHECK_THROWS_WITH_AS(optimize_db(h), doctest::Contains("TooManySimples"), Error);
  CHECK_THROWS_AS(optimize_dsg(h), Error);
}

TEST_CASE("db bounds are nonnegative on the corpus") {
  for (const Algebra& a : {fixtures::e41(10), fixtures::n3(), fixtures::l2(), fixtures::a2()}) {
    PathHom h(a);
    for (int bits = 0; bits < (1 << std::min(a.num_vertices(), 4)); ++bits) {
      SimpleSet v(a.num_vertices());
      for (int i = 0; i < std::min(a.num_vertices(), 4); ++i)
        if (bits >> i & 1) v.insert(i);
      const HomDim b = bound_db(h, v);
      if (b.is_finite()) CHECK(b.value() >= 0);
    }
  }
}

TEST_CASE("dsg bound at V = {} recovers the classical bound") {
  for (const Algebra& a : {fixtures::e41(10), fixtures::e42(9), fixtures::n3(), fixtures::l2()}) {
    PathHom h(a);
    CHECK(bound_dsg(h, SimpleSet::empty(a.num_vertices())) ==
          std::max(0, loewy_length(a) - 2));
  }
}
