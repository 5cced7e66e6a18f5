#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spectra/table_ring.hpp"

using namespace spectra;

TEST_SUITE("ring-core") {

TEST_CASE("zmod basics") {
  auto z1 = make_zmod(1);
  CHECK(z1->size() == 1);
  CHECK(z1->zero() == z1->one());

  auto z4 = make_zmod(4);
  CHECK(z4->mul(2, 2) == 0);
  CHECK(z4->label() == "Z/4");

  auto z12 = make_zmod(12);
  CHECK(units(*z12).units == oracles::zmod_units(12));
  CHECK(units(*z12).units == std::vector<int>{1, 5, 7, 11});
}

TEST_CASE("gf constructor") {
  auto g5 = make_gf(5);
  CHECK(g5->label() == "GF(5)");
  CHECK(units(*g5).units == std::vector<int>{1, 2, 3, 4});
  CHECK_THROWS_AS(make_gf(4), ConstructionError);
  CHECK_THROWS_AS(make_gf(1), ConstructionError);
}

TEST_CASE("size cap reported before construction") {
  CHECK_THROWS_WITH_AS(make_zmod(5000),
                       doctest::Contains("size cap"), ConstructionError);
  int old = ring_size_cap();
  set_ring_size_cap(10);
  CHECK_THROWS_AS(make_zmod(11), ConstructionError);
  CHECK_THROWS_AS(make_product({make_zmod(4), make_zmod(3)}), ConstructionError);
  set_ring_size_cap(old);
}

TEST_CASE("products") {
  auto trivial_factor = make_product({make_zmod(1), make_zmod(7)});
  CHECK(is_isomorphic(trivial_factor.ring, make_zmod(7)).verdict == Verdict::yes);

  auto p43 = make_product({make_zmod(4), make_zmod(3)});
  CHECK(p43.ring->size() == 12);
  CHECK(p43.ring->label() == "Z/4 x Z/3");
  CHECK(oracles::crt_map_is_isomorphism(*make_zmod(12), p43, 4, 3));

  auto p22 = make_product({make_zmod(2), make_zmod(2)});
  CHECK(idempotents(*p22.ring).size() == 4);
}

TEST_CASE("product projections recompose") {
  auto prod = make_product({make_zmod(4), make_zmod(3), make_zmod(2)});
  for (int x = 0; x < prod.ring->size(); ++x) {
    std::vector<int> comps;
    for (int k = 0; k < 3; ++k) comps.push_back(prod.project(k, x));
    CHECK(prod.compose(comps) == x);
  }
}

TEST_CASE("idempotent scans") {
  CHECK(idempotents(*make_zmod(4)) == std::vector<int>{0, 1});
  CHECK(idempotents(*make_zmod(12)) == std::vector<int>{0, 1, 4, 9});
}

TEST_CASE("units of the zero ring") {
  auto z1 = make_zmod(1);
  CHECK(units(*z1).units == std::vector<int>{0});
}

TEST_CASE("units form a group") {
  std::vector<RingPtr> corpus;
  for (int n = 1; n <= 24; ++n) corpus.push_back(make_zmod(n));
  corpus.push_back(make_product({make_zmod(4), make_zmod(9)}).ring);
  for (const auto& r : corpus) {
    UnitGroup g = units(*r);
    for (int u : g.units) {
      CHECK(g.inverse[u] >= 0);
      CHECK(r->mul(u, g.inverse[u]) == r->one());
      for (int v : g.units) {
        int w = r->mul(u, v);
        CHECK(g.inverse[w] >= 0);  // closure
      }
    }
  }
}

TEST_CASE("table validation rejects corrupted tables") {
  auto z12 = make_zmod(12);
  const int n = 12;
  std::vector<int> add(n * n), mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = z12->add(a, b);
      mul[a * n + b] = z12->mul(a, b);
    }

  SUBCASE("broken additive identity") {
    auto bad = add;
    bad[0 * n + 5] = 6;
    CHECK_THROWS_AS(TableRing::make(bad, mul, 0, 1, "bad"), ConstructionError);
  }
  SUBCASE("broken multiplicative identity") {
    auto bad = mul;
    bad[1 * n + 7] = 8;
    CHECK_THROWS_AS(TableRing::make(add, bad, 0, 1, "bad"), ConstructionError);
  }
  SUBCASE("broken commutativity") {
    auto bad = mul;
    bad[2 * n + 3] = (bad[2 * n + 3] + 1) % n;
    CHECK_THROWS_AS(TableRing::make(add, bad, 0, 1, "bad"), ConstructionError);
  }
  SUBCASE("fuzzed identity-row corruption") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
      auto bad = mul;
      int col = static_cast<int>(rng() % n);
      bad[1 * n + col] = (bad[1 * n + col] + 1 + rng() % (n - 1)) % n;
      CHECK_THROWS_AS(TableRing::make(add, bad, 0, 1, "bad"), ConstructionError);
    }
  }
}

TEST_CASE("cross-ring element arithmetic is a hard error") {
  auto a = make_zmod(6);
  auto b = make_zmod(6);  // equal tables, distinct ring identity
  Elem x{a, 2}, y{b, 3}, z{a, 3};
  CHECK((x + z).index == 5);
  CHECK_THROWS_AS(x + y, ConstructionError);
  CHECK_THROWS_AS(x * y, ConstructionError);
}

TEST_CASE("isomorphism search") {
  SUBCASE("Z/12 vs Z/4 x Z/3") {
    auto res = is_isomorphic(make_zmod(12), make_product({make_zmod(4), make_zmod(3)}).ring);
    REQUIRE(res.verdict == Verdict::yes);
    REQUIRE(res.witness.has_value());
  }
  SUBCASE("Z/4 vs Z/2 x Z/2 differ in idempotent count") {
    auto res = is_isomorphic(make_zmod(4), make_product({make_zmod(2), make_zmod(2)}).ring);
    CHECK(res.verdict == Verdict::no);
  }
  SUBCASE("identity witness on equal rings") {
    auto r = make_zmod(9);
    auto res = is_isomorphic(r, r);
    REQUIRE(res.verdict == Verdict::yes);
    std::vector<int> id(9);
    for (int i = 0; i < 9; ++i) id[i] = i;
    CHECK(*res.witness == id);
  }
  SUBCASE("exhausted budget is inconclusive, not false") {
    auto res = is_isomorphic(make_zmod(12),
                             make_product({make_zmod(4), make_zmod(3)}).ring, 0);
    CHECK(res.verdict == Verdict::unknown);
  }
  SUBCASE("non-isomorphic same-size rings") {
    CHECK(is_isomorphic(make_zmod(9), make_product({make_zmod(3), make_zmod(3)}).ring)
              .verdict == Verdict::no);
  }
}

}  // TEST_SUITE
