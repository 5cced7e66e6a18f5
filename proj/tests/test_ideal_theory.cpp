#include "doctest.h"
#include "oracles.hpp"
#include "spectra/ideal.hpp"

using namespace spectra;

namespace {

std::vector<int> members_of(const RingPtr& r, const std::vector<int>& gens) {
  return ideal_from_generators(r, gens).members;
}

}  // namespace

TEST_SUITE("ideal-theory") {

TEST_CASE("generator closure") {
  auto z12 = make_zmod(12);
  CHECK(members_of(z12, {4}) == std::vector<int>{0, 4, 8});
  CHECK(members_of(z12, {}) == std::vector<int>{0});
  CHECK(members_of(z12, {2, 3}).size() == 12);  // 3 - 2 = 1 generates
}

TEST_CASE("enumeration matches the divisor lattice of Z/n") {
  for (int n : {1, 2, 6, 12, 30, 36, 60}) {
    auto en = enumerate_ideals(make_zmod(n));
    CHECK(!en.truncated);
    CHECK(static_cast<int>(en.ideals.size()) == oracles::divisor_count(n));
  }
  CHECK(enumerate_ideals(make_gf(5)).ideals.size() == 2);
  auto z12 = enumerate_ideals(make_zmod(12));
  std::vector<size_t> sizes;
  for (const auto& ideal : z12.ideals) sizes.push_back(ideal.members.size());
  CHECK(sizes == std::vector<size_t>{1, 2, 3, 4, 6, 12});  // (0),(6),(4),(3),(2),(1)
}

TEST_CASE("enumeration matches the raw subset scan on small rings") {
  std::vector<RingPtr> corpus;
  for (int n = 1; n <= 16; ++n) corpus.push_back(make_zmod(n));
  corpus.push_back(make_product({make_zmod(2), make_zmod(2)}).ring);
  corpus.push_back(make_product({make_zmod(2), make_zmod(4)}).ring);
  corpus.push_back(make_product({make_zmod(2), make_zmod(2), make_zmod(2)}).ring);
  corpus.push_back(make_product({make_zmod(3), make_zmod(5)}).ring);
  for (const auto& r : corpus) {
    auto expected = oracles::subset_scan_ideals(*r);
    auto en = enumerate_ideals(r);
    std::set<std::vector<int>> got;
    for (const auto& ideal : en.ideals) {
      got.insert(ideal.members);
      REQUIRE(ideal.generators.has_value());
      CHECK(ideal_from_generators(r, *ideal.generators).members == ideal.members);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("Z/2 x Z/2 has exactly 4 ideals") {
  // The diagonal {(0,0),(1,1)} is an additive subgroup but not absorbing:
  // (1,0)*(1,1) = (1,0) falls outside. The subset-scan oracle agrees.
  auto r = make_product({make_zmod(2), make_zmod(2)}).ring;
  CHECK(oracles::subset_scan_ideals(*r).size() == 4);
  CHECK(enumerate_ideals(r).ideals.size() == 4);
}

TEST_CASE("max_count truncation flag") {
  auto en = enumerate_ideals(make_zmod(60), 3);
  CHECK(en.truncated);
}

TEST_CASE("radical") {
  auto z12 = make_zmod(12);
  CHECK(radical(ideal_from_generators(z12, {4})).members ==
        members_of(z12, {2}));
  auto z4 = make_zmod(4);
  CHECK(radical(zero_ideal(z4)).members == std::vector<int>{0, 2});
  // radical fixes maximal ideals
  CHECK(radical(ideal_from_generators(z12, {3})).members == members_of(z12, {3}));
  // radical laws over every ideal of a few rings
  for (int n : {8, 12, 18}) {
    auto r = make_zmod(n);
    for (const auto& ideal : enumerate_ideals(r).ideals) {
      auto rad = radical(ideal);
      CHECK(ideal_subset(ideal, rad));
      CHECK(radical(rad).members == rad.members);
    }
  }
}

TEST_CASE("annihilator") {
  auto z12 = make_zmod(12);
  CHECK(annihilator(z12, 6).members == std::vector<int>{0, 2, 4, 6, 8, 10});
  CHECK(annihilator(z12, 0).members.size() == 12);
  CHECK(annihilator(z12, 1).members == std::vector<int>{0});
}

TEST_CASE("purity") {
  auto z12 = make_zmod(12);
  CHECK(is_pure(ideal_from_generators(z12, {4})).pure);
  CHECK(is_pure(zero_ideal(z12)).pure);
  auto z4 = make_zmod(4);
  auto res = is_pure(ideal_from_generators(z4, {2}));
  CHECK(!res.pure);
  CHECK(res.failing == 2);
}

TEST_CASE("regular ideals") {
  auto z12 = make_zmod(12);
  CHECK(is_regular_ideal(ideal_from_generators(z12, {4})));
  CHECK(is_regular_ideal(zero_ideal(z12)));
  auto z4 = make_zmod(4);
  CHECK(!is_regular_ideal(ideal_from_generators(z4, {2})));
}

TEST_CASE("star sets") {
  auto z12 = make_zmod(12);
  StarSet s0 = star(zero_ideal(z12));
  CHECK(s0.members == std::vector<int>{0, 2, 3, 4, 6, 8, 9, 10});
  CHECK(!s0.is_ideal);  // 2 + 3 = 5 is missing

  StarSet s3 = star(ideal_from_generators(z12, {3}));
  CHECK(s3.members == members_of(z12, {3}));
  CHECK(s3.is_ideal);

  auto z4 = make_zmod(4);
  StarSet s = star(zero_ideal(z4));
  CHECK(s.members == std::vector<int>{0, 2});
  CHECK(s.is_ideal);  // local ring

  StarSet unit = star(ideal_from_generators(z12, {1}));
  CHECK(unit.members.empty());
  CHECK(!unit.is_ideal);
}

TEST_CASE("principal idempotent generators") {
  auto z12 = make_zmod(12);
  CHECK(principal_idempotent_generator(ideal_from_generators(z12, {4})) == 4);
  CHECK(principal_idempotent_generator(zero_ideal(z12)) == 0);
  auto z4 = make_zmod(4);
  CHECK(!principal_idempotent_generator(ideal_from_generators(z4, {2})));
}

TEST_CASE("quotients") {
  auto z12 = make_zmod(12);
  auto q = make_quotient(z12, ideal_from_generators(z12, {4}));
  CHECK(q.ring->size() == 4);
  CHECK(is_isomorphic(q.ring, make_zmod(4)).verdict == Verdict::yes);
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b)
      CHECK(q.to_coset[z12->add(a, b)] ==
            q.ring->add(q.to_coset[a], q.to_coset[b]));

  auto q0 = make_quotient(z12, zero_ideal(z12));
  CHECK(is_isomorphic(q0.ring, z12).verdict == Verdict::yes);
  auto q1 = make_quotient(z12, ideal_from_generators(z12, {1}));
  CHECK(q1.ring->size() == 1);

  auto other = make_zmod(6);
  CHECK_THROWS_AS(make_quotient(other, ideal_from_generators(z12, {4})),
                  ConstructionError);
}

TEST_CASE("ideal sum product intersect") {
  auto z12 = make_zmod(12);
  auto i4 = ideal_from_generators(z12, {4});
  auto i3 = ideal_from_generators(z12, {3});
  CHECK(ideal_sum(i4, i3).is_whole_ring());  // 4 - 3 = 1
  CHECK(ideal_intersect(i4, i3).members == std::vector<int>{0});
  CHECK(ideal_product(i4, i4).members == i4.members);  // 4 idempotent
  auto z4 = make_zmod(4);
  auto i2 = ideal_from_generators(z4, {2});
  CHECK(ideal_product(i2, i2).members == std::vector<int>{0});
}

}  // TEST_SUITE
