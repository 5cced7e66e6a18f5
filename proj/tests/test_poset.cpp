#include "doctest.h"
#include "oracles.hpp"
#include "spectra/poset.hpp"

using namespace spectra;

namespace {

SpecPoset chain2() { return poset_from_edges(2, {{0, 1}}); }
SpecPoset vee() { return poset_from_edges(3, {{0, 1}, {0, 2}}); }
SpecPoset lambda() { return poset_from_edges(3, {{0, 2}, {1, 2}}); }
SpecPoset antichain(int n) { return poset_from_edges(n, {}); }

}  // namespace

TEST_SUITE("spectral-poset") {

TEST_CASE("poset construction validates the axioms") {
  CHECK_THROWS_AS(poset_from_edges(2, {{0, 1}, {1, 0}}), ConstructionError);
  auto p = poset_from_edges(3, {{0, 1}, {1, 2}});
  CHECK(p.le(0, 2));  // transitive closure
}

TEST_CASE("enumeration counts match the raw relation scan") {
  CHECK(enumerate_posets(1).size() == 1);
  CHECK(enumerate_posets(2).size() == 2);
  CHECK(enumerate_posets(3).size() == 5);
  for (int k = 1; k <= 5; ++k)
    CHECK(static_cast<int>(enumerate_posets(k).size()) ==
          oracles::brute_force_poset_count(k));
  // Regression pin; the method is validated against the oracle through k=5.
  CHECK(enumerate_posets(6).size() == 318);
  CHECK_THROWS_AS(enumerate_posets(7), ConstructionError);
}

TEST_CASE("shape flags on the named shapes") {
  auto f_chain = shape_flags(chain2());
  CHECK(f_chain.mp_shape.value);
  CHECK(f_chain.gelfand_shape.value);
  CHECK(f_chain.purified_shape.value);
  CHECK(f_chain.clean_shape.value);
  CHECK(!f_chain.zero_dim_shape.value);

  auto f_lambda = shape_flags(lambda());
  CHECK(f_lambda.gelfand_shape.value);
  CHECK(!f_lambda.mp_shape.value);
  CHECK(!f_lambda.purified_shape.value);
  CHECK(f_lambda.clean_shape.value);

  auto f_vee = shape_flags(vee());
  CHECK(f_vee.mp_shape.value);
  CHECK(!f_vee.gelfand_shape.value);
  CHECK(f_vee.purified_shape.value);
  CHECK(!f_vee.clean_shape.value);

  auto f_anti = shape_flags(antichain(4));
  CHECK(f_anti.zero_dim_shape.value);
  CHECK(f_anti.mp_shape.value);
  CHECK(f_anti.gelfand_shape.value);
  CHECK(f_anti.purified_shape.value);
  CHECK(f_anti.clean_shape.value);
}

TEST_CASE("min retraction") {
  auto r_chain = min_retraction_poset(chain2());
  REQUIRE(!r_chain.refused);
  CHECK(r_chain.image == std::vector<int>{0, 0});

  auto r_vee = min_retraction_poset(vee());
  REQUIRE(!r_vee.refused);
  CHECK(r_vee.image == std::vector<int>{0, 0, 0});

  auto r_lambda = min_retraction_poset(lambda());
  CHECK(r_lambda.refused);
  CHECK(r_lambda.refusal_witness.find("2 minimal points") != std::string::npos);
}

TEST_CASE("max retraction") {
  auto r_chain = max_retraction_poset(chain2());
  REQUIRE(!r_chain.refused);
  CHECK(r_chain.image == std::vector<int>{1, 1});
  CHECK(r_chain.flat_continuous);
  CHECK(r_chain.zariski_continuous);

  auto r_lambda = max_retraction_poset(lambda());
  REQUIRE(!r_lambda.refused);
  CHECK(r_lambda.image == std::vector<int>{2, 2, 2});

  auto r_anti = max_retraction_poset(antichain(3));
  REQUIRE(!r_anti.refused);
  CHECK(r_anti.image == std::vector<int>{0, 1, 2});

  auto r_vee = max_retraction_poset(vee());
  CHECK(r_vee.refused);
}

TEST_CASE("order dual") {
  CHECK(canonical_key(prime_inverse(chain2())) == canonical_key(chain2()));
  CHECK(canonical_key(prime_inverse(vee())) == canonical_key(lambda()));
  CHECK(canonical_key(prime_inverse(antichain(3))) ==
        canonical_key(antichain(3)));
}

TEST_CASE("duality swaps the shape flags over every poset up to 5 points") {
  for (int k = 1; k <= 5; ++k)
    for (const auto& p : enumerate_posets(k)) {
      auto d = prime_inverse(p);
      auto fp = shape_flags(p);
      auto fd = shape_flags(d);
      CHECK(fp.gelfand_shape.value == fd.mp_shape.value);
      CHECK(fp.clean_shape.value == fd.purified_shape.value);
    }
}

TEST_CASE("clopens coincide with component unions") {
  for (const auto& p : enumerate_posets(4)) {
    TopologyView zar{&p, Topology::zariski}, flat{&p, Topology::flat};
    auto zc = zar.clopens();
    CHECK(zc == flat.clopens());
    CHECK(zc == component_unions(p));
  }
}

TEST_CASE("all flat-continuous retractions onto Min") {
  // On the V shape the only flat-continuous retraction is the min map.
  auto p = vee();
  uint32_t min_mask = 1;  // point 0
  int continuous = 0;
  for (const auto& g : all_retractions_onto_min(p))
    if (map_continuous(p, g, min_mask, Topology::flat)) ++continuous;
  CHECK(continuous == 1);
}

TEST_CASE("literal form") {
  CHECK(chain2().literal() == "poset{a<b}");
  CHECK(antichain(2).literal() == "poset{a, b}");
  auto chain3 = poset_from_edges(3, {{0, 1}, {1, 2}});
  CHECK(chain3.literal() == "poset{a<b, b<c}");  // covering edges only
}

}  // TEST_SUITE
