#include <algorithm>

#include "doctest.h"
#include "spectra/decompose.hpp"

using namespace spectra;

namespace {

std::vector<std::string> sorted_canonical(const Decomposition& d) {
  std::vector<std::string> names = d.canonical_names;
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace

TEST_SUITE("decompose") {

TEST_CASE("local decomposition") {
  auto d = decompose_local(make_zmod(12));
  CHECK(sorted_canonical(d) == std::vector<std::string>{"Z/3", "Z/4"});

  auto g5 = decompose_local(make_gf(5));
  CHECK(g5.factors.size() == 1);
  CHECK(g5.canonical_names[0] == "Z/5");

  auto p22 = decompose_local(make_product({make_zmod(2), make_zmod(2)}).ring);
  CHECK(sorted_canonical(p22) == std::vector<std::string>{"Z/2", "Z/2"});
}

TEST_CASE("lessened quasi-prime decomposition") {
  auto d12 = decompose_lessened_quasi_prime(make_zmod(12));
  CHECK(sorted_canonical(d12) == std::vector<std::string>{"Z/3", "Z/4"});

  auto d4 = decompose_lessened_quasi_prime(make_zmod(4));
  CHECK(d4.factors.size() == 1);
  CHECK(d4.canonical_names[0] == "Z/4");

  auto d24 = decompose_lessened_quasi_prime(
      make_product({make_zmod(2), make_zmod(4)}).ring);
  CHECK(sorted_canonical(d24) == std::vector<std::string>{"Z/2", "Z/4"});
}

TEST_CASE("domains decomposition") {
  auto d6 = decompose_domains(make_zmod(6));
  REQUIRE(!d6.refused());
  CHECK(sorted_canonical(*d6.decomposition) ==
        std::vector<std::string>{"Z/2", "Z/3"});

  auto d4 = decompose_domains(make_zmod(4));
  REQUIRE(d4.refused());
  CHECK(d4.refusal->witness.find("2") != std::string::npos);
  CHECK(d4.refusal->witness.find("(2)") != std::string::npos);

  auto d7 = decompose_domains(make_gf(7));
  REQUIRE(!d7.refused());
  CHECK(d7.decomposition->factors.size() == 1);
}

TEST_CASE("fields decomposition") {
  auto d6 = decompose_fields(make_zmod(6));
  REQUIRE(!d6.refused());
  CHECK(sorted_canonical(*d6.decomposition) ==
        std::vector<std::string>{"Z/2", "Z/3"});

  auto d4 = decompose_fields(make_zmod(4));
  REQUIRE(d4.refused());
  CHECK(d4.refusal->witness.find("(2)") != std::string::npos);

  auto mixed = decompose_fields(make_product({make_zmod(2), make_gf(5)}).ring);
  REQUIRE(!mixed.refused());
  CHECK(sorted_canonical(*mixed.decomposition) ==
        std::vector<std::string>{"Z/2", "Z/5"});
}

TEST_CASE("round trips and kernel structure") {
  std::vector<RingPtr> corpus;
  for (int n = 1; n <= 16; ++n) corpus.push_back(make_zmod(n));
  corpus.push_back(make_product({make_zmod(4), make_zmod(9)}).ring);
  corpus.push_back(make_product({make_zmod(2), make_zmod(2), make_zmod(3)}).ring);
  for (const auto& r : corpus) {
    auto d = decompose_local(r);
    size_t maximal = 0;
    for (const auto& p : primes(r))
      if (p.is_maximal) ++maximal;
    CHECK(d.factors.size() == maximal);
    for (size_t a = 0; a < d.kernels.size(); ++a)
      for (size_t b = a + 1; b < d.kernels.size(); ++b)
        CHECK(ideal_sum(d.kernels[a], d.kernels[b]).is_whole_ring());
    if (d.factors.empty()) {
      CHECK(r->size() == 1);
    } else {
      auto prod = make_product(d.factors);
      CHECK(is_isomorphic(prod.ring, r).verdict == Verdict::yes);
    }
  }
}

TEST_CASE("canonical names cover prime powers only") {
  CHECK(canonical_name(make_zmod(8)) == "Z/8");
  CHECK(canonical_name(make_zmod(1)) == "Z/1");
  CHECK(!canonical_name(make_zmod(12)).has_value());  // 12 is not a prime power
  CHECK(!canonical_name(make_product({make_zmod(2), make_zmod(2)}).ring)
             .has_value());  // size 4 but not cyclic
}

}  // TEST_SUITE
