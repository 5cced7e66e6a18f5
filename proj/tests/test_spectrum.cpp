#include <map>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "spectra/decompose.hpp"

using namespace spectra;

namespace {

std::vector<std::vector<int>> prime_member_sets(const RingPtr& r) {
  std::vector<std::vector<int>> out;
  for (const auto& p : primes(r)) out.push_back(p.underlying.members);
  return out;
}

const PrimeIdeal& prime_at(const std::vector<PrimeIdeal>& ps, int generator) {
  for (const auto& p : ps)
    if (p.underlying.contains(generator) && !p.underlying.contains(1)) {
      bool smallest = true;
      for (const auto& q : ps)
        if (&q != &p && q.underlying.contains(generator) &&
            q.underlying.size() < p.underlying.size())
          smallest = false;
      if (smallest) return p;
    }
  throw std::runtime_error("prime not found");
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("primes of Z/12, GF(5), and a product") {
  auto z12 = make_zmod(12);
  auto ps = prime_member_sets(z12);
  REQUIRE(ps.size() == 2);
  CHECK(ps[0] == std::vector<int>{0, 3, 6, 9});
  CHECK(ps[1] == std::vector<int>{0, 2, 4, 6, 8, 10});

  CHECK(prime_member_sets(make_gf(5)) ==
        std::vector<std::vector<int>>{{0}});

  // Primes of Z/4 x Z/3 are exactly the two factor preimages.
  auto prod = make_product({make_zmod(4), make_zmod(3)});
  auto prod_primes = prime_member_sets(prod.ring);
  REQUIRE(prod_primes.size() == 2);
  std::vector<int> pre_2, pre_0;
  for (int x = 0; x < 12; ++x) {
    if (prod.project(0, x) % 2 == 0) pre_2.push_back(x);  // (2) in Z/4
    if (prod.project(1, x) == 0) pre_0.push_back(x);      // (0) in Z/3
  }
  CHECK((prod_primes[0] == pre_2 || prod_primes[0] == pre_0));
  CHECK((prod_primes[1] == pre_2 || prod_primes[1] == pre_0));
  CHECK(prod_primes[0] != prod_primes[1]);

  // Zero ring has no primes; fields have exactly (0).
  CHECK(primes(make_zmod(1)).empty());
}

TEST_CASE("every prime of a finite ring is minimal and maximal") {
  for (int n : {2, 4, 12, 30}) {
    for (const auto& p : primes(make_zmod(n))) {
      CHECK(p.is_minimal);
      CHECK(p.is_maximal);
    }
  }
}

TEST_CASE("localization kernels") {
  auto z12 = make_zmod(12);
  auto ps = primes(z12);
  auto kd2 = kernel_of_localization(prime_at(ps, 2));
  CHECK(kd2.kernel.members == std::vector<int>{0, 4, 8});
  CHECK(kd2.kernel_radical.members == prime_at(ps, 2).underlying.members);
  auto kd3 = kernel_of_localization(prime_at(ps, 3));
  CHECK(kd3.kernel.members == std::vector<int>{0, 3, 6, 9});

  auto z4 = make_zmod(4);
  auto kd = kernel_of_localization(primes(z4)[0]);
  CHECK(kd.kernel.members == std::vector<int>{0});
  CHECK(kd.kernel_radical.members == std::vector<int>{0, 2});
}

TEST_CASE("kernel matches the hand-built localization of Z/12 at (2)") {
  // Inverting everything odd sends Z/12 onto Z/4 by n -> n mod 4 (3 becomes
  // a unit); the kernel of that map is {0,4,8}. The single-witness scan must
  // reproduce it exactly, with no nilpotency relaxation.
  auto z12 = make_zmod(12);
  auto kd = kernel_of_localization(prime_at(primes(z12), 2));
  std::vector<int> hand;
  for (int n = 0; n < 12; ++n)
    if (n % 4 == 0) hand.push_back(n);
  CHECK(kd.kernel.members == hand);
}

TEST_CASE("localize") {
  auto z12 = make_zmod(12);
  auto ps = primes(z12);
  CHECK(is_isomorphic(localize(prime_at(ps, 2)).ring, make_zmod(4)).verdict ==
        Verdict::yes);
  CHECK(is_isomorphic(localize(prime_at(ps, 3)).ring, make_zmod(3)).verdict ==
        Verdict::yes);
  auto g5 = make_gf(5);
  CHECK(is_isomorphic(localize(primes(g5)[0]).ring, g5).verdict == Verdict::yes);
}

TEST_CASE("lessened radical") {
  auto z4 = make_zmod(4);
  auto lr = lessened_radical(z4);
  CHECK(lr.nprime.is_zero());
  CHECK(lr.nilradical.members == std::vector<int>{0, 2});

  for (int n = 1; n <= 30; ++n)
    CHECK(lessened_radical(make_zmod(n)).nprime.is_zero());

  CHECK(lessened_radical(make_zmod(12)).nprime.is_zero());
}

TEST_CASE("classify Z/12") {
  auto rep = classify(make_zmod(12));
  CHECK(rep.zero_dimensional.value);
  CHECK(rep.mp.value);
  CHECK(rep.gelfand.value);
  CHECK(rep.clean.value);
  CHECK(rep.lessened.value);
  CHECK(rep.locally_lessened.value);
  CHECK(rep.purified.value);
  CHECK(!rep.reduced.value);
  CHECK(!rep.quasi_prime.value);
  CHECK(!rep.local.value);
  CHECK(!rep.field.value);
  // 0 = 11 + 1 is the first clean split of zero.
  CHECK(rep.clean_pairs[0] == std::pair<int, int>{11, 1});
  // 4 separates (2) from (3); 9 separates (3) from (2).
  REQUIRE(rep.purified_separators.size() == 2);
}

TEST_CASE("classify GF(5), Z/4, and the zero ring") {
  auto rep5 = classify(make_gf(5));
  CHECK(rep5.field.value);
  CHECK(rep5.reduced.value);
  CHECK(rep5.local.value);
  CHECK(rep5.quasi_prime.value);
  CHECK(rep5.clean.value);

  auto rep4 = classify(make_zmod(4));
  CHECK(rep4.local.value);
  CHECK(rep4.quasi_prime.value);
  CHECK(rep4.lessened.value);
  CHECK(!rep4.reduced.value);
  CHECK(!rep4.field.value);

  auto rep1 = classify(make_zmod(1));
  CHECK(rep1.zero_dimensional.value);
  CHECK(rep1.lessened.value);
  CHECK(rep1.clean.value);
  CHECK(rep1.reduced.value);
  CHECK(!rep1.local.value);
  CHECK(!rep1.field.value);
  CHECK(!rep1.quasi_prime.value);
}

TEST_CASE("criteria batteries agree and hold") {
  std::vector<RingPtr> corpus;
  for (int n = 1; n <= 20; ++n) corpus.push_back(make_zmod(n));
  corpus.push_back(make_product({make_zmod(4), make_zmod(6)}).ring);
  for (const auto& r : corpus) {
    auto zc = zero_dim_criteria(r);
    CHECK(zc.all_primes_maximal);
    CHECK(zc.pi_regular);
    CHECK(zc.localizations_local);
    CHECK(zc.unique_pure_radical_per_maximal);
    auto mc = mp_criteria(r);
    CHECK(mc.agree());
    CHECK(mc.all());
    auto gc = gelfand_criteria(r);
    CHECK(gc.direct);
    CHECK(gc.kernel_quotients_local);
    CHECK(gc.star_ideal_all_primes);
    CHECK(gc.star_ideal_minimal_primes);
  }
}

TEST_CASE("hand-built tables: GF(4) and the dual numbers over F2") {
  // Indices encode bit vectors, so addition is XOR for both rings.
  std::vector<int> add(16);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) add[a * 4 + b] = a ^ b;

  // GF(4) with primitive element a at index 2: a^2 = a+1.
  std::vector<int> mul_f4 = {0, 0, 0, 0,   //
                             0, 1, 2, 3,   //
                             0, 2, 3, 1,   //
                             0, 3, 1, 2};
  auto f4 = TableRing::make(add, mul_f4, 0, 1, "F4", {"0", "1", "a", "a+1"});
  auto rep4 = classify(f4);
  CHECK(rep4.field.value);
  CHECK(rep4.reduced.value);
  CHECK(rep4.clean.value);
  CHECK(units(*f4).units.size() == 3);
  CHECK(is_isomorphic(f4, make_zmod(4)).verdict == Verdict::no);
  CHECK(is_isomorphic(f4, make_product({make_zmod(2), make_zmod(2)}).ring)
            .verdict == Verdict::no);

  // F2[x]/(x^2) with x at index 2: x^2 = 0, a local non-reduced ring of
  // characteristic 2, not isomorphic to Z/4.
  std::vector<int> mul_dual = {0, 0, 0, 0,   //
                               0, 1, 2, 3,   //
                               0, 2, 0, 2,   //
                               0, 3, 2, 1};
  auto dual = TableRing::make(add, mul_dual, 0, 1, "F2[x]/(x^2)",
                              {"0", "1", "x", "1+x"});
  auto repd = classify(dual);
  CHECK(repd.local.value);
  CHECK(repd.quasi_prime.value);
  CHECK(repd.lessened.value);
  CHECK(repd.clean.value);
  CHECK(!repd.reduced.value);
  CHECK(!repd.field.value);
  CHECK(is_isomorphic(dual, make_zmod(4)).verdict == Verdict::no);
  REQUIRE(repd.spectrum.size() == 1);
  CHECK(repd.spectrum[0].underlying.members == std::vector<int>{0, 2});
  // Every non-unit kills something outside the maximal ideal? No: the
  // kernel at (x) is zero, since 1 and 1+x are the only elements outside.
  auto kd = kernel_of_localization(repd.spectrum[0]);
  CHECK(kd.kernel.is_zero());
  // Full battery agreement holds for hand-built rings too.
  CHECK(mp_criteria(dual).all());
  CHECK(gelfand_criteria(dual).direct);

  // Neither model ring carries a canonical Z/p^k name.
  CHECK(!canonical_name(f4).has_value());
  CHECK(!canonical_name(dual).has_value());
}

TEST_CASE("shared rings classify identically across threads") {
  std::vector<RingPtr> shared = {make_zmod(12), make_zmod(30),
                                 make_product({make_zmod(4), make_zmod(9)}).ring};
  auto snapshot = [&] {
    std::vector<std::map<std::string, bool>> out;
    for (const auto& r : shared) out.push_back(classify(r).flag_values());
    return out;
  };
  auto expected = snapshot();
  std::vector<std::thread> workers;
  std::vector<std::vector<std::map<std::string, bool>>> results(4);
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&, t] { results[t] = snapshot(); });
  for (auto& w : workers) w.join();
  for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("retractions at dimension zero are the identity") {
  auto z12 = make_zmod(12);
  auto rmin = min_retraction(z12);
  auto rmax = max_retraction(z12);
  for (size_t i = 0; i < rmin.primes.size(); ++i) {
    CHECK(rmin.image[i] == static_cast<int>(i));
    CHECK(rmax.image[i] == static_cast<int>(i));
  }
  auto g5 = make_gf(5);
  CHECK(min_retraction(g5).image == std::vector<int>{0});
  auto z4 = make_zmod(4);
  CHECK(min_retraction(z4).image == std::vector<int>{0});
  CHECK(max_retraction(make_zmod(4)).image == std::vector<int>{0});
  auto prod = make_product({make_zmod(2), make_zmod(3)}).ring;
  auto rp = max_retraction(prod);
  for (size_t i = 0; i < rp.primes.size(); ++i)
    CHECK(rp.image[i] == static_cast<int>(i));
}

}  // TEST_SUITE
