#include "spectra/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "spectra/decompose.hpp"
#include "spectra/monomial.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

namespace {

struct Checker {
  SuiteResult result;

  void check(bool ok, const std::function<std::string()>& witness) {
    ++result.checked;
    if (!ok) {
      if (result.failed == 0) result.first_counterwitness = witness();
      ++result.failed;
    }
  }
  void fail(const std::string& witness) {
    ++result.checked;
    if (result.failed == 0) result.first_counterwitness = witness;
    ++result.failed;
  }
  void note(const std::string& line) { result.notes.push_back(line); }
};

// Runs body per ring, converting stray ConsistencyError/Error into failures.
void per_ring(Checker& c, const RingCorpus& corpus,
              const std::function<void(const RingPtr&)>& body) {
  for (const auto& ring : corpus.rings) {
    try {
      body(ring);
    } catch (const Error& e) {
      c.fail(ring->label() + ": " + e.what());
    }
  }
}

bool ring_lessened(const RingPtr& ring) {
  return lessened_radical(ring).nprime.is_zero();
}

std::vector<int> preimage_members(const ProductRing& prod, int k,
                                  const IdealHandle& factor_ideal) {
  std::vector<int> out;
  for (int x = 0; x < prod.ring->size(); ++x)
    if (factor_ideal.contains(prod.project(k, x))) out.push_back(x);
  return out;
}

// ---------------------------------------------------------------- suites --

SuiteResult suite_zero_dim(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    ZeroDimCriteria zc = zero_dim_criteria(ring);
    c.check(zc.all_primes_maximal && zc.pi_regular && zc.localizations_local &&
                zc.unique_pure_radical_per_maximal,
            [&] {
              std::ostringstream os;
              os << ring->label() << ": zero-dim criteria ["
                 << zc.all_primes_maximal << zc.pi_regular
                 << zc.localizations_local << zc.unique_pure_radical_per_maximal
                 << "]";
              return os.str();
            });
    // Zero dimensionality forces every localization kernel to be pure.
    for (const auto& p : primes(ring)) {
      KernelData kd = kernel_of_localization(p);
      c.check(is_pure(kd.kernel).pure, [&] {
        return ring->label() + ": Ker at " + p.underlying.brief() +
               " is not pure";
      });
    }
  });
  return c.result;
}

SuiteResult suite_mp(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    MpCriteria mc = mp_criteria(ring);
    c.check(mc.agree(), [&] {
      std::ostringstream os;
      os << ring->label() << ": mp criteria differ [" << mc.direct
         << mc.kernel_comaximal << mc.localizations_quasi_prime
         << mc.kernel_radical_prime << mc.chain_constant << "]";
      return os.str();
    });
    c.check(mc.all(),
            [&] { return ring->label() + ": mp criteria not all true"; });

    // Kernels over all maximal ideals intersect to zero.
    std::vector<int> inter(ring->size());
    for (int i = 0; i < ring->size(); ++i) inter[i] = i;
    for (const auto& p : primes(ring)) {
      if (!p.is_maximal) continue;
      KernelData kd = kernel_of_localization(p);
      std::vector<int> next;
      std::set_intersection(inter.begin(), inter.end(),
                            kd.kernel.members.begin(), kd.kernel.members.end(),
                            std::back_inserter(next));
      inter = std::move(next);
    }
    c.check(inter == std::vector<int>{ring->zero()} || ring->size() == 1,
            [&] { return ring->label() + ": maximal kernels intersect above 0"; });

    // Reduced together with mp is the same as all maximal kernels prime.
    bool reduced = radical(zero_ideal(ring)).is_zero();
    bool kernels_prime = true;
    for (const auto& p : primes(ring)) {
      if (!p.is_maximal) continue;
      if (!is_prime_ideal(kernel_of_localization(p).kernel)) kernels_prime = false;
    }
    c.check((reduced && mc.direct) == kernels_prime, [&] {
      return ring->label() + ": reduced+mp vs prime kernels mismatch";
    });

    min_retraction(ring);  // asserts gamma = radical of kernel, fixes Min
    ++c.result.checked;
  });
  return c.result;
}

SuiteResult suite_gelfand(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    GelfandCriteria gc = gelfand_criteria(ring);
    c.check(gc.direct && gc.kernel_quotients_local && gc.star_ideal_all_primes &&
                gc.star_ideal_minimal_primes,
            [&] { return ring->label() + ": gelfand criteria not all true"; });

    // Max(A) n V(f) is cut out by some D(1-fg).
    const TableRing& r = *ring;
    std::vector<IdealHandle> maximals;
    for (const auto& p : primes(ring))
      if (p.is_maximal) maximals.push_back(p.underlying);
    for (int f = 0; f < r.size(); ++f) {
      bool found = false;
      for (int g = 0; g < r.size() && !found; ++g) {
        bool match = true;
        for (const auto& m : maximals) {
          bool in_vf = m.contains(f);
          bool in_d = !m.contains(r.sub(r.one(), r.mul(f, g)));
          if (in_vf != in_d) {
            match = false;
            break;
          }
        }
        found = match;
      }
      c.check(found, [&] {
        return ring->label() + ": no g with Max n V(" + r.elem_name(f) +
               ") = Max n D(1-" + r.elem_name(f) + "g)";
      });
    }

    // Gelfand ring whose quotient by the Jacobson radical is zero
    // dimensional (automatic here) must be clean.
    c.check(classify(ring).clean.value,
            [&] { return ring->label() + ": not clean"; });

    max_retraction(ring);  // asserts gamma(p) = star(p) is the maximal over p
    ++c.result.checked;
  });
  return c.result;
}

SuiteResult suite_lessened_product(const SuiteOptions& opts) {
  Checker c;
  ProductCorpus corpus = build_product_corpus(opts.pair_lo, opts.pair_hi,
                                              opts.triples, opts.triple_lo,
                                              opts.triple_hi);
  {
    std::ostringstream os;
    os << "products " << opts.pair_lo << ".." << opts.pair_hi << " squared";
    if (opts.triples)
      os << " plus " << opts.triple_lo << ".." << opts.triple_hi << " cubed";
    c.result.scope = os.str();
  }
  for (const auto& prod : corpus.products) {
    try {
      bool product_lessened = ring_lessened(prod.ring);
      bool factors_lessened = true;
      for (const auto& f : prod.factors)
        if (!ring_lessened(f)) factors_lessened = false;
      c.check(product_lessened == factors_lessened, [&] {
        return prod.ring->label() + ": lessened(product) != and(lessened(factors))";
      });

      // The primes of the product are exactly the factor preimages, and the
      // kernel of each is the preimage of the factor kernel.
      auto prod_primes = primes(prod.ring);
      size_t expected = 0;
      for (size_t k = 0; k < prod.factors.size(); ++k) {
        auto factor_primes = primes(prod.factors[k]);
        expected += factor_primes.size();
        for (const auto& q : factor_primes) {
          std::vector<int> pre = preimage_members(prod, static_cast<int>(k),
                                                  q.underlying);
          const PrimeIdeal* match = nullptr;
          for (const auto& p : prod_primes)
            if (p.underlying.members == pre) match = &p;
          c.check(match != nullptr && match->is_minimal, [&] {
            return prod.ring->label() + ": preimage of " + q.underlying.brief() +
                   " from factor " + std::to_string(k) +
                   " is not a minimal prime of the product";
          });
          if (!match) continue;
          KernelData kd = kernel_of_localization(*match);
          KernelData fk = kernel_of_localization(q);
          std::vector<int> pre_kernel =
              preimage_members(prod, static_cast<int>(k), fk.kernel);
          c.check(kd.kernel.members == pre_kernel, [&] {
            return prod.ring->label() + ": Ker at preimage of " +
                   q.underlying.brief() + " differs from preimage of factor Ker";
          });
        }
      }
      c.check(prod_primes.size() == expected, [&] {
        return prod.ring->label() + ": prime count " +
               std::to_string(prod_primes.size()) + " != sum over factors " +
               std::to_string(expected);
      });
    } catch (const Error& e) {
      c.fail(prod.ring->label() + ": " + e.what());
    }
  }
  return c.result;
}

SuiteResult suite_nprime_quotient(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    LessenedRadical lr = lessened_radical(ring);
    // A / N' is lessened.
    QuotientRing q = make_quotient(ring, lr.nprime);
    c.check(ring_lessened(q.ring),
            [&] { return ring->label() + ": quotient by N' is not lessened"; });
    // Lessened exactly when N' is pure.
    c.check(lr.nprime.is_zero() == is_pure(lr.nprime).pure,
            [&] { return ring->label() + ": lessened vs N'-pure mismatch"; });
    // A / Ker at a minimal prime is a lessened quasi-prime ring.
    for (const auto& p : primes(ring)) {
      if (!p.is_minimal) continue;
      QuotientRing lq = make_quotient(ring, kernel_of_localization(p).kernel);
      int minimal_count = 0;
      for (const auto& pp : primes(lq.ring))
        if (pp.is_minimal) ++minimal_count;
      c.check(minimal_count == 1 && ring_lessened(lq.ring), [&] {
        return ring->label() + ": quotient by Ker at " + p.underlying.brief() +
               " is not lessened quasi-prime";
      });
    }
  });
  return c.result;
}

SuiteResult suite_locally_lessened_mp(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    auto ps = primes(ring);
    std::vector<KernelData> kernels;
    for (const auto& p : ps) kernels.push_back(kernel_of_localization(p));

    bool locally_lessened = true;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (!ps[i].is_maximal) continue;
      if (!ring_lessened(localize(ps[i]).ring)) locally_lessened = false;
    }
    bool mp = mp_criteria(ring).direct;
    bool route1 = locally_lessened && mp;

    bool route2 = true;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (!ps[i].is_minimal) continue;
      if (!is_pure(kernels[i].kernel).pure) route2 = false;
    }

    bool route3 = true;
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = 0; b < ps.size(); ++b)
        if (ideal_subset(ps[a].underlying, ps[b].underlying) &&
            kernels[a].kernel.members != kernels[b].kernel.members)
          route3 = false;

    c.check(route1 == route2 && route2 == route3, [&] {
      std::ostringstream os;
      os << ring->label() << ": three-way equivalence broken [" << route1
         << route2 << route3 << "]";
      return os.str();
    });
    c.check(!locally_lessened || ring_lessened(ring), [&] {
      return ring->label() + ": locally lessened but not lessened";
    });
  });
  return c.result;
}

SuiteResult suite_purified_regular(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  long pure_not_regular = 0;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    bool all_kernels_regular = true;
    for (const auto& p : primes(ring)) {
      if (!p.is_minimal) continue;
      if (!is_regular_ideal(kernel_of_localization(p).kernel))
        all_kernels_regular = false;
    }
    if (all_kernels_regular) {
      ClassificationReport rep = classify(ring);
      c.check(rep.locally_lessened.value && rep.purified.value, [&] {
        return ring->label() +
               ": regular kernels but not locally lessened purified";
      });
    }
    if (opts.max_ring_size > 0 && ring->size() > opts.max_ring_size) return;
    for (const auto& ideal : enumerate_ideals(ring).ideals) {
      bool regular = is_regular_ideal(ideal);
      bool pure = is_pure(ideal).pure;
      c.check(!regular || pure, [&] {
        return ring->label() + ": regular ideal " + ideal.brief() +
               " is not pure";
      });
      if (pure && !regular) ++pure_not_regular;
    }
  });
  std::ostringstream os;
  os << "pure-but-not-regular ideals found: " << pure_not_regular
     << " (no finite witness is expected)";
  c.note(os.str());
  return c.result;
}

SuiteResult suite_star_lemmas(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    if (opts.max_ring_size > 0 && ring->size() > opts.max_ring_size) return;
    auto en = enumerate_ideals(ring);
    std::vector<char> pure_flag(en.ideals.size());
    std::vector<std::vector<int>> rads(en.ideals.size());
    for (size_t i = 0; i < en.ideals.size(); ++i) {
      const IdealHandle& ideal = en.ideals[i];
      IdealHandle rad = radical(ideal);
      pure_flag[i] = is_pure(ideal).pure;
      rads[i] = rad.members;
      c.check(ideal_subset(ideal, rad) && radical(rad).members == rad.members,
              [&] {
                return ring->label() + ": radical laws fail for " + ideal.brief();
              });

      StarSet s = star(ideal);  // also asserts the union-of-maximals formula
      bool ideal_is_maximal = false;
      if (!ideal.is_whole_ring()) {
        bool maximal = true;
        for (const auto& other : en.ideals)
          if (!other.is_whole_ring() && other.size() > ideal.size() &&
              ideal_subset(ideal, other))
            maximal = false;
        ideal_is_maximal = maximal;
      }
      c.check((s.members == ideal.members && !ideal.is_whole_ring()) ==
                  ideal_is_maximal,
              [&] {
                return ring->label() + ": star(I)=I iff maximal fails for " +
                       ideal.brief();
              });

      QuotientRing q = make_quotient(ring, ideal);
      int mc = 0;
      for (const auto& p : primes(q.ring))
        if (p.is_maximal) ++mc;
      c.check(s.is_ideal == (mc == 1), [&] {
        return ring->label() + ": star ideal iff local quotient fails for " +
               ideal.brief();
      });
    }
    // Pure ideals with equal radicals coincide.
    for (size_t i = 0; i < en.ideals.size(); ++i)
      for (size_t j = i + 1; j < en.ideals.size(); ++j)
        if (pure_flag[i] && pure_flag[j] && rads[i] == rads[j])
          c.check(en.ideals[i].members == en.ideals[j].members, [&] {
            return ring->label() + ": distinct pure ideals " +
                   en.ideals[i].brief() + ", " + en.ideals[j].brief() +
                   " share a radical";
          });
  });
  return c.result;
}

SuiteResult suite_decompositions(const SuiteOptions& opts) {
  Checker c;
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  c.result.scope = corpus.spec;
  per_ring(c, corpus, [&](const RingPtr& ring) {
    Decomposition local = decompose_local(ring);
    size_t maximal_count = 0;
    for (const auto& p : primes(ring))
      if (p.is_maximal) ++maximal_count;
    c.check(local.factors.size() == maximal_count, [&] {
      return ring->label() + ": factor count != number of maximal ideals";
    });

    Decomposition lqp = decompose_lessened_quasi_prime(ring);
    auto key = [](const Decomposition& d) {
      std::vector<std::vector<int>> ks;
      for (const auto& k : d.kernels) ks.push_back(k.members);
      std::sort(ks.begin(), ks.end());
      return ks;
    };
    c.check(key(local) == key(lqp), [&] {
      return ring->label() + ": local and lessened-quasi-prime kernels differ";
    });

    if (local.factors.empty()) {
      c.check(ring->size() == 1,
              [&] { return ring->label() + ": empty factor list"; });
    } else {
      ProductRing prod = make_product(local.factors);
      c.check(is_isomorphic(prod.ring, ring).verdict == Verdict::yes, [&] {
        return ring->label() + ": product of factors is not isomorphic";
      });
    }

    bool reduced = radical(zero_ideal(ring)).is_zero();
    c.check(!decompose_fields(ring).refused() == reduced, [&] {
      return ring->label() + ": fields decomposition acceptance != reduced";
    });
    c.check(!decompose_domains(ring).refused() == reduced, [&] {
      return ring->label() + ": domains decomposition acceptance != reduced";
    });
  });
  return c.result;
}

SuiteResult suite_poset_duality(const SuiteOptions& opts) {
  Checker c;
  auto posets = build_poset_corpus(opts.poset_points);
  c.result.scope = "posets up to " + std::to_string(opts.poset_points) + " points";
  for (const auto& p : posets) {
    SpecPoset d = prime_inverse(p);
    ShapeFlags fp = shape_flags(p);
    ShapeFlags fd = shape_flags(d);
    c.check(fp.gelfand_shape.value == fd.mp_shape.value &&
                fp.mp_shape.value == fd.gelfand_shape.value,
            [&] { return p.literal() + ": gelfand/mp duality fails"; });
    c.check(fp.clean_shape.value == fd.purified_shape.value &&
                fp.purified_shape.value == fd.clean_shape.value,
            [&] { return p.literal() + ": clean/purified duality fails"; });
    c.check(canonical_key(prime_inverse(d)) == canonical_key(p),
            [&] { return p.literal() + ": dual is not an involution"; });

    TopologyView zar{&p, Topology::zariski}, flat{&p, Topology::flat};
    auto zc = zar.clopens();
    auto fc = flat.clopens();
    auto cu = component_unions(p);
    c.check(zc == fc && zc == cu, [&] {
      return p.literal() + ": clopen families do not coincide";
    });
  }
  return c.result;
}

SuiteResult suite_retraction_uniqueness(const SuiteOptions& opts) {
  Checker c;
  auto posets = build_poset_corpus(opts.poset_points);
  c.result.scope = "posets up to " + std::to_string(opts.poset_points) +
                   " points; rings " + opts.corpus;
  for (const auto& p : posets) {
    try {
      ShapeFlags f = shape_flags(p);
      PosetRetraction rmin = min_retraction_poset(p);
      c.check(rmin.refused != f.mp_shape.value, [&] {
        return p.literal() + ": min retraction refusal disagrees with mp shape";
      });
      if (f.mp_shape.value) {
        uint32_t min_mask = 0;
        for (int m : p.minimal_points()) min_mask |= 1u << m;
        int continuous = 0;
        bool unique_is_min_map = false;
        for (const auto& g : all_retractions_onto_min(p)) {
          if (map_continuous(p, g, min_mask, Topology::flat)) {
            ++continuous;
            unique_is_min_map = g == rmin.image;
          }
        }
        c.check(continuous == 1 && unique_is_min_map, [&] {
          return p.literal() + ": " + std::to_string(continuous) +
                 " flat-continuous retractions onto Min";
        });
      }
      PosetRetraction rmax = max_retraction_poset(p);
      c.check(rmax.refused != f.gelfand_shape.value, [&] {
        return p.literal() + ": max retraction refusal disagrees with gelfand "
                             "shape";
      });
    } catch (const Error& e) {
      c.fail(p.literal() + ": " + e.what());
    }
  }

  // Ring side: spectra of table rings are antichains whose shape flags agree
  // with the classifier, and both ring retractions run their assertions.
  RingCorpus corpus = build_ring_corpus(opts.corpus);
  per_ring(c, corpus, [&](const RingPtr& ring) {
    auto ps = primes(ring);
    SpecPoset spec_poset = make_spec_poset(
        static_cast<int>(ps.size()),
        [&](int i, int j) {
          return ideal_subset(ps[i].underlying, ps[j].underlying);
        });
    ShapeFlags f = shape_flags(spec_poset);
    c.check(f.zero_dim_shape.value,
            [&] { return ring->label() + ": spectrum is not an antichain"; });
    ClassificationReport rep = classify(ring);
    c.check(f.mp_shape.value == rep.mp.value &&
                f.gelfand_shape.value == rep.gelfand.value &&
                f.zero_dim_shape.value == rep.zero_dimensional.value,
            [&] { return ring->label() + ": shape flags disagree with classifier"; });
    min_retraction(ring);
    max_retraction(ring);
    ++c.result.checked;
  });
  return c.result;
}

MonoRingPtr mono(int characteristic, std::vector<std::string> vars,
                 std::vector<Monomial> gens) {
  return MonomialQuotientRing::make(characteristic, std::move(vars),
                                    std::move(gens));
}

SuiteResult suite_monomial_examples(const SuiteOptions& opts) {
  Checker c;
  const int bound = opts.degree_bound;
  c.result.scope = "built-in monomial ring corpus, degree bound " +
                   std::to_string(bound);

  auto r_xy = mono(2, {"x", "y"}, {{1, 1}});            // F2[x,y]/(xy)
  auto r_x2xy = mono(2, {"x", "y"}, {{2, 0}, {1, 1}});  // F2[x,y]/(x^2, xy)
  auto r_x3x2y = mono(2, {"x", "y"}, {{3, 0}, {2, 1}}); // F2[x,y]/(x^3, x^2y)
  auto r_poly = mono(2, {"x"}, {});
  auto r_x2 = mono(2, {"x"}, {{2}});
  auto r3_xy = mono(3, {"x", "y"}, {{1, 1}});
  auto r_xyz = mono(2, {"x", "y", "z"}, {{1, 1, 1}});
  auto r_mixed = mono(2, {"x", "y", "z"}, {{1, 1, 0}, {0, 0, 2}});
  auto r5_x2y2 = mono(5, {"x", "y"}, {{2, 0}, {0, 2}});
  std::vector<MonoRingPtr> corpus = {r_xy,  r_x2xy, r_x3x2y, r_poly, r_x2,
                                     r3_xy, r_xyz,  r_mixed, r5_x2y2};

  // The two-minimal-prime reduced example: (x)/(xy) and (y)/(xy), neither
  // idempotent; killing a square of either destroys lessenedness.
  {
    auto ps = minimal_primes(r_xy);
    c.check(ps.size() == 2 && ps[0].str() == "(x)" && ps[1].str() == "(y)",
            [&] { return r_xy->label() + ": unexpected minimal primes"; });
    c.check(is_reduced(r_xy) && !is_mp(r_xy) && !is_quasi_prime(r_xy),
            [&] { return r_xy->label() + ": flag regression"; });
    for (const auto& p : ps)
      c.check(!prime_is_idempotent(p), [&] {
        return r_xy->label() + ": " + p.str() + " reported idempotent";
      });
    auto squared = quotient_by_prime_square(r_xy, ps[0]);
    c.check(squared->label() == r_x2xy->label(), [&] {
      return "quotient by prime square gave " + squared->label();
    });
  }

  // The non-lessened quasi-prime example.
  {
    auto les = is_lessened_up_to(r_x2xy, bound);
    c.check(les.verdict == LessenedVerdict::not_lessened && les.witness &&
                r_x2xy->monomial_str(*les.witness) == "x",
            [&] { return r_x2xy->label() + ": expected not_lessened with witness x"; });
    c.check(is_quasi_prime(r_x2xy) && is_mp(r_x2xy) && !is_reduced(r_x2xy),
            [&] { return r_x2xy->label() + ": flag regression"; });
  }

  // The strict chain 0 < N' < N.
  {
    auto ps = minimal_primes(r_x3x2y);
    c.check(ps.size() == 1 && ps[0].str() == "(x)",
            [&] { return r_x3x2y->label() + ": expected unique minimal prime (x)"; });
    auto in2 = kernel_membership(NFPoly::monomial(r_x3x2y, {2, 0}), ps[0], bound);
    auto out1 = kernel_membership(NFPoly::monomial(r_x3x2y, {1, 0}), ps[0], bound);
    c.check(in2.verdict == Membership::in &&
                r_x3x2y->monomial_str(*in2.witness) == "y",
            [&] { return r_x3x2y->label() + ": x^2 not certified in Ker"; });
    c.check(out1.verdict == Membership::out,
            [&] { return r_x3x2y->label() + ": x not certified outside Ker"; });
    c.check(nprime_contains(r_x3x2y, {2, 0}, bound) &&
                !nprime_contains(r_x3x2y, {1, 0}, bound) &&
                r_x3x2y->monomial_in_nilradical({1, 0}),
            [&] { return r_x3x2y->label() + ": chain 0 < N' < N not strict"; });
  }

  for (const auto& ring : corpus) {
    try {
      // Reduced iff all generators squarefree iff no square-zero monomial.
      bool red = is_reduced(ring);
      bool square_zero_found = false;
      for (int d = 1; d <= std::max(1, ring->max_generator_degree()); ++d)
        for (const auto& m : nf_monomials_of_degree(ring, d)) {
          Monomial sq(m.size());
          for (size_t i = 0; i < m.size(); ++i) sq[i] = 2 * m[i];
          if (ring->monomial_in_ideal(sq)) square_zero_found = true;
        }
      c.check(red == !square_zero_found, [&] {
        return ring->label() + ": reduced vs square-zero scan mismatch";
      });

      auto ps = minimal_primes(ring);
      for (const auto& p : ps) {
        // Kernel members stay inside the prime; the radical reaches it.
        for (int d = 1; d <= std::min(bound, 4); ++d)
          for (const auto& m : nf_monomials_of_degree(ring, d)) {
            auto v = kernel_membership(NFPoly::monomial(ring, m), p, bound);
            if (v.verdict == Membership::in)
              c.check(p.contains_monomial(m), [&] {
                return ring->label() + ": kernel member " +
                       ring->monomial_str(m) + " escapes " + p.str();
              });
          }
        for (int var : p.vars_in) {
          bool some_power_in = false;
          for (int k = 1; k <= bound && !some_power_in; ++k) {
            Monomial vk(ring->var_count(), 0);
            vk[var] = k;
            auto v = kernel_membership(NFPoly::monomial(ring, vk), p, bound);
            some_power_in = v.verdict == Membership::in;
          }
          c.check(some_power_in, [&] {
            return ring->label() + ": no power of " + ring->vars()[var] +
                   " certified in Ker at " + p.str();
          });
        }
      }

      // A reduced ring with a non-idempotent minimal prime loses
      // lessenedness after killing that prime's square.
      if (red)
        for (const auto& p : ps)
          if (!prime_is_idempotent(p)) {
            auto squared = quotient_by_prime_square(ring, p);
            auto les = is_lessened_up_to(squared, bound);
            c.check(les.verdict == LessenedVerdict::not_lessened, [&] {
              return squared->label() + ": expected not_lessened";
            });
          }

      // Adjoining a variable preserves mp and the minimal prime count
      // (also asserted inside adjoin_variable).
      if (ring->var_count() < 6) {
        auto bigger = adjoin_variable(ring);
        c.check(is_mp(bigger) == is_mp(ring) &&
                    minimal_primes(bigger).size() == ps.size(),
                [&] { return ring->label() + ": adjoin_variable changed verdicts"; });
      }

      // Kernel monotonicity along inclusions of variable primes.
      auto all_vp = variable_primes(ring);
      for (const auto& small : all_vp)
        for (const auto& big : all_vp) {
          if (small.vars_in == big.vars_in ||
              !std::includes(big.vars_in.begin(), big.vars_in.end(),
                             small.vars_in.begin(), small.vars_in.end()))
            continue;
          for (int d = 1; d <= std::min(bound, 3); ++d)
            for (const auto& m : nf_monomials_of_degree(ring, d)) {
              auto in_big = cover_kernel_membership(NFPoly::monomial(ring, m),
                                                    big, bound);
              if (in_big.verdict != Membership::in) continue;
              auto in_small = cover_kernel_membership(NFPoly::monomial(ring, m),
                                                      small, bound);
              c.check(in_small.verdict == Membership::in, [&] {
                return ring->label() + ": " + ring->monomial_str(m) +
                       " in Ker at " + big.str() + " but not at " + small.str();
              });
            }
        }
    } catch (const Error& e) {
      c.fail(ring->label() + ": " + e.what());
    }
  }
  return c.result;
}

using SuiteFn = SuiteResult (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"zero-dim-criteria", suite_zero_dim},
      {"mp-equivalences", suite_mp},
      {"gelfand-criteria", suite_gelfand},
      {"lessened-product", suite_lessened_product},
      {"nprime-quotient", suite_nprime_quotient},
      {"locally-lessened-mp", suite_locally_lessened_mp},
      {"purified-regular", suite_purified_regular},
      {"star-lemmas", suite_star_lemmas},
      {"decompositions", suite_decompositions},
      {"poset-duality", suite_poset_duality},
      {"retraction-uniqueness", suite_retraction_uniqueness},
      {"monomial-examples", suite_monomial_examples},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      SuiteResult res = fn(opts);
      res.suite = name;
      return res;
    }
  throw Error("unknown verification suite \"" + name + "\"; known: " +
              [] {
                std::string s;
                for (const auto& n2 : suite_names()) s += n2 + " ";
                return s;
              }());
}

namespace {

class PredicateParser {
public:
  PredicateParser(const std::string& s, const std::map<std::string, bool>& flags)
      : s_(s), flags_(flags) {}

  bool parse() {
    bool v = parse_or();
    skip_ws();
    if (i_ != s_.size())
      throw Error("trailing characters in predicate at position " +
                  std::to_string(i_));
    return v;
  }

private:
  bool parse_or() {
    bool v = parse_and();
    while (match("||")) v = parse_and() || v;
    return v;
  }
  bool parse_and() {
    bool v = parse_not();
    while (match("&&")) v = parse_not() && v;
    return v;
  }
  bool parse_not() {
    skip_ws();
    if (match("!")) return !parse_not();
    if (match("(")) {
      bool v = parse_or();
      skip_ws();
      if (!match(")")) throw Error("missing ')' in predicate");
      return v;
    }
    return parse_flag();
  }
  bool parse_flag() {
    skip_ws();
    size_t j = i_;
    while (j < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
      ++j;
    if (j == i_)
      throw Error("expected a flag name in predicate at position " +
                  std::to_string(i_));
    std::string name = s_.substr(i_, j - i_);
    i_ = j;
    auto it = flags_.find(name);
    if (it == flags_.end()) {
      std::string known;
      for (const auto& [k, v] : flags_) known += k + " ";
      throw Error("unknown flag \"" + name + "\" in predicate; known: " + known);
    }
    return it->second;
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  bool match(const char* tok) {
    skip_ws();
    size_t len = std::string(tok).size();
    if (s_.compare(i_, len, tok) == 0) {
      i_ += len;
      return true;
    }
    return false;
  }

  const std::string& s_;
  const std::map<std::string, bool>& flags_;
  size_t i_ = 0;
};

}  // namespace

bool eval_predicate(const std::string& expr,
                    const std::map<std::string, bool>& flags) {
  return PredicateParser(expr, flags).parse();
}

}  // namespace spectra
