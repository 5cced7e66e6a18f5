#pragma once

#include <string>
#include <vector>

#include "spectra/ideal.hpp"
#include "spectra/poset.hpp"
#include "spectra/table_ring.hpp"

namespace spectra {

/// A declaratively specified family of table rings, reproducible from the
/// spec string alone. Atoms, comma separated, processed left to right:
///   zmod:a..b        Z/a, Z/a+1, ..., Z/b
///   products:depth2  all two-factor products with factors Z/2..Z/9
///   products:depth3  all three-factor products with factors Z/2..Z/6
///   quotients        adds, for every ring listed so far, its quotient by
///                    every enumerated ideal
struct RingCorpus {
  std::string spec;
  std::vector<RingPtr> rings;
};
RingCorpus build_ring_corpus(const std::string& spec);

/// Products with their factor structure retained (used by the product
/// theorems, which need the projections).
struct ProductCorpus {
  std::vector<ProductRing> products;
};
/// All two-factor products Z/i x Z/j for i, j in [lo2, hi2] and, when
/// include_triples is set, all three-factor products over [lo3, hi3].
ProductCorpus build_product_corpus(int lo2, int hi2, bool include_triples,
                                   int lo3, int hi3);

/// All non-isomorphic posets with 1..max_points points, in size order.
std::vector<SpecPoset> build_poset_corpus(int max_points);

}  // namespace spectra
