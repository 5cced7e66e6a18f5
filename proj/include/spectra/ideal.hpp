#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/table_ring.hpp"

namespace spectra {

/// A verified ideal of a table ring: the member set contains zero and is
/// closed under addition and under multiplication by every ring element.
/// When generators are recorded, their closure equals the member set.
struct IdealHandle {
  RingPtr ring;
  std::vector<int> members;  // sorted, ascending
  std::optional<std::vector<int>> generators;

  bool contains(int x) const;
  int size() const { return static_cast<int>(members.size()); }
  bool is_zero() const { return members.size() == 1; }
  bool is_whole_ring() const { return size() == ring->size(); }
  bool same_members(const IdealHandle& other) const { return members == other.members; }

  /// "(g1,g2)" when generators are recorded, "{a,b,c}" otherwise, using the
  /// ring's element names.
  std::string brief() const;
};

/// Least ideal containing `gens` (fixed-point closure under addition and
/// absorption).
IdealHandle ideal_from_generators(const RingPtr& ring, const std::vector<int>& gens);

/// The zero ideal.
IdealHandle zero_ideal(const RingPtr& ring);

/// Sum I + J (already an ideal, no closure pass needed).
IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);

/// Intersection.
IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b);

/// Product I*J: closure of all pairwise products.
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);

bool ideal_subset(const IdealHandle& a, const IdealHandle& b);

struct IdealEnumeration {
  std::vector<IdealHandle> ideals;  // sorted by (size, members)
  bool truncated = false;
};

/// All distinct ideals. Each round augments every known ideal by one more
/// generator; the enumeration stops when a full round adds nothing, which
/// covers every finitely generated ideal without assuming a generation
/// bound. Exceeding `max_count` sets the truncation flag.
IdealEnumeration enumerate_ideals(const RingPtr& ring, int max_count = 100000);

/// { f : f^k lies in I for some k <= |ring| }. The exponent bound suffices
/// because the power sequence f, f^2, ... takes at most |ring| distinct
/// values and enters its cycle within |ring| steps, so if any power lies in
/// I then one with exponent <= |ring| does.
IdealHandle radical(const IdealHandle& ideal);

/// { g : f*g = 0 }.
IdealHandle annihilator(const RingPtr& ring, int f);

/// Purity check. Runs both characterisations (for every f in I some g in I
/// has f(1-g) = 0; Ann(f) + I = A for every f in I) and insists they agree. On failure `failing` holds the offending f.
struct PurityResult {
  bool pure = false;
  std::optional<int> failing;
};
PurityResult is_pure(const IdealHandle& ideal);

/// True iff the closure of the idempotents lying in I equals I.
bool is_regular_ideal(const IdealHandle& ideal);

/// The set { f : Af + I != A } together with whether it happens to be closed
/// under addition. For a proper ideal this equals the union of the maximal
/// ideals containing I (asserted internally). The unit ideal yields the
/// empty StarSet with is_ideal = false.
struct StarSet {
  RingPtr ring;
  std::vector<int> members;  // sorted
  bool is_ideal = false;
};
StarSet star(const IdealHandle& ideal);

/// If I is idempotent (I*I = I; finite generation is automatic in a finite
/// ring), the unique idempotent e with I = Ae, with uniqueness asserted by
/// scan; otherwise nullopt.
std::optional<int> principal_idempotent_generator(const IdealHandle& ideal);

/// The quotient ring with cosets as elements, plus the canonical surjection.
/// Well-definedness of the tables is guaranteed by the IdealHandle
/// invariants and re-checked by table validation.
struct QuotientRing {
  RingPtr ring;
  RingPtr base;
  std::vector<int> to_coset;  // base index -> coset index
  std::vector<int> rep;       // coset index -> least base representative
};
QuotientRing make_quotient(const RingPtr& ring, const IdealHandle& ideal);

/// Copy of `ideal` carrying a small generating set computed greedily, for
/// display purposes.
IdealHandle with_generators(const IdealHandle& ideal);

}  // namespace spectra
