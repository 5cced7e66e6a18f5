#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spectra/common.hpp"

namespace spectra {

class TableRing;
using RingPtr = std::shared_ptr<const TableRing>;

/// A finite commutative unital ring given by explicit element tables.
///
/// Elements are the indices 0..N-1. Instances are immutable after
/// construction and safe to share between threads; every operation on them
/// is a pure function of its inputs.
class TableRing {
public:
  /// Validates the tables by full scan (abelian group, commutative
  /// associative unital multiplication, distributivity) and wraps the ring
  /// in a shared_ptr. Throws ConstructionError on any violation.
  static RingPtr make(std::vector<int> add_table, std::vector<int> mul_table,
                      int zero, int one, std::string label,
                      std::vector<std::string> elem_names = {});

  int size() const { return n_; }
  int add(int a, int b) const { return add_[a * n_ + b]; }
  int mul(int a, int b) const { return mul_[a * n_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int zero() const { return zero_; }
  int one() const { return one_; }

  /// a^k for k >= 1.
  int pow(int a, int k) const;

  const std::string& label() const { return label_; }
  const std::string& elem_name(int a) const { return names_[a]; }

private:
  TableRing() = default;

  int n_ = 0;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> neg_;
  int zero_ = 0;
  int one_ = 0;
  std::string label_;
  std::vector<std::string> names_;
};

/// An element of a specific ring. Arithmetic between elements of different
/// rings is a hard error, never a coercion.
struct Elem {
  RingPtr ring;
  int index = 0;

  friend Elem operator+(const Elem& a, const Elem& b);
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator-(const Elem& a);
  friend bool operator==(const Elem& a, const Elem& b);
};

/// Z/nZ with tables computed mod n; label "Z/n".
RingPtr make_zmod(int n);

/// The prime field GF(p); rejects composite p. Same tables as Z/p, labeled
/// "GF(p)".
RingPtr make_gf(int p);

/// A finite product with componentwise tables and retrievable projections.
struct ProductRing {
  RingPtr ring;
  std::vector<RingPtr> factors;
  std::vector<int> strides;  // index = sum of component * stride

  /// Component k of element x.
  int project(int k, int x) const { return (x / strides[k]) % factors[k]->size(); }
  /// Element with the given components.
  int compose(const std::vector<int>& components) const;
};

ProductRing make_product(const std::vector<RingPtr>& factors);

/// All e with e*e = e, as indices in ascending order.
std::vector<int> idempotents(const TableRing& ring);

/// All units, ascending, plus the inverse map (inverse[u] for units,
/// -1 elsewhere).
struct UnitGroup {
  std::vector<int> units;
  std::vector<int> inverse;
};
UnitGroup units(const TableRing& ring);

/// Result of an isomorphism search. `witness`, when present, maps indices of
/// the first ring to indices of the second and has been verified to be a
/// unital ring isomorphism by full table scan.
struct IsoResult {
  Verdict verdict = Verdict::unknown;
  std::optional<std::vector<int>> witness;
  long nodes_used = 0;
};

/// Decides whether two table rings are isomorphic. Prunes by size, unit
/// count, idempotent count and additive order multisets before backtracking
/// on generator images. Search beyond `node_budget` assignments yields
/// Verdict::unknown, which is distinct from a proven `no`.
IsoResult is_isomorphic(const RingPtr& a, const RingPtr& b,
                        long node_budget = 1000000);

}  // namespace spectra
