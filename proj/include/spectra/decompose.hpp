#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/spectrum.hpp"

namespace spectra {

enum class DecompositionKind { local, field, domain, lessened_quasi_prime };

std::string to_string(DecompositionKind kind);

/// A verified Chinese-remainder decomposition: the kernels are pairwise
/// comaximal with zero intersection, the recorded bijection is the map
/// x -> (x + K_1, ..., x + K_n), and every factor satisfies the kind
/// predicate.
struct Decomposition {
  RingPtr original;
  DecompositionKind kind = DecompositionKind::local;
  std::vector<RingPtr> factors;
  std::vector<IdealHandle> kernels;
  /// Canonical names for the factors when the isomorphism search against the
  /// small model library (Z/p^k) succeeds; empty string otherwise. Best
  /// effort only; no correctness assertion depends on it.
  std::vector<std::string> canonical_names;
  /// iso_witness[x] = index of the image of x in the product of the factors
  /// (mixed-radix over factor sizes, last factor fastest).
  std::vector<int> iso_witness;
};

/// Why a decomposition was declined, with checkable evidence. A refusal is a
/// first-class value, not an error.
struct Refusal {
  std::string reason;
  std::string witness;
};

struct DecomposeResult {
  std::optional<Decomposition> decomposition;
  std::optional<Refusal> refusal;

  bool refused() const { return refusal.has_value(); }
};

/// Factors A/Ker pi_m over all maximal ideals m. Requires Gelfand with
/// finitely many maximal ideals (always, for table rings). Also asserts
/// each kernel is idempotent with a principal idempotent generator.
Decomposition decompose_local(const RingPtr& ring);

/// Factors A/Ker pi_p over all minimal primes p; each factor is asserted
/// lessened and quasi-prime.
Decomposition decompose_lessened_quasi_prime(const RingPtr& ring);

/// Factors A/p over the minimal primes when the ring is reduced; otherwise
/// a refusal naming a nonzero nilpotent and a non-idempotent minimal prime.
DecomposeResult decompose_domains(const RingPtr& ring);

/// Decides by the criterion "every maximal ideal has a principal idempotent
/// generator"; on success factors A/m, otherwise a refusal carrying the
/// failing maximal ideal.
DecomposeResult decompose_fields(const RingPtr& ring);

/// "Z/p^k" when the ring is isomorphic to that model, otherwise nullopt.
std::optional<std::string> canonical_name(const RingPtr& ring);

}  // namespace spectra
