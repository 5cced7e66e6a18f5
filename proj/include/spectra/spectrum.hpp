#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spectra/ideal.hpp"

namespace spectra {

/// A prime ideal of a table ring, with its position in the spectrum. The
/// flags come from the full enumerated spectrum, never from heuristics; for
/// finite commutative rings both are always true (zero-dimensionality),
/// which is asserted.
struct PrimeIdeal {
  IdealHandle underlying;
  bool is_minimal = false;
  bool is_maximal = false;
};

/// All prime ideals, found by filtering the full ideal enumeration with a
/// primality scan, sorted by (size, members).
std::vector<PrimeIdeal> primes(const RingPtr& ring);

/// Primality scan: proper, and the complement is multiplicatively closed.
bool is_prime_ideal(const IdealHandle& ideal);

/// Ker of the canonical map into the localization at `prime`:
/// { f : f*g = 0 for some g outside the prime }. The single-witness rule is
/// exact (no nilpotency relaxation), because f/1 = 0 in the localization
/// means precisely that some element outside the prime kills f.
struct KernelData {
  PrimeIdeal prime;
  IdealHandle kernel;
  IdealHandle kernel_radical;
};
KernelData kernel_of_localization(const PrimeIdeal& prime);

/// The localization at a prime of a finite (hence zero-dimensional) ring,
/// materialized as the quotient by Ker. Asserts the result is local; a
/// failure of that assertion is an internal-consistency error, not a
/// verdict.
QuotientRing localize(const PrimeIdeal& prime);

/// N' = intersection of localization kernels over the minimal primes,
/// together with the nilradical. Asserts N' lies inside the nilradical.
struct LessenedRadical {
  RingPtr ring;
  IdealHandle nprime;
  IdealHandle nilradical;
};
LessenedRadical lessened_radical(const RingPtr& ring);

/// One verdict plus its witness or counterwitness, checkable independently.
struct Claim {
  bool value = false;
  std::string witness;
};

/// The full property battery for one ring. Every flag is computed by its
/// primary definition and cross-checked against every equivalent criterion
/// in scope; any disagreement raises ConsistencyError naming the failed
/// equivalence, never a report value.
struct ClassificationReport {
  RingPtr ring;

  Claim zero_dimensional;
  Claim pi_regular;
  Claim reduced;
  Claim quasi_prime;
  Claim local;
  Claim field;
  Claim mp;
  Claim gelfand;
  Claim clean;
  Claim lessened;
  Claim locally_lessened;
  Claim purified;

  std::vector<PrimeIdeal> spectrum;
  std::vector<KernelData> kernels;  // aligned with spectrum
  IdealHandle nprime;
  IdealHandle nilradical;
  std::vector<std::pair<int, int>> clean_pairs;  // per element: unit, idempotent
  std::vector<std::array<int, 3>> purified_separators;  // prime i, prime j, idempotent

  /// Flags in declaration order, for text output.
  std::vector<std::pair<std::string, const Claim*>> flag_list() const;
  /// Flag values by name, for predicate evaluation.
  std::map<std::string, bool> flag_values() const;
};

ClassificationReport classify(const RingPtr& ring);

/// The individually computed zero-dimensionality criteria; classify requires
/// them to agree.
struct ZeroDimCriteria {
  bool all_primes_maximal = false;
  bool pi_regular = false;
  bool localizations_local = false;        // the locality assertion held
  bool unique_pure_radical_per_maximal = false;
};
ZeroDimCriteria zero_dim_criteria(const RingPtr& ring);

/// The five mp criteria, each computed independently.
struct MpCriteria {
  bool direct = false;                   // unique minimal under each prime
  bool kernel_comaximal = false;         // Ker + Ker = A for distinct minimals
  bool localizations_quasi_prime = false;
  bool kernel_radical_prime = false;     // at every maximal
  bool chain_constant = false;           // radicals of kernels agree on chains
  bool all() const {
    return direct && kernel_comaximal && localizations_quasi_prime &&
           kernel_radical_prime && chain_constant;
  }
  bool agree() const {
    return direct == kernel_comaximal && direct == localizations_quasi_prime &&
           direct == kernel_radical_prime && direct == chain_constant;
  }
};
MpCriteria mp_criteria(const RingPtr& ring);

/// The four Gelfand criteria, each computed independently.
struct GelfandCriteria {
  bool direct = false;                 // unique maximal over each prime
  bool kernel_quotients_local = false;
  bool star_ideal_all_primes = false;
  bool star_ideal_minimal_primes = false;
};
GelfandCriteria gelfand_criteria(const RingPtr& ring);

/// A retraction of the spectrum, as indices into primes(ring).
struct Retraction {
  std::vector<PrimeIdeal> primes;
  std::vector<int> image;  // image[i] = index of the retraction of prime i
};

/// gamma(p) = radical of Ker pi_p; requires an mp-ring (always, here).
/// Asserts gamma fixes the minimal primes and gamma(p) is inside p.
Retraction min_retraction(const RingPtr& ring);

/// gamma(p) = p^*, which must be an ideal or the Gelfand hypothesis is
/// contradicted; asserts it is the unique maximal over p.
Retraction max_retraction(const RingPtr& ring);

}  // namespace spectra
