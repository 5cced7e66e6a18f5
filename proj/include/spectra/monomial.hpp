#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "spectra/common.hpp"

namespace spectra {

/// Exponent vector over the ring's variables.
using Monomial = std::vector<int>;

class MonomialQuotientRing;
using MonoRingPtr = std::shared_ptr<const MonomialQuotientRing>;

/// k[x_1..x_n]/M with k a prime field and M a monomial ideal, presented by
/// its minimal monomial generators (pairwise non-dividing).
class MonomialQuotientRing {
public:
  static MonoRingPtr make(int characteristic, std::vector<std::string> vars,
                          std::vector<Monomial> gens);

  int characteristic() const { return char_; }
  int var_count() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }

  /// Some generator divides m, i.e. m reduces to zero.
  bool monomial_in_ideal(const Monomial& m) const;
  /// Some power of m lies in M (the support of a generator is contained in
  /// the support of m).
  bool monomial_in_nilradical(const Monomial& m) const;

  /// Largest total degree among the generators (0 when there are none).
  int max_generator_degree() const;

  std::string monomial_str(const Monomial& m) const;
  std::string label() const;

private:
  MonomialQuotientRing() = default;
  int char_ = 2;
  std::vector<std::string> vars_;
  std::vector<Monomial> gens_;
};

/// A residue class in normal form: no term's monomial is divisible by a
/// generator of M.
class NFPoly {
public:
  NFPoly() = default;
  explicit NFPoly(MonoRingPtr ring) : ring_(std::move(ring)) {}
  static NFPoly monomial(MonoRingPtr ring, const Monomial& m, int coeff = 1);

  const MonoRingPtr& ring() const { return ring_; }
  const std::map<Monomial, int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  NFPoly operator+(const NFPoly& o) const;
  NFPoly operator*(const NFPoly& o) const;

  std::string str() const;

  void add_term(const Monomial& m, int coeff);  // reduces and normalizes

private:
  MonoRingPtr ring_;
  std::map<Monomial, int> terms_;
};

/// The prime (S) + M / M generated by a set of variables S; every generator
/// of M must be divisible by some variable of S.
struct VariablePrime {
  MonoRingPtr ring;
  std::vector<int> vars_in;  // sorted variable indices

  bool contains_var(int v) const;
  /// A monomial lies in (S) iff some variable of S divides it.
  bool contains_monomial(const Monomial& m) const;
  /// A normal-form polynomial lies in (S)+M/M iff all its terms do.
  bool contains(const NFPoly& f) const;
  std::string str() const;
};

/// All inclusion-minimal variable sets covering every generator's support;
/// these are exactly the minimal primes of the quotient.
std::vector<VariablePrime> minimal_primes(const MonoRingPtr& ring);

/// Reduced iff every generator is squarefree.
bool is_reduced(const MonoRingPtr& ring);
/// Quasi-prime iff there is exactly one minimal prime.
bool is_quasi_prime(const MonoRingPtr& ring);
/// mp iff there is exactly one minimal prime. Distinct variable primes are
/// never comaximal (both sit inside the ideal of all variables, and an ideal
/// generated by variables misses 1); that justification is asserted for
/// every distinct pair of minimal primes.
bool is_mp(const MonoRingPtr& ring);

enum class Membership { in, out, unknown };

struct KernelVerdict {
  Membership verdict = Membership::unknown;
  std::optional<Monomial> witness;  // g outside the prime with f*g = 0
  int bound_used = 0;
};

/// Searches for g outside `p` with f*g = 0 in the quotient. For monomial f
/// the scan is complete: a monomial witness of degree at most the maximal
/// generator degree exists whenever f lies in the kernel, so `out` is
/// decidable. General f gets only the bounded search and may come back
/// unknown.
KernelVerdict kernel_membership(const NFPoly& f, const VariablePrime& p,
                                int degree_bound);

enum class LessenedVerdict { lessened, not_lessened, unknown };

struct LessenedResult {
  LessenedVerdict verdict = LessenedVerdict::unknown;
  std::optional<Monomial> witness;  // nonzero monomial inside every kernel
  int bound_used = 0;
  int bound_needed = 0;
};

/// Decides whether the intersection of the localization kernels over the
/// minimal primes is zero, by scanning normal-form monomial witnesses up to
/// `degree_bound`. The kernels here are monomial ideals, so a nonzero
/// intersection contains a monomial of degree at most
/// var_count * max_generator_degree; a clean scan up to that bound is
/// decisive, a shorter one returns unknown. The bound's sufficiency is also
/// checked by saturation stabilization (no new minimal kernel members
/// appearing at the two top degrees scanned).
LessenedResult is_lessened_up_to(const MonoRingPtr& ring, int degree_bound);

/// Membership of a monomial in N' (inside the kernel at every minimal
/// prime); decisive.
bool nprime_contains(const MonoRingPtr& ring, const Monomial& m, int degree_bound);

/// All variable sets S (not only the minimal ones) such that every generator
/// of M is divisible by some variable of S; each is a genuine prime over M.
std::vector<VariablePrime> variable_primes(const MonoRingPtr& ring);

/// The kernel scan for an arbitrary variable prime (the cover need not be
/// minimal); same witness rule and completeness as kernel_membership.
KernelVerdict cover_kernel_membership(const NFPoly& f, const VariablePrime& p,
                                      int degree_bound);

/// p is idempotent iff every variable of S reduces into (S*S) + M, decided
/// monomially.
bool prime_is_idempotent(const VariablePrime& p);

/// The quotient by p^2 as a monomial ring: generators of M together with all
/// pairwise products of variables of S, minimalized.
MonoRingPtr quotient_by_prime_square(const MonoRingPtr& ring, const VariablePrime& p);

/// Same presentation with one fresh variable adjoined. Asserts that mp is
/// unchanged and the minimal primes correspond one to one.
MonoRingPtr adjoin_variable(const MonoRingPtr& ring);

/// All normal-form monomials of exact total degree d, in lexicographic
/// exponent order.
std::vector<Monomial> nf_monomials_of_degree(const MonoRingPtr& ring, int d);

int total_degree(const Monomial& m);

}  // namespace spectra
