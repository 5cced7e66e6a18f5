#include "spectra/decompose.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace spectra {

std::string to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::local: return "local";
    case DecompositionKind::field: return "field";
    case DecompositionKind::domain: return "domain";
    case DecompositionKind::lessened_quasi_prime: return "lessened_quasi_prime";
  }
  return "?";
}

namespace {

bool ring_is_local(const RingPtr& ring) {
  int mc = 0;
  for (const auto& p : primes(ring))
    if (p.is_maximal) ++mc;
  return mc == 1;
}

bool ring_is_field(const RingPtr& ring) {
  if (ring->size() < 2) return false;
  return static_cast<int>(units(*ring).units.size()) == ring->size() - 1;
}

bool ring_is_domain(const RingPtr& ring) {
  if (ring->size() < 2) return false;
  for (int x = 0; x < ring->size(); ++x)
    for (int y = 0; y < ring->size(); ++y)
      if (x != ring->zero() && y != ring->zero() &&
          ring->mul(x, y) == ring->zero())
        return false;
  return true;
}

bool ring_is_lessened_quasi_prime(const RingPtr& ring) {
  int minimal_count = 0;
  for (const auto& p : primes(ring))
    if (p.is_minimal) ++minimal_count;
  return minimal_count == 1 && lessened_radical(ring).nprime.is_zero();
}

Decomposition build(const RingPtr& ring, DecompositionKind kind,
                    const std::vector<IdealHandle>& kernels,
                    const std::function<bool(const RingPtr&)>& predicate) {
  const TableRing& r = *ring;
  Decomposition d;
  d.original = ring;
  d.kind = kind;
  d.kernels = kernels;

  for (size_t a = 0; a < kernels.size(); ++a)
    for (size_t b = a + 1; b < kernels.size(); ++b)
      if (!ideal_sum(kernels[a], kernels[b]).is_whole_ring())
        throw ConsistencyError("decomposition kernels " + kernels[a].brief() +
                               " and " + kernels[b].brief() + " of \"" +
                               r.label() + "\" are not comaximal");

  std::vector<int> inter(r.size());
  for (int i = 0; i < r.size(); ++i) inter[i] = i;
  for (const auto& k : kernels) {
    std::vector<int> next;
    std::set_intersection(inter.begin(), inter.end(), k.members.begin(),
                          k.members.end(), std::back_inserter(next));
    inter = std::move(next);
  }
  if (inter != std::vector<int>{r.zero()})
    throw ConsistencyError("decomposition kernels of \"" + r.label() +
                           "\" do not intersect to (0)");

  std::vector<QuotientRing> quotients;
  long long product_size = 1;
  for (const auto& k : kernels) {
    quotients.push_back(make_quotient(ring, k));
    product_size *= quotients.back().ring->size();
  }
  if (kernels.empty()) product_size = 1;
  if (product_size != r.size())
    throw ConsistencyError("CRT factor sizes of \"" + r.label() +
                           "\" multiply to " + std::to_string(product_size) +
                           ", not " + std::to_string(r.size()));

  std::vector<int> strides(kernels.size());
  {
    int s = 1;
    for (int i = static_cast<int>(kernels.size()) - 1; i >= 0; --i) {
      strides[i] = s;
      s *= quotients[i].ring->size();
    }
  }
  d.iso_witness.assign(r.size(), 0);
  std::vector<char> hit(r.size(), 0);
  for (int x = 0; x < r.size(); ++x) {
    int idx = 0;
    for (size_t i = 0; i < kernels.size(); ++i)
      idx += quotients[i].to_coset[x] * strides[i];
    d.iso_witness[x] = idx;
    if (hit[idx])
      throw ConsistencyError("CRT map of \"" + r.label() + "\" is not bijective");
    hit[idx] = 1;
  }

  for (const auto& q : quotients) {
    if (!predicate(q.ring))
      throw ConsistencyError("CRT factor \"" + q.ring->label() + "\" of \"" +
                             r.label() + "\" fails the " + to_string(kind) +
                             " predicate");
    d.factors.push_back(q.ring);
    auto name = canonical_name(q.ring);
    d.canonical_names.push_back(name ? *name : std::string());
  }
  return d;
}

// Criterion: the ideal is idempotent and principally generated by its unique
// idempotent. principal_idempotent_generator returns nullopt exactly when
// the ideal is not idempotent.
void require_principal_idempotent(const IdealHandle& ideal, const char* role) {
  if (!principal_idempotent_generator(ideal))
    throw ConsistencyError(std::string(role) + " " + ideal.brief() + " of \"" +
                           ideal.ring->label() +
                           "\" is not an idempotent ideal");
}

}  // namespace

Decomposition decompose_local(const RingPtr& ring) {
  std::vector<IdealHandle> kernels;
  for (const auto& p : primes(ring)) {
    if (!p.is_maximal) continue;
    KernelData kd = kernel_of_localization(p);
    require_principal_idempotent(kd.kernel, "localization kernel");
    kernels.push_back(kd.kernel);
  }
  return build(ring, DecompositionKind::local, kernels, ring_is_local);
}

Decomposition decompose_lessened_quasi_prime(const RingPtr& ring) {
  std::vector<IdealHandle> kernels;
  for (const auto& p : primes(ring)) {
    if (!p.is_minimal) continue;
    KernelData kd = kernel_of_localization(p);
    require_principal_idempotent(kd.kernel, "localization kernel");
    kernels.push_back(kd.kernel);
  }
  return build(ring, DecompositionKind::lessened_quasi_prime, kernels,
               ring_is_lessened_quasi_prime);
}

DecomposeResult decompose_domains(const RingPtr& ring) {
  DecomposeResult res;
  const TableRing& r = *ring;
  IdealHandle nil = radical(zero_ideal(ring));
  auto ps = primes(ring);
  if (!nil.is_zero()) {
    int f = nil.members[0] == r.zero() ? nil.members[1] : nil.members[0];
    std::string bad_prime = "?";
    for (const auto& p : ps) {
      if (!p.is_minimal) continue;
      if (!ideal_product(p.underlying, p.underlying).same_members(p.underlying)) {
        bad_prime = p.underlying.brief();
        break;
      }
    }
    if (bad_prime == "?")
      throw ConsistencyError("\"" + r.label() +
                             "\" is not reduced yet every minimal prime is "
                             "idempotent");
    res.refusal = Refusal{
        "not a finite product of integral domains: the ring is not reduced",
        "nilpotent " + r.elem_name(f) + "; minimal prime " + bad_prime +
            " is not idempotent"};
    return res;
  }
  std::vector<IdealHandle> kernels;
  for (const auto& p : ps) {
    if (!p.is_minimal) continue;
    require_principal_idempotent(p.underlying, "minimal prime");
    kernels.push_back(p.underlying);
  }
  res.decomposition =
      build(ring, DecompositionKind::domain, kernels, ring_is_domain);
  return res;
}

DecomposeResult decompose_fields(const RingPtr& ring) {
  DecomposeResult res;
  std::vector<IdealHandle> kernels;
  for (const auto& p : primes(ring)) {
    if (!p.is_maximal) continue;
    if (!principal_idempotent_generator(p.underlying)) {
      res.refusal = Refusal{
          "not a finite product of fields: a maximal ideal has no principal "
          "idempotent generator",
          "maximal ideal " + p.underlying.brief() + " is not idempotent"};
      return res;
    }
    kernels.push_back(p.underlying);
  }
  res.decomposition =
      build(ring, DecompositionKind::field, kernels, ring_is_field);
  return res;
}

std::optional<std::string> canonical_name(const RingPtr& ring) {
  const int n = ring->size();
  if (n == 1) return std::string("Z/1");
  int p = 0;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  int m = n;
  while (m % p == 0) m /= p;
  if (m != 1) return std::nullopt;  // not a prime power, no model in the library
  auto model = make_zmod(n);
  if (is_isomorphic(ring, model).verdict == Verdict::yes)
    return "Z/" + std::to_string(n);
  return std::nullopt;
}

}  // namespace spectra
