// Independent reference computations used to freeze expected test values.
// Everything here deliberately avoids the library's own algorithms: ideals
// come from a raw subset scan, poset counts from a full relation-space scan,
// monomial kernels from the saturation generators.
#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "spectra/monomial.hpp"
#include "spectra/table_ring.hpp"

namespace oracles {

// gcd-based unit scan for Z/n.
inline std::vector<int> zmod_units(int n) {
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (std::gcd(u, n) == 1 && n > 1) out.push_back(u);
  if (n == 1) out.push_back(0);
  return out;
}

// Number of ideals of Z/n = number of divisors.
inline int divisor_count(int n) {
  int c = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ++c;
  return c;
}

// All ideals of a small ring (size <= 16) by raw subset scan: additive
// subgroups filtered by absorption.
inline std::set<std::vector<int>> subset_scan_ideals(const spectra::TableRing& r) {
  std::set<std::vector<int>> out;
  const int n = r.size();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> r.zero() & 1)) continue;
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < n && ok; ++b) {
        if ((mask >> b & 1) && !(mask >> r.add(a, b) & 1)) ok = false;
        if (!(mask >> r.mul(b, a) & 1)) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<int> members;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1) members.push_back(a);
    out.insert(members);
  }
  return out;
}

// The CRT bijection n -> (n mod a, n mod b) checked as a ring isomorphism
// from Z/ab onto the product, element by element.
inline bool crt_map_is_isomorphism(const spectra::TableRing& zab,
                                   const spectra::ProductRing& prod, int a,
                                   int b) {
  const int n = a * b;
  if (zab.size() != n || prod.ring->size() != n) return false;
  std::vector<int> img(n);
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    img[x] = prod.compose({x % a, x % b});
    if (hit[img[x]]) return false;
    hit[img[x]] = 1;
  }
  if (img[zab.one()] != prod.ring->one()) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (img[zab.add(x, y)] != prod.ring->add(img[x], img[y])) return false;
      if (img[zab.mul(x, y)] != prod.ring->mul(img[x], img[y])) return false;
    }
  return true;
}

// Non-isomorphic posets on k points by scanning every off-diagonal relation
// matrix (k <= 4 is instant, k = 5 takes about a second).
inline int brute_force_poset_count(int k) {
  const int off = k * (k - 1);
  std::vector<std::pair<int, int>> cell;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j) cell.emplace_back(i, j);

  std::set<uint64_t> keys;
  std::vector<int> perm(k);
  for (uint32_t mask = 0; mask < (1u << off); ++mask) {
    std::vector<uint8_t> leq(k * k, 0);
    for (int i = 0; i < k; ++i) leq[i * k + i] = 1;
    for (int b = 0; b < off; ++b)
      if (mask >> b & 1) leq[cell[b].first * k + cell[b].second] = 1;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        if (i != j && leq[i * k + j] && leq[j * k + i]) ok = false;
        for (int l = 0; l < k; ++l)
          if (leq[i * k + j] && leq[j * k + l] && !leq[i * k + l]) {
            ok = false;
            break;
          }
      }
    if (!ok) continue;
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~0ull;
    do {
      uint64_t key = 0;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          if (leq[perm[i] * k + perm[j]]) key |= 1ull << (i * k + j);
      best = std::min(best, key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    keys.insert(best);
  }
  return static_cast<int>(keys.size());
}

// Saturation generators of the kernel at the variable prime (S): the S-parts
// of the generators of M. A monomial lies in the kernel exactly when some
// S-part divides it.
inline bool saturation_kernel_contains(const spectra::MonoRingPtr& ring,
                                       const std::vector<int>& prime_vars,
                                       const spectra::Monomial& m) {
  for (const auto& g : ring->gens()) {
    bool divides = true;
    for (size_t v = 0; v < g.size(); ++v) {
      bool in_s = std::binary_search(prime_vars.begin(), prime_vars.end(),
                                     static_cast<int>(v));
      int part = in_s ? g[v] : 0;
      if (part > m[v]) divides = false;
    }
    if (divides) return true;
  }
  return false;
}

}  // namespace oracles
