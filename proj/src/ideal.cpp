#include "spectra/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace spectra {

bool IdealHandle::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::string IdealHandle::brief() const {
  std::string s;
  if (is_zero() || (generators && generators->empty()))
    return "(" + ring->elem_name(ring->zero()) + ")";
  if (generators) {
    s = "(";
    for (size_t i = 0; i < generators->size(); ++i) {
      if (i) s += ",";
      s += ring->elem_name((*generators)[i]);
    }
    s += ")";
  } else {
    s = "{";
    for (size_t i = 0; i < members.size(); ++i) {
      if (i) s += ",";
      s += ring->elem_name(members[i]);
    }
    s += "}";
  }
  return s;
}

namespace {

std::vector<int> mask_to_sorted(const std::vector<char>& mask) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i)
    if (mask[i]) out.push_back(i);
  return out;
}

// Closure under addition and absorption, via a worklist.
std::vector<int> close_under_ideal_ops(const TableRing& r, std::vector<int> seed) {
  std::vector<char> in(r.size(), 0);
  std::vector<int> work;
  auto push = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      work.push_back(x);
    }
  };
  push(r.zero());
  for (int g : seed) push(g);
  for (size_t i = 0; i < work.size(); ++i) {
    int a = work[i];
    for (size_t j = 0; j <= i; ++j) push(r.add(a, work[j]));
    for (int s = 0; s < r.size(); ++s) push(r.mul(s, a));
  }
  return mask_to_sorted(in);
}

}  // namespace

IdealHandle ideal_from_generators(const RingPtr& ring, const std::vector<int>& gens) {
  for (int g : gens)
    if (g < 0 || g >= ring->size())
      throw ConstructionError("ideal generator index out of range in " + ring->label());
  IdealHandle h;
  h.ring = ring;
  h.members = close_under_ideal_ops(*ring, gens);
  h.generators = gens;
  return h;
}

IdealHandle zero_ideal(const RingPtr& ring) {
  return ideal_from_generators(ring, {});
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring.get() != b.ring.get())
    throw ConstructionError("ideal sum across different rings");
  const TableRing& r = *a.ring;
  std::vector<char> in(r.size(), 0);
  for (int x : a.members)
    for (int y : b.members) in[r.add(x, y)] = 1;
  IdealHandle h;
  h.ring = a.ring;
  h.members = mask_to_sorted(in);
  if (a.generators && b.generators) {
    std::vector<int> g = *a.generators;
    g.insert(g.end(), b.generators->begin(), b.generators->end());
    h.generators = g;
  }
  return h;
}

IdealHandle ideal_intersect(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring.get() != b.ring.get())
    throw ConstructionError("ideal intersection across different rings");
  IdealHandle h;
  h.ring = a.ring;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(),
                        b.members.end(), std::back_inserter(h.members));
  return h;
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  if (a.ring.get() != b.ring.get())
    throw ConstructionError("ideal product across different rings");
  const TableRing& r = *a.ring;
  std::set<int> prods;
  for (int x : a.members)
    for (int y : b.members) prods.insert(r.mul(x, y));
  IdealHandle h;
  h.ring = a.ring;
  h.members = close_under_ideal_ops(r, std::vector<int>(prods.begin(), prods.end()));
  return h;
}

bool ideal_subset(const IdealHandle& a, const IdealHandle& b) {
  return std::includes(b.members.begin(), b.members.end(), a.members.begin(),
                       a.members.end());
}

IdealEnumeration enumerate_ideals(const RingPtr& ring, int max_count) {
  const TableRing& r = *ring;
  IdealEnumeration out;

  // Distinct principal ideals, used as the augmentation alphabet. In a
  // unital ring (x) = {rx : r in A}, one mul-table row as a set.
  std::map<std::vector<int>, int> principal_of;  // members -> representative x
  for (int x = 0; x < r.size(); ++x) {
    std::vector<char> in(r.size(), 0);
    for (int s = 0; s < r.size(); ++s) in[r.mul(s, x)] = 1;
    in[r.zero()] = 1;
    principal_of.emplace(mask_to_sorted(in), x);
  }

  std::map<std::vector<int>, int> seen;  // members -> index into found
  std::vector<IdealHandle> found;
  auto record = [&](std::vector<int> members, std::vector<int> gens) -> bool {
    auto it = seen.find(members);
    if (it != seen.end()) return false;
    IdealHandle h;
    h.ring = ring;
    h.members = std::move(members);
    h.generators = std::move(gens);
    seen.emplace(h.members, static_cast<int>(found.size()));
    found.push_back(std::move(h));
    return true;
  };

  record({r.zero()}, {});

  // Round k produces the ideals needing k generators; stop when a round
  // adds nothing (then every ideal needing one more generator is already
  // present, so by induction all of them are).
  size_t round_begin = 0;
  while (round_begin < found.size()) {
    size_t round_end = found.size();
    for (size_t i = round_begin; i < round_end; ++i) {
      for (const auto& [pmembers, px] : principal_of) {
        if (std::includes(found[i].members.begin(), found[i].members.end(),
                          pmembers.begin(), pmembers.end()))
          continue;
        std::vector<char> in(r.size(), 0);
        for (int x : found[i].members)
          for (int y : pmembers) in[r.add(x, y)] = 1;
        std::vector<int> gens = *found[i].generators;
        gens.push_back(px);
        record(mask_to_sorted(in), std::move(gens));
        if (static_cast<int>(found.size()) > max_count) {
          out.truncated = true;
          out.ideals = std::move(found);
          return out;
        }
      }
    }
    round_begin = round_end;
  }

  std::sort(found.begin(), found.end(), [](const IdealHandle& a, const IdealHandle& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  out.ideals = std::move(found);
  return out;
}

IdealHandle radical(const IdealHandle& ideal) {
  const TableRing& r = *ideal.ring;
  std::vector<int> members;
  for (int f = 0; f < r.size(); ++f) {
    int x = f;
    bool in = false;
    for (int k = 1; k <= r.size(); ++k) {
      if (ideal.contains(x)) {
        in = true;
        break;
      }
      x = r.mul(x, f);
    }
    if (in) members.push_back(f);
  }
  IdealHandle h;
  h.ring = ideal.ring;
  h.members = std::move(members);
  return h;
}

IdealHandle annihilator(const RingPtr& ring, int f) {
  const TableRing& r = *ring;
  std::vector<int> members;
  for (int g = 0; g < r.size(); ++g)
    if (r.mul(f, g) == r.zero()) members.push_back(g);
  IdealHandle h;
  h.ring = ring;
  h.members = std::move(members);
  return h;
}

PurityResult is_pure(const IdealHandle& ideal) {
  const TableRing& r = *ideal.ring;
  PurityResult res;
  res.pure = true;
  for (int f : ideal.members) {
    bool killed = false;
    for (int g : ideal.members)
      if (r.mul(f, r.sub(r.one(), g)) == r.zero()) {
        killed = true;
        break;
      }
    bool comax = ideal_sum(annihilator(ideal.ring, f), ideal).is_whole_ring();
    if (killed != comax)
      throw ConsistencyError("purity characterisations disagree for " +
                             r.elem_name(f) + " in " + ideal.brief() + " of " +
                             r.label());
    if (!killed) {
      res.pure = false;
      res.failing = f;
      return res;
    }
  }
  return res;
}

bool is_regular_ideal(const IdealHandle& ideal) {
  const TableRing& r = *ideal.ring;
  std::vector<int> idem_in;
  for (int e : ideal.members)
    if (r.mul(e, e) == e) idem_in.push_back(e);
  return close_under_ideal_ops(r, idem_in) == ideal.members;
}

StarSet star(const IdealHandle& ideal) {
  const TableRing& r = *ideal.ring;
  StarSet s;
  s.ring = ideal.ring;
  if (ideal.is_whole_ring()) {
    s.is_ideal = false;
    return s;
  }
  for (int f = 0; f < r.size(); ++f) {
    // Af + I is an ideal, so it is proper exactly when it misses 1. In the
    // zero ring 1 = 0 is always hit, making the set empty, as it must be.
    bool hits_one = false;
    for (int a = 0; a < r.size() && !hits_one; ++a) {
      int af = r.mul(a, f);
      for (int x : ideal.members)
        if (r.add(af, x) == r.one()) {
          hits_one = true;
          break;
        }
    }
    if (!hits_one) s.members.push_back(f);
  }
  bool closed = true;
  for (int x : s.members) {
    for (int y : s.members)
      if (!std::binary_search(s.members.begin(), s.members.end(), r.add(x, y))) {
        closed = false;
        break;
      }
    if (!closed) break;
  }
  s.is_ideal = closed && !s.members.empty();

  // Second formula: the same set must be the union of the maximal ideals
  // containing I (maximal ideals = inclusion-maximal proper ideals).
  {
    auto en = enumerate_ideals(ideal.ring);
    std::vector<char> in_union(r.size(), 0);
    for (const auto& candidate : en.ideals) {
      if (candidate.is_whole_ring()) continue;
      bool maximal = true;
      for (const auto& other : en.ideals)
        if (!other.is_whole_ring() && other.size() > candidate.size() &&
            ideal_subset(candidate, other))
          maximal = false;
      if (!maximal || !ideal_subset(ideal, candidate)) continue;
      for (int x : candidate.members) in_union[x] = 1;
    }
    std::vector<int> union_members = mask_to_sorted(in_union);
    if (union_members != s.members)
      throw ConsistencyError("star set of " + ideal.brief() + " in " +
                             r.label() +
                             " differs from the union of maximal ideals "
                             "containing it");
  }
  return s;
}

QuotientRing make_quotient(const RingPtr& ring, const IdealHandle& ideal) {
  if (ideal.ring.get() != ring.get())
    throw ConstructionError("quotient: ideal belongs to " + ideal.ring->label() +
                            ", not " + ring->label());
  const TableRing& r = *ring;
  std::vector<int> to_coset(r.size(), -1);
  std::vector<int> rep;
  for (int a = 0; a < r.size(); ++a) {
    if (to_coset[a] >= 0) continue;
    int c = static_cast<int>(rep.size());
    rep.push_back(a);
    for (int x : ideal.members) to_coset[r.add(a, x)] = c;
  }
  const int q = static_cast<int>(rep.size());
  std::vector<int> add(q * q), mul(q * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      add[a * q + b] = to_coset[r.add(rep[a], rep[b])];
      mul[a * q + b] = to_coset[r.mul(rep[a], rep[b])];
    }
  std::vector<std::string> names(q);
  for (int c = 0; c < q; ++c) names[c] = "[" + r.elem_name(rep[c]) + "]";
  QuotientRing out;
  out.ring = TableRing::make(std::move(add), std::move(mul), to_coset[r.zero()],
                             to_coset[r.one()], r.label() + " / " + ideal.brief(),
                             std::move(names));
  out.base = ring;
  out.to_coset = std::move(to_coset);
  out.rep = std::move(rep);
  return out;
}

IdealHandle with_generators(const IdealHandle& ideal) {
  if (ideal.generators) return ideal;
  IdealHandle out = ideal;
  std::vector<int> gens;
  std::vector<int> closure = close_under_ideal_ops(*ideal.ring, gens);
  while (closure != ideal.members) {
    for (int m : ideal.members)
      if (!std::binary_search(closure.begin(), closure.end(), m)) {
        gens.push_back(m);
        break;
      }
    closure = close_under_ideal_ops(*ideal.ring, gens);
  }
  out.generators = gens;
  return out;
}

std::optional<int> principal_idempotent_generator(const IdealHandle& ideal) {
  if (!ideal_product(ideal, ideal).same_members(ideal)) return std::nullopt;
  const TableRing& r = *ideal.ring;
  std::vector<int> hits;
  for (int e : ideal.members) {
    if (r.mul(e, e) != e) continue;
    std::vector<char> in(r.size(), 0);
    for (int a = 0; a < r.size(); ++a) in[r.mul(a, e)] = 1;
    if (mask_to_sorted(in) == ideal.members) hits.push_back(e);
  }
  if (hits.size() != 1)
    throw ConsistencyError("idempotent ideal " + ideal.brief() + " of " +
                           r.label() + " has " + std::to_string(hits.size()) +
                           " principal idempotent generators; expected exactly 1");
  return hits[0];
}

}  // namespace spectra
