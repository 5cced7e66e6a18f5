#include "spectra/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace spectra {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = std::string(1, static_cast<char>('a' + i));
  return names;
}

}  // namespace

std::vector<int> SpecPoset::minimal_points() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    bool minimal = true;
    for (int j = 0; j < n; ++j)
      if (j != i && le(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<int> SpecPoset::maximal_points() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    bool maximal = true;
    for (int j = 0; j < n; ++j)
      if (j != i && le(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

std::vector<int> SpecPoset::components() const {
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (comp[u] < 0 && (le(v, u) || le(u, v))) {
          comp[u] = next;
          stack.push_back(u);
        }
    }
    ++next;
  }
  return comp;
}

std::string SpecPoset::literal() const {
  std::string s = "poset{";
  bool first = true;
  std::vector<char> mentioned(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !le(i, j)) continue;
      // Only covering relations, to keep the literal small.
      bool covering = true;
      for (int k = 0; k < n; ++k)
        if (k != i && k != j && le(i, k) && le(k, j)) covering = false;
      if (!covering) continue;
      if (!first) s += ", ";
      first = false;
      s += names[i] + "<" + names[j];
      mentioned[i] = mentioned[j] = 1;
    }
  for (int i = 0; i < n; ++i) {
    if (mentioned[i]) continue;
    if (!first) s += ", ";
    first = false;
    s += names[i];
  }
  return s + "}";
}

SpecPoset make_spec_poset(int n, const std::function<bool(int, int)>& le,
                          std::vector<std::string> names) {
  if (n < 0 || n > 16)
    throw ConstructionError("poset size " + std::to_string(n) +
                            " outside the supported range 0..16");
  SpecPoset p;
  p.n = n;
  p.leq.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.leq[i * n + j] = le(i, j) ? 1 : 0;
  p.names = names.empty() ? default_names(n) : std::move(names);
  if (static_cast<int>(p.names.size()) != n)
    throw ConstructionError("poset name count differs from point count");
  for (int i = 0; i < n; ++i)
    if (!p.le(i, i)) throw ConstructionError("poset relation is not reflexive");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.le(i, j) && p.le(j, i))
        throw ConstructionError("poset relation is not antisymmetric (" +
                                p.names[i] + " and " + p.names[j] + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (p.le(i, j) && p.le(j, k) && !p.le(i, k))
          throw ConstructionError("poset relation is not transitive");
  return p;
}

SpecPoset poset_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                           std::vector<std::string> names) {
  std::vector<uint8_t> leq(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw ConstructionError("poset edge endpoint out of range");
    leq[a * n + b] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i * n + k] && leq[k * n + j]) leq[i * n + j] = 1;
  return make_spec_poset(
      n, [&](int i, int j) { return leq[i * n + j] != 0; }, std::move(names));
}

namespace {

bool subset_up_closed(const SpecPoset& p, uint32_t s) {
  for (int i = 0; i < p.n; ++i) {
    if (!(s >> i & 1)) continue;
    for (int j = 0; j < p.n; ++j)
      if (p.le(i, j) && !(s >> j & 1)) return false;
  }
  return true;
}

bool subset_down_closed(const SpecPoset& p, uint32_t s) {
  for (int i = 0; i < p.n; ++i) {
    if (!(s >> i & 1)) continue;
    for (int j = 0; j < p.n; ++j)
      if (p.le(j, i) && !(s >> j & 1)) return false;
  }
  return true;
}

}  // namespace

bool TopologyView::is_open(uint32_t subset) const {
  return mode == Topology::zariski ? subset_down_closed(*poset, subset)
                                   : subset_up_closed(*poset, subset);
}

bool TopologyView::is_closed(uint32_t subset) const {
  uint32_t full = (poset->n >= 32) ? ~0u : ((1u << poset->n) - 1);
  return is_open(full & ~subset);
}

std::vector<uint32_t> TopologyView::opens() const {
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < (1u << poset->n); ++s)
    if (is_open(s)) out.push_back(s);
  return out;
}

std::vector<uint32_t> TopologyView::clopens() const {
  std::vector<uint32_t> out;
  for (uint32_t s = 0; s < (1u << poset->n); ++s)
    if (is_open(s) && is_closed(s)) out.push_back(s);
  return out;
}

std::vector<uint32_t> component_unions(const SpecPoset& p) {
  std::vector<int> comp = p.components();
  int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<uint32_t> comp_mask(count, 0);
  for (int i = 0; i < p.n; ++i) comp_mask[comp[i]] |= 1u << i;
  std::vector<uint32_t> out;
  for (uint32_t pick = 0; pick < (1u << count); ++pick) {
    uint32_t u = 0;
    for (int c = 0; c < count; ++c)
      if (pick >> c & 1) u |= comp_mask[c];
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<uint32_t> induced_opens(const SpecPoset& p, Topology mode,
                                    uint32_t subspace) {
  TopologyView view{&p, mode};
  std::set<uint32_t> traces;
  for (uint32_t s = 0; s < (1u << p.n); ++s)
    if (view.is_open(s)) traces.insert(s & subspace);
  return std::vector<uint32_t>(traces.begin(), traces.end());
}

bool map_continuous(const SpecPoset& p, const std::vector<int>& g,
                    uint32_t subspace, Topology mode) {
  TopologyView view{&p, mode};
  for (uint32_t open_trace : induced_opens(p, mode, subspace)) {
    uint32_t preimage = 0;
    for (int q = 0; q < p.n; ++q)
      if (open_trace >> g[q] & 1) preimage |= 1u << q;
    if (!view.is_open(preimage)) return false;
  }
  return true;
}

uint64_t canonical_key(const SpecPoset& p) {
  std::vector<int> perm(p.n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ull;
  do {
    uint64_t key = 0;
    for (int i = 0; i < p.n; ++i)
      for (int j = 0; j < p.n; ++j)
        if (p.le(perm[i], perm[j])) key |= 1ull << (i * p.n + j);
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<SpecPoset> enumerate_posets(int k) {
  if (k < 1 || k > 6)
    throw ConstructionError("poset enumeration supports 1..6 points; got " +
                            std::to_string(k));
  const int pairs = k * (k - 1) / 2;
  std::vector<std::pair<int, int>> pair_of(pairs);
  {
    int idx = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pair_of[idx++] = {i, j};
  }
  std::set<uint64_t> keys;
  // Every finite poset admits a linear extension, so enumerating relations
  // contained in the integer order already reaches every isomorphism type.
  for (uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    std::vector<uint8_t> leq(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i) leq[i * k + i] = 1;
    for (int b = 0; b < pairs; ++b)
      if (mask >> b & 1) leq[pair_of[b].first * k + pair_of[b].second] = 1;
    bool transitive = true;
    for (int i = 0; i < k && transitive; ++i)
      for (int j = 0; j < k && transitive; ++j)
        for (int l = 0; l < k; ++l)
          if (leq[i * k + j] && leq[j * k + l] && !leq[i * k + l]) {
            transitive = false;
            break;
          }
    if (!transitive) continue;
    SpecPoset p;
    p.n = k;
    p.leq = std::move(leq);
    p.names = default_names(k);
    keys.insert(canonical_key(p));
  }
  std::vector<SpecPoset> out;
  for (uint64_t key : keys) {
    SpecPoset p;
    p.n = k;
    p.leq.assign(static_cast<size_t>(k) * k, 0);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (key >> (i * k + j) & 1) p.leq[i * k + j] = 1;
    p.names = default_names(k);
    out.push_back(std::move(p));
  }
  return out;
}

SpecPoset prime_inverse(const SpecPoset& p) {
  SpecPoset d = make_spec_poset(
      p.n, [&](int i, int j) { return p.le(j, i); }, p.names);
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (d.le(j, i) != p.le(i, j))
        throw ConsistencyError("order dual is not an involution");
  return d;
}

std::vector<std::pair<std::string, const PosetClaim*>> ShapeFlags::flag_list()
    const {
  return {{"mp_shape", &mp_shape},
          {"gelfand_shape", &gelfand_shape},
          {"zero_dim_shape", &zero_dim_shape},
          {"purified_shape", &purified_shape},
          {"clean_shape", &clean_shape}};
}

std::map<std::string, bool> ShapeFlags::flag_values() const {
  std::map<std::string, bool> out;
  for (const auto& [name, claim] : flag_list()) out[name] = claim->value;
  return out;
}

ShapeFlags shape_flags(const SpecPoset& p) {
  ShapeFlags f;
  std::vector<int> mins = p.minimal_points();
  std::vector<int> maxs = p.maximal_points();
  std::vector<int> comp = p.components();

  f.mp_shape = {true, "each point has a unique minimal point below it"};
  for (int q = 0; q < p.n; ++q) {
    std::vector<int> below;
    for (int m : mins)
      if (p.le(m, q)) below.push_back(m);
    if (below.size() != 1) {
      f.mp_shape = {false, p.name(q) + " lies over " +
                               std::to_string(below.size()) + " minimal points"};
      break;
    }
  }

  f.gelfand_shape = {true, "each point has a unique maximal point above it"};
  for (int q = 0; q < p.n; ++q) {
    std::vector<int> above;
    for (int m : maxs)
      if (p.le(q, m)) above.push_back(m);
    if (above.size() != 1) {
      f.gelfand_shape = {false, p.name(q) + " lies under " +
                                    std::to_string(above.size()) +
                                    " maximal points"};
      break;
    }
  }

  f.zero_dim_shape = {true, "antichain"};
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      if (i != j && p.le(i, j)) {
        f.zero_dim_shape = {false, p.name(i) + " < " + p.name(j)};
      }

  f.purified_shape = {true, mins.size() < 2
                                ? "fewer than two minimal points"
                                : "distinct minimal points lie in distinct "
                                  "components"};
  for (size_t a = 0; a < mins.size(); ++a)
    for (size_t b = a + 1; b < mins.size(); ++b)
      if (comp[mins[a]] == comp[mins[b]]) {
        f.purified_shape = {false, "minimal points " + p.name(mins[a]) + " and " +
                                       p.name(mins[b]) +
                                       " share a connected component"};
      }

  if (!f.gelfand_shape.value) {
    f.clean_shape = {false, "not gelfand: " + f.gelfand_shape.witness};
  } else {
    f.clean_shape = {true, maxs.size() < 2
                               ? "gelfand with fewer than two maximal points"
                               : "gelfand and distinct maximal points lie in "
                                 "distinct components"};
    for (size_t a = 0; a < maxs.size(); ++a)
      for (size_t b = a + 1; b < maxs.size(); ++b)
        if (comp[maxs[a]] == comp[maxs[b]]) {
          f.clean_shape = {false, "maximal points " + p.name(maxs[a]) + " and " +
                                      p.name(maxs[b]) +
                                      " share a connected component"};
        }
  }
  return f;
}

namespace {

uint32_t mask_of(const std::vector<int>& points) {
  uint32_t m = 0;
  for (int x : points) m |= 1u << x;
  return m;
}

}  // namespace

PosetRetraction min_retraction_poset(const SpecPoset& p) {
  PosetRetraction r;
  std::vector<int> mins = p.minimal_points();
  r.image.assign(p.n, -1);
  for (int q = 0; q < p.n; ++q) {
    std::vector<int> below;
    for (int m : mins)
      if (p.le(m, q)) below.push_back(m);
    if (below.size() != 1) {
      r.refused = true;
      r.refusal_witness = p.name(q) + " lies over " +
                          std::to_string(below.size()) + " minimal points";
      return r;
    }
    r.image[q] = below[0];
  }
  const uint32_t min_mask = mask_of(mins);
  r.flat_continuous = map_continuous(p, r.image, min_mask, Topology::flat);
  r.zariski_continuous = map_continuous(p, r.image, min_mask, Topology::zariski);
  // Both are forced at finite scale: the fibers are the up-sets of the
  // minimal points, and Min is finite hence compact for the Zariski side.
  if (!r.flat_continuous)
    throw ConsistencyError("min retraction of " + p.literal() +
                           " is not flat continuous");
  if (!r.zariski_continuous)
    throw ConsistencyError("min retraction of " + p.literal() +
                           " is not Zariski continuous (Min is compact here)");
  return r;
}

PosetRetraction max_retraction_poset(const SpecPoset& p) {
  PosetRetraction r;
  std::vector<int> maxs = p.maximal_points();
  r.image.assign(p.n, -1);
  for (int q = 0; q < p.n; ++q) {
    std::vector<int> above;
    for (int m : maxs)
      if (p.le(q, m)) above.push_back(m);
    if (above.size() != 1) {
      r.refused = true;
      r.refusal_witness = p.name(q) + " lies under " +
                          std::to_string(above.size()) + " maximal points";
      return r;
    }
    r.image[q] = above[0];
  }
  const uint32_t max_mask = mask_of(maxs);
  r.zariski_continuous = map_continuous(p, r.image, max_mask, Topology::zariski);
  if (!r.zariski_continuous)
    throw ConsistencyError("max retraction of " + p.literal() +
                           " is not Zariski continuous");
  r.flat_continuous = map_continuous(p, r.image, max_mask, Topology::flat);
  // Double check: flat continuity must coincide with Max being discrete in
  // the induced Zariski topology.
  bool discrete = true;
  {
    auto opens = induced_opens(p, Topology::zariski, max_mask);
    for (int m : maxs)
      if (std::find(opens.begin(), opens.end(), 1u << m) == opens.end())
        discrete = false;
  }
  if (r.flat_continuous != discrete)
    throw ConsistencyError(
        "flat-continuity verdict for the max retraction of " + p.literal() +
        " disagrees with Zariski-discreteness of Max");
  return r;
}

std::vector<std::vector<int>> all_retractions_onto_min(const SpecPoset& p) {
  std::vector<int> mins = p.minimal_points();
  std::vector<char> is_min(p.n, 0);
  for (int m : mins) is_min[m] = 1;
  std::vector<int> others;
  for (int q = 0; q < p.n; ++q)
    if (!is_min[q]) others.push_back(q);

  std::vector<std::vector<int>> out;
  std::vector<int> assign(others.size(), 0);
  while (true) {
    std::vector<int> g(p.n);
    for (int m : mins) g[m] = m;
    for (size_t i = 0; i < others.size(); ++i) g[others[i]] = mins[assign[i]];
    out.push_back(g);
    int pos = static_cast<int>(others.size()) - 1;
    while (pos >= 0 && ++assign[pos] == static_cast<int>(mins.size())) {
      assign[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace spectra
