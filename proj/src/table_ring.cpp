#include "spectra/table_ring.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <sstream>

namespace spectra {

namespace {

std::atomic<int> g_size_cap{4096};

std::string bad(const std::string& label, const std::string& what) {
  return "invalid ring tables for \"" + label + "\": " + what;
}

}  // namespace

int ring_size_cap() { return g_size_cap.load(); }
void set_ring_size_cap(int cap) {
  if (cap < 1) throw ConstructionError("ring size cap must be >= 1");
  g_size_cap.store(cap);
}

RingPtr TableRing::make(std::vector<int> add_table, std::vector<int> mul_table,
                        int zero, int one, std::string label,
                        std::vector<std::string> elem_names) {
  const long long n2 = static_cast<long long>(add_table.size());
  int n = 0;
  while (static_cast<long long>(n) * n < n2) ++n;
  if (static_cast<long long>(n) * n != n2 || n == 0)
    throw ConstructionError(bad(label, "add table is not square"));
  if (mul_table.size() != add_table.size())
    throw ConstructionError(bad(label, "mul table size differs from add table"));
  if (n > ring_size_cap()) {
    std::ostringstream os;
    os << "ring \"" << label << "\" has " << n
       << " elements, exceeding the size cap " << ring_size_cap();
    throw ConstructionError(os.str());
  }
  if (zero < 0 || zero >= n || one < 0 || one >= n)
    throw ConstructionError(bad(label, "zero/one out of range"));
  for (int v : add_table)
    if (v < 0 || v >= n) throw ConstructionError(bad(label, "add entry out of range"));
  for (int v : mul_table)
    if (v < 0 || v >= n) throw ConstructionError(bad(label, "mul entry out of range"));
  if (n > 1 && zero == one)
    throw ConstructionError(bad(label, "zero equals one in a ring with more than one element"));

  auto at = [&](const std::vector<int>& t, int a, int b) { return t[a * n + b]; };

  // Additive abelian group.
  for (int a = 0; a < n; ++a) {
    if (at(add_table, a, zero) != a || at(add_table, zero, a) != a)
      throw ConstructionError(bad(label, "additive identity fails"));
  }
  std::vector<int> neg(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (at(add_table, a, b) == zero) neg[a] = b;
    if (neg[a] < 0) throw ConstructionError(bad(label, "missing additive inverse"));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(add_table, a, b) != at(add_table, b, a))
        throw ConstructionError(bad(label, "addition not commutative"));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(add_table, at(add_table, a, b), c) != at(add_table, a, at(add_table, b, c)))
          throw ConstructionError(bad(label, "addition not associative"));

  // Commutative unital multiplication, distributing over addition.
  for (int a = 0; a < n; ++a)
    if (at(mul_table, a, one) != a || at(mul_table, one, a) != a)
      throw ConstructionError(bad(label, "multiplicative identity fails"));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (at(mul_table, a, b) != at(mul_table, b, a))
        throw ConstructionError(bad(label, "multiplication not commutative"));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (at(mul_table, at(mul_table, a, b), c) != at(mul_table, a, at(mul_table, b, c)))
          throw ConstructionError(bad(label, "multiplication not associative"));
        if (at(mul_table, a, at(add_table, b, c)) !=
            at(add_table, at(mul_table, a, b), at(mul_table, a, c)))
          throw ConstructionError(bad(label, "distributivity fails"));
      }

  if (elem_names.empty()) {
    elem_names.resize(n);
    for (int a = 0; a < n; ++a) elem_names[a] = std::to_string(a);
  }
  if (static_cast<int>(elem_names.size()) != n)
    throw ConstructionError(bad(label, "element name count differs from size"));

  auto ring = std::shared_ptr<TableRing>(new TableRing());
  ring->n_ = n;
  ring->add_ = std::move(add_table);
  ring->mul_ = std::move(mul_table);
  ring->neg_ = std::move(neg);
  ring->zero_ = zero;
  ring->one_ = one;
  ring->label_ = std::move(label);
  ring->names_ = std::move(elem_names);
  return ring;
}

int TableRing::pow(int a, int k) const {
  int r = a;
  for (int i = 1; i < k; ++i) r = mul(r, a);
  return r;
}

namespace {

void require_same_ring(const Elem& a, const Elem& b) {
  if (a.ring.get() != b.ring.get())
    throw ConstructionError("elements of different rings cannot be combined (" +
                            a.ring->label() + " vs " + b.ring->label() + ")");
  if (a.index < 0 || a.index >= a.ring->size() || b.index < 0 ||
      b.index >= b.ring->size())
    throw ConstructionError("element index out of range in " + a.ring->label());
}

}  // namespace

Elem operator+(const Elem& a, const Elem& b) {
  require_same_ring(a, b);
  return {a.ring, a.ring->add(a.index, b.index)};
}

Elem operator*(const Elem& a, const Elem& b) {
  require_same_ring(a, b);
  return {a.ring, a.ring->mul(a.index, b.index)};
}

Elem operator-(const Elem& a) { return {a.ring, a.ring->neg(a.index)}; }

bool operator==(const Elem& a, const Elem& b) {
  require_same_ring(a, b);
  return a.index == b.index;
}

RingPtr make_zmod(int n) {
  if (n < 1) throw ConstructionError("Z/n requires n >= 1");
  if (n > ring_size_cap()) {
    std::ostringstream os;
    os << "Z/" << n << " exceeds the size cap " << ring_size_cap();
    throw ConstructionError(os.str());
  }
  std::vector<int> add(n * n), mul(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  return TableRing::make(std::move(add), std::move(mul), 0, n == 1 ? 0 : 1,
                         "Z/" + std::to_string(n));
}

RingPtr make_gf(int p) {
  if (p < 2) throw ConstructionError("GF(p) requires a prime p");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw ConstructionError("GF(" + std::to_string(p) + "): " +
                              std::to_string(p) + " is not prime");
  std::vector<int> add(p * p), mul(p * p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      add[a * p + b] = (a + b) % p;
      mul[a * p + b] = (a * b) % p;
    }
  return TableRing::make(std::move(add), std::move(mul), 0, 1,
                         "GF(" + std::to_string(p) + ")");
}

int ProductRing::compose(const std::vector<int>& components) const {
  int x = 0;
  for (size_t k = 0; k < factors.size(); ++k) x += components[k] * strides[k];
  return x;
}

ProductRing make_product(const std::vector<RingPtr>& factors) {
  if (factors.empty()) throw ConstructionError("product of no factors");
  long long total = 1;
  for (const auto& f : factors) {
    total *= f->size();
    if (total > ring_size_cap()) {
      std::ostringstream os;
      os << "product size " << total << " exceeds the size cap "
         << ring_size_cap();
      throw ConstructionError(os.str());
    }
  }
  const int n = static_cast<int>(total);
  const int k = static_cast<int>(factors.size());

  std::vector<int> strides(k);
  int s = 1;
  for (int i = k - 1; i >= 0; --i) {
    strides[i] = s;
    s *= factors[i]->size();
  }

  auto decode = [&](int x, int i) { return (x / strides[i]) % factors[i]->size(); };

  std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int sa = 0, sm = 0;
      for (int i = 0; i < k; ++i) {
        sa += factors[i]->add(decode(a, i), decode(b, i)) * strides[i];
        sm += factors[i]->mul(decode(a, i), decode(b, i)) * strides[i];
      }
      add[static_cast<size_t>(a) * n + b] = sa;
      mul[static_cast<size_t>(a) * n + b] = sm;
    }

  int zero = 0, one = 0;
  for (int i = 0; i < k; ++i) {
    zero += factors[i]->zero() * strides[i];
    one += factors[i]->one() * strides[i];
  }

  std::string label;
  for (int i = 0; i < k; ++i) {
    if (i) label += " x ";
    label += factors[i]->label();
  }

  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    std::string s2 = "(";
    for (int i = 0; i < k; ++i) {
      if (i) s2 += ",";
      s2 += factors[i]->elem_name(decode(a, i));
    }
    names[a] = s2 + ")";
  }

  ProductRing out;
  out.ring = TableRing::make(std::move(add), std::move(mul), zero, one,
                             std::move(label), std::move(names));
  out.factors = factors;
  out.strides = std::move(strides);
  return out;
}

std::vector<int> idempotents(const TableRing& ring) {
  std::vector<int> out;
  for (int e = 0; e < ring.size(); ++e)
    if (ring.mul(e, e) == e) out.push_back(e);
  return out;
}

UnitGroup units(const TableRing& ring) {
  UnitGroup g;
  g.inverse.assign(ring.size(), -1);
  for (int u = 0; u < ring.size(); ++u)
    for (int v = 0; v < ring.size(); ++v)
      if (ring.mul(u, v) == ring.one()) {
        g.inverse[u] = v;
        break;
      }
  for (int u = 0; u < ring.size(); ++u)
    if (g.inverse[u] >= 0) g.units.push_back(u);
  return g;
}

namespace {

int additive_order(const TableRing& r, int a) {
  int x = a, k = 1;
  while (x != r.zero()) {
    x = r.add(x, a);
    ++k;
  }
  return k;
}

// Per-element signature preserved by any isomorphism; used both for the
// whole-ring prefilter (multisets must match) and to restrict candidate
// images during backtracking.
struct Signature {
  int add_order;
  bool unit;
  bool idem;
  int ann_size;      // |{g : ag = 0}|
  int pow_period;    // size of {a^k : k >= 1}

  auto tie() const { return std::tuple(add_order, unit, idem, ann_size, pow_period); }
  bool operator==(const Signature& o) const { return tie() == o.tie(); }
  bool operator<(const Signature& o) const { return tie() < o.tie(); }
};

Signature signature_of(const TableRing& r, int a, const UnitGroup& ug) {
  Signature s;
  s.add_order = additive_order(r, a);
  s.unit = ug.inverse[a] >= 0;
  s.idem = r.mul(a, a) == a;
  s.ann_size = 0;
  for (int g = 0; g < r.size(); ++g)
    if (r.mul(a, g) == r.zero()) ++s.ann_size;
  std::vector<char> seen(r.size(), 0);
  int x = a;
  s.pow_period = 0;
  while (!seen[x]) {
    seen[x] = 1;
    ++s.pow_period;
    x = r.mul(x, a);
  }
  return s;
}

// Greedy generating set: grow the closure under +, * and negation from
// {1} until it covers the ring, preferring elements of rare signature.
struct Generators {
  std::vector<int> gens;
  // Derivation of every element: kind 0 = generator (arg1 = position in
  // gens), kind 1 = a+b, kind 2 = a*b, kind 3 = one, kind 4 = -a.
  struct Step {
    int kind;
    int arg1;
    int arg2;
  };
  std::vector<Step> derive;   // indexed by element, in closure order
  std::vector<int> order;     // elements in the order they were derived
};

Generators find_generators(const TableRing& r) {
  Generators g;
  g.derive.assign(r.size(), {-1, -1, -1});
  std::vector<char> in(r.size(), 0);

  auto close = [&](void) {
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur = g.order;
      for (int a : cur)
        for (int b : cur) {
          int s = r.add(a, b);
          if (!in[s]) {
            in[s] = 1;
            g.derive[s] = {1, a, b};
            g.order.push_back(s);
            grew = true;
          }
          int m = r.mul(a, b);
          if (!in[m]) {
            in[m] = 1;
            g.derive[m] = {2, a, b};
            g.order.push_back(m);
            grew = true;
          }
        }
    }
  };

  in[r.one()] = 1;
  g.derive[r.one()] = {3, -1, -1};
  g.order.push_back(r.one());
  close();
  for (int a = 0; a < r.size(); ++a) {
    if (in[a]) continue;
    in[a] = 1;
    g.derive[a] = {0, static_cast<int>(g.gens.size()), -1};
    g.gens.push_back(a);
    g.order.push_back(a);
    close();
  }
  return g;
}

}  // namespace

IsoResult is_isomorphic(const RingPtr& a, const RingPtr& b, long node_budget) {
  IsoResult res;
  if (a->size() != b->size()) {
    res.verdict = Verdict::no;
    return res;
  }
  const int n = a->size();
  UnitGroup ua = units(*a), ub = units(*b);
  if (ua.units.size() != ub.units.size()) {
    res.verdict = Verdict::no;
    return res;
  }
  if (idempotents(*a).size() != idempotents(*b).size()) {
    res.verdict = Verdict::no;
    return res;
  }
  std::vector<Signature> sa(n), sb(n);
  for (int x = 0; x < n; ++x) sa[x] = signature_of(*a, x, ua);
  for (int x = 0; x < n; ++x) sb[x] = signature_of(*b, x, ub);
  {
    auto ma = sa, mb = sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (!(ma == mb)) {
      res.verdict = Verdict::no;
      return res;
    }
  }

  Generators gen = find_generators(*a);
  const int k = static_cast<int>(gen.gens.size());
  std::vector<std::vector<int>> candidates(k);
  for (int i = 0; i < k; ++i) {
    for (int y = 0; y < n; ++y)
      if (sb[y] == sa[gen.gens[i]]) candidates[i].push_back(y);
    if (candidates[i].empty()) {
      res.verdict = Verdict::no;
      return res;
    }
  }

  std::vector<int> choice(k, 0);
  long nodes = 0;

  auto try_assignment = [&](void) -> bool {
    // Images of all elements follow from the generator images along the
    // derivation; then one table scan verifies the map is an isomorphism.
    std::vector<int> img(n, -1);
    for (int x : gen.order) {
      auto d = gen.derive[x];
      switch (d.kind) {
        case 0: img[x] = candidates[d.arg1][choice[d.arg1]]; break;
        case 1: img[x] = b->add(img[d.arg1], img[d.arg2]); break;
        case 2: img[x] = b->mul(img[d.arg1], img[d.arg2]); break;
        case 3: img[x] = b->one(); break;
        default: return false;
      }
    }
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (img[x] < 0 || hit[img[x]]) return false;
      hit[img[x]] = 1;
    }
    if (img[a->zero()] != b->zero() || img[a->one()] != b->one()) return false;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (img[a->add(x, y)] != b->add(img[x], img[y])) return false;
        if (img[a->mul(x, y)] != b->mul(img[x], img[y])) return false;
      }
    res.witness = img;
    return true;
  };

  // Odometer over candidate generator images.
  int pos = 0;
  while (true) {
    if (nodes++ >= node_budget) {
      res.verdict = Verdict::unknown;
      res.nodes_used = nodes;
      return res;
    }
    if (try_assignment()) {
      res.verdict = Verdict::yes;
      res.nodes_used = nodes;
      return res;
    }
    pos = k - 1;
    while (pos >= 0) {
      if (++choice[pos] < static_cast<int>(candidates[pos].size())) break;
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    if (k == 0) break;  // single assignment (prime subring generates)
  }
  res.verdict = Verdict::no;
  res.nodes_used = nodes;
  return res;
}

}  // namespace spectra
