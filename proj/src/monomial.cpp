#include "spectra/monomial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace spectra {

namespace {

constexpr int kMaxVars = 6;

bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

bool is_prime_number(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

MonoRingPtr MonomialQuotientRing::make(int characteristic,
                                       std::vector<std::string> vars,
                                       std::vector<Monomial> gens) {
  if (!is_prime_number(characteristic))
    throw ConstructionError("monomial ring characteristic " +
                            std::to_string(characteristic) + " is not prime");
  if (static_cast<int>(vars.size()) > kMaxVars)
    throw ConstructionError("monomial ring variable budget is " +
                            std::to_string(kMaxVars) + "; got " +
                            std::to_string(vars.size()));
  {
    std::set<std::string> uniq(vars.begin(), vars.end());
    if (uniq.size() != vars.size())
      throw ConstructionError("duplicate variable names in monomial ring");
    for (const auto& v : vars)
      if (v.empty()) throw ConstructionError("empty variable name");
  }
  for (auto& g : gens) {
    if (g.size() != vars.size())
      throw ConstructionError("generator exponent vector length mismatch");
    for (int e : g)
      if (e < 0) throw ConstructionError("negative exponent in generator");
  }
  // Minimalize: keep only generators no other generator divides.
  std::vector<Monomial> minimal;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (total_degree(a) != total_degree(b))
      return total_degree(a) < total_degree(b);
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool dominated = false;
    for (const auto& h : minimal)
      if (divides(h, g)) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(g);
  }

  auto ring = std::shared_ptr<MonomialQuotientRing>(new MonomialQuotientRing());
  ring->char_ = characteristic;
  ring->vars_ = std::move(vars);
  ring->gens_ = std::move(minimal);
  return ring;
}

bool MonomialQuotientRing::monomial_in_ideal(const Monomial& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialQuotientRing::monomial_in_nilradical(const Monomial& m) const {
  for (const auto& g : gens_) {
    bool support_ok = true;
    for (size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0 && m[i] == 0) {
        support_ok = false;
        break;
      }
    if (support_ok) return true;
  }
  return false;
}

int MonomialQuotientRing::max_generator_degree() const {
  int d = 0;
  for (const auto& g : gens_) d = std::max(d, total_degree(g));
  return d;
}

std::string MonomialQuotientRing::monomial_str(const Monomial& m) const {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string MonomialQuotientRing::label() const {
  std::string s = "F" + std::to_string(char_) + "[";
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i) s += ",";
    s += vars_[i];
  }
  s += "]/(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += monomial_str(gens_[i]);
  }
  return s + ")";
}

NFPoly NFPoly::monomial(MonoRingPtr ring, const Monomial& m, int coeff) {
  NFPoly f(std::move(ring));
  f.add_term(m, coeff);
  return f;
}

void NFPoly::add_term(const Monomial& m, int coeff) {
  if (static_cast<int>(m.size()) != ring_->var_count())
    throw ConstructionError("monomial arity mismatch in " + ring_->label());
  if (ring_->monomial_in_ideal(m)) return;
  const int p = ring_->characteristic();
  int c = ((terms_.count(m) ? terms_[m] : 0) + coeff % p + p) % p;
  if (c == 0)
    terms_.erase(m);
  else
    terms_[m] = c;
}

NFPoly NFPoly::operator+(const NFPoly& o) const {
  if (ring_.get() != o.ring_.get())
    throw ConstructionError("polynomials from different monomial rings");
  NFPoly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

NFPoly NFPoly::operator*(const NFPoly& o) const {
  if (ring_.get() != o.ring_.get())
    throw ConstructionError("polynomials from different monomial rings");
  NFPoly out(ring_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) out.add_term(mono_mul(m1, m2), c1 * c2);
  return out;
}

std::string NFPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!s.empty()) s += " + ";
    if (c != 1 || total_degree(m) == 0) {
      s += std::to_string(c);
      if (total_degree(m) > 0) s += "*";
    }
    if (total_degree(m) > 0) s += ring_->monomial_str(m);
  }
  return s;
}

bool VariablePrime::contains_var(int v) const {
  return std::binary_search(vars_in.begin(), vars_in.end(), v);
}

bool VariablePrime::contains_monomial(const Monomial& m) const {
  for (int v : vars_in)
    if (m[v] > 0) return true;
  return false;
}

bool VariablePrime::contains(const NFPoly& f) const {
  for (const auto& [m, c] : f.terms())
    if (!contains_monomial(m)) return false;
  return true;
}

std::string VariablePrime::str() const {
  std::string s = "(";
  for (size_t i = 0; i < vars_in.size(); ++i) {
    if (i) s += ",";
    s += ring->vars()[vars_in[i]];
  }
  return s + ")";
}

std::vector<VariablePrime> minimal_primes(const MonoRingPtr& ring) {
  const int n = ring->var_count();
  std::vector<std::vector<int>> covers;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool covered = true;
    for (const auto& g : ring->gens()) {
      bool hit = false;
      for (int v = 0; v < n && !hit; ++v)
        if ((mask >> v & 1) && g[v] > 0) hit = true;
      if (!hit) {
        covered = false;
        break;
      }
    }
    if (covered) {
      std::vector<int> s;
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1) s.push_back(v);
      covers.push_back(std::move(s));
    }
  }
  std::vector<VariablePrime> out;
  for (const auto& s : covers) {
    bool minimal = true;
    for (const auto& t : covers)
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back({ring, s});
  }
  std::sort(out.begin(), out.end(), [](const VariablePrime& a, const VariablePrime& b) {
    if (a.vars_in.size() != b.vars_in.size())
      return a.vars_in.size() < b.vars_in.size();
    return a.vars_in < b.vars_in;
  });
  return out;
}

bool is_reduced(const MonoRingPtr& ring) {
  for (const auto& g : ring->gens())
    for (int e : g)
      if (e > 1) return false;
  return true;
}

bool is_quasi_prime(const MonoRingPtr& ring) {
  return minimal_primes(ring).size() == 1;
}

bool is_mp(const MonoRingPtr& ring) {
  auto ps = minimal_primes(ring);
  // Justification check: distinct minimal variable primes are not comaximal.
  // (S1)+(S2)+M is generated by variables and nonconstant monomials, so every
  // member has zero constant term and 1 stays outside; verify the generators
  // really are nonconstant.
  for (size_t a = 0; a < ps.size(); ++a)
    for (size_t b = a + 1; b < ps.size(); ++b) {
      for (const auto& g : ring->gens())
        if (total_degree(g) == 0)
          throw ConsistencyError("constant generator in a ring with two "
                                 "minimal primes: " + ring->label());
      if (ps[a].vars_in == ps[b].vars_in)
        throw ConsistencyError("duplicate minimal primes in " + ring->label());
    }
  // No minimal primes means 1 lies in M and the quotient is the zero ring,
  // which is vacuously mp (there is no prime at all).
  return ps.size() <= 1;
}

namespace {

void enumerate_monomials(int n, int degree, Monomial& cur, int var,
                         const std::function<void(const Monomial&)>& emit) {
  if (var == n - 1) {
    cur[var] = degree;
    emit(cur);
    cur[var] = 0;
    return;
  }
  for (int e = degree; e >= 0; --e) {
    cur[var] = e;
    enumerate_monomials(n, degree - e, cur, var + 1, emit);
  }
  cur[var] = 0;
}

// Monomials of exact degree d over a subset of the variables (the other
// exponents stay zero).
std::vector<Monomial> monomials_over(const std::vector<int>& vars, int n, int d) {
  std::vector<Monomial> out;
  if (vars.empty()) {
    if (d == 0) out.push_back(Monomial(n, 0));
    return out;
  }
  Monomial cur(vars.size(), 0);
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == static_cast<int>(vars.size()) - 1) {
      cur[i] = rem;
      Monomial m(n, 0);
      for (size_t j = 0; j < vars.size(); ++j) m[vars[j]] = cur[j];
      out.push_back(m);
      cur[i] = 0;
      return;
    }
    for (int e = rem; e >= 0; --e) {
      cur[i] = e;
      rec(i + 1, rem - e);
    }
    cur[i] = 0;
  };
  rec(0, d);
  return out;
}

std::vector<int> outside_vars(const VariablePrime& p) {
  std::vector<int> out;
  for (int v = 0; v < p.ring->var_count(); ++v)
    if (!p.contains_var(v)) out.push_back(v);
  return out;
}

void require_minimal(const VariablePrime& p) {
  for (const auto& q : minimal_primes(p.ring))
    if (q.vars_in == p.vars_in) return;
  throw ConstructionError("prime " + p.str() + " is not a minimal prime of " +
                          p.ring->label());
}

}  // namespace

std::vector<Monomial> nf_monomials_of_degree(const MonoRingPtr& ring, int d) {
  std::vector<Monomial> out;
  Monomial cur(ring->var_count(), 0);
  if (ring->var_count() == 0) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  enumerate_monomials(ring->var_count(), d, cur, 0, [&](const Monomial& m) {
    if (!ring->monomial_in_ideal(m)) out.push_back(m);
  });
  return out;
}

std::vector<VariablePrime> variable_primes(const MonoRingPtr& ring) {
  const int n = ring->var_count();
  std::vector<VariablePrime> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    bool covered = true;
    for (const auto& g : ring->gens()) {
      bool hit = false;
      for (int v = 0; v < n && !hit; ++v)
        if ((mask >> v & 1) && g[v] > 0) hit = true;
      if (!hit) {
        covered = false;
        break;
      }
    }
    if (!covered) continue;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    out.push_back({ring, s});
  }
  return out;
}

KernelVerdict cover_kernel_membership(const NFPoly& f, const VariablePrime& p,
                                      int degree_bound) {
  if (degree_bound < 0) throw ConstructionError("negative degree bound");
  const MonoRingPtr& ring = p.ring;
  // S must cover every generator's support; otherwise (S) does not contain
  // M and the witness rule is unsound.
  for (const auto& g : ring->gens())
    if (!p.contains_monomial(g))
      throw ConstructionError("variable set " + p.str() +
                              " does not cover the generators of " +
                              ring->label());
  KernelVerdict out;

  if (f.is_zero()) {
    out.verdict = Membership::in;
    out.witness = Monomial(ring->var_count(), 0);  // g = 1, outside any prime
    out.bound_used = 0;
    return out;
  }

  // A monomial witness of degree <= max generator degree always exists for
  // monomial f: if m | f*g with g over the outside variables, the outside
  // part of m already serves as g.
  const int complete_bound = ring->max_generator_degree();
  const int scan_bound =
      f.is_monomial() ? std::max(degree_bound, complete_bound) : degree_bound;
  out.bound_used = scan_bound;

  const std::vector<int> outside = outside_vars(p);
  for (int d = 0; d <= scan_bound; ++d) {
    for (const auto& g : monomials_over(outside, ring->var_count(), d)) {
      if ((f * NFPoly::monomial(ring, g)).is_zero()) {
        out.verdict = Membership::in;
        out.witness = g;
        return out;
      }
    }
  }
  out.verdict = f.is_monomial() && scan_bound >= complete_bound
                    ? Membership::out
                    : Membership::unknown;
  return out;
}

KernelVerdict kernel_membership(const NFPoly& f, const VariablePrime& p,
                                int degree_bound) {
  require_minimal(p);
  return cover_kernel_membership(f, p, degree_bound);
}

bool nprime_contains(const MonoRingPtr& ring, const Monomial& m, int degree_bound) {
  for (const auto& p : minimal_primes(ring)) {
    auto v = kernel_membership(NFPoly::monomial(ring, m), p, degree_bound);
    if (v.verdict != Membership::in) return false;
  }
  return true;
}

LessenedResult is_lessened_up_to(const MonoRingPtr& ring, int degree_bound) {
  LessenedResult res;
  res.bound_needed = ring->var_count() * ring->max_generator_degree();
  res.bound_used = degree_bound;

  auto ps = minimal_primes(ring);
  if (ps.empty()) {
    // 1 lies in M: the quotient is the zero ring, trivially lessened.
    res.verdict = LessenedVerdict::lessened;
    return res;
  }
  if (is_reduced(ring)) {
    res.verdict = LessenedVerdict::lessened;
    return res;
  }

  for (int d = 1; d <= degree_bound; ++d) {
    for (const auto& m : nf_monomials_of_degree(ring, d)) {
      bool in_all = true;
      for (const auto& p : ps) {
        auto v = kernel_membership(NFPoly::monomial(ring, m), p, degree_bound);
        if (v.verdict != Membership::in) {
          in_all = false;
          break;
        }
      }
      if (in_all) {
        res.verdict = LessenedVerdict::not_lessened;
        res.witness = m;
        return res;
      }
    }
  }

  if (degree_bound < res.bound_needed) {
    res.verdict = LessenedVerdict::unknown;
    return res;
  }

  // Saturation stabilization: scanning two degrees past the needed bound,
  // no kernel may acquire a member that is not a multiple of a
  // lower-degree member.
  for (const auto& p : ps) {
    std::vector<Monomial> members;  // kernel members found so far
    for (int d = 1; d <= res.bound_needed + 2; ++d) {
      for (const auto& m : nf_monomials_of_degree(ring, d)) {
        auto v = kernel_membership(NFPoly::monomial(ring, m), p, degree_bound);
        if (v.verdict != Membership::in) continue;
        bool multiple = false;
        for (const auto& lower : members)
          if (divides(lower, m)) {
            multiple = true;
            break;
          }
        if (!multiple && d > res.bound_needed)
          throw ConsistencyError("kernel saturation failed to stabilize at " +
                                 p.str() + " of " + ring->label());
        members.push_back(m);
      }
    }
  }

  res.verdict = LessenedVerdict::lessened;
  return res;
}

bool prime_is_idempotent(const VariablePrime& p) {
  require_minimal(p);
  const MonoRingPtr& ring = p.ring;
  std::vector<Monomial> square_gens = ring->gens();
  for (int a : p.vars_in)
    for (int b : p.vars_in) {
      Monomial m(ring->var_count(), 0);
      m[a] += 1;
      m[b] += 1;
      square_gens.push_back(m);
    }
  for (int v : p.vars_in) {
    Monomial xv(ring->var_count(), 0);
    xv[v] = 1;
    bool in = false;
    for (const auto& g : square_gens)
      if (divides(g, xv)) {
        in = true;
        break;
      }
    if (!in) return false;
  }
  return true;
}

MonoRingPtr quotient_by_prime_square(const MonoRingPtr& ring,
                                     const VariablePrime& p) {
  if (p.ring.get() != ring.get())
    throw ConstructionError("prime belongs to a different monomial ring");
  require_minimal(p);
  std::vector<Monomial> gens = ring->gens();
  for (size_t i = 0; i < p.vars_in.size(); ++i)
    for (size_t j = i; j < p.vars_in.size(); ++j) {
      Monomial m(ring->var_count(), 0);
      m[p.vars_in[i]] += 1;
      m[p.vars_in[j]] += 1;
      gens.push_back(m);
    }
  return MonomialQuotientRing::make(ring->characteristic(), ring->vars(), gens);
}

MonoRingPtr adjoin_variable(const MonoRingPtr& ring) {
  if (ring->var_count() >= kMaxVars)
    throw ConstructionError("variable budget (" + std::to_string(kMaxVars) +
                            ") exceeded when adjoining a variable to " +
                            ring->label());
  std::vector<std::string> vars = ring->vars();
  // At most five existing variables, so one of the six candidates is free.
  std::string fresh;
  for (const char* c : {"z", "w", "u", "v", "t", "s"}) {
    if (std::find(vars.begin(), vars.end(), std::string(c)) == vars.end()) {
      fresh = c;
      break;
    }
  }
  vars.push_back(fresh);
  std::vector<Monomial> gens;
  for (const auto& g : ring->gens()) {
    Monomial m = g;
    m.push_back(0);
    gens.push_back(m);
  }
  auto out = MonomialQuotientRing::make(ring->characteristic(), vars, gens);

  if (is_mp(out) != is_mp(ring))
    throw ConsistencyError("adjoining a variable changed the mp verdict of " +
                           ring->label());
  auto before = minimal_primes(ring);
  auto after = minimal_primes(out);
  if (before.size() != after.size())
    throw ConsistencyError("adjoining a variable changed the minimal prime "
                           "count of " + ring->label());
  for (size_t i = 0; i < before.size(); ++i)
    if (before[i].vars_in != after[i].vars_in)
      throw ConsistencyError("minimal primes fail to correspond after "
                             "adjoining a variable to " + ring->label());
  return out;
}

}  // namespace spectra
