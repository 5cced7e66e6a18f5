#include "spectra/spectrum.hpp"

#include <algorithm>
#include <sstream>

namespace spectra {

namespace {

std::string ringref(const TableRing& r) { return "\"" + r.label() + "\""; }

std::vector<PrimeIdeal> primes_from(const RingPtr& ring,
                                    const std::vector<IdealHandle>& ideals) {
  std::vector<PrimeIdeal> ps;
  for (const auto& ideal : ideals)
    if (is_prime_ideal(ideal)) {
      PrimeIdeal p;
      p.underlying = ideal;
      ps.push_back(p);
    }
  for (size_t i = 0; i < ps.size(); ++i) {
    bool minimal = true, maximal = true;
    for (size_t j = 0; j < ps.size(); ++j) {
      if (i == j) continue;
      if (ideal_subset(ps[j].underlying, ps[i].underlying)) minimal = false;
      if (ideal_subset(ps[i].underlying, ps[j].underlying)) maximal = false;
    }
    ps[i].is_minimal = minimal;
    ps[i].is_maximal = maximal;
    if (!minimal || !maximal)
      throw ConsistencyError("finite ring " + ringref(*ring) +
                             " produced a prime that is not both minimal and "
                             "maximal; the spectrum scan is broken");
  }
  return ps;
}

// Everything classify and the criteria batteries share.
struct SpectrumData {
  RingPtr ring;
  std::vector<IdealHandle> ideals;
  std::vector<PrimeIdeal> primes;
  std::vector<KernelData> kernels;
  std::vector<int> minimal_idx;
  std::vector<int> maximal_idx;
  std::vector<QuotientRing> localizations;  // per prime, asserted local
};

SpectrumData compute_data(const RingPtr& ring) {
  SpectrumData d;
  d.ring = ring;
  auto en = enumerate_ideals(ring);
  if (en.truncated)
    throw Error("ideal enumeration truncated for " + ring->label());
  d.ideals = std::move(en.ideals);
  d.primes = primes_from(ring, d.ideals);
  for (const auto& p : d.primes) d.kernels.push_back(kernel_of_localization(p));
  for (size_t i = 0; i < d.primes.size(); ++i) {
    if (d.primes[i].is_minimal) d.minimal_idx.push_back(static_cast<int>(i));
    if (d.primes[i].is_maximal) d.maximal_idx.push_back(static_cast<int>(i));
  }
  for (const auto& p : d.primes) d.localizations.push_back(localize(p));
  return d;
}

struct PiRegularWitness {
  int f = 0, n = 1, g = 0;
};

ZeroDimCriteria zero_dim_criteria_impl(const SpectrumData& d,
                                       PiRegularWitness* wit) {
  const TableRing& r = *d.ring;
  ZeroDimCriteria c;

  c.all_primes_maximal = true;
  for (const auto& p : d.primes)
    if (!p.is_minimal || !p.is_maximal) c.all_primes_maximal = false;

  c.pi_regular = true;
  PiRegularWitness w;
  for (int f = 0; f < r.size() && c.pi_regular; ++f) {
    bool ok = false;
    int x = f;
    for (int n = 1; n <= r.size() && !ok; ++n) {
      for (int g = 0; g < r.size(); ++g)
        if (r.mul(x, r.sub(r.one(), r.mul(f, g))) == r.zero()) {
          ok = true;
          if (n >= w.n) w = {f, n, g};
          break;
        }
      x = r.mul(x, f);
    }
    if (!ok) c.pi_regular = false;
  }
  if (wit) *wit = w;

  // localize() already threw if any localization failed to be local.
  c.localizations_local = true;

  c.unique_pure_radical_per_maximal = true;
  std::vector<char> pure_flag(d.ideals.size(), 0);
  std::vector<std::vector<int>> rad(d.ideals.size());
  for (size_t i = 0; i < d.ideals.size(); ++i) {
    pure_flag[i] = is_pure(d.ideals[i]).pure;
    rad[i] = radical(d.ideals[i]).members;
  }
  for (int mi : d.maximal_idx) {
    int count = 0;
    for (size_t i = 0; i < d.ideals.size(); ++i)
      if (pure_flag[i] && rad[i] == d.primes[mi].underlying.members) ++count;
    if (count != 1) c.unique_pure_radical_per_maximal = false;
  }
  return c;
}

MpCriteria mp_criteria_impl(const SpectrumData& d, std::string* witness) {
  MpCriteria c;

  c.direct = true;
  for (const auto& p : d.primes) {
    int count = 0;
    for (int mi : d.minimal_idx)
      if (ideal_subset(d.primes[mi].underlying, p.underlying)) ++count;
    if (count != 1) {
      c.direct = false;
      if (witness)
        *witness = "prime " + p.underlying.brief() + " contains " +
                   std::to_string(count) + " minimal primes";
    }
  }
  if (c.direct && witness)
    *witness = "each prime contains exactly one minimal prime";

  c.kernel_comaximal = true;
  for (size_t a = 0; a < d.minimal_idx.size(); ++a)
    for (size_t b = a + 1; b < d.minimal_idx.size(); ++b)
      if (!ideal_sum(d.kernels[d.minimal_idx[a]].kernel,
                     d.kernels[d.minimal_idx[b]].kernel)
               .is_whole_ring())
        c.kernel_comaximal = false;

  c.localizations_quasi_prime = true;
  for (int mi : d.maximal_idx) {
    int minimal_count = 0;
    for (const auto& p : primes(d.localizations[mi].ring))
      if (p.is_minimal) ++minimal_count;
    if (minimal_count != 1) c.localizations_quasi_prime = false;
  }

  c.kernel_radical_prime = true;
  for (int mi : d.maximal_idx)
    if (!is_prime_ideal(d.kernels[mi].kernel_radical))
      c.kernel_radical_prime = false;

  c.chain_constant = true;
  for (size_t a = 0; a < d.primes.size(); ++a)
    for (size_t b = 0; b < d.primes.size(); ++b)
      if (ideal_subset(d.primes[a].underlying, d.primes[b].underlying) &&
          !d.kernels[a].kernel_radical.same_members(d.kernels[b].kernel_radical))
        c.chain_constant = false;
  return c;
}

GelfandCriteria gelfand_criteria_impl(const SpectrumData& d,
                                      std::vector<StarSet>* stars_out,
                                      std::string* witness) {
  GelfandCriteria c;

  c.direct = true;
  for (const auto& p : d.primes) {
    int over = 0;
    for (int mi : d.maximal_idx)
      if (ideal_subset(p.underlying, d.primes[mi].underlying)) ++over;
    if (over != 1) {
      c.direct = false;
      if (witness)
        *witness = "prime " + p.underlying.brief() + " lies under " +
                   std::to_string(over) + " maximal ideals";
    }
  }
  if (c.direct && witness)
    *witness = "each prime lies under exactly one maximal ideal";

  c.kernel_quotients_local = true;
  for (size_t i = 0; i < d.primes.size(); ++i) {
    int mc = 0;
    for (const auto& p : primes(d.localizations[i].ring))
      if (p.is_maximal) ++mc;
    if (mc != 1) c.kernel_quotients_local = false;
  }

  std::vector<StarSet> stars;
  for (const auto& p : d.primes) stars.push_back(star(p.underlying));
  c.star_ideal_all_primes = true;
  c.star_ideal_minimal_primes = true;
  for (size_t i = 0; i < d.primes.size(); ++i)
    if (!stars[i].is_ideal) {
      c.star_ideal_all_primes = false;
      if (d.primes[i].is_minimal) c.star_ideal_minimal_primes = false;
    }
  if (stars_out) *stars_out = std::move(stars);
  return c;
}

void require_agree(const std::string& flag, const TableRing& r,
                   std::initializer_list<std::pair<const char*, bool>> routes) {
  const bool first = routes.begin()->second;
  for (const auto& [name, value] : routes)
    if (value != first) {
      std::ostringstream os;
      os << flag << " criteria disagree on " << ringref(r) << ":";
      for (const auto& [n2, v2] : routes)
        os << " " << n2 << "=" << (v2 ? "true" : "false");
      throw ConsistencyError(os.str());
    }
}

}  // namespace

bool is_prime_ideal(const IdealHandle& ideal) {
  const TableRing& r = *ideal.ring;
  if (ideal.is_whole_ring()) return false;
  std::vector<int> comp;
  for (int x = 0; x < r.size(); ++x)
    if (!ideal.contains(x)) comp.push_back(x);
  for (int x : comp)
    for (int y : comp)
      if (ideal.contains(r.mul(x, y))) return false;
  return true;
}

std::vector<PrimeIdeal> primes(const RingPtr& ring) {
  auto en = enumerate_ideals(ring);
  if (en.truncated)
    throw Error("ideal enumeration truncated; spectrum unavailable for " +
                ring->label());
  return primes_from(ring, en.ideals);
}

KernelData kernel_of_localization(const PrimeIdeal& prime) {
  RingPtr ring = prime.underlying.ring;
  const TableRing& r = *ring;
  std::vector<int> members;
  for (int f = 0; f < r.size(); ++f) {
    bool in = false;
    for (int g = 0; g < r.size() && !in; ++g)
      if (!prime.underlying.contains(g) && r.mul(f, g) == r.zero()) in = true;
    if (in) members.push_back(f);
  }
  // The membership scan must produce an ideal; re-closing and comparing
  // catches both a broken scan and a non-prime input.
  IdealHandle closed = ideal_from_generators(ring, members);
  if (closed.members != members)
    throw ConsistencyError("localization kernel at " + prime.underlying.brief() +
                           " of " + ringref(r) + " is not an ideal");
  KernelData kd;
  kd.prime = prime;
  kd.kernel.ring = ring;
  kd.kernel.members = std::move(members);
  kd.kernel = with_generators(kd.kernel);
  kd.kernel_radical = with_generators(radical(kd.kernel));
  if (!ideal_subset(kd.kernel_radical, prime.underlying))
    throw ConsistencyError("radical of Ker at " + prime.underlying.brief() +
                           " of " + ringref(r) + " escapes the prime");
  const bool equal = kd.kernel_radical.same_members(prime.underlying);
  if (equal != prime.is_minimal)
    throw ConsistencyError("radical of Ker equals its prime iff the prime is "
                           "minimal; violated at " + prime.underlying.brief() +
                           " of " + ringref(r));
  return kd;
}

QuotientRing localize(const PrimeIdeal& prime) {
  KernelData kd = kernel_of_localization(prime);
  QuotientRing q = make_quotient(prime.underlying.ring, kd.kernel);
  int maximal_count = 0;
  for (const auto& p : primes(q.ring))
    if (p.is_maximal) ++maximal_count;
  if (maximal_count != 1)
    throw ConsistencyError("localization of " + ringref(*prime.underlying.ring) +
                           " at " + prime.underlying.brief() +
                           " is not local (" + std::to_string(maximal_count) +
                           " maximal ideals)");
  return q;
}

LessenedRadical lessened_radical(const RingPtr& ring) {
  LessenedRadical out;
  out.ring = ring;
  std::vector<int> inter(ring->size());
  for (int i = 0; i < ring->size(); ++i) inter[i] = i;
  for (const auto& p : primes(ring)) {
    if (!p.is_minimal) continue;
    KernelData kd = kernel_of_localization(p);
    std::vector<int> next;
    std::set_intersection(inter.begin(), inter.end(), kd.kernel.members.begin(),
                          kd.kernel.members.end(), std::back_inserter(next));
    inter = std::move(next);
  }
  out.nprime.ring = ring;
  out.nprime.members = std::move(inter);
  out.nprime = with_generators(out.nprime);
  out.nilradical = with_generators(radical(zero_ideal(ring)));
  if (!ideal_subset(out.nprime, out.nilradical))
    throw ConsistencyError("N' escapes the nilradical in " + ringref(*ring));
  return out;
}

ZeroDimCriteria zero_dim_criteria(const RingPtr& ring) {
  SpectrumData d = compute_data(ring);
  return zero_dim_criteria_impl(d, nullptr);
}

MpCriteria mp_criteria(const RingPtr& ring) {
  SpectrumData d = compute_data(ring);
  return mp_criteria_impl(d, nullptr);
}

GelfandCriteria gelfand_criteria(const RingPtr& ring) {
  SpectrumData d = compute_data(ring);
  return gelfand_criteria_impl(d, nullptr, nullptr);
}

std::vector<std::pair<std::string, const Claim*>> ClassificationReport::flag_list()
    const {
  return {
      {"zero_dimensional", &zero_dimensional},
      {"pi_regular", &pi_regular},
      {"reduced", &reduced},
      {"quasi_prime", &quasi_prime},
      {"local", &local},
      {"field", &field},
      {"mp", &mp},
      {"gelfand", &gelfand},
      {"clean", &clean},
      {"lessened", &lessened},
      {"locally_lessened", &locally_lessened},
      {"purified", &purified},
  };
}

std::map<std::string, bool> ClassificationReport::flag_values() const {
  std::map<std::string, bool> out;
  for (const auto& [name, claim] : flag_list()) out[name] = claim->value;
  return out;
}

ClassificationReport classify(const RingPtr& ring) {
  const TableRing& r = *ring;
  ClassificationReport rep;
  rep.ring = ring;

  SpectrumData d = compute_data(ring);
  rep.spectrum = d.primes;
  rep.kernels = d.kernels;

  // ---- zero dimensionality ----------------------------------------------
  PiRegularWitness pw;
  ZeroDimCriteria zc = zero_dim_criteria_impl(d, &pw);
  require_agree("zero-dimensionality", r,
                {{"all-primes-maximal", zc.all_primes_maximal},
                 {"pi-regular", zc.pi_regular},
                 {"surjective-localization", zc.localizations_local},
                 {"maximal-is-radical-of-unique-pure-ideal",
                  zc.unique_pure_radical_per_maximal}});
  rep.zero_dimensional = {zc.all_primes_maximal,
                          "all " + std::to_string(d.primes.size()) +
                              " primes are both minimal and maximal"};
  {
    std::ostringstream os;
    os << "every f splits; deepest case f=" << r.elem_name(pw.f) << " with n="
       << pw.n << ", g=" << r.elem_name(pw.g);
    rep.pi_regular = {zc.pi_regular, os.str()};
  }

  // ---- mp ------------------------------------------------------------------
  std::string mp_witness;
  MpCriteria mc = mp_criteria_impl(d, &mp_witness);
  require_agree("mp", r,
                {{"unique-minimal-under-each-prime", mc.direct},
                 {"kernel-comaximality", mc.kernel_comaximal},
                 {"localizations-quasi-prime", mc.localizations_quasi_prime},
                 {"kernel-radical-prime-at-maximals", mc.kernel_radical_prime},
                 {"kernel-radical-constant-on-chains", mc.chain_constant}});
  rep.mp = {mc.direct, mp_witness};

  // ---- reduced ----------------------------------------------------------------
  {
    std::vector<int> inter(r.size());
    for (int i = 0; i < r.size(); ++i) inter[i] = i;
    for (int mi : d.minimal_idx) {
      std::vector<int> next;
      std::set_intersection(inter.begin(), inter.end(),
                            d.kernels[mi].kernel.members.begin(),
                            d.kernels[mi].kernel.members.end(),
                            std::back_inserter(next));
      inter = std::move(next);
    }
    rep.nprime.ring = ring;
    rep.nprime.members = std::move(inter);
    rep.nprime = with_generators(rep.nprime);
    rep.nilradical = with_generators(radical(zero_ideal(ring)));
    if (!ideal_subset(rep.nprime, rep.nilradical))
      throw ConsistencyError("N' escapes the nilradical in " + ringref(r));
  }

  const bool reduced = rep.nilradical.is_zero();
  if (reduced) {
    rep.reduced = {true, "no nonzero nilpotents"};
  } else {
    int f = rep.nilradical.members[0] == r.zero() ? rep.nilradical.members[1]
                                                  : rep.nilradical.members[0];
    int k = 1, x = f;
    while (x != r.zero()) {
      x = r.mul(x, f);
      ++k;
    }
    rep.reduced = {false, "nilpotent " + r.elem_name(f) + " with " +
                              r.elem_name(f) + "^" + std::to_string(k) + " = 0"};
  }

  bool kernel_prime_at_maximals = true;
  for (int mi : d.maximal_idx)
    if (!is_prime_ideal(d.kernels[mi].kernel)) kernel_prime_at_maximals = false;
  require_agree("reduced-mp", r,
                {{"reduced-and-mp", reduced && mc.direct},
                 {"kernel-prime-at-maximals", kernel_prime_at_maximals}});

  // ---- quasi-prime, local, field ------------------------------------------
  if (d.minimal_idx.size() == 1) {
    rep.quasi_prime = {true, "unique minimal prime " +
                                 d.primes[d.minimal_idx[0]].underlying.brief()};
  } else {
    rep.quasi_prime = {false,
                       std::to_string(d.minimal_idx.size()) + " minimal primes"};
  }

  if (d.maximal_idx.size() == 1) {
    rep.local = {true, "unique maximal ideal " +
                           d.primes[d.maximal_idx[0]].underlying.brief()};
  } else {
    rep.local = {false, d.maximal_idx.empty()
                            ? "the zero ring has no maximal ideal"
                            : std::to_string(d.maximal_idx.size()) +
                                  " maximal ideals"};
  }

  UnitGroup ug = units(r);
  {
    bool field_direct = d.primes.size() == 1 &&
                        d.primes[0].underlying.is_zero() && r.size() > 1;
    bool field_units =
        static_cast<int>(ug.units.size()) == r.size() - 1 && r.size() > 1;
    require_agree("field", r,
                  {{"zero-ideal-is-the-only-prime", field_direct},
                   {"all-nonzero-elements-unit", field_units}});
    std::string w;
    if (field_direct) {
      w = "every nonzero element is a unit";
    } else if (r.size() == 1) {
      w = "the zero ring is not a field";
    } else {
      for (int x = 0; x < r.size(); ++x)
        if (x != r.zero() && ug.inverse[x] < 0) {
          w = "non-unit " + r.elem_name(x);
          break;
        }
    }
    rep.field = {field_direct, w};
  }

  // ---- gelfand ---------------------------------------------------------------
  std::string gf_witness;
  GelfandCriteria gc = gelfand_criteria_impl(d, nullptr, &gf_witness);
  require_agree("gelfand", r,
                {{"unique-maximal-over-each-prime", gc.direct},
                 {"kernel-quotients-local", gc.kernel_quotients_local},
                 {"star-of-prime-is-ideal", gc.star_ideal_all_primes},
                 {"star-of-minimal-prime-is-ideal", gc.star_ideal_minimal_primes}});
  rep.gelfand = {gc.direct, gf_witness};

  // ---- clean -----------------------------------------------------------------
  bool clean = true;
  std::string clean_witness;
  rep.clean_pairs.assign(r.size(), {-1, -1});
  for (int x = 0; x < r.size(); ++x) {
    bool found = false;
    for (int u : ug.units) {
      int e = r.sub(x, u);
      if (r.mul(e, e) == e) {
        rep.clean_pairs[x] = {u, e};
        found = true;
        break;
      }
    }
    if (!found) {
      clean = false;
      clean_witness = r.elem_name(x) + " is not a unit plus an idempotent";
      break;
    }
  }
  if (clean)
    clean_witness = "every element splits; e.g. " + r.elem_name(r.zero()) +
                    " = " + r.elem_name(rep.clean_pairs[r.zero()].first) + " + " +
                    r.elem_name(rep.clean_pairs[r.zero()].second);
  rep.clean = {clean, clean_witness};

  // ---- lessened family ---------------------------------------------------------
  if (rep.nprime.is_zero()) {
    rep.lessened = {true, "kernels at minimal primes intersect to (0)"};
  } else {
    int f = rep.nprime.members[0] == r.zero() ? rep.nprime.members[1]
                                              : rep.nprime.members[0];
    rep.lessened = {false,
                    r.elem_name(f) + " lies in Ker at every minimal prime"};
  }

  bool loc_lessened = true;
  std::string ll_witness = "each localization at a maximal ideal is lessened";
  for (int mi : d.maximal_idx) {
    LessenedRadical llr = lessened_radical(d.localizations[mi].ring);
    if (!llr.nprime.is_zero()) {
      loc_lessened = false;
      ll_witness = "localization at " + d.primes[mi].underlying.brief() +
                   " is not lessened";
    }
  }
  rep.locally_lessened = {loc_lessened, ll_witness};

  std::vector<int> idem = idempotents(r);
  bool purified = true;
  std::string pu_witness =
      d.minimal_idx.size() < 2 ? "fewer than two minimal primes" : "";
  for (size_t a = 0; a < d.minimal_idx.size() && purified; ++a)
    for (size_t b = 0; b < d.minimal_idx.size(); ++b) {
      if (a == b) continue;
      const auto& p = d.primes[d.minimal_idx[a]].underlying;
      const auto& q = d.primes[d.minimal_idx[b]].underlying;
      int sep = -1;
      for (int e : idem)
        if (p.contains(e) && !q.contains(e)) {
          sep = e;
          break;
        }
      if (sep < 0) {
        purified = false;
        pu_witness = "no idempotent separates " + p.brief() + " from " + q.brief();
        break;
      }
      rep.purified_separators.push_back(
          {d.minimal_idx[a], d.minimal_idx[b], sep});
      if (pu_witness.empty())
        pu_witness = "e.g. e=" + r.elem_name(sep) + " lies in " + p.brief() +
                     " but not " + q.brief();
    }
  rep.purified = {purified, pu_witness};

  return rep;
}

Retraction min_retraction(const RingPtr& ring) {
  Retraction ret;
  ret.primes = primes(ring);
  std::vector<int> minimal_idx;
  for (size_t i = 0; i < ret.primes.size(); ++i)
    if (ret.primes[i].is_minimal) minimal_idx.push_back(static_cast<int>(i));
  for (const auto& p : ret.primes) {
    int under = 0;
    for (int mi : minimal_idx)
      if (ideal_subset(ret.primes[mi].underlying, p.underlying)) ++under;
    if (under != 1)
      throw Error("min retraction requires an mp-ring; " + ring->label() +
                  " has a prime over " + std::to_string(under) +
                  " minimal primes");
  }
  for (size_t i = 0; i < ret.primes.size(); ++i) {
    KernelData kd = kernel_of_localization(ret.primes[i]);
    int target = -1;
    for (size_t j = 0; j < ret.primes.size(); ++j)
      if (ret.primes[j].underlying.same_members(kd.kernel_radical)) {
        target = static_cast<int>(j);
        break;
      }
    if (target < 0)
      throw ConsistencyError("radical of Ker at " +
                             ret.primes[i].underlying.brief() + " of \"" +
                             ring->label() + "\" is not a prime");
    if (!ret.primes[target].is_minimal ||
        !ideal_subset(ret.primes[target].underlying, ret.primes[i].underlying))
      throw ConsistencyError("min retraction image is not a minimal prime below "
                             "its argument in \"" + ring->label() + "\"");
    if (ret.primes[i].is_minimal && target != static_cast<int>(i))
      throw ConsistencyError("min retraction fails to fix the minimal prime " +
                             ret.primes[i].underlying.brief() + " of \"" +
                             ring->label() + "\"");
    ret.image.push_back(target);
  }
  return ret;
}

Retraction max_retraction(const RingPtr& ring) {
  Retraction ret;
  ret.primes = primes(ring);
  std::vector<int> maximal_idx;
  for (size_t i = 0; i < ret.primes.size(); ++i)
    if (ret.primes[i].is_maximal) maximal_idx.push_back(static_cast<int>(i));
  for (const auto& p : ret.primes) {
    int over = 0;
    for (int mi : maximal_idx)
      if (ideal_subset(p.underlying, ret.primes[mi].underlying)) ++over;
    if (over != 1)
      throw Error("max retraction requires a Gelfand ring; " + ring->label() +
                  " has a prime under " + std::to_string(over) +
                  " maximal ideals");
  }
  for (size_t i = 0; i < ret.primes.size(); ++i) {
    StarSet st = star(ret.primes[i].underlying);
    if (!st.is_ideal)
      throw ConsistencyError("star of prime " + ret.primes[i].underlying.brief() +
                             " of \"" + ring->label() +
                             "\" is not an ideal, contradicting the Gelfand "
                             "hypothesis");
    int target = -1;
    for (size_t j = 0; j < ret.primes.size(); ++j)
      if (ret.primes[j].underlying.members == st.members) {
        target = static_cast<int>(j);
        break;
      }
    if (target < 0 || !ret.primes[target].is_maximal ||
        !ideal_subset(ret.primes[i].underlying, ret.primes[target].underlying))
      throw ConsistencyError("star of prime " + ret.primes[i].underlying.brief() +
                             " of \"" + ring->label() +
                             "\" is not the maximal ideal over it");
    if (ret.primes[i].is_maximal && target != static_cast<int>(i))
      throw ConsistencyError("max retraction fails to fix the maximal ideal " +
                             ret.primes[i].underlying.brief() + " of \"" +
                             ring->label() + "\"");
    ret.image.push_back(target);
  }
  return ret;
}

}  // namespace spectra
