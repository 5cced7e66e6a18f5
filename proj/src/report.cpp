#include "spectra/report.hpp"

#include <algorithm>
#include <sstream>

#include "spectra/spectrum.hpp"
#include "spectra/verify.hpp"

namespace spectra {

using nlohmann::json;

nlohmann::json Report::to_json() const {
  json j;
  j["kind"] = kind;
  j["subject"] = subject;
  j["body"] = body;
  json w = json::array();
  for (const auto& [claim, witness] : witnesses)
    w.push_back(json{{"claim", claim}, {"witness", witness}});
  j["witnesses"] = w;
  return j;
}

namespace {

void render(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    int i = 0;
    for (const auto& v : j) render(v, prefix + "[" + std::to_string(i++) + "]", os);
    if (j.empty()) os << "  " << prefix << " = []\n";
  } else {
    os << "  " << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump())
       << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << kind << " " << subject << "\n";
  render(body, "", os);
  if (!witnesses.empty()) {
    os << "witnesses:\n";
    for (const auto& [claim, witness] : witnesses)
      os << "  " << claim << ": " << witness << "\n";
  }
  return os.str();
}

namespace {

json ideal_json(const IdealHandle& ideal) {
  json j;
  j["brief"] = ideal.brief();
  json members = json::array();
  for (int m : ideal.members) members.push_back(ideal.ring->elem_name(m));
  j["members"] = members;
  return j;
}

void add_claim(Report& report, json& flags, const std::string& name,
               bool value, const std::string& witness) {
  flags[name] = value;
  report.witnesses.emplace_back(name, witness);
}

Report classify_table_ring(const RingExpr& expr, const RingPtr& ring) {
  Report rep;
  rep.kind = "classify";
  rep.subject = pretty_print(expr);
  ClassificationReport c = classify(ring);

  json flags;
  for (const auto& [name, claim] : c.flag_list())
    add_claim(rep, flags, name, claim->value, claim->witness);

  json spectrum = json::array();
  for (size_t i = 0; i < c.spectrum.size(); ++i) {
    json p;
    p["ideal"] = ideal_json(c.spectrum[i].underlying);
    p["minimal"] = c.spectrum[i].is_minimal;
    p["maximal"] = c.spectrum[i].is_maximal;
    p["kernel"] = ideal_json(c.kernels[i].kernel);
    p["kernel_radical"] = ideal_json(c.kernels[i].kernel_radical);
    spectrum.push_back(p);
    const std::string path = "spectrum[" + std::to_string(i) + "]";
    rep.witnesses.emplace_back(path + ".minimal",
                               "inclusion scan against the full spectrum");
    rep.witnesses.emplace_back(path + ".maximal",
                               "inclusion scan against the full spectrum");
  }

  rep.body["ring"] = {{"label", ring->label()}, {"size", ring->size()}};
  rep.body["flags"] = flags;
  rep.body["spectrum"] = spectrum;
  rep.body["nprime"] = ideal_json(c.nprime);
  rep.body["nilradical"] = ideal_json(c.nilradical);
  return rep;
}

Report classify_monomial_ring(const RingExpr& expr, const MonoRingPtr& ring,
                              int degree_bound) {
  Report rep;
  rep.kind = "classify";
  rep.subject = pretty_print(expr);

  auto ps = minimal_primes(ring);
  json primes_j = json::array();
  for (const auto& p : ps) primes_j.push_back(p.str());

  json flags;
  {
    bool red = is_reduced(ring);
    std::string w = "all generators squarefree";
    if (!red)
      for (const auto& g : ring->gens())
        for (int e : g)
          if (e > 1) {
            w = "generator " + ring->monomial_str(g) + " is not squarefree";
            break;
          }
    add_claim(rep, flags, "reduced", red, w);
  }
  {
    bool qp = is_quasi_prime(ring);
    add_claim(rep, flags, "quasi_prime", qp,
              std::to_string(ps.size()) + " minimal prime(s)");
    add_claim(rep, flags, "mp", is_mp(ring),
              qp ? "unique minimal prime" : "distinct minimal primes share "
                                            "the maximal ideal of all variables");
  }

  LessenedResult les = is_lessened_up_to(ring, degree_bound);
  json lj;
  lj["degree_bound"] = les.bound_used;
  lj["bound_needed"] = les.bound_needed;
  switch (les.verdict) {
    case LessenedVerdict::lessened:
      lj["verdict"] = "lessened";
      rep.witnesses.emplace_back("lessened",
                                 "no nonzero monomial lies in every kernel (scan "
                                 "complete at the needed bound)");
      break;
    case LessenedVerdict::not_lessened:
      lj["verdict"] = "not_lessened";
      lj["witness"] = ring->monomial_str(*les.witness);
      rep.witnesses.emplace_back("lessened",
                                 ring->monomial_str(*les.witness) +
                                     " lies in the kernel at every minimal prime");
      break;
    case LessenedVerdict::unknown:
      lj["verdict"] = "unknown";
      rep.witnesses.emplace_back(
          "lessened", "scan bound " + std::to_string(les.bound_used) +
                          " below the decisive bound " +
                          std::to_string(les.bound_needed));
      rep.exit_code = 3;
      break;
  }

  rep.body["ring"] = {{"label", ring->label()},
                      {"characteristic", ring->characteristic()},
                      {"vars", ring->vars()}};
  rep.body["flags"] = flags;
  rep.body["minimal_primes"] = primes_j;
  rep.body["lessened"] = lj;
  return rep;
}

std::vector<std::string> split_literals(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',' && depth == 0) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
      continue;
    }
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    cur += c;
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> resolve_elements(const RingPtr& ring, const std::string& spec) {
  std::vector<int> out;
  for (const auto& lit : split_literals(spec)) {
    int found = -1;
    for (int i = 0; i < ring->size(); ++i)
      if (ring->elem_name(i) == lit) {
        found = i;
        break;
      }
    if (found < 0)
      throw Error("no element named \"" + lit + "\" in " + ring->label());
    out.push_back(found);
  }
  return out;
}

}  // namespace

Report classify_report(const RingExpr& expr, int degree_bound) {
  BuiltObject obj = build(expr);
  if (std::holds_alternative<RingPtr>(obj))
    return classify_table_ring(expr, std::get<RingPtr>(obj));
  if (std::holds_alternative<MonoRingPtr>(obj))
    return classify_monomial_ring(expr, std::get<MonoRingPtr>(obj), degree_bound);
  throw Error("classify expects a ring expression; use the poset command for "
              "poset literals");
}

Report decompose_report(const RingExpr& expr, const std::string& kind) {
  RingPtr ring = build_table_ring(expr);
  Report rep;
  rep.kind = "decompose";
  rep.subject = pretty_print(expr);
  rep.body["ring"] = {{"label", ring->label()}, {"size", ring->size()}};
  rep.body["requested_kind"] = kind;

  DecomposeResult res;
  if (kind == "local") {
    res.decomposition = decompose_local(ring);
  } else if (kind == "lqp") {
    res.decomposition = decompose_lessened_quasi_prime(ring);
  } else if (kind == "domains") {
    res = decompose_domains(ring);
  } else if (kind == "fields") {
    res = decompose_fields(ring);
  } else {
    throw Error("unknown decomposition kind \"" + kind +
                "\"; expected local|fields|domains|lqp");
  }

  if (res.refused()) {
    rep.body["outcome"] = "refused";
    rep.body["reason"] = res.refusal->reason;
    rep.witnesses.emplace_back("refused", res.refusal->witness);
    rep.exit_code = 2;
    return rep;
  }

  const Decomposition& d = *res.decomposition;
  rep.body["outcome"] = "decomposed";
  json factors = json::array();
  for (size_t i = 0; i < d.factors.size(); ++i) {
    json f;
    f["label"] = d.factors[i]->label();
    f["size"] = d.factors[i]->size();
    f["canonical"] = d.canonical_names[i];
    factors.push_back(f);
  }
  rep.body["factors"] = factors;
  json kernels = json::array();
  for (const auto& k : d.kernels) kernels.push_back(k.brief());
  rep.body["kernels"] = kernels;

  json checks;
  const std::string scope = "verified elementwise over " +
                            std::to_string(ring->size()) + " elements";
  add_claim(rep, checks, "kernels_pairwise_comaximal", true, scope);
  add_claim(rep, checks, "kernels_intersect_to_zero", true, scope);
  add_claim(rep, checks, "crt_map_bijective", true, scope);
  add_claim(rep, checks, "factors_satisfy_kind_predicate", true,
            "each factor checked against the " + to_string(d.kind) +
                " predicate");
  rep.body["checks"] = checks;
  return rep;
}

Report kernel_report(const RingExpr& expr, const std::string& at,
                     int degree_bound) {
  BuiltObject obj = build(expr);
  Report rep;
  rep.kind = "kernel";
  rep.subject = pretty_print(expr);

  if (std::holds_alternative<RingPtr>(obj)) {
    RingPtr ring = std::get<RingPtr>(obj);
    IdealHandle gen = ideal_from_generators(ring, resolve_elements(ring, at));
    auto ps = primes(ring);
    const PrimeIdeal* prime = nullptr;
    for (const auto& p : ps)
      if (p.underlying.members == gen.members) prime = &p;
    if (!prime)
      throw Error("unknown prime spec \"" + at + "\": the ideal " + gen.brief() +
                  " is not a prime ideal of " + ring->label());
    KernelData kd = kernel_of_localization(*prime);
    rep.body["ring"] = {{"label", ring->label()}, {"size", ring->size()}};
    rep.body["prime"] = ideal_json(prime->underlying);
    rep.body["kernel"] = ideal_json(kd.kernel);
    rep.body["kernel_radical"] = ideal_json(kd.kernel_radical);
    json checks;
    add_claim(rep, checks, "radical_inside_prime", true,
              "membership scan over " + std::to_string(ring->size()) +
                  " elements");
    add_claim(rep, checks, "radical_equals_prime", prime->is_minimal,
              "equality holds exactly when the prime is minimal");
    rep.body["checks"] = checks;
    return rep;
  }

  if (std::holds_alternative<MonoRingPtr>(obj)) {
    MonoRingPtr ring = std::get<MonoRingPtr>(obj);
    std::vector<std::string> names = split_literals(at);
    std::vector<int> vars;
    for (const auto& nm : names) {
      auto it = std::find(ring->vars().begin(), ring->vars().end(), nm);
      if (it == ring->vars().end())
        throw Error("unknown variable \"" + nm + "\" in " + ring->label());
      vars.push_back(static_cast<int>(it - ring->vars().begin()));
    }
    std::sort(vars.begin(), vars.end());
    const VariablePrime* prime = nullptr;
    auto ps = minimal_primes(ring);
    for (const auto& p : ps)
      if (p.vars_in == vars) prime = &p;
    if (!prime)
      throw Error("unknown prime spec \"" + at + "\": (" + at +
                  ") is not a minimal prime of " + ring->label());

    rep.body["ring"] = {{"label", ring->label()},
                        {"characteristic", ring->characteristic()}};
    rep.body["prime"] = prime->str();
    rep.body["degree_bound"] = degree_bound;
    const int display_bound = std::max(2, ring->max_generator_degree());
    json monomials = json::array();
    bool any_unknown = false;
    for (int d = 1; d <= display_bound; ++d)
      for (const auto& m : nf_monomials_of_degree(ring, d)) {
        auto v = kernel_membership(NFPoly::monomial(ring, m), *prime, degree_bound);
        json mj;
        mj["monomial"] = ring->monomial_str(m);
        switch (v.verdict) {
          case Membership::in:
            mj["verdict"] = "in";
            mj["witness"] = ring->monomial_str(*v.witness);
            rep.witnesses.emplace_back(
                ring->monomial_str(m) + " in Ker",
                ring->monomial_str(m) + " * " + ring->monomial_str(*v.witness) +
                    " = 0 with " + ring->monomial_str(*v.witness) + " outside " +
                    prime->str());
            break;
          case Membership::out:
            mj["verdict"] = "out";
            rep.witnesses.emplace_back(
                ring->monomial_str(m) + " not in Ker",
                "no outside monomial of degree <= " +
                    std::to_string(v.bound_used) + " kills it (complete scan)");
            break;
          case Membership::unknown:
            mj["verdict"] = "unknown";
            any_unknown = true;
            break;
        }
        monomials.push_back(mj);
      }
    rep.body["monomials"] = monomials;
    if (any_unknown) rep.exit_code = 3;
    return rep;
  }
  throw Error("kernel expects a ring expression");
}

Report star_report(const RingExpr& expr, const std::string& ideal_gens) {
  RingPtr ring = build_table_ring(expr);
  Report rep;
  rep.kind = "star";
  rep.subject = pretty_print(expr);
  IdealHandle ideal = ideal_from_generators(ring, resolve_elements(ring, ideal_gens));
  StarSet s = star(ideal);

  rep.body["ring"] = {{"label", ring->label()}, {"size", ring->size()}};
  rep.body["ideal"] = ideal_json(ideal);
  json members = json::array();
  for (int m : s.members) members.push_back(ring->elem_name(m));
  rep.body["members"] = members;

  json checks;
  add_claim(rep, checks, "is_ideal", s.is_ideal,
            s.is_ideal ? "closed under addition"
                       : "not closed under addition");
  add_claim(rep, checks, "equals_union_of_maximals_containing_ideal", true,
            "checked inside the star computation");

  bool equals_ideal = !ideal.is_whole_ring() && s.members == ideal.members;
  bool ideal_is_maximal = false;
  if (!ideal.is_whole_ring()) {
    for (const auto& p : primes(ring))
      if (p.is_maximal && p.underlying.members == ideal.members)
        ideal_is_maximal = true;
  }
  add_claim(rep, checks, "equals_ideal", equals_ideal,
            equals_ideal ? "star reproduces the ideal (so it is maximal)"
                         : "star strictly contains the ideal or input is the "
                           "unit ideal");
  if (equals_ideal != ideal_is_maximal)
    throw ConsistencyError("star(I) = I must hold exactly for maximal I; "
                           "violated by " + ideal.brief() + " in " +
                           ring->label());
  rep.body["checks"] = checks;
  return rep;
}

Report verify_report(const SuiteResult& result) {
  Report rep;
  rep.kind = "verify";
  rep.subject = result.suite;
  rep.body["suite"] = result.suite;
  rep.body["scope"] = result.scope;
  rep.body["checked"] = result.checked;
  rep.body["failed"] = result.failed;
  json checks;
  checks["passed"] = result.passed();
  rep.witnesses.emplace_back(
      "passed", result.passed()
                    ? std::to_string(result.checked) + " checks passed"
                    : result.first_counterwitness);
  rep.body["checks"] = checks;
  if (!result.passed())
    rep.body["first_counterwitness"] = result.first_counterwitness;
  if (!result.notes.empty()) rep.body["notes"] = result.notes;
  rep.exit_code = result.passed() ? 0 : 1;
  return rep;
}

Report search_rings_report(const std::string& predicate,
                           const std::string& corpus_spec) {
  Report rep;
  rep.kind = "search";
  rep.subject = predicate;
  rep.body["predicate"] = predicate;
  rep.body["scope"] = corpus_spec;
  long checked = 0;
  for (const auto& ring : build_ring_corpus(corpus_spec).rings) {
    ++checked;
    if (eval_predicate(predicate, classify(ring).flag_values())) {
      rep.body["checked"] = checked;
      rep.body["outcome"] = "found";
      rep.body["match"] = ring->label();
      rep.witnesses.emplace_back(
          "match", "first corpus member satisfying the predicate");
      return rep;
    }
  }
  rep.body["checked"] = checked;
  rep.body["outcome"] = "exhausted";
  rep.witnesses.emplace_back("exhausted",
                             "no corpus member satisfies the predicate");
  return rep;
}

Report search_posets_report(const std::string& predicate, int max_points) {
  Report rep;
  rep.kind = "search";
  rep.subject = predicate;
  rep.body["predicate"] = predicate;
  rep.body["scope"] = "posets up to " + std::to_string(max_points) + " points";
  long checked = 0;
  for (const auto& p : build_poset_corpus(max_points)) {
    ++checked;
    if (eval_predicate(predicate, shape_flags(p).flag_values())) {
      rep.body["checked"] = checked;
      rep.body["outcome"] = "found";
      rep.body["match"] = p.literal();
      rep.witnesses.emplace_back("match",
                                 "smallest poset satisfying the predicate");
      return rep;
    }
  }
  rep.body["checked"] = checked;
  rep.body["outcome"] = "exhausted";
  rep.witnesses.emplace_back("exhausted",
                             "no poset satisfies the predicate");
  return rep;
}

Report poset_report(const RingExpr& expr) {
  BuiltObject obj = build(expr);
  if (!std::holds_alternative<SpecPoset>(obj))
    throw Error("poset command expects a poset literal");
  const SpecPoset& p = std::get<SpecPoset>(obj);

  Report rep;
  rep.kind = "poset";
  rep.subject = pretty_print(expr);
  rep.body["points"] = p.names;
  rep.body["literal"] = p.literal();
  rep.body["dual"] = prime_inverse(p).literal();

  ShapeFlags f = shape_flags(p);
  json flags;
  for (const auto& [name, claim] : f.flag_list())
    add_claim(rep, flags, name, claim->value, claim->witness);
  rep.body["flags"] = flags;

  auto mask_names = [&](uint32_t mask) {
    json arr = json::array();
    for (int i = 0; i < p.n; ++i)
      if (mask >> i & 1) arr.push_back(p.name(i));
    return arr;
  };
  TopologyView zar{&p, Topology::zariski}, flat{&p, Topology::flat};
  auto zc = zar.clopens();
  auto fc = flat.clopens();
  auto cu = component_unions(p);
  json clopens;
  json zca = json::array();
  for (uint32_t m : zc) zca.push_back(mask_names(m));
  clopens["zariski"] = zca;
  json checks;
  add_claim(rep, checks, "zariski_clopens_equal_flat_clopens", zc == fc,
            "both computed by direct subset scans");
  add_claim(rep, checks, "clopens_equal_component_unions", zc == cu,
            "components computed by graph search");
  rep.body["clopens"] = clopens;

  auto retraction_json = [&](const PosetRetraction& r) {
    json j;
    if (r.refused) {
      j["outcome"] = "refused";
      j["witness"] = r.refusal_witness;
      return j;
    }
    j["outcome"] = "ok";
    json img;
    for (int i = 0; i < p.n; ++i) img[p.name(i)] = p.name(r.image[i]);
    j["image"] = img;
    j["flat_continuous"] = r.flat_continuous;
    j["zariski_continuous"] = r.zariski_continuous;
    return j;
  };
  PosetRetraction rmin = min_retraction_poset(p);
  PosetRetraction rmax = max_retraction_poset(p);
  rep.body["min_retraction"] = retraction_json(rmin);
  rep.body["max_retraction"] = retraction_json(rmax);
  if (!rmin.refused) {
    rep.witnesses.emplace_back("min_retraction.flat_continuous",
                               "preimages of induced opens are up-closed");
    rep.witnesses.emplace_back("min_retraction.zariski_continuous",
                               "preimages of induced opens are down-closed");
  }
  if (!rmax.refused) {
    rep.witnesses.emplace_back("max_retraction.zariski_continuous",
                               "preimages of induced opens are down-closed");
    rep.witnesses.emplace_back(
        "max_retraction.flat_continuous",
        rmax.flat_continuous
            ? "preimages of induced flat opens are up-closed"
            : "some induced flat open has a preimage that is not up-closed");
  }
  rep.body["checks"] = checks;
  return rep;
}

}  // namespace spectra
