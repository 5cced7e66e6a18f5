#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "spectra/report.hpp"
#include "spectra/verify.hpp"

using namespace spectra;

namespace {

void emit(const Report& report, bool as_json) {
  if (as_json)
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
}

int run(int argc, char** argv) {
  CLI::App app{"spectra-lab: finite commutative ring spectra toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  int degree_bound = 8;
  int size_cap = 0;
  app.add_flag("--json", as_json, "emit the report as JSON");
  app.add_option("--degree-bound", degree_bound,
                 "witness search bound for monomial rings");
  app.add_option("--size-cap", size_cap, "override the ring size cap");

  std::string expr_text, kind = "local", at, ideal_gens, suite, predicate, corpus;
  int poset_points = 5;
  int max_ring_size = 0;

  auto* c_classify = app.add_subcommand("classify", "full property battery");
  c_classify->add_option("expr", expr_text, "ring expression")->required();

  auto* c_decompose = app.add_subcommand("decompose", "CRT structure theorems");
  c_decompose->add_option("expr", expr_text, "ring expression")->required();
  c_decompose->add_option("--kind", kind, "local|fields|domains|lqp");

  auto* c_kernel = app.add_subcommand("kernel", "localization kernel at a prime");
  c_kernel->add_option("expr", expr_text, "ring expression")->required();
  c_kernel->add_option("--at", at, "prime: element literals or variable names")
      ->required();

  auto* c_star = app.add_subcommand("star", "the set {f : Af + I proper}");
  c_star->add_option("expr", expr_text, "ring expression")->required();
  c_star->add_option("--ideal", ideal_gens, "ideal generators (default: (0))");

  auto* c_verify = app.add_subcommand("verify", "run a theorem suite");
  c_verify->add_option("suite", suite, "suite name")->required();
  c_verify->add_option("--corpus", corpus, "ring corpus spec");
  c_verify->add_option("--size", poset_points, "poset corpus: points up to");
  c_verify->add_option("--posets", poset_points, "alias of --size");
  c_verify->add_option("--max-ring-size", max_ring_size,
                       "skip per-ideal checks beyond this ring size");

  auto* c_search = app.add_subcommand("search", "smallest corpus match");
  c_search->add_option("predicate", predicate, "boolean predicate over flags")
      ->required();
  c_search->add_option("--corpus", corpus, "ring corpus spec");
  int search_posets = 0;
  c_search->add_option("--posets", search_posets,
                       "search posets up to this many points instead");

  auto* c_poset = app.add_subcommand("poset", "shape flags, clopens, retractions");
  c_poset->add_option("expr", expr_text, "poset literal")->required();

  // Allow the global flags (--json, --degree-bound, --size-cap) after the
  // subcommand too.
  for (auto* sub : {c_classify, c_decompose, c_kernel, c_star, c_verify,
                    c_search, c_poset})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  }

  if (const char* env = std::getenv("SPECTRA_LAB_SIZE_CAP"); env && size_cap == 0)
    size_cap = std::atoi(env);
  if (size_cap > 0) set_ring_size_cap(size_cap);

  Report rep;
  if (c_classify->parsed()) {
    rep = classify_report(parse(expr_text), degree_bound);
  } else if (c_decompose->parsed()) {
    rep = decompose_report(parse(expr_text), kind);
  } else if (c_kernel->parsed()) {
    rep = kernel_report(parse(expr_text), at, degree_bound);
  } else if (c_star->parsed()) {
    rep = star_report(parse(expr_text), ideal_gens);
  } else if (c_poset->parsed()) {
    rep = poset_report(parse(expr_text));
  } else if (c_verify->parsed()) {
    SuiteOptions opts;
    if (!corpus.empty()) opts.corpus = corpus;
    opts.poset_points = poset_points;
    opts.degree_bound = degree_bound;
    opts.max_ring_size = max_ring_size;
    rep = verify_report(run_suite(suite, opts));
  } else if (c_search->parsed()) {
    if (search_posets > 0)
      rep = search_posets_report(predicate, search_posets);
    else
      rep = search_rings_report(predicate,
                                corpus.empty() ? "zmod:2..20" : corpus);
  }

  emit(rep, as_json);
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
