#pragma once

#include <map>
#include <string>
#include <vector>

#include "spectra/corpus.hpp"

namespace spectra {

struct SuiteOptions {
  std::string corpus = "zmod:1..20";
  int poset_points = 5;
  int degree_bound = 8;
  /// When positive, per-ideal checks skip rings larger than this.
  int max_ring_size = 0;
  /// Ranges for the product-theorem suite.
  int pair_lo = 2, pair_hi = 9;
  bool triples = true;
  int triple_lo = 2, triple_hi = 6;
};

struct SuiteResult {
  std::string suite;
  std::string scope;
  long checked = 0;
  long failed = 0;
  std::string first_counterwitness;
  std::vector<std::string> notes;
  bool passed() const { return failed == 0; }
};

/// The registered suite names, in registry order.
std::vector<std::string> suite_names();

/// Runs one named suite. Unknown names raise Error.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

/// Evaluates a boolean predicate over named flags: idents, !, &&, ||,
/// parentheses. Unknown flags raise Error.
bool eval_predicate(const std::string& expr, const std::map<std::string, bool>& flags);

}  // namespace spectra
