#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spectra/decompose.hpp"
#include "spectra/expr.hpp"

namespace spectra {

/// A command result: structured body plus one (claim, witness) pair for
/// every boolean claim the body makes. JSON serialization is stable
/// (objects carry sorted keys).
struct Report {
  std::string kind;     // classify | decompose | kernel | star | verify | search | poset
  std::string subject;  // pretty-printed expression or scope description
  nlohmann::json body;
  std::vector<std::pair<std::string, std::string>> witnesses;

  /// Process exit code the command should finish with: 0 success, 2 refusal,
  /// 3 unknown verdict. Not serialized.
  int exit_code = 0;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

Report classify_report(const RingExpr& expr, int degree_bound);
Report decompose_report(const RingExpr& expr, const std::string& kind);
/// `at` names a prime: element literals for a table ring (comma separated),
/// variable names for a monomial ring.
Report kernel_report(const RingExpr& expr, const std::string& at, int degree_bound);
Report star_report(const RingExpr& expr, const std::string& ideal_gens);
Report poset_report(const RingExpr& expr);

struct SuiteResult;  // verify.hpp
Report verify_report(const SuiteResult& result);

/// Smallest corpus ring whose classification flags satisfy the predicate,
/// or an exhaustion notice.
Report search_rings_report(const std::string& predicate,
                           const std::string& corpus_spec);
/// Same over all posets with up to `max_points` points and their shape flags.
Report search_posets_report(const std::string& predicate, int max_points);

}  // namespace spectra
