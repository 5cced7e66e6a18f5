// Acceptance suite: one pass/fail line per criterion, each with a pinned
// runtime budget. Exact arithmetic throughout; a criterion fails on any
// counterexample, any internal-consistency error, or a blown budget.
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spectra/decompose.hpp"
#include "spectra/monomial.hpp"
#include "spectra/verify.hpp"

using namespace spectra;

namespace {

struct Criterion {
  int number;
  std::string name;
  double budget_seconds;
  std::function<void(std::vector<std::string>&)> run;  // appends failures
};

// The corpus pinned by the acceptance criteria: Z/1..Z/60, all two-factor
// products with factors Z/2..Z/9, and every quotient of those by every
// enumerated ideal.
const char* kAcceptanceCorpus = "zmod:1..60,products:depth2,quotients";

void expect(std::vector<std::string>& failures, bool ok, const std::string& what) {
  if (!ok) failures.push_back(what);
}

void expect_suite(std::vector<std::string>& failures, const SuiteResult& res) {
  if (!res.passed())
    failures.push_back(res.suite + ": " + std::to_string(res.failed) +
                       " failed; first: " + res.first_counterwitness);
}

// ---- criterion 1: paper-example regressions -------------------------------

void criterion1(std::vector<std::string>& failures) {
  auto z4 = make_zmod(4);
  auto lr = lessened_radical(z4);
  expect(failures, lr.nprime.is_zero(), "Z/4 not lessened");
  expect(failures, !lr.nilradical.is_zero(), "Z/4 reported reduced");

  for (int n = 1; n <= 100; ++n)
    expect(failures, lessened_radical(make_zmod(n)).nprime.is_zero(),
           "Z/" + std::to_string(n) + " not lessened");

  auto r_x2xy = MonomialQuotientRing::make(2, {"x", "y"}, {{2, 0}, {1, 1}});
  auto les = is_lessened_up_to(r_x2xy, 8);
  expect(failures,
         les.verdict == LessenedVerdict::not_lessened && les.witness &&
             r_x2xy->monomial_str(*les.witness) == "x",
         "F2[x,y]/(x^2,xy) should be not lessened with witness x");

  auto r = MonomialQuotientRing::make(2, {"x", "y"}, {{3, 0}, {2, 1}});
  auto ps = minimal_primes(r);
  expect(failures, ps.size() == 1 && ps[0].str() == "(x)",
         "F2[x,y]/(x^3,x^2y) should have the unique minimal prime (x)");
  if (ps.size() == 1) {
    auto in2 = kernel_membership(NFPoly::monomial(r, {2, 0}), ps[0], 8);
    expect(failures, in2.verdict == Membership::in,
           "x^2 should lie in Ker at (x)");
    auto out1 = kernel_membership(NFPoly::monomial(r, {1, 0}), ps[0], 8);
    expect(failures, out1.verdict == Membership::out,
           "x should lie outside Ker at (x)");
    // 0 < N' < N strictly: x^2 witnesses N' nonzero, x sits in N but not N'.
    expect(failures, nprime_contains(r, {2, 0}, 8), "x^2 should lie in N'");
    expect(failures, !nprime_contains(r, {1, 0}, 8), "x should not lie in N'");
    expect(failures,
           r->monomial_in_nilradical({1, 0}) && !r->monomial_in_ideal({1, 0}),
           "x should be a nonzero nilpotent");
  }
}

// ---- criterion 2: the five mp criteria agree ------------------------------

void criterion2(std::vector<std::string>& failures) {
  SuiteOptions opts;
  opts.corpus = kAcceptanceCorpus;
  expect_suite(failures, run_suite("mp-equivalences", opts));
}

// ---- criterion 3: zero-dimensionality criteria ----------------------------

void criterion3(std::vector<std::string>& failures) {
  SuiteOptions opts;
  opts.corpus = kAcceptanceCorpus;
  expect_suite(failures, run_suite("zero-dim-criteria", opts));
}

// ---- criterion 4: product theorems ----------------------------------------

void criterion4(std::vector<std::string>& failures) {
  SuiteOptions opts;  // pairs 2..9, triples 2..6
  expect_suite(failures, run_suite("lessened-product", opts));
}

// ---- criterion 5: decomposition round trips -------------------------------

void criterion5(std::vector<std::string>& failures) {
  SuiteOptions opts;
  opts.corpus = kAcceptanceCorpus;
  expect_suite(failures, run_suite("decompositions", opts));

  auto d = decompose_local(make_zmod(12));
  std::vector<std::string> names = d.canonical_names;
  std::sort(names.begin(), names.end());
  expect(failures, names == std::vector<std::string>{"Z/3", "Z/4"},
         "Z/12 should decompose into Z/4 x Z/3");
}

// ---- criterion 6: ideal-theory lemmas, exhaustively -----------------------

void criterion6(std::vector<std::string>& failures) {
  SuiteOptions opts;
  opts.corpus = kAcceptanceCorpus;
  opts.max_ring_size = 64;
  for (const char* suite :
       {"star-lemmas", "purified-regular", "nprime-quotient",
        "locally-lessened-mp"})
    expect_suite(failures, run_suite(suite, opts));
}

// ---- criterion 7: poset suite ---------------------------------------------

void criterion7(std::vector<std::string>& failures) {
  SuiteOptions opts;
  opts.poset_points = 6;
  opts.corpus = "zmod:1..12";
  expect_suite(failures, run_suite("poset-duality", opts));
  expect_suite(failures, run_suite("retraction-uniqueness", opts));
}

// ---- criterion 8: CLI end to end ------------------------------------------

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(SPECTRA_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult res;
  if (!pipe) return res;
  std::array<char, 4096> buf;
  while (fgets(buf.data(), buf.size(), pipe)) res.output += buf.data();
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(SPECTRA_SOURCE_DIR) + "/tests/golden/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void criterion8(std::vector<std::string>& failures) {
  struct Golden {
    const char* args;
    const char* file;
  };
  for (const Golden& g : std::initializer_list<Golden>{
           {"classify Z/12 --json", "classify_zmod12.json"},
           {"decompose Z/12 --json", "decompose_zmod12.json"},
           {"kernel \"F2[x,y]/(x^3,x^2*y)\" --at=x --json",
            "kernel_monomial.json"}}) {
    auto res = run_cli(g.args);
    expect(failures, res.exit_code == 0,
           std::string(g.args) + ": exit " + std::to_string(res.exit_code));
    expect(failures, res.output == read_golden(g.file),
           std::string(g.args) + ": output differs from golden " + g.file);
  }

  auto search = run_cli("search \"!lessened\" --corpus=zmod:2..100");
  expect(failures,
         search.exit_code == 0 &&
             search.output.find("exhausted") != std::string::npos,
         "search !lessened should report exhaustion");

  expect(failures, run_cli("classify Z/12").exit_code == 0, "exit 0 on success");
  expect(failures, run_cli("classify \"Z/\"").exit_code == 1, "exit 1 on error");
  expect(failures, run_cli("decompose Z/4 --kind=fields").exit_code == 2,
         "exit 2 on refusal");
  expect(failures,
         run_cli("classify \"F2[x,y]/(x^5*y^5)\" --degree-bound=2").exit_code == 3,
         "exit 3 on unknown verdict");
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> cs = {
      {1, "paper-example regressions", 5.0, criterion1},
      {2, "mp criteria oracle equivalence", 120.0, criterion2},
      {3, "zero-dimensionality criteria consistency", 120.0, criterion3},
      {4, "lessened product theorem and product kernels", 120.0, criterion4},
      {5, "decomposition round trips", 180.0, criterion5},
      {6, "ideal-theory lemmas exhaustively", 300.0, criterion6},
      {7, "poset duality and retraction uniqueness", 60.0, criterion7},
      {8, "CLI end to end", 30.0, criterion8},
  };
  return cs;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

  int failures_total = 0;
  for (const auto& criterion : criteria()) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), criterion.number) ==
            selected.end())
      continue;
    std::vector<std::string> failures;
    auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(failures);
    } catch (const std::exception& e) {
      failures.push_back(std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed >= criterion.budget_seconds)
      failures.push_back("runtime " + std::to_string(elapsed) +
                         "s exceeds the budget");
    char line[256];
    std::snprintf(line, sizeof(line), "[%s] criterion %d: %s (%.2fs < %.0fs)",
                  failures.empty() ? "PASS" : "FAIL", criterion.number,
                  criterion.name.c_str(), elapsed, criterion.budget_seconds);
    std::cout << line << "\n";
    for (const auto& f : failures) std::cout << "       - " << f << "\n";
    failures_total += static_cast<int>(failures.size());
  }
  return failures_total == 0 ? 0 : 1;
}
