#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "specht/cohomology.hpp"

namespace specht {

// One entry of a verification report. Status is PASS, FAIL, SKIPPED (size
// limit reached) or REPORTED (computed value with nothing to compare to).
struct Check {
  int criterion = 0;
  std::string id;
  std::string tag;
  nlohmann::json expected;
  nlohmann::json computed;
  std::string status;

  nlohmann::json to_json() const;
};

struct SuiteOptions {
  int n_max = 5;
  // Include the n = 6 cohomology tables and index values.
  bool optional_n6 = false;
  // Restrict to these criteria (1..7); empty means all.
  std::set<int> criteria;
  // Called once per finished criterion, for progress logging.
  std::function<void(int, const std::vector<Check>&)> on_criterion;
};

std::vector<Check> verification_suite(const SuiteOptions& opts);
nlohmann::json suite_report(const std::string& scope, const SuiteOptions& opts, const std::vector<Check>& checks);

// Expected cohomology as a list of cyclic orders (0 meaning Z), or only the
// order when the answer is an extension that the order does not pin down.
struct ExpectedGroup {
  std::optional<std::vector<long>> cyclic;
  long order = 1;
  bool known = true;
};
ExpectedGroup expected_cohomology(const std::string& module, int n, int degree, RingSpec ring);
// Invariant factors (ascending, divisibility chain) and free rank of a list
// of cyclic orders.
std::pair<std::size_t, std::vector<long>> invariant_factors(const std::vector<long>& cyclic);

bool expected_splitting(const QuotientSpec& q);

struct CliResult {
  int code = 0;
  nlohmann::json body;
};

// args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace specht
