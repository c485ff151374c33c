#pragma once

// A battery of verified statements about relative Rota-Baxter operators on a
// 2-group, run against the adjoint action of a chosen carrier: operator
// verification, the graph and hat characterizations, descendant structures,
// the crossed-module correspondence, Yang-Baxter solutions, Cayley
// factorization, and the inverse bijection with crossed homomorphisms.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rbcat/twogroup.hpp"
#include "rbcat/xmod.hpp"

namespace rbcat {

struct TheoremResult {
  std::string name;
  bool pass = false;
  std::string detail;  // statistics when passing, a witness when failing
};

struct TheoremReport {
  std::string carrier;
  std::vector<TheoremResult> results;
  bool all_pass() const;
};

struct TheoremSuiteOptions {
  long long budget = 10'000'000;
  std::uint64_t seed = 0;
  // Extra random candidate tables for the graph/hat agreement rows on
  // carriers too large for the exhaustive sweep over all table pairs.
  int random_pairs = 1000;
};

// Runs every row against the adjoint action of `p`. With an empty `pinned`
// list the operator set is enumerated exhaustively within the budget;
// otherwise only the pinned (b, b0) tables are used, which keeps large
// carriers tractable. A pinned table that fails verification turns the
// operator_verification row into a FAIL with the witness and is excluded
// from the remaining rows. Output depends only on the inputs and the seed,
// never on the worker count.
TheoremReport run_theorem_suite(
    const TwoGroupPtr& p,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pinned,
    const TheoremSuiteOptions& opts = {});

// The same suite driven from a crossed module: operators are level tables
// (B1, B0) for the adjoint action, verified at the crossed-module level and
// transported to the associated 2-group, where every row runs as above with
// the correspondence rows strengthened by the crossed-module data.
TheoremReport run_theorem_suite_xmod(
    const XModPtr& x,
    const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pinned,
    const TheoremSuiteOptions& opts = {});

// Fixed-width PASS/FAIL table, one row per statement, deterministic.
std::string render_report_text(const TheoremReport& report);

}  // namespace rbcat
