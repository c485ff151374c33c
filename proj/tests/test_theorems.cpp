#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"
#include "rbcat/io.hpp"
#include "rbcat/parallel.hpp"
#include "rbcat/theorems.hpp"
#include "rbcat/twogroup.hpp"
#include "rbcat/xmod.hpp"
#include "testutil.hpp"

using namespace rbcat;
using namespace rbcat::test;

namespace {

const std::vector<std::string> kRowNames = {
    "operator_verification", "graph_equivalence", "hat_operator_equivalence",
    "descendant_two_group",  "descendant_action", "operator_descends",
    "conversion_roundtrip",  "yang_baxter",       "factorization",
    "inverse_crossed_hom"};

TheoremSuiteOptions quick_opts() {
  TheoremSuiteOptions opts;
  opts.random_pairs = 200;
  return opts;
}

}  // namespace

TEST_CASE("the suite passes on the discrete S3 carrier with all rows named") {
  TheoremReport r = run_theorem_suite(discrete_two_group(make_s3()), {},
                                      quick_opts());
  REQUIRE(r.results.size() == kRowNames.size());
  for (std::size_t i = 0; i < kRowNames.size(); ++i)
    CHECK(r.results[i].name == kRowNames[i]);
  CHECK(r.all_pass());
  CHECK(r.results[0].detail.find("8 operators") == 0);
  CHECK_FALSE(r.carrier.empty());

  std::string text = render_report_text(r);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("small carriers run the graph comparison exhaustively") {
  TheoremReport r = run_theorem_suite(one_object_two_group(make_cyclic_group(2)),
                                      {}, quick_opts());
  CHECK(r.all_pass());
  CHECK(r.results[1].name == "graph_equivalence");
  CHECK(r.results[1].detail.find("all 4 table pairs") != std::string::npos);
}

TEST_CASE("the crossed-module variant passes on both fixture carriers") {
  GroupPtr s3 = make_s3();
  GroupPtr z2 = make_cyclic_group(2);
  XModPtr zx = validate_xmod(z2, make_trivial_group(), {0, 0}, {{0, 1}});
  CHECK(run_theorem_suite_xmod(zx, {}, quick_opts()).all_pass());

  XModPtr sx = validate_xmod(s3, s3, identity_table(6), adjoint_action(s3));
  TheoremReport r = run_theorem_suite_xmod(sx, {}, quick_opts());
  CHECK(r.all_pass());
  REQUIRE(r.results.size() == kRowNames.size());
  for (std::size_t i = 0; i < kRowNames.size(); ++i)
    CHECK(r.results[i].name == kRowNames[i]);

  // Pinning the unique bijective operator keeps every row green.
  TheoremReport rp = run_theorem_suite_xmod(
      sx, {{inverse_table(*s3), inverse_table(*s3)}}, quick_opts());
  CHECK(rp.all_pass());
}

TEST_CASE("a corrupted pinned operator fails verification and only it") {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> pin = {
      {{0, 3, 3, 3, 0, 0}, {0, 3, 3, 3, 0, 0}},
      {{1, 3, 3, 3, 0, 0}, {1, 3, 3, 3, 0, 0}}};
  TheoremReport r = run_theorem_suite(discrete_two_group(make_s3()), pin,
                                      quick_opts());
  CHECK_FALSE(r.all_pass());
  CHECK_FALSE(r.results[0].pass);
  CHECK(r.results[0].name == "operator_verification");
  CHECK(r.results[0].detail.find("ComponentFailure") != std::string::npos);
  int fails = 0;
  for (const TheoremResult& row : r.results) fails += row.pass ? 0 : 1;
  CHECK(fails == 1);
}

TEST_CASE("reports are deterministic across repeated runs and worker counts") {
  TwoGroupPtr pd = discrete_two_group(make_s3());
  TheoremReport a = run_theorem_suite(pd, {}, quick_opts());
  TheoremReport b = run_theorem_suite(pd, {}, quick_opts());
  CHECK(render_report_text(a) == render_report_text(b));
  set_jobs(8);
  TheoremReport c = run_theorem_suite(pd, {}, quick_opts());
  set_jobs(1);
  CHECK(render_report_text(a) == render_report_text(c));
}

TEST_CASE("the enumeration budget propagates out of the suite") {
  TheoremSuiteOptions opts = quick_opts();
  opts.budget = 3;
  CHECK(thrown_code([&] {
          run_theorem_suite(discrete_two_group(make_s3()), {}, opts);
        }) == Code::SearchBudgetExceeded);
}

TEST_CASE("bundles drive the suite end to end") {
  io::TheoremBundle tb =
      io::load_theorem_bundle(fixture("bundles/s3_discrete.json"));
  TheoremSuiteOptions opts = quick_opts();
  opts.budget = tb.budget;
  TheoremReport r = run_theorem_suite(tb.two_group, tb.operators, opts);
  CHECK(r.all_pass());

  io::TheoremBundle bad =
      io::load_theorem_bundle(fixture("bundles/s3_corrupted.json"));
  TheoremReport rb = run_theorem_suite(bad.two_group, bad.operators, opts);
  CHECK_FALSE(rb.all_pass());
}
