#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "testutil.hpp"

using namespace rbcat::test;
using njson = nlohmann::json;

namespace {

RunResult rbcat_run(const std::string& args) {
  return run_command(cli_path() + " " + args);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("validate prints one PASS line per structure") {
  RunResult g = rbcat_run("validate group " + fixture("groups/s3.json"));
  CHECK(g.status == 0);
  CHECK(g.out == "PASS: group of order 6\n");

  RunResult tg = rbcat_run("validate two_group " +
                           fixture("two_groups/z2_one_object.json"));
  CHECK(tg.status == 0);
  CHECK(tg.out == "PASS: 2-group with 2 arrows over 1 object\n");

  RunResult xm = rbcat_run("validate xmod " + fixture("xmods/e_to_s3.json"));
  CHECK(xm.status == 0);
  CHECK(xm.out == "PASS: crossed module (|G1|=1, |G0|=6)\n");

  RunResult li = rbcat_run("validate lie " + fixture("lie/aff1.json"));
  CHECK(li.status == 0);
  CHECK(li.out == "PASS: Lie algebra of dimension 2\n");

  RunResult ac = rbcat_run("validate action " +
                           fixture("actions/s3_discrete_adjoint.json") +
                           " --level two_group");
  CHECK(ac.status == 0);
  CHECK(ac.out == "PASS: two_group action\n");

  RunResult op =
      rbcat_run("validate operator " + fixture("operators/s3_decomposition.json"));
  CHECK(op.status == 0);
  CHECK(op.out ==
        "PASS: Rota-Baxter operator file at level two_group (action "
        "validated; run `verify` to check the operator law)\n");
}

TEST_CASE("verify reports the operator law with concrete witnesses") {
  RunResult ok =
      rbcat_run("verify " + fixture("operators/s3_decomposition.json"));
  CHECK(ok.status == 0);
  CHECK(ok.out == "PASS: relative Rota-Baxter operator (2-group level) "
                  "verified\n");

  RunResult okg =
      rbcat_run("verify " + fixture("operators/s3_decomposition_group.json"));
  CHECK(okg.status == 0);
  CHECK(okg.out ==
        "PASS: relative Rota-Baxter operator (group level) verified\n");

  RunResult hom =
      rbcat_run("verify " + fixture("operators/s3_inversion_hom.json"));
  CHECK(hom.status == 0);
  CHECK(hom.out == "PASS: crossed homomorphism (2-group level) verified\n");

  RunResult lie = rbcat_run("verify " + fixture("lie/aff1_b_negid.json"));
  CHECK(lie.status == 0);
  CHECK(lie.out ==
        "PASS: relative Rota-Baxter operator (Lie algebra level) verified\n");

  RunResult bad =
      rbcat_run("verify " + fixture("operators/s3_identity_invalid.json"));
  CHECK(bad.status == 1);
  CHECK(bad.out.rfind("FAIL: ComponentFailure: arrow level:", 0) == 0);
  CHECK(bad.out.find("(h,h',lhs,rhs)=(1,2,5,4)") != std::string::npos);

  RunResult badlie = rbcat_run("verify " + fixture("lie/aff1_b_id_invalid.json"));
  CHECK(badlie.status == 1);
  CHECK(badlie.out.rfind("FAIL: IdentityFailure:", 0) == 0);
  CHECK(badlie.out.find("lhs=[0, 1], rhs=[0, 3]") != std::string::npos);
}

TEST_CASE("enumerate prints sorted tables and a count") {
  const std::string expected =
      "0 0 0 0 0 0\n"
      "0 0 4 5 5 4\n"
      "0 1 1 1 0 0\n"
      "0 1 2 3 5 4\n"
      "0 2 2 2 0 0\n"
      "0 3 3 3 0 0\n"
      "0 4 5 0 5 4\n"
      "0 5 0 4 5 4\n"
      "count: 8\n";
  RunResult ops = rbcat_run("enumerate " + fixture("actions/s3_adjoint.json") +
                            " --level group");
  CHECK(ops.status == 0);
  CHECK(ops.out == expected);

  RunResult homs = rbcat_run("enumerate " + fixture("actions/s3_adjoint.json") +
                             " --level group --kind crossed_hom");
  CHECK(homs.status == 0);
  CHECK(homs.out.find("count: 10\n") != std::string::npos);

  RunResult pairs =
      rbcat_run("enumerate " + fixture("actions/z2_to_t_adjoint.json") +
                " --level xmod");
  CHECK(pairs.status == 0);
  CHECK(pairs.out == "0 0 | 0\n0 1 | 0\ncount: 2\n");
}

TEST_CASE("exit codes: math failure 1, usage 2, budget 3") {
  RunResult budget = rbcat_run("enumerate " + fixture("actions/s3_adjoint.json") +
                               " --level group --budget 3");
  CHECK(budget.status == 3);
  CHECK(budget.out.rfind("FAIL: SearchBudgetExceeded: node budget of 3 "
                         "exhausted",
                         0) == 0);

  RunResult missing = rbcat_run("validate group /nonexistent/g.json");
  CHECK(missing.status == 2);
  CHECK(missing.out.rfind("FAIL:", 0) == 0);

  RunResult nosub = rbcat_run("");
  CHECK(nosub.status == 2);

  RunResult badjobs = rbcat_run("validate group S3 --jobs 0");
  CHECK(badjobs.status == 2);
  CHECK(badjobs.out == "FAIL: --jobs must be at least 1\n");
}

TEST_CASE("theorems runs a bundle and mirrors its verdict in the exit code") {
  RunResult ok = rbcat_run("theorems " + fixture("bundles/s3_discrete.json"));
  CHECK(ok.status == 0);
  CHECK(ok.out.rfind("bundle: s3-discrete\n", 0) == 0);
  int pass_rows = 0;
  for (std::size_t at = ok.out.find("PASS"); at != std::string::npos;
       at = ok.out.find("PASS", at + 1))
    ++pass_rows;
  CHECK(pass_rows == 10);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  RunResult bad = rbcat_run("theorems " + fixture("bundles/s3_corrupted.json"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAIL operator_verification") != std::string::npos);
  CHECK(bad.out.find("(h,h',lhs,rhs)=(0,0,0,1)") != std::string::npos);
}

TEST_CASE("output is byte-identical across worker counts") {
  const std::string thm = "theorems " + fixture("bundles/z2_to_t.json");
  RunResult a = rbcat_run(thm + " --jobs 1");
  RunResult b = rbcat_run(thm + " --jobs 8");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);

  const std::string en =
      "enumerate " + fixture("actions/s3_adjoint.json") + " --level group";
  RunResult c = rbcat_run(en + " --jobs 1");
  RunResult d = rbcat_run(en + " --jobs 8");
  CHECK(c.out == d.out);
}

TEST_CASE("json format wraps the payload in a run manifest") {
  RunResult r = rbcat_run("validate group " + fixture("groups/s3.json") +
                          " --format json --seed 7");
  CHECK(r.status == 0);
  njson j = njson::parse(r.out);
  REQUIRE(j.contains("manifest"));
  const njson& m = j["manifest"];
  CHECK(m["command"] == "validate");
  CHECK(m["inputs"].size() == 1);
  CHECK(m["seed"] == 7);
  CHECK(m["budget"] == 10000000);
  CHECK(m["outputs"][0] == "stdout");
  const std::string digest = m["digest"].get<std::string>();
  CHECK(digest.size() == 16);
  CHECK(digest.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(j["status"] == "PASS");
  CHECK(j["description"] == "group of order 6");

  RunResult e = rbcat_run("enumerate " + fixture("actions/s3_adjoint.json") +
                          " --level group --format json");
  njson je = njson::parse(e.out);
  CHECK(je["count"] == 8);
  CHECK(je["operators"].size() == 8);
  CHECK(je["operators"][5]["B"] == njson::array({0, 3, 3, 3, 0, 0}));
}

TEST_CASE("the manifest file mirrors the embedded manifest") {
  const std::string mpath = "/tmp/rbcat_cli_manifest_test.json";
  std::remove(mpath.c_str());
  RunResult r = rbcat_run("theorems " + fixture("bundles/z2_one_object.json") +
                          " --manifest " + mpath);
  CHECK(r.status == 0);
  njson m = njson::parse(read_file(mpath));
  CHECK(m["command"] == "theorems");
  CHECK(m["outputs"].size() == 2);
  CHECK(m["outputs"][1] == mpath);
  std::remove(mpath.c_str());
}

TEST_CASE("ybe prints the solution tables of an operator") {
  const std::string frozen =
      "0 6 12 18 24 30 1 15 8 19 33 26 2 13 9 20 31 27 "
      "3 14 7 21 32 25 4 10 16 22 28 34 5 11 17 23 29 35";
  RunResult r = rbcat_run("ybe " + fixture("operators/s3_decomposition.json"));
  CHECK(r.status == 0);
  CHECK(r.out ==
        "n: 6\nR: " + frozen + "\nn0: 6\nR0: " + frozen + "\n");
}

TEST_CASE("factorize prints the frozen decomposition of the fixture operator") {
  RunResult r = rbcat_run("factorize " +
                          fixture("operators/s3_decomposition_group.json"));
  CHECK(r.status == 0);
  CHECK(r.out ==
        "p_plus: arrows [0 4 5], objects [0 4 5]\n"
        "p_minus: arrows [0 3], objects [0 3]\n"
        "k_plus: arrows [0 4 5], objects [0 4 5]\n"
        "k_minus: arrows [0 3], objects [0 3]\n"
        "factor_arrow:\n"
        "  0 -> (0, 0)\n"
        "  1 -> (4, 3)\n"
        "  2 -> (5, 3)\n"
        "  3 -> (0, 3)\n"
        "  4 -> (4, 0)\n"
        "  5 -> (5, 0)\n"
        "factor_object:\n"
        "  0 -> (0, 0)\n"
        "  1 -> (4, 3)\n"
        "  2 -> (5, 3)\n"
        "  3 -> (0, 3)\n"
        "  4 -> (4, 0)\n"
        "  5 -> (5, 0)\n");
}

TEST_CASE("export re-emits canonical bytes, convert crosses levels") {
  RunResult ex = rbcat_run("export group S3");
  CHECK(ex.status == 0);
  CHECK(ex.out == read_file(fixture("groups/s3.json")));

  RunResult cv = rbcat_run("convert xmod " + fixture("xmods/s3_id.json") +
                           " --to two_group");
  CHECK(cv.status == 0);
  njson j = njson::parse(cv.out);
  CHECK(j["two_group"]["src"].size() == 36);

  RunResult cv2 = rbcat_run("convert two_group " +
                            fixture("two_groups/s3_discrete.json") +
                            " --to xmod");
  CHECK(cv2.status == 0);
  njson j2 = njson::parse(cv2.out);
  CHECK(j2["xmod"]["g1"]["order"] == 1);
  CHECK(j2["kernel_embedding"] == njson::array({0}));

  RunResult cv3 = rbcat_run("convert operator " +
                            fixture("operators/s3_decomposition.json") +
                            " --to xmod");
  CHECK(cv3.status == 0);
  njson j3 = njson::parse(cv3.out);
  CHECK(j3.contains("operator"));
}
