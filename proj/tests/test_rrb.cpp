#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"
#include "rbcat/rrb.hpp"
#include "rbcat/twogroup.hpp"
#include "rbcat/xmod.hpp"
#include "testutil.hpp"

using namespace rbcat;
using namespace rbcat::test;

namespace {

const std::vector<int> kDecomposition = {0, 3, 3, 3, 0, 0};

// All eight operator tables for the adjoint action of S3, sorted; frozen
// from an independent scan of all 6^6 maps against the defining law.
const std::vector<std::vector<int>> kS3AdjointOps = {
    {0, 0, 0, 0, 0, 0}, {0, 0, 4, 5, 5, 4}, {0, 1, 1, 1, 0, 0},
    {0, 1, 2, 3, 5, 4}, {0, 2, 2, 2, 0, 0}, {0, 3, 3, 3, 0, 0},
    {0, 4, 5, 0, 5, 4}, {0, 5, 0, 4, 5, 4}};

}  // namespace

TEST_CASE("group-level operators: verification and enumeration") {
  GroupPtr s3 = make_s3();
  GroupPtr z2 = make_cyclic_group(2);
  GroupPtr z3 = make_cyclic_group(3);

  // Under the trivial action the defining law degenerates to the
  // homomorphism law, so the counts are the endomorphism counts.
  CHECK(enumerate_rrb_group(trivial_action(z2, z2), 1000000).size() == 2);
  CHECK(enumerate_rrb_group(trivial_action(z3, z3), 1000000).size() == 3);

  auto opsa = enumerate_rrb_group(adjoint_action(z2), 1000000);
  REQUIRE(opsa.size() == 2);
  CHECK(opsa[0] == std::vector<int>{0, 0});
  CHECK(opsa[1] == std::vector<int>{0, 1});

  CHECK(is_rrb_group(adjoint_action(s3), kDecomposition));
  CHECK(is_rrb_group(adjoint_action(s3), inverse_table(*s3)));
  CHECK_FALSE(is_rrb_group(adjoint_action(s3), identity_table(6)));
  CHECK(thrown_code([&] {
          verify_rrb_group(adjoint_action(s3), identity_table(6));
        }) == Code::RRBFailure);
  // Table of the wrong length.
  CHECK(thrown_code([&] {
          verify_rrb_group(adjoint_action(s3), std::vector<int>{0, 1});
        }) == Code::ActionMismatch);

  CHECK(enumerate_rrb_group(adjoint_action(s3), 10000000) == kS3AdjointOps);
}

TEST_CASE("enumeration budget is enforced with a deterministic message") {
  GroupPtr s3 = make_s3();
  try {
    enumerate_rrb_group(adjoint_action(s3), 3);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.code() == Code::SearchBudgetExceeded);
    CHECK(e.budget() == 3);
    CHECK(e.detail() ==
          "node budget of 3 exhausted; partial results discarded to keep "
          "output schedule-independent");
  }
}

TEST_CASE("2-group operators on the discrete S3 carrier") {
  GroupPtr s3 = make_s3();
  TwoGroupPtr d = discrete_two_group(s3);
  TwoGroupAction ad = adjoint_two_group_action(d);

  auto pairs = enumerate_rrb_two_group(ad, 10000000);
  REQUIRE(pairs.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(pairs[i].first == kS3AdjointOps[i]);
    CHECK(pairs[i].second == kS3AdjointOps[i]);  // discrete: B0 = B
  }

  // Verification rejects mismatched component pairs on the discrete carrier.
  CHECK(thrown_code([&] {
          verify_rrb_two_group(ad, kS3AdjointOps[0], kS3AdjointOps[5]);
        }) == Code::NotGroupoidMorphism);
  CHECK(thrown_code([&] {
          verify_rrb_two_group(ad, identity_table(6), identity_table(6));
        }) == Code::ComponentFailure);
}

TEST_CASE("descendant 2-groups and descendant actions") {
  GroupPtr s3 = make_s3();
  TwoGroupPtr d = discrete_two_group(s3);
  TwoGroupAction ad = adjoint_two_group_action(d);

  RRBTwoGroupOp op = verify_rrb_two_group(ad, kDecomposition, kDecomposition);
  DescendantTwoGroup desc = descendant_two_group(op);
  CHECK(desc.group->arrow_group()->is_abelian());
  CHECK(find_isomorphism(desc.group->arrow_group(), make_cyclic_group(6))
            .has_value());
  CHECK(desc.morphism.dom->same_as(*desc.group));
  CHECK(desc.morphism.f.map() == kDecomposition);

  DescendantAction da = descendant_action(op);
  const std::vector<int> swap12{0, 2, 1, 3, 5, 4};
  CHECK(da.phi[1] == swap12);
  CHECK(da.phi[2] == swap12);
  CHECK(da.phi[3] == swap12);
  CHECK(da.phi[4] == identity_table(6));
  CHECK(da.phi[5] == identity_table(6));

  // Inversion operator: the descendant is the opposite group and the
  // descendant action is trivial.
  RRBTwoGroupOp opi =
      verify_rrb_two_group(ad, inverse_table(*s3), inverse_table(*s3));
  DescendantTwoGroup di = descendant_two_group(opi);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      CHECK(di.group->arrow_group()->mul(x, y) == s3->mul(y, x));
  DescendantAction dai = descendant_action(opi);
  for (int x = 0; x < 6; ++x) CHECK(dai.phi[x] == identity_table(6));

  // Constant-identity operator: descendant = original carrier.
  RRBTwoGroupOp opz =
      verify_rrb_two_group(ad, std::vector<int>(6, 0), std::vector<int>(6, 0));
  CHECK(descendant_two_group(opz).group->arrow_group()->same_table(*s3));

  // Every enumerated operator stays an operator for the adjoint action of
  // its own descendant.
  for (const auto& [b, b0] : enumerate_rrb_two_group(ad, 10000000)) {
    RRBTwoGroupOp each = verify_rrb_two_group(ad, b, b0);
    DescendantTwoGroup dd = descendant_two_group(each);
    CHECK(is_rrb_two_group(adjoint_two_group_action(dd.group), b, b0));
  }
}

TEST_CASE("bar and plus calculus") {
  GroupPtr s3 = make_s3();
  TwoGroupAction ad = adjoint_two_group_action(discrete_two_group(s3));
  RRBTwoGroupOp op = verify_rrb_two_group(ad, kDecomposition, kDecomposition);
  RRBTwoGroupOp opz =
      verify_rrb_two_group(ad, std::vector<int>(6, 0), std::vector<int>(6, 0));
  RRBTwoGroupOp opi =
      verify_rrb_two_group(ad, inverse_table(*s3), inverse_table(*s3));

  CHECK(bar_operator(opz).b == inverse_table(*s3));
  CHECK(bar_operator(opi).b == std::vector<int>(6, 0));
  CHECK(bar_operator(bar_operator(op)).b == op.b);

  CHECK(plus_morphism(opz).f.map() == identity_table(6));
  CHECK(plus_morphism(opi).f.map() == std::vector<int>(6, 0));
  CHECK(plus_morphism(op).f.map() == std::vector<int>{0, 4, 5, 0, 4, 5});

  // bar needs the adjoint action.
  TwoGroupPtr d3 = discrete_two_group(make_cyclic_group(3));
  TwoGroupAction tr = trivial_two_group_action(d3, d3);
  RRBTwoGroupOp ht = verify_rrb_two_group(tr, {0, 1, 2}, {0, 1, 2});
  CHECK(thrown_code([&] { bar_operator(ht); }) == Code::NotAdjointAction);
}

TEST_CASE("graph and hat on the semidirect 2-group") {
  GroupPtr s3 = make_s3();
  TwoGroupAction ad = adjoint_two_group_action(discrete_two_group(s3));
  SemidirectContext ctx = make_semidirect_context(ad);
  CHECK(ctx.semidirect->arrows() == 36);

  RRBTwoGroupOp op = verify_rrb_two_group(ad, kDecomposition, kDecomposition);
  CHECK(graph_closes(ctx, op.b, op.b0));
  CHECK_FALSE(graph_closes(ctx, identity_table(6), identity_table(6)));

  SubTwoGroup gr = graph_two_subgroup(ctx, op);
  CHECK(gr.group->arrows() == 6);
  std::vector<int> expected;
  for (int q = 0; q < 6; ++q)
    expected.push_back(pair_index(q, op.b[(std::size_t)q], 6));
  std::sort(expected.begin(), expected.end());
  CHECK(gr.arrow_embed == expected);

  // hat(q, p) = (e, p^{-1}·Bq): frozen closed forms for const-e and
  // inversion.
  RRBTwoGroupOp opz =
      verify_rrb_two_group(ad, std::vector<int>(6, 0), std::vector<int>(6, 0));
  RRBTwoGroupOp hz = hat_operator(ctx, opz);
  for (int q = 0; q < 6; ++q)
    for (int p = 0; p < 6; ++p)
      CHECK(hz.b[(std::size_t)pair_index(q, p, 6)] ==
            pair_index(0, s3->inv(p), 6));
  RRBTwoGroupOp opi =
      verify_rrb_two_group(ad, inverse_table(*s3), inverse_table(*s3));
  RRBTwoGroupOp hi = hat_operator(ctx, opi);
  for (int q = 0; q < 6; ++q)
    for (int p = 0; p < 6; ++p)
      CHECK(hi.b[(std::size_t)pair_index(q, p, 6)] ==
            pair_index(0, s3->mul(s3->inv(p), s3->inv(q)), 6));

  // The three predicates agree on every single-entry mutation of a valid
  // operator table.
  for (int slot = 0; slot < 6; ++slot)
    for (int v = 0; v < 6; ++v) {
      std::vector<int> b = op.b;
      if (b[(std::size_t)slot] == v) continue;
      b[(std::size_t)slot] = v;
      const bool law = is_rrb_two_group(ad, b, op.b0);
      CHECK(graph_closes(ctx, b, op.b0) == law);
      CHECK(hat_is_rb(ctx, b, op.b0) == law);
    }
}

TEST_CASE("twisting by automorphisms of the semidirect 2-group") {
  GroupPtr s3 = make_s3();
  TwoGroupAction ad = adjoint_two_group_action(discrete_two_group(s3));
  RRBTwoGroupOp opi =
      verify_rrb_two_group(ad, inverse_table(*s3), inverse_table(*s3));

  std::vector<int> by01(6);
  for (int i = 0; i < 6; ++i) by01[(std::size_t)i] = s3->conj(1, i);
  RRBTwoGroupOp tw = twist_operator(opi, by01, by01, by01, by01);
  CHECK(tw.b == inverse_table(*s3));

  std::vector<int> lmul(6);
  for (int i = 0; i < 6; ++i) lmul[(std::size_t)i] = s3->mul(1, i);
  CHECK(thrown_code([&] {
          twist_operator(opi, lmul, lmul, lmul, lmul);
        }) == Code::NotAutomorphism);
}

TEST_CASE("Cayley factorization: frozen shapes for three operators") {
  GroupPtr s3 = make_s3();
  TwoGroupAction ad = adjoint_two_group_action(discrete_two_group(s3));

  RRBTwoGroupOp op = verify_rrb_two_group(ad, kDecomposition, kDecomposition);
  CayleyFactorization cf = cayley_factorization(op);
  CHECK(cf.p_plus.arrow_embed == std::vector<int>{0, 4, 5});
  CHECK(cf.k_plus.arrow_embed == std::vector<int>{0, 4, 5});
  CHECK(cf.p_minus.arrow_embed == std::vector<int>{0, 3});
  CHECK(cf.k_minus.arrow_embed == std::vector<int>{0, 3});
  CHECK(cf.q_plus.group->arrows() == 1);
  CHECK(cf.q_minus.group->arrows() == 1);
  CHECK(cf.direct->arrows() == 6);
  CHECK(cf.factor_arrow[1] == std::pair<int, int>{4, 3});
  CHECK(cf.factor_arrow[2] == std::pair<int, int>{5, 3});
  // Unique factorization, re-derived by scanning the two subgroups.
  for (int p = 0; p < 6; ++p) {
    int hits = 0;
    std::pair<int, int> found{-1, -1};
    for (int a : cf.p_plus.arrow_embed)
      for (int b : cf.p_minus.arrow_embed)
        if (s3->mul(a, s3->inv(b)) == p) {
          ++hits;
          found = {a, b};
        }
    CHECK(hits == 1);
    CHECK(found == cf.factor_arrow[(std::size_t)p]);
  }

  RRBTwoGroupOp opz =
      verify_rrb_two_group(ad, std::vector<int>(6, 0), std::vector<int>(6, 0));
  CayleyFactorization cz = cayley_factorization(opz);
  CHECK(cz.p_plus.group->arrows() == 6);
  CHECK(cz.p_minus.group->arrows() == 1);
  for (int p = 0; p < 6; ++p)
    CHECK(cz.factor_arrow[(std::size_t)p] == std::pair<int, int>{p, 0});

  RRBTwoGroupOp opi =
      verify_rrb_two_group(ad, inverse_table(*s3), inverse_table(*s3));
  CayleyFactorization ci = cayley_factorization(opi);
  CHECK(ci.p_plus.group->arrows() == 1);
  CHECK(ci.p_minus.group->arrows() == 6);
  for (int p = 0; p < 6; ++p)
    CHECK(ci.factor_arrow[(std::size_t)p] ==
          std::pair<int, int>{0, s3->inv(p)});

  // sigma lands in the matched-pair locus and is an isomorphism onto it.
  CHECK(cf.twisted.group->arrows() == cf.descendant.group->arrows());
  CHECK(cf.sigma.f.is_bijective());
}

TEST_CASE("one-object Z2 carrier: exhaustive agreement of the predicates") {
  GroupPtr z2 = make_cyclic_group(2);
  TwoGroupPtr o = one_object_two_group(z2);
  TwoGroupAction ad = adjoint_two_group_action(o);
  auto ops = enumerate_rrb_two_group(ad, 1000000);
  CHECK(ops.size() == 2);

  SemidirectContext ctx = make_semidirect_context(ad);
  for (int v0 = 0; v0 < 2; ++v0)
    for (int v1 = 0; v1 < 2; ++v1) {
      const std::vector<int> b = {v0, v1}, b0 = {0};
      const bool law = is_rrb_two_group(ad, b, b0);
      CHECK(graph_closes(ctx, b, b0) == law);
      CHECK(hat_is_rb(ctx, b, b0) == law);
    }
}

TEST_CASE("crossed-module level operators and the level correspondence") {
  GroupPtr s3 = make_s3();
  GroupPtr z2 = make_cyclic_group(2);
  GroupPtr t = make_trivial_group();

  XModPtr zx = validate_xmod(z2, t, {0, 0}, {{0, 1}});
  XModAction adz = adjoint_xmod_action(zx);
  auto zops = enumerate_rrb_xmod(adz, 1000000);
  CHECK(zops.size() == 2);
  for (const auto& [b1, b0] : zops) {
    RRBXModOp op = verify_rrb_xmod(adz, b1, b0);
    RRBTwoGroupOp up = rrb_xmod_to_two_group(op);
    RRBXModFromTwoGroup down = rrb_two_group_to_xmod(up);
    CHECK(down.op.b1 == op.b1);
    CHECK(down.op.b0 == op.b0);
  }

  XModPtr sx = validate_xmod(s3, s3, identity_table(6), adjoint_action(s3));
  XModAction ads = adjoint_xmod_action(sx);
  auto sops = enumerate_rrb_xmod(ads, 100000000);
  REQUIRE(sops.size() == 8);
  // The level-wise tables coincide with the group-level operators here.
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(sops[i].first == kS3AdjointOps[i]);
    CHECK(sops[i].second == kS3AdjointOps[i]);
  }

  RRBXModOp opx = verify_rrb_xmod(ads, kDecomposition, kDecomposition);
  DescendantXMod dx = descendant_xmod(opx);
  CHECK(dx.xmod->g1()->is_abelian());
  CHECK(dx.morphism.f1.map() == kDecomposition);
  RRBTwoGroupOp up = rrb_xmod_to_two_group(opx);
  CHECK(up.action.target()->arrows() == 36);
  RRBXModFromTwoGroup down = rrb_two_group_to_xmod(up);
  CHECK(down.op.b1 == opx.b1);
  CHECK(down.op.b0 == opx.b0);

  // Mismatched levels are rejected through the square condition.
  CHECK(thrown_code([&] {
          verify_rrb_xmod(ads, std::vector<int>(6, 0), kDecomposition);
        }) == Code::SquareFailure);
}

TEST_CASE("operators on a group lift to its two associated 2-groups") {
  GroupPtr s3 = make_s3();
  RRBGroupOp rb = verify_rrb_group(adjoint_action(s3), kDecomposition);
  auto [dop, top] = rb_group_to_rb_two_groups(rb);
  CHECK(dop.action.target()->is_discrete());
  CHECK(dop.b == kDecomposition);
  CHECK(dop.b0 == kDecomposition);
  CHECK(top.action.target()->arrows() == 36);
  CHECK(top.action.target()->objects() == 6);

  // Frozen closed forms: const-e lifts to the constant map, inversion to
  // tilde(p, l) = ((p·l)^{-1}·l, l^{-1}).
  RRBGroupOp rbz = verify_rrb_group(adjoint_action(s3), std::vector<int>(6, 0));
  auto tz = rb_group_to_rb_two_groups(rbz).second;
  for (int i = 0; i < 36; ++i) CHECK(tz.b[(std::size_t)i] == 0);
  RRBGroupOp rbi = verify_rrb_group(adjoint_action(s3), inverse_table(*s3));
  auto ti = rb_group_to_rb_two_groups(rbi).second;
  for (int x = 0; x < 6; ++x)
    for (int l = 0; l < 6; ++l)
      CHECK(ti.b[(std::size_t)pair_index(x, l, 6)] ==
            pair_index(s3->mul(s3->inv(s3->mul(x, l)), l), s3->inv(l), 6));
}
