#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"
#include "rbcat/rrb.hpp"
#include "rbcat/twogroup.hpp"
#include "rbcat/xhom.hpp"
#include "rbcat/xmod.hpp"
#include "testutil.hpp"

using namespace rbcat;
using namespace rbcat::test;

TEST_CASE("group-level crossed homomorphisms: counts and witnesses") {
  GroupPtr s3 = make_s3();
  GroupPtr z3 = make_cyclic_group(3);

  // Trivial action: the cocycle law degenerates to the homomorphism law.
  auto tri = enumerate_crossed_homs_group(trivial_action(z3, z3), 1000000);
  CHECK(tri.size() == 3);

  auto homs = enumerate_crossed_homs_group(adjoint_action(s3), 10000000);
  REQUIRE(homs.size() == 10);
  CHECK(homs.front() == std::vector<int>(6, 0));
  CHECK(homs[8] == std::vector<int>{0, 5, 4, 0, 5, 4});
  CHECK(homs[9] == std::vector<int>{0, 5, 5, 5, 0, 0});
  CHECK(std::find(homs.begin(), homs.end(), inverse_table(*s3)) != homs.end());
  for (const auto& d : homs) CHECK(is_crossed_hom_group(adjoint_action(s3), d));

  // D = id fails the cocycle law on S3; the first witness pair is (1,2).
  try {
    verify_crossed_hom_group(adjoint_action(s3), identity_table(6));
    FAIL("expected CocycleFailure");
  } catch (const CheckError& e) {
    CHECK(e.code() == Code::CocycleFailure);
    CHECK(e.detail().find("(1,2,") != std::string::npos);
  }
}

TEST_CASE("inverse correspondence with operators at the group level") {
  GroupPtr s3 = make_s3();
  GroupPtr z3 = make_cyclic_group(3);

  RRBGroupOp rid =
      verify_rrb_group(trivial_action(z3, z3), std::vector<int>{0, 1, 2});
  CrossedHomGroup dh = invert_rrb_group(rid);
  CHECK(dh.d == std::vector<int>{0, 1, 2});
  CHECK(invert_crossed_hom_group(dh).b == rid.b);

  // Inversion is its own pointwise inverse.
  RRBGroupOp rinv = verify_rrb_group(adjoint_action(s3), inverse_table(*s3));
  CHECK(invert_rrb_group(rinv).d == inverse_table(*s3));

  // Non-bijective operators do not invert.
  RRBGroupOp rz = verify_rrb_group(adjoint_action(s3), std::vector<int>(6, 0));
  CHECK(thrown_code([&] { invert_rrb_group(rz); }) == Code::NotBijective);

  // The bijective crossed homomorphisms are exactly the pointwise inverses
  // of the bijective operators.
  auto ops = enumerate_rrb_group(adjoint_action(s3), 10000000);
  auto chs = enumerate_crossed_homs_group(adjoint_action(s3), 10000000);
  std::vector<std::vector<int>> inv_of_bij;
  for (const auto& b : ops)
    if (is_bijection(b)) {
      std::vector<int> d(6);
      for (int x = 0; x < 6; ++x) d[(std::size_t)b[(std::size_t)x]] = x;
      inv_of_bij.push_back(d);
    }
  std::sort(inv_of_bij.begin(), inv_of_bij.end());
  std::vector<std::vector<int>> bij_chs;
  for (const auto& d : chs)
    if (is_bijection(d)) bij_chs.push_back(d);
  CHECK(inv_of_bij == bij_chs);
  REQUIRE(bij_chs.size() == 1);
  CHECK(bij_chs[0] == inverse_table(*s3));
}

TEST_CASE("2-group crossed homomorphisms: hat, graph and derived action") {
  GroupPtr z3 = make_cyclic_group(3);
  TwoGroupPtr d3 = discrete_two_group(z3);
  TwoGroupAction tr = trivial_two_group_action(d3, d3);
  SemidirectContext ctx = make_semidirect_context(tr);

  // D = id under the trivial action: hat(q, p) = (q⁻¹·p, e).
  CrossedHomTwoGroup hid =
      verify_crossed_hom_two_group(tr, {0, 1, 2}, {0, 1, 2});
  RRBTwoGroupOp hat = crossed_hom_hat_operator(ctx, hid);
  for (int x = 0; x < 3; ++x)
    for (int a = 0; a < 3; ++a)
      CHECK(hat.b[(std::size_t)pair_index(x, a, 3)] ==
            pair_index(z3->mul(z3->inv(x), a), 0, 3));

  // D = const-e: hat(q, p) = (q⁻¹, e).
  CrossedHomTwoGroup hze =
      verify_crossed_hom_two_group(tr, {0, 0, 0}, {0, 0, 0});
  RRBTwoGroupOp hz = crossed_hom_hat_operator(ctx, hze);
  for (int x = 0; x < 3; ++x)
    for (int a = 0; a < 3; ++a)
      CHECK(hz.b[(std::size_t)pair_index(x, a, 3)] ==
            pair_index(z3->inv(x), 0, 3));

  // Graph closure and the hat condition each characterize the cocycle law
  // across all 27 candidate tables.
  for (int v0 = 0; v0 < 3; ++v0)
    for (int v1 = 0; v1 < 3; ++v1)
      for (int v2 = 0; v2 < 3; ++v2) {
        const std::vector<int> dtab = {v0, v1, v2};
        const bool direct = is_crossed_hom_two_group(tr, dtab, dtab);
        CHECK(crossed_hom_graph_closes(ctx, dtab, dtab) == direct);
        CHECK(crossed_hom_hat_is_rb(ctx, dtab, dtab) == direct);
      }

  // Mismatched level maps break the groupoid morphism condition.
  GroupPtr s3 = make_s3();
  TwoGroupAction ads3 = adjoint_two_group_action(discrete_two_group(s3));
  CHECK(thrown_code([&] {
          verify_crossed_hom_two_group(ads3, std::vector<int>(6, 0),
                                       inverse_table(*s3));
        }) == Code::NotGroupoidMorphism);

  // Deriving twice restores the action and the tables.
  CrossedHomTwoGroup der2 = derived_crossed_hom(derived_crossed_hom(hid));
  CHECK(der2.d == hid.d);
  CHECK(der2.d0 == hid.d0);
  CHECK(der2.action.same_as(hid.action));

  SemidirectContext ctx3 = make_semidirect_context(ads3);
  auto chs = enumerate_crossed_homs_two_group(ads3, 10000000);
  REQUIRE(chs.size() == 10);
  for (const auto& [dt, dt0] : chs) {
    CHECK(dt == dt0);  // discrete carrier
    CHECK(crossed_hom_graph_closes(ctx3, dt, dt0));
    CHECK(crossed_hom_hat_is_rb(ctx3, dt, dt0));
    CrossedHomTwoGroup h = verify_crossed_hom_two_group(ads3, dt, dt0);
    SubTwoGroup gr = crossed_hom_graph(ctx3, h);
    CHECK(gr.group->arrows() == 6);
    CrossedHomTwoGroup dd = derived_crossed_hom(derived_crossed_hom(h));
    CHECK(dd.d == dt);
    CHECK(dd.d0 == dt0);
  }
}

TEST_CASE("crossed-module level: correspondence with bijective operators") {
  GroupPtr s3 = make_s3();
  XModPtr xs3 = validate_xmod(s3, s3, identity_table(6), adjoint_action(s3));
  XModAction ads3 = adjoint_xmod_action(xs3);

  auto ops = enumerate_rrb_xmod(ads3, 100000000);
  auto chs = enumerate_crossed_homs_xmod(ads3, 100000000);
  CHECK(ops.size() == 8);
  CHECK(chs.size() == 10);

  int bij_ops = 0, bij_chs = 0;
  for (const auto& [b1, b0] : ops)
    if (is_bijection(b1) && is_bijection(b0)) {
      ++bij_ops;
      RRBXModOp op = verify_rrb_xmod(ads3, b1, b0);
      CrossedHomXMod h = invert_rrb_xmod(op);
      CHECK(is_crossed_hom_xmod(ads3, h.d1, h.d0));
      RRBXModOp back = invert_crossed_hom_xmod(h);
      CHECK(back.b1 == b1);
      CHECK(back.b0 == b0);
    }
  for (const auto& [d1, d0] : chs)
    if (is_bijection(d1) && is_bijection(d0)) ++bij_chs;
  CHECK(bij_ops == 1);
  CHECK(bij_chs == 1);

  // The unique bijective operator here is inversion at both levels.
  RRBXModOp opi =
      verify_rrb_xmod(ads3, inverse_table(*s3), inverse_table(*s3));
  CrossedHomXMod hi = invert_rrb_xmod(opi);
  CHECK(hi.d1 == inverse_table(*s3));
  CHECK(hi.d0 == inverse_table(*s3));

  GroupPtr z2 = make_cyclic_group(2);
  XModPtr zx = validate_xmod(z2, make_trivial_group(), {0, 0}, {{0, 1}});
  XModAction adz = adjoint_xmod_action(zx);
  CHECK(enumerate_crossed_homs_xmod(adz, 1000000).size() == 2);
}
