#include <algorithm>
#include <vector>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"
#include "rbcat/twogroup.hpp"
#include "testutil.hpp"

using namespace rbcat;
using namespace rbcat::test;

TEST_CASE("discrete and one-object 2-groups") {
  GroupPtr s3 = make_s3();
  TwoGroupPtr d = discrete_two_group(s3);
  CHECK(d->arrows() == 6);
  CHECK(d->objects() == 6);
  CHECK(d->is_discrete());
  CHECK_FALSE(d->is_one_object());
  for (int p = 0; p < 6; ++p) {
    CHECK(d->src(p) == p);
    CHECK(d->tgt(p) == p);
    CHECK(d->unit(p) == p);
    CHECK(d->ginv(p) == p);     // unit arrows invert to themselves under ∘
    CHECK(d->comp(p, p) == p);  // only diagonal pairs compose
    CHECK(d->composable(p, p));
    CHECK_FALSE(d->composable(p, (p + 1) % 6));
  }
  CHECK(d->composable_pairs().size() == 6);
  CHECK(d->ker_src_elements() == std::vector<int>{0});

  GroupPtr z2 = make_cyclic_group(2);
  TwoGroupPtr o = one_object_two_group(z2);
  CHECK(o->arrows() == 2);
  CHECK(o->objects() == 1);
  CHECK(o->is_one_object());
  CHECK(o->ker_src_elements() == std::vector<int>{0, 1});
  CHECK(o->comp(1, 1) == 0);  // groupoid composite = group product here
  CHECK(o->composable_pairs().size() == 4);

  // One-object 2-groups exist only over abelian arrow groups; the
  // interchange law is what fails.
  CHECK(thrown_code([&] { one_object_two_group(s3); }) ==
        Code::InterchangeFailure);
}

TEST_CASE("2-group validation failure witnesses") {
  GroupPtr z2 = make_cyclic_group(2);
  GroupPtr z4 = make_cyclic_group(4);

  // src must be a homomorphism.
  CHECK(thrown_code([&] {
          validate_two_group(z2, z2, {1, 0}, {0, 1}, {0, 1});
        }) == Code::NotHom);

  // unit must be a section of src and tgt.
  CHECK(thrown_code([&] {
          validate_two_group(z4, z2, {0, 1, 0, 1}, {0, 1, 0, 1}, {0, 0});
        }) == Code::GroupoidAxiomFailure);
}

TEST_CASE("sub-2-groups and quotients of the discrete S3 2-group") {
  TwoGroupPtr d = discrete_two_group(make_s3());

  SubTwoGroup a3 = sub_two_group(d, {0, 4, 5}, {0, 4, 5});
  CHECK(a3.group->arrows() == 3);
  CHECK(a3.group->objects() == 3);
  CHECK(a3.group->is_discrete());
  CHECK(a3.arrow_embed == std::vector<int>{0, 4, 5});
  CHECK(a3.arrow_position(5) == 2);
  CHECK(a3.arrow_position(1) == -1);
  CHECK(a3.object_position(4) == 1);

  // Arrow subset whose src leaves the object subset.
  CHECK(thrown_code([&] { sub_two_group(d, {0, 4, 5}, {0, 1}); }).has_value());
  // Not closed under multiplication.
  CHECK(thrown_code([&] { sub_two_group(d, {0, 4}, {0, 4}); }) ==
        Code::NotSubgroup);

  QuotientTwoGroup q = quotient_two_group(d, {0, 4, 5}, {0, 4, 5});
  CHECK(q.group->arrows() == 2);
  CHECK(q.group->objects() == 2);
  CHECK(q.arrow_proj == std::vector<int>{0, 1, 1, 1, 0, 0});
  CHECK(thrown_code([&] { quotient_two_group(d, {0, 1}, {0, 1}); }) ==
        Code::NotNormal);
}

TEST_CASE("2-group morphisms commute with the groupoid structure") {
  TwoGroupPtr d = discrete_two_group(make_s3());

  SubTwoGroup a3 = sub_two_group(d, {0, 4, 5}, {0, 4, 5});
  TwoGroupMorphism embed = validate_two_group_morphism(
      a3.group, d, a3.arrow_embed, a3.object_embed, "embedding");
  CHECK(embed.f(2) == 5);
  CHECK_FALSE(embed.f.is_bijective());

  QuotientTwoGroup q = quotient_two_group(d, {0, 4, 5}, {0, 4, 5});
  TwoGroupMorphism proj = validate_two_group_morphism(
      d, q.group, q.arrow_proj, q.object_proj, "projection");
  CHECK(proj.f(3) == 1);

  // Level maps that are homomorphisms but disagree, so src fails to commute.
  GroupPtr s3 = make_s3();
  std::vector<int> by01(6);
  for (int i = 0; i < 6; ++i) by01[(std::size_t)i] = s3->conj(1, i);
  CHECK(thrown_code([&] {
          validate_two_group_morphism(d, d, identity_table(6), by01);
        }) == Code::NotGroupoidMorphism);
}

TEST_CASE("2-group actions: adjoint, trivial, and failure codes") {
  GroupPtr s3 = make_s3();
  TwoGroupPtr d = discrete_two_group(s3);

  TwoGroupAction adj = adjoint_two_group_action(d);
  CHECK(adj.is_adjoint());
  for (int a = 0; a < 6; ++a)
    for (int x = 0; x < 6; ++x) {
      CHECK(adj.apply(a, x) == s3->conj(a, x));
      CHECK(adj.apply0(a, x) == s3->conj(a, x));
    }

  TwoGroupAction tr = trivial_two_group_action(d, d);
  CHECK_FALSE(tr.is_adjoint());
  CHECK(tr.same_as(tr));
  CHECK_FALSE(tr.same_as(adj));

  // Arrow action = conjugation, object action = trivial: src equivariance
  // breaks on discrete carriers.
  CHECK(thrown_code([&] {
          validate_two_group_action(d, d, adjoint_action(s3),
                                    trivial_action(s3, s3));
        }) == Code::NotGroupoidMorphism);

  // Carrier mismatch between the action and the 2-groups.
  CHECK(thrown_code([&] {
          validate_two_group_action(d, d, adjoint_action(s3),
                                    adjoint_action(make_cyclic_group(2)));
        }) == Code::ActionMismatch);

  // One-object Z4 with inversion at the arrow level: every levelwise check
  // passes but compatibility with the groupoid composite fails.
  GroupPtr z4 = make_cyclic_group(4);
  TwoGroupPtr o4 = one_object_two_group(z4);
  GroupAction invert = validate_group_action(
      z4, z4, {{0, 1, 2, 3}, {0, 3, 2, 1}, {0, 1, 2, 3}, {0, 3, 2, 1}},
      "inversion");
  CHECK(thrown_code([&] {
          validate_two_group_action(o4, o4, invert,
                                    trivial_action(make_trivial_group(),
                                                   make_trivial_group()));
        }) == Code::EqPhiFailure);
}

TEST_CASE("semidirect 2-groups have componentwise structure") {
  GroupPtr s3 = make_s3();
  TwoGroupPtr d = discrete_two_group(s3);
  TwoGroupPtr sd = semidirect_two_group(adjoint_two_group_action(d));
  CHECK(sd->arrows() == 36);
  CHECK(sd->objects() == 36);
  // src acts componentwise on pair indices.
  for (int q = 0; q < 6; ++q)
    for (int p = 0; p < 6; ++p)
      CHECK(sd->src(pair_index(q, p, 6)) == pair_index(q, p, 6));
  CHECK(sd->is_discrete());

  GroupPtr z2 = make_cyclic_group(2);
  TwoGroupPtr o = one_object_two_group(z2);
  TwoGroupPtr so = semidirect_two_group(adjoint_two_group_action(o));
  CHECK(so->arrows() == 4);
  CHECK(so->objects() == 1);

  TwoGroupPtr prod = direct_product_two_group(d, d);
  CHECK(prod->arrows() == 36);
  CHECK(prod->arrow_group()->is_abelian() == false);
}
