#include <algorithm>
#include <vector>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"
#include "testutil.hpp"

using namespace rbcat;
using namespace rbcat::test;

TEST_CASE("group validation accepts S3 and exposes its structure") {
  GroupPtr s3 = validate_group(s3_rows(), 0,
                               {"e", "(01)", "(02)", "(12)", "(012)", "(021)"});
  CHECK(s3->order() == 6);
  CHECK(s3->identity() == 0);
  CHECK_FALSE(s3->is_abelian());
  CHECK(s3->inv(4) == 5);
  CHECK(s3->inv(1) == 1);
  CHECK(s3->element_order(4) == 3);
  CHECK(s3->element_order(1) == 2);
  CHECK(s3->conj(1, 4) == 5);  // (01)(012)(01) = (021)
  CHECK(s3->pow(4, 3) == 0);
  CHECK(s3->label(4) == "(012)");
  CHECK(s3->same_table(*make_s3()));

  GroupPtr k4 = make_klein_group();
  CHECK(k4->is_abelian());
  for (int i = 0; i < 4; ++i) CHECK(k4->inv(i) == i);
}

TEST_CASE("every single-entry corruption of the S3 table is rejected") {
  const auto rows = s3_rows();
  int killed = 0, total = 0;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c)
      for (int v = 0; v < 6; ++v) {
        if (v == rows[r][c]) continue;
        auto bad = rows;
        bad[(std::size_t)r][(std::size_t)c] = v;
        ++total;
        if (thrown_code([&] { validate_group(bad); })) ++killed;
      }
  CHECK(total == 180);
  CHECK(killed == total);
}

TEST_CASE("group validation failures carry the right codes") {
  // Entry out of range.
  CHECK(thrown_code([] {
          validate_group(std::vector<std::vector<int>>{{0, 1}, {1, 2}});
        }) == Code::NotClosed);
  // A repeated value in a row leaves no two-sided identity.
  CHECK(thrown_code([] {
          validate_group(std::vector<std::vector<int>>{{0, 0}, {1, 1}});
        }) == Code::NoIdentity);
  // The identity is discovered from the table, wherever it sits; a
  // contradicting hint is rejected.
  GroupPtr relabeled =
      validate_group(std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  CHECK(relabeled->identity() == 1);
  CHECK(thrown_code([] {
          validate_group(std::vector<std::vector<int>>{{1, 0}, {0, 1}}, 0);
        }) == Code::NoIdentity);
  // An element without a two-sided inverse.
  CHECK(thrown_code([] {
          validate_group(
              std::vector<std::vector<int>>{{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
        }) == Code::NoInverse);
  // A Latin square with identity and two-sided inverses that is not
  // associative: ((1·1)·2 = 2 but 1·(1·2) = 4.
  std::vector<std::vector<int>> loop = {{0, 1, 2, 3, 4},
                                        {1, 0, 3, 4, 2},
                                        {2, 4, 0, 1, 3},
                                        {3, 2, 4, 0, 1},
                                        {4, 3, 1, 2, 0}};
  CHECK(thrown_code([&] { validate_group(loop); }) == Code::NotAssociative);
}

TEST_CASE("homomorphism validation: sign map, kernels, witnesses") {
  GroupPtr s3 = make_s3();
  GroupPtr z2 = make_cyclic_group(2);

  GroupHom sign = validate_group_hom(s3, z2, {0, 1, 1, 1, 0, 0}, "sign");
  CHECK(sign.kernel() == std::vector<int>{0, 4, 5});
  CHECK(sign.image() == std::vector<int>{0, 1});
  CHECK_FALSE(sign.is_bijective());

  // Inversion on a nonabelian group is not a homomorphism.
  CHECK(thrown_code([&] {
          validate_group_hom(s3, s3, inverse_table(*s3));
        }) == Code::NotHom);
  // Maps must send identity to identity.
  CHECK(thrown_code([&] {
          validate_group_hom(z2, z2, std::vector<int>{1, 0});
        }) == Code::NotHom);

  // Conjugation by (01) is an inner automorphism.
  std::vector<int> by01(6);
  for (int i = 0; i < 6; ++i) by01[(std::size_t)i] = s3->conj(1, i);
  GroupHom inner = validate_group_hom(s3, s3, by01);
  CHECK(inner.is_bijective());
  CHECK(by01 == std::vector<int>{0, 1, 3, 2, 5, 4});
}

TEST_CASE("action validation: adjoint, trivial, and failure codes") {
  GroupPtr s3 = make_s3();
  GroupAction adj = adjoint_action(s3);
  for (int g = 0; g < 6; ++g)
    for (int x = 0; x < 6; ++x) CHECK(adj.apply(g, x) == s3->conj(g, x));
  for (int g = 0; g < 6; ++g) {
    const auto& p = adj.perm(g);
    const auto& q = adj.inverse_perm(g);
    for (int x = 0; x < 6; ++x) CHECK(q[(std::size_t)p[(std::size_t)x]] == x);
  }

  GroupAction triv = trivial_action(s3, make_cyclic_group(3));
  CHECK(triv.actor()->order() == 6);
  CHECK(triv.target()->order() == 3);

  // perm(g) that is a bijection but not an automorphism.
  auto perms = adj.perms();
  perms[1] = {1, 0, 2, 3, 4, 5};  // swaps e and (01): breaks identity
  CHECK(thrown_code([&] {
          validate_group_action(s3, s3, perms, "broken");
        }) == Code::NotAutomorphism);

  // perm(e) must be the identity map.
  auto perms2 = adj.perms();
  perms2[0] = perms2[4];
  CHECK(thrown_code([&] {
          validate_group_action(s3, s3, perms2, "broken");
        }) == Code::NotHom);

  // perm(g.g') must equal perm(g) after perm(g').
  auto perms3 = adj.perms();
  perms3[4] = identity_table(6);
  perms3[5] = identity_table(6);
  CHECK(thrown_code([&] {
          validate_group_action(s3, s3, perms3, "broken");
        }) == Code::NotHom);

  // A row of the wrong length.
  auto perms4 = adj.perms();
  perms4[2].pop_back();
  CHECK(thrown_code([&] {
          validate_group_action(s3, s3, perms4, "broken");
        }) == Code::ActionMismatch);
}

TEST_CASE("semidirect product of Z3 by Z2 with inversion is S3") {
  GroupPtr z3 = make_cyclic_group(3);
  GroupPtr z2 = make_cyclic_group(2);
  GroupAction invert =
      validate_group_action(z2, z3, {{0, 1, 2}, {0, 2, 1}}, "inversion");
  GroupPtr sd = semidirect_product(z3, z2, invert);
  CHECK(sd->order() == 6);
  CHECK_FALSE(sd->is_abelian());
  CHECK(find_isomorphism(sd, make_s3()).has_value());

  GroupPtr direct = product_group(z3, z2);
  CHECK(direct->is_abelian());
  CHECK(find_isomorphism(direct, make_cyclic_group(6)).has_value());
  CHECK_FALSE(find_isomorphism(direct, make_s3()).has_value());
  CHECK(pair_index(2, 1, 2) == 5);
}

TEST_CASE("automorphism groups of the standard small groups") {
  CHECK(automorphism_group(make_cyclic_group(2)).group->order() == 1);
  CHECK(automorphism_group(make_cyclic_group(3)).group->order() == 2);
  CHECK(automorphism_group(make_cyclic_group(4)).group->order() == 2);
  AutomorphismGroup k4 = automorphism_group(make_klein_group());
  CHECK(k4.group->order() == 6);  // GL(2, F2) = S3
  AutomorphismGroup s3 = automorphism_group(make_s3());
  CHECK(s3.group->order() == 6);  // all inner
  CHECK(s3.index_of(identity_table(6)) >= 0);
  CHECK(s3.index_of({0, 1, 2, 3, 5, 4}) == -1);  // inversion: not an aut
  // maps compose as the table says
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::vector<int> comp(6);
      for (int x = 0; x < 6; ++x)
        comp[(std::size_t)x] =
            s3.maps[(std::size_t)i][(std::size_t)s3.maps[(std::size_t)j]
                                        [(std::size_t)x]];
      CHECK(s3.group->mul(i, j) == s3.index_of(comp));
    }
}

TEST_CASE("subgroups, normality and quotients") {
  GroupPtr s3 = make_s3();
  SubgroupQuotient a3 = subgroup_and_quotient(s3, {0, 4, 5}, true);
  CHECK(a3.normal);
  CHECK(a3.quotient->order() == 2);
  CHECK(a3.projection == std::vector<int>{0, 1, 1, 1, 0, 0});

  SubgroupQuotient refl = subgroup_and_quotient(s3, {0, 1}, false);
  CHECK_FALSE(refl.normal);
  CHECK(thrown_code([&] { subgroup_and_quotient(s3, {0, 1}, true); }) ==
        Code::NotNormal);
  CHECK(thrown_code([&] { subgroup_and_quotient(s3, {0, 4}, false); }) ==
        Code::NotSubgroup);
  CHECK(thrown_code([&] { subgroup_and_quotient(s3, {4, 5}, false); }) ==
        Code::NotSubgroup);
}

TEST_CASE("isomorphism search separates the order-4 groups") {
  CHECK(find_isomorphism(make_cyclic_group(4), make_klein_group()) ==
        std::nullopt);
  auto iso = find_isomorphism(make_klein_group(), make_klein_group());
  REQUIRE(iso.has_value());
  CHECK(is_bijection(*iso));
}
