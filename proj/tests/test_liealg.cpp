#include <random>
#include <vector>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/liealg.hpp"
#include "testutil.hpp"

using namespace rbcat;
using namespace rbcat::test;

namespace {

const RatMatrix kAdE0 = {{0, 0}, {0, 1}};    // ad_{e0} for [e0,e1] = e1
const RatMatrix kAdE1 = {{0, 0}, {-1, 0}};   // ad_{e1}

RatMatrix diag_0_m1() {
  RatMatrix m = zero_matrix(2, 2);
  m[1][1] = -1;
  return m;
}

}  // namespace

TEST_CASE("structure-constant validation catches broken algebras") {
  LieAlgebraPtr aff = make_aff1();
  CHECK(aff->dim() == 2);
  CHECK_FALSE(aff->is_abelian());
  CHECK(vector_str(aff->bracket(0, 1)) == "[0, 1]");
  CHECK(make_abelian_lie_algebra(2)->is_abelian());

  // Antisymmetry violation.
  std::vector<std::vector<RatVector>> bad(
      2, std::vector<RatVector>(2, RatVector(2, Rational(0))));
  bad[0][1][1] = 1;
  bad[1][0][1] = 1;
  CHECK(thrown_code([&] { validate_lie_algebra(2, bad); }) ==
        Code::InvariantViolation);

  // [e0,e1]=e0, [e1,e2]=e1, [e2,e0]=e2 violates the Jacobi identity.
  std::vector<std::vector<RatVector>> jac(
      3, std::vector<RatVector>(3, RatVector(3, Rational(0))));
  auto set = [&](int i, int j, int k) {
    jac[(std::size_t)i][(std::size_t)j][(std::size_t)k] = 1;
    jac[(std::size_t)j][(std::size_t)i][(std::size_t)k] = -1;
  };
  set(0, 1, 0);
  set(1, 2, 1);
  set(2, 0, 2);
  CHECK(thrown_code([&] { validate_lie_algebra(3, jac); }) ==
        Code::InvariantViolation);

  // Rational structure constants are handled exactly.
  std::vector<std::vector<RatVector>> half(
      2, std::vector<RatVector>(2, RatVector(2, Rational(0))));
  half[0][1][1] = Rational(1, 2);
  half[1][0][1] = Rational(-1, 2);
  LieAlgebraPtr ah = validate_lie_algebra(2, half);
  CHECK(ah->bracket(0, 1) == RatVector{Rational(0), Rational(1, 2)});
  CHECK(is_rrb_lie(negated_matrix(identity_matrix(2)),
                   adjoint_lie_action(ah)));
}

TEST_CASE("derivations, homomorphisms and actions") {
  LieAlgebraPtr aff = make_aff1();
  LieAction ad = adjoint_lie_action(aff);

  CHECK(ad.matrix(0) == kAdE0);
  CHECK(ad.matrix(1) == kAdE1);
  CHECK(is_derivation(kAdE0, aff));
  CHECK(is_derivation(kAdE1, aff));
  CHECK_FALSE(is_derivation(identity_matrix(2), aff));

  CHECK(is_lie_algebra_hom(identity_matrix(2), aff, aff));
  RatMatrix not_hom = identity_matrix(2);
  not_hom[0][1] = 3;
  CHECK_FALSE(is_lie_algebra_hom(not_hom, aff, aff));

  // Non-derivation matrices are rejected at construction.
  CHECK(thrown_code([&] {
          validate_lie_action(aff, aff,
                              {identity_matrix(2), zero_matrix(2, 2)});
        }) == Code::ActionMismatch);
  // Derivations that fail the homomorphism law are rejected too.
  CHECK(thrown_code([&] { validate_lie_action(aff, aff, {kAdE0, kAdE0}); }) ==
        Code::NotHom);
}

TEST_CASE("weight-1 operators at the algebra level, exact arithmetic") {
  LieAlgebraPtr aff = make_aff1();
  LieAlgebraPtr ab2 = make_abelian_lie_algebra(2);
  LieAction ad_aff = adjoint_lie_action(aff);
  LieAction ad_ab = adjoint_lie_action(ab2);

  const RatMatrix zero2 = zero_matrix(2, 2);
  const RatMatrix id2 = identity_matrix(2);
  const RatMatrix neg2 = negated_matrix(id2);

  CHECK(is_rrb_lie(zero2, ad_aff));
  CHECK(is_rrb_lie(neg2, ad_aff));
  CHECK(is_rrb_lie(zero2, ad_ab));
  CHECK(is_rrb_lie(neg2, ad_ab));
  CHECK(is_rrb_lie(diag_0_m1(), ad_aff));
  CHECK(thrown_code([&] { verify_rrb_lie(id2, ad_aff); }) ==
        Code::IdentityFailure);

  // Hand expansion for diag(0,-1) on the only nontrivial basis pair: both
  // sides of the defining identity vanish.
  const RatMatrix d = diag_0_m1();
  RatVector be0 = apply_matrix(d, basis_vector(2, 0));
  RatVector be1 = apply_matrix(d, basis_vector(2, 1));
  CHECK(aff->bracket(be0, be1) == RatVector(2, Rational(0)));
  RatVector inner = ad_aff.apply(be0, basis_vector(2, 1));
  RatVector t2 = ad_aff.apply(be1, basis_vector(2, 0));
  for (std::size_t i = 0; i < 2; ++i) inner[i] -= t2[i];
  for (std::size_t i = 0; i < 2; ++i) inner[i] += aff->bracket(0, 1)[i];
  CHECK(inner == RatVector(2, Rational(0)));

  // Bilinearity: the basis verdict agrees with evaluation at seeded random
  // rational vectors, for valid and invalid operators alike.
  std::mt19937 rng(12345);
  auto rand_vec = [&](int n) {
    RatVector v((std::size_t)n);
    for (int i = 0; i < n; ++i)
      v[(std::size_t)i] =
          Rational((int)(rng() % 19) - 9, 1 + (int)(rng() % 7));
    return v;
  };
  auto holds_at = [&](const RatMatrix& b, const RatVector& u,
                      const RatVector& v) {
    RatVector bu = apply_matrix(b, u), bv = apply_matrix(b, v);
    RatVector lhs = ad_aff.actor()->bracket(bu, bv);
    RatVector in = ad_aff.apply(bu, v);
    RatVector sub = ad_aff.apply(bv, u);
    for (std::size_t i = 0; i < in.size(); ++i) in[i] -= sub[i];
    RatVector br = ad_aff.target()->bracket(u, v);
    for (std::size_t i = 0; i < in.size(); ++i) in[i] += br[i];
    return lhs == apply_matrix(b, in);
  };
  for (const RatMatrix& b : {zero2, neg2, diag_0_m1(), id2}) {
    bool random_verdict = true;
    for (int t = 0; t < 40; ++t)
      random_verdict = random_verdict && holds_at(b, rand_vec(2), rand_vec(2));
    CHECK(random_verdict == is_rrb_lie(b, ad_aff));
  }
}

TEST_CASE("crossed homomorphisms at the algebra level") {
  LieAlgebraPtr aff = make_aff1();
  LieAlgebraPtr ab2 = make_abelian_lie_algebra(2);
  LieAction ad_aff = adjoint_lie_action(aff);
  LieAction triv_aff = trivial_lie_action(aff, aff);
  LieAction triv_ab = trivial_lie_action(ab2, ab2);

  CHECK(is_crossed_hom_lie(zero_matrix(2, 2), ad_aff));
  CHECK(is_crossed_hom_lie(identity_matrix(2), triv_ab));
  CHECK(thrown_code([&] {
          verify_crossed_hom_lie(identity_matrix(2), ad_aff);
        }) == Code::IdentityFailure);

  // Under the trivial action the law is the homomorphism law.
  CHECK(is_crossed_hom_lie(identity_matrix(2), triv_aff));
  RatMatrix not_hom = identity_matrix(2);
  not_hom[0][1] = 3;
  CHECK(is_crossed_hom_lie(not_hom, triv_aff) ==
        is_lie_algebra_hom(not_hom, aff, aff));
  CHECK_FALSE(is_crossed_hom_lie(not_hom, triv_aff));
}

TEST_CASE("Lie crossed modules: validation witnesses and level operators") {
  LieAlgebraPtr aff = make_aff1();
  LieAlgebraPtr ab2 = make_abelian_lie_algebra(2);

  // Identity boundary with the trivial action breaks the first Peiffer law.
  CHECK(thrown_code([&] {
          validate_lie_xmod(aff, aff, identity_matrix(2),
                            {zero_matrix(2, 2), zero_matrix(2, 2)});
        }) == Code::Peiffer1Failure);

  // abelian h1 over aff(1): the boundary a0 ↦ e1 with φ(e0) = 2·Id breaks
  // equivariance of the boundary but not the first Peiffer law.
  RatMatrix dbar = {{0, 0}, {1, 0}};
  RatMatrix twice = identity_matrix(2);
  twice[0][0] = 2;
  twice[1][1] = 2;
  CHECK(thrown_code([&] {
          validate_lie_xmod(ab2, aff, dbar, {twice, zero_matrix(2, 2)});
        }) == Code::Peiffer2Failure);
  // ... while φ(e0) = Id makes it a genuine crossed module.
  LieXModPtr mixed = validate_lie_xmod(
      ab2, aff, dbar, {identity_matrix(2), zero_matrix(2, 2)});
  CHECK(mixed->boundary(basis_vector(2, 0)) == RatVector{0, 1});

  LieXModPtr xa = identity_lie_xmod(aff);
  LieXModAction adx = adjoint_lie_xmod_action(xa);
  LieXModAction trivx = trivial_lie_xmod_action(identity_lie_xmod(ab2),
                                                identity_lie_xmod(ab2));

  // For the identity crossed module, ᾱ(ξ)u = −u▷ξ = ad_ξ u.
  CHECK(adx.abar(0) == kAdE0);
  CHECK(adx.abar(1) == kAdE1);
  CHECK(adx.b1(0) == kAdE0);
  CHECK(adx.b0(0) == kAdE0);

  const RatMatrix zero2 = zero_matrix(2, 2);
  const RatMatrix id2 = identity_matrix(2);
  const RatMatrix neg2 = negated_matrix(id2);

  CHECK(is_rrb_lie_xmod(zero2, zero2, adx));
  CHECK(is_rrb_lie_xmod(neg2, neg2, adx));
  CHECK(thrown_code([&] { verify_rrb_lie_xmod(zero2, neg2, adx); }) ==
        Code::SquareFailure);
  CHECK(thrown_code([&] { verify_rrb_lie_xmod(id2, id2, adx); }) ==
        Code::ComponentFailure);
  // Perturbing one entry of a valid operator pair breaks the mixed identity.
  RatMatrix b1 = neg2;
  b1[0][1] = Rational(1, 2);
  CHECK_FALSE(is_rrb_lie_xmod(b1, neg2, adx));

  CHECK(is_crossed_hom_lie_xmod(zero2, zero2, adx));
  CHECK(is_crossed_hom_lie_xmod(id2, id2, trivx));
  CHECK(thrown_code([&] {
          verify_crossed_hom_lie_xmod(id2, id2, adx);
        }) == Code::IdentityFailure);
}
