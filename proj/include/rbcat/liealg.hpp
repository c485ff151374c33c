#pragma once

// Exact-rational Lie algebras presented by structure constants, actions by
// derivations, crossed modules of Lie algebras, and the weight-1 relative
// Rota-Baxter operators and crossed homomorphisms living on them. Every
// check runs in exact rational arithmetic on basis elements; bilinearity
// makes the basis checks sufficient, and there are no tolerances anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <string>
#include <vector>

namespace rbcat {

using Rational = boost::multiprecision::cpp_rational;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major: m[row][col]

RatMatrix zero_matrix(int rows, int cols);
RatMatrix identity_matrix(int n);
RatMatrix negated_matrix(const RatMatrix& m);
RatVector basis_vector(int dim, int i);
RatVector apply_matrix(const RatMatrix& m, const RatVector& v);
RatMatrix matrix_product(const RatMatrix& a, const RatMatrix& b);
std::string vector_str(const RatVector& v);

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

// A finite-dimensional Lie algebra over the rationals given by structure
// constants: structure()[i][j] is the coordinate vector of [e_i, e_j].
class LieAlgebra {
 public:
  int dim() const { return dim_; }
  const std::vector<std::vector<RatVector>>& structure() const { return c_; }
  const RatVector& bracket(int i, int j) const { return c_[i][j]; }
  RatVector bracket(const RatVector& u, const RatVector& v) const;
  bool is_abelian() const;
  bool same_as(const LieAlgebra& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }

 private:
  LieAlgebra() = default;
  int dim_ = 0;
  std::vector<std::vector<RatVector>> c_;

  friend LieAlgebraPtr validate_lie_algebra(
      int dim, std::vector<std::vector<RatVector>> structure);
};

// Checks the shape of the structure-constant array, antisymmetry of the
// bracket (including [e_i, e_i] = 0) and the Jacobi identity on all basis
// triples.
LieAlgebraPtr validate_lie_algebra(int dim,
                                   std::vector<std::vector<RatVector>> structure);

LieAlgebraPtr make_abelian_lie_algebra(int dim);
// The affine line algebra aff(1): two-dimensional with [e_0, e_1] = e_1.
LieAlgebraPtr make_aff1();

// f is a linear map dom → cod (matrix with dim(cod) rows and dim(dom)
// columns) preserving brackets.
bool is_lie_algebra_hom(const RatMatrix& f, const LieAlgebraPtr& dom,
                        const LieAlgebraPtr& cod);
// d is a square matrix on g satisfying the Leibniz rule
// d[u,v] = [du, v] + [u, dv].
bool is_derivation(const RatMatrix& d, const LieAlgebraPtr& g);

// An action of one Lie algebra on another by derivations: a Lie algebra
// homomorphism x ↦ φ̄(x) of the actor into Der(target). matrix(i) is the
// derivation attached to the i-th basis vector of the actor.
class LieAction {
 public:
  const LieAlgebraPtr& actor() const { return actor_; }
  const LieAlgebraPtr& target() const { return target_; }
  const std::vector<RatMatrix>& matrices() const { return phi_; }
  const RatMatrix& matrix(int i) const { return phi_[i]; }
  // φ̄(x)u for a coordinate vector x over the actor and u over the target.
  RatVector apply(const RatVector& x, const RatVector& u) const;
  bool same_as(const LieAction& o) const {
    return actor_->same_as(*o.actor_) && target_->same_as(*o.target_) &&
           phi_ == o.phi_;
  }

 private:
  LieAction() = default;
  LieAlgebraPtr actor_, target_;
  std::vector<RatMatrix> phi_;

  friend LieAction validate_lie_action(LieAlgebraPtr actor,
                                       LieAlgebraPtr target,
                                       std::vector<RatMatrix> phi,
                                       const std::string& what);
};

LieAction validate_lie_action(LieAlgebraPtr actor, LieAlgebraPtr target,
                              std::vector<RatMatrix> phi,
                              const std::string& what = "action");

// g acting on itself by ad_x = [x, ·]; valid by the Jacobi identity.
LieAction adjoint_lie_action(const LieAlgebraPtr& g);
LieAction trivial_lie_action(const LieAlgebraPtr& actor,
                             const LieAlgebraPtr& target);

class LieXMod;
using LieXModPtr = std::shared_ptr<const LieXMod>;

// A crossed module of Lie algebras: a homomorphism ∂̄ : h1 → h0 together with
// an action of h0 on h1 by derivations satisfying
//   ∂̄a ▷ b = [a, b]        (Peiffer)
//   ∂̄(u ▷ a) = [u, ∂̄a]     (equivariance of the boundary).
class LieXMod {
 public:
  const LieAlgebraPtr& h1() const { return h1_; }
  const LieAlgebraPtr& h0() const { return h0_; }
  const RatMatrix& boundary() const { return dbar_; }
  RatVector boundary(const RatVector& a) const {
    return apply_matrix(dbar_, a);
  }
  const LieAction& act() const { return act_; }
  bool same_as(const LieXMod& o) const {
    return h1_->same_as(*o.h1_) && h0_->same_as(*o.h0_) && dbar_ == o.dbar_ &&
           act_.same_as(o.act_);
  }

 private:
  LieXMod(LieAlgebraPtr h1, LieAlgebraPtr h0, RatMatrix dbar, LieAction act)
      : h1_(std::move(h1)),
        h0_(std::move(h0)),
        dbar_(std::move(dbar)),
        act_(std::move(act)) {}
  LieAlgebraPtr h1_, h0_;
  RatMatrix dbar_;
  LieAction act_;

  friend LieXModPtr validate_lie_xmod(LieAlgebraPtr h1, LieAlgebraPtr h0,
                                      RatMatrix dbar,
                                      std::vector<RatMatrix> act);
};

LieXModPtr validate_lie_xmod(LieAlgebraPtr h1, LieAlgebraPtr h0, RatMatrix dbar,
                             std::vector<RatMatrix> act);

// (g →Id g) with the adjoint action; a crossed module for any Lie algebra g.
LieXModPtr identity_lie_xmod(const LieAlgebraPtr& g);

// An action of one Lie crossed module on another, recorded as a morphism
// into the actor crossed module of the target (h1 → h0):
//   - ᾱ sends each basis vector of g1 to a derivation h0 → h1, i.e. a linear
//     map γ with γ[x,y] = x▷γ(y) − y▷γ(x); these form a Lie algebra under
//     [γ, γ'] = γ∘∂̄∘γ' − γ'∘∂̄∘γ.
//   - β̄ sends each basis vector of g0 to a pair (d1, d0) of derivations of
//     h1 and h0 with ∂̄∘d1 = d0∘∂̄ and d1(x▷a) = d0(x)▷a + x▷d1(a); pairs
//     bracket componentwise and act on the γ's by (d1,d0)▷γ = d1∘γ − γ∘d0.
//   - the boundary γ ↦ (γ∘∂̄, ∂̄∘γ) intertwines ᾱ and β̄ with μ̄, and ᾱ is
//     equivariant: ᾱ(x▷ξ) = β̄1(x)∘ᾱ(ξ) − ᾱ(ξ)∘β̄0(x).
// All conditions are verified on basis elements, which suffices by
// bilinearity.
class LieXModAction {
 public:
  const LieXModPtr& actor_xm() const { return actor_; }
  const LieXModPtr& target_xm() const { return target_; }
  const RatMatrix& abar(int xi) const { return abar_[xi]; }
  const RatMatrix& b1(int x) const { return b1_[x]; }
  const RatMatrix& b0(int x) const { return b0_[x]; }
  // Bilinear extensions; arguments are coordinate vectors over the labelled
  // algebras.
  RatVector apply_abar(const RatVector& xi_g1, const RatVector& x_h0) const;
  RatVector apply_b1(const RatVector& x_g0, const RatVector& a_h1) const;
  RatVector apply_b0(const RatVector& x_g0, const RatVector& u_h0) const;
  bool same_as(const LieXModAction& o) const {
    return actor_->same_as(*o.actor_) && target_->same_as(*o.target_) &&
           abar_ == o.abar_ && b1_ == o.b1_ && b0_ == o.b0_;
  }

 private:
  LieXModAction() = default;
  LieXModPtr actor_, target_;
  std::vector<RatMatrix> abar_, b1_, b0_;

  friend LieXModAction validate_lie_xmod_action(LieXModPtr actor,
                                                LieXModPtr target,
                                                std::vector<RatMatrix> abar,
                                                std::vector<RatMatrix> b1,
                                                std::vector<RatMatrix> b0);
};

LieXModAction validate_lie_xmod_action(LieXModPtr actor, LieXModPtr target,
                                       std::vector<RatMatrix> abar,
                                       std::vector<RatMatrix> b1,
                                       std::vector<RatMatrix> b0);

// The action of a Lie crossed module on itself: ᾱ(ξ)u = −u▷ξ,
// β̄1(x) = x▷·, β̄0(x) = ad_x; valid for every crossed module.
LieXModAction adjoint_lie_xmod_action(const LieXModPtr& x);
LieXModAction trivial_lie_xmod_action(const LieXModPtr& actor,
                                      const LieXModPtr& target);

// A weight-1 relative Rota-Baxter operator at the Lie algebra level: a
// linear map B from the acted-on algebra into the actor with
//   [Bu, Bv] = B(φ̄(Bu)v − φ̄(Bv)u + [u, v]).
struct RRBLieOp {
  LieAction action;
  RatMatrix b;
};

RRBLieOp verify_rrb_lie(const RatMatrix& b, const LieAction& action);
bool is_rrb_lie(const RatMatrix& b, const LieAction& action);

// The crossed-module refinement: B1, B0 commute with the boundaries, each
// level is a weight-1 operator for the induced actions β̄1∘μ̄ and β̄0, and the
// mixed identity B0u ▷ B1a = B1(β̄1(B0u)a − ᾱ(B1a)u + u▷a) holds.
struct RRBLieXModOp {
  LieXModAction action;
  RatMatrix b1, b0;
};

RRBLieXModOp verify_rrb_lie_xmod(const RatMatrix& b1, const RatMatrix& b0,
                                 const LieXModAction& action);
bool is_rrb_lie_xmod(const RatMatrix& b1, const RatMatrix& b0,
                     const LieXModAction& action);

// A crossed homomorphism at the Lie algebra level: a linear map D from the
// actor into the acted-on algebra with
//   D[x, y] = φ̄(x)Dy − φ̄(y)Dx + [Dx, Dy].
// Under the trivial action these are exactly the Lie algebra homomorphisms.
struct CrossedHomLie {
  LieAction action;
  RatMatrix d;
};

CrossedHomLie verify_crossed_hom_lie(const RatMatrix& d,
                                     const LieAction& action);
bool is_crossed_hom_lie(const RatMatrix& d, const LieAction& action);

// The crossed-module refinement: levelwise crossed homomorphisms for β̄1∘μ̄
// and β̄0, the square ∂̄∘D1 = D0∘μ̄, and the mixed identity
//   D1(x ▷ ξ) = β̄1(x)D1ξ − ᾱ(ξ)D0x + D0x ▷ D1ξ.
struct CrossedHomLieXMod {
  LieXModAction action;
  RatMatrix d1, d0;
};

CrossedHomLieXMod verify_crossed_hom_lie_xmod(const RatMatrix& d1,
                                              const RatMatrix& d0,
                                              const LieXModAction& action);
bool is_crossed_hom_lie_xmod(const RatMatrix& d1, const RatMatrix& d0,
                             const LieXModAction& action);

}  // namespace rbcat
