#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "rbcat/fingroup.hpp"
#include "rbcat/twogroup.hpp"

namespace rbcat {

class CrossedModule;
using XModPtr = std::shared_ptr<const CrossedModule>;

// A crossed module mu : G1 → G0 with G0 acting on G1 by automorphisms,
// subject to both Peiffer identities.
class CrossedModule {
 public:
  const GroupPtr& g1() const { return g1_; }
  const GroupPtr& g0() const { return g0_; }
  const GroupHom& mu() const { return mu_; }
  const GroupAction& act() const { return act_; }
  int boundary(int a) const { return mu_(a); }
  // x ▷ a for x in G0, a in G1.
  int act_of(int x, int a) const { return act_.apply(x, a); }
  bool same_as(const CrossedModule& o) const {
    return g1_->same_table(*o.g1_) && g0_->same_table(*o.g0_) &&
           mu_.map() == o.mu_.map() && act_.same_as(o.act_);
  }

 private:
  CrossedModule(GroupPtr g1, GroupPtr g0, GroupHom mu, GroupAction act)
      : g1_(std::move(g1)), g0_(std::move(g0)), mu_(std::move(mu)),
        act_(std::move(act)) {}
  GroupPtr g1_, g0_;
  GroupHom mu_;
  GroupAction act_;

  friend XModPtr validate_xmod(GroupPtr g1, GroupPtr g0, std::vector<int> mu,
                               GroupAction act);
};

XModPtr validate_xmod(GroupPtr g1, GroupPtr g0, std::vector<int> mu,
                      GroupAction act);
XModPtr validate_xmod(GroupPtr g1, GroupPtr g0, std::vector<int> mu,
                      std::vector<std::vector<int>> act_perms);

struct XModMorphism {
  XModPtr dom, cod;
  GroupHom f1, f0;
};

XModMorphism validate_xmod_morphism(const XModPtr& dom, const XModPtr& cod,
                                    std::vector<int> f1, std::vector<int> f0,
                                    const std::string& what = "morphism");

// --- conversions with 2-groups -------------------------------------------

struct TwoGroupAsXMod {
  XModPtr xmod;
  std::vector<int> ker_embed;  // xmod G1 index -> arrow of the 2-group
  TwoGroupPtr source;
};

// ker(src) → P0 with t as boundary and p0 ▷ p = ι(p0)·p·ι(p0)⁻¹.
TwoGroupAsXMod two_group_to_xmod(const TwoGroupPtr& p);

// G1⋊G0 ⇉ G0 with s(g1,g0) = g0, t(g1,g0) = mu(g1)·g0, unit g0 ↦ (e,g0).
TwoGroupPtr xmod_to_two_group(const XModPtr& x);

// Identification (k, p0) ↦ embed(k)·ι(p0) of ker(src)⋊P0 with the arrow
// group of P, indexed by pair_index(k, p0, |P0|).
std::vector<int> pi_identification(const TwoGroup& p,
                                   const std::vector<int>& ker_embed);

// --- derivations and the actor -------------------------------------------

// Maps γ : H0 → H1 with γ(xy) = γ(x)·(x ▷ γ(y)), under the product
// (γ1 ⋆ γ2)(x) = γ1(∂γ2(x)·x)·γ2(x); units form the Whitehead group.
struct DerivationMonoid {
  std::vector<std::vector<int>> elements;  // sorted lexicographically
  std::vector<std::vector<int>> star;      // star[i][j] = index of γi ⋆ γj
  int identity_index = -1;                 // the constant-identity map
  std::vector<int> unit_indices;           // ⋆-invertible elements, ascending
  GroupPtr unit_group;                     // composition table on unit_indices
  int element_index(const std::vector<int>& m) const;     // -1 when absent
  int unit_position(int element_index) const;             // -1 when not a unit
};

DerivationMonoid derivation_monoid(const XModPtr& h);

// The ⋆-product on arbitrary maps G0 → G1 (no derivation law).
std::vector<int> star_compose_maps(const CrossedModule& g,
                                   const std::vector<int>& f1,
                                   const std::vector<int>& f2);
// Two-sided ⋆-inverse when it exists: f is invertible iff x ↦ mu(f(x))·x is
// a bijection, and the inverse is verified two-sidedly before returning.
std::optional<std::vector<int>> star_inverse_map(const CrossedModule& g,
                                                 const std::vector<int>& f);
// (σ1, σ0) bijections of G1, G0 with mu∘σ1 = σ0∘mu.
bool is_diff_pair(const CrossedModule& g, const std::vector<int>& s1,
                  const std::vector<int>& s0);
// Δ(f) = (g1 ↦ f(mu g1)·g1, g0 ↦ mu(f(g0))·g0).
std::pair<std::vector<int>, std::vector<int>> delta_of_map(
    const CrossedModule& g, const std::vector<int>& f);

// Pairs (ε, ρ) ∈ Aut(H1) × Aut(H0) with ∂∘ε = ρ∘∂ and ε(x▷a) = ρ(x)▷ε(a),
// assembled into the actor crossed module D(H0,H1) → Aut(H1,H0,∂).
struct ActorXMod {
  XModPtr actor;  // carrier groups: ders.unit_group → aut group
  DerivationMonoid ders;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> aut_elements;
  GroupPtr aut_group;
  int aut_index(const std::vector<int>& eps, const std::vector<int>& rho) const;
};

ActorXMod actor_xmod(const XModPtr& h);

// --- crossed-module actions ----------------------------------------------

// An action of G on H: a crossed-module morphism (α, β) from G into the
// actor of H, stored with materialized tables.
class XModAction {
 public:
  const XModPtr& actor_xm() const { return g_; }
  const XModPtr& target_xm() const { return h_; }
  const ActorXMod& actor() const { return *actor_; }
  const std::vector<int>& alpha_map(int a1) const { return alpha_maps_[a1]; }
  const std::vector<int>& beta1(int a0) const { return beta1_[a0]; }
  const std::vector<int>& beta0(int a0) const { return beta0_[a0]; }
  const std::vector<int>& beta1_inv(int a0) const { return beta1_inv_[a0]; }
  const std::vector<int>& beta0_inv(int a0) const { return beta0_inv_[a0]; }
  int apply_alpha(int a1, int h0) const { return alpha_maps_[a1][h0]; }
  bool same_as(const XModAction& o) const {
    return g_->same_as(*o.g_) && h_->same_as(*o.h_) &&
           alpha_maps_ == o.alpha_maps_ && beta1_ == o.beta1_ &&
           beta0_ == o.beta0_;
  }
  bool is_adjoint() const;

 private:
  XModAction() = default;
  XModPtr g_, h_;
  std::shared_ptr<const ActorXMod> actor_;
  std::vector<std::vector<int>> alpha_maps_, beta1_, beta0_;
  std::vector<std::vector<int>> beta1_inv_, beta0_inv_;

  friend XModAction validate_xmod_action(XModPtr g, XModPtr h,
                                         std::vector<std::vector<int>> alpha,
                                         std::vector<std::vector<int>> beta1,
                                         std::vector<std::vector<int>> beta0);
};

XModAction validate_xmod_action(XModPtr g, XModPtr h,
                                std::vector<std::vector<int>> alpha,
                                std::vector<std::vector<int>> beta1,
                                std::vector<std::vector<int>> beta0);

XModAction adjoint_xmod_action(const XModPtr& x);
XModAction trivial_xmod_action(const XModPtr& g, const XModPtr& h);

// Semidirect crossed module (H1⋊G1 → H0⋊G0) with the mixed action
// (h0,g0) ⊵ (h1,g1) = (h0 ▷ (β1(g0)h1 · α(g0▷g1)(h0⁻¹)), g0 ▷ g1).
XModPtr semidirect_xmod(const XModAction& act);

// The plain group actions that the two levels of an xmod action induce on
// the carrier groups: G1 acting on H1 through β1∘μ and G0 acting on H0
// through β0.
GroupAction level1_group_action(const XModAction& a);
GroupAction level0_group_action(const XModAction& a);

// Action conversions in both directions.
TwoGroupAction two_group_action_from_xmod_action(const XModAction& a);
struct XModActionFromTwoGroup {
  XModAction action;
  TwoGroupAsXMod g;  // actor side
  TwoGroupAsXMod h;  // target side
};
XModActionFromTwoGroup xmod_action_from_two_group_action(
    const TwoGroupAction& act);

}  // namespace rbcat
