#pragma once

// Crossed homomorphisms D(g·g') = D(g)·φ(g)D(g') out of the acting side of a
// group, 2-group, or crossed-module action, with their graphs, hat operators,
// derived actions, and the inverse correspondence with relative Rota-Baxter
// operators.

#include <utility>
#include <vector>

#include "rbcat/fingroup.hpp"
#include "rbcat/rrb.hpp"
#include "rbcat/twogroup.hpp"
#include "rbcat/xmod.hpp"

namespace rbcat {

// D maps the actor into the target, one entry per actor element.
struct CrossedHomGroup {
  GroupAction action;
  std::vector<int> d;
};

CrossedHomGroup verify_crossed_hom_group(const GroupAction& action,
                                         std::vector<int> d);

bool is_crossed_hom_group(const GroupAction& action, const std::vector<int>& d);

// All crossed homomorphisms for the action, sorted lexicographically.
// Throws BudgetExceeded when the search tree outgrows the budget.
std::vector<std::vector<int>> enumerate_crossed_homs_group(
    const GroupAction& action, long long budget);

// Both component maps are crossed homomorphisms and the pair (D, D0) is a
// morphism of groupoids.
struct CrossedHomTwoGroup {
  TwoGroupAction action;
  std::vector<int> d;
  std::vector<int> d0;
};

CrossedHomTwoGroup verify_crossed_hom_two_group(const TwoGroupAction& action,
                                                std::vector<int> d,
                                                std::vector<int> d0);

bool is_crossed_hom_two_group(const TwoGroupAction& action,
                              const std::vector<int>& d,
                              const std::vector<int>& d0);

std::vector<std::pair<std::vector<int>, std::vector<int>>>
enumerate_crossed_homs_two_group(const TwoGroupAction& action,
                                 long long budget);

// The graph {(Dp, p)} inside the semidirect 2-group closes under all
// structure exactly when (d, d0) is a crossed homomorphism.
bool crossed_hom_graph_closes(const SemidirectContext& ctx,
                              const std::vector<int>& d,
                              const std::vector<int>& d0);

SubTwoGroup crossed_hom_graph(const SemidirectContext& ctx,
                              const CrossedHomTwoGroup& hom);
SubTwoGroup crossed_hom_graph(const CrossedHomTwoGroup& hom);

// hat(q, p) = (φ(p⁻¹)(q⁻¹·Dp), e), a Rota-Baxter operator for the adjoint
// action of the semidirect 2-group on itself exactly when (d, d0) is a
// crossed homomorphism.
std::pair<std::vector<int>, std::vector<int>> crossed_hom_hat_tables(
    const SemidirectContext& ctx, const std::vector<int>& d,
    const std::vector<int>& d0);

bool crossed_hom_hat_is_rb(const SemidirectContext& ctx,
                           const std::vector<int>& d,
                           const std::vector<int>& d0);

RRBTwoGroupOp crossed_hom_hat_operator(const SemidirectContext& ctx,
                                       const CrossedHomTwoGroup& hom);
RRBTwoGroupOp crossed_hom_hat_operator(const CrossedHomTwoGroup& hom);

// The derived action φ'(p)q = Dp·(φ(p)q)·(Dp)⁻¹ together with the pointwise
// inverse of D, which is a crossed homomorphism for φ'. Applying the
// construction twice restores the original action and tables.
CrossedHomTwoGroup derived_crossed_hom(const CrossedHomTwoGroup& hom);

// Level maps (D1, D0) commuting with the boundaries, each level a crossed
// homomorphism, plus the mixed compatibility
//   D1(g0 ▷ g1) = D0(g0) ▷ (β1(g0)(D1 g1) · α(g0 ▷ g1)((D0 g0)⁻¹)).
struct CrossedHomXMod {
  XModAction action;
  std::vector<int> d1;
  std::vector<int> d0;
};

CrossedHomXMod verify_crossed_hom_xmod(const XModAction& action,
                                       std::vector<int> d1,
                                       std::vector<int> d0);

bool is_crossed_hom_xmod(const XModAction& action, const std::vector<int>& d1,
                         const std::vector<int>& d0);

std::vector<std::pair<std::vector<int>, std::vector<int>>>
enumerate_crossed_homs_xmod(const XModAction& action, long long budget);

// Inverse correspondence: a bijective relative Rota-Baxter operator inverts
// to a crossed homomorphism for the same action and conversely, at every
// level. Throws NotBijective when the tables are not invertible.
CrossedHomGroup invert_rrb_group(const RRBGroupOp& op);
RRBGroupOp invert_crossed_hom_group(const CrossedHomGroup& hom);
CrossedHomTwoGroup invert_rrb_two_group(const RRBTwoGroupOp& op);
RRBTwoGroupOp invert_crossed_hom_two_group(const CrossedHomTwoGroup& hom);
CrossedHomXMod invert_rrb_xmod(const RRBXModOp& op);
RRBXModOp invert_crossed_hom_xmod(const CrossedHomXMod& hom);

}  // namespace rbcat
