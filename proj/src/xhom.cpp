#include "rbcat/xhom.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>

#include "propagation_search.hpp"
#include "rbcat/errors.hpp"

namespace rbcat {

namespace {

std::string wit(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

void check_table(const FiniteGroup& dom, const FiniteGroup& cod,
                 const std::vector<int>& d, const std::string& what) {
  if ((int)d.size() != dom.order())
    throw CheckError(Code::ActionMismatch,
                     what + " has " + std::to_string(d.size()) +
                         " entries for " + std::to_string(dom.order()) +
                         " elements");
  for (int v : d)
    if (v < 0 || v >= cod.order())
      throw CheckError(Code::ActionMismatch,
                       what + " value " + std::to_string(v) + " out of range");
}

std::vector<int> inverse_table(const std::vector<int>& f, int codomain,
                               const char* what) {
  if ((int)f.size() != codomain)
    throw CheckError(Code::NotBijective,
                     std::string(what) + " maps between sets of different sizes");
  std::vector<int> inv(codomain, -1);
  for (int x = 0; x < (int)f.size(); ++x) {
    if (f[x] < 0 || f[x] >= codomain || inv[f[x]] >= 0)
      throw CheckError(Code::NotBijective,
                       std::string(what) + " is not bijective");
    inv[f[x]] = x;
  }
  return inv;
}

template <typename Fn>
auto stage(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const CheckError& e) {
    throw CheckError(Code::InvariantViolation,
                     std::string(what) + ": " + e.what());
  }
}

}  // namespace

// --- group level -------------------------------------------------------------

CrossedHomGroup verify_crossed_hom_group(const GroupAction& action,
                                         std::vector<int> d) {
  const FiniteGroup& g = *action.actor();
  const FiniteGroup& h = *action.target();
  check_table(g, h, d, "crossed homomorphism table");
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int lhs = d[g.mul(x, y)];
      const int rhs = h.mul(d[x], action.apply(x, d[y]));
      if (lhs != rhs)
        throw CheckError(Code::CocycleFailure,
                         "D(g·g') ≠ D(g)·φ(g)D(g') at (g,g',lhs,rhs)=" +
                             wit({x, y, lhs, rhs}));
    }
  return CrossedHomGroup{action, std::move(d)};
}

bool is_crossed_hom_group(const GroupAction& action,
                          const std::vector<int>& d) {
  try {
    verify_crossed_hom_group(action, d);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

namespace {

// Decided entries at g, g' force the entry at g·g'.
struct CocycleLaw {
  const GroupAction& act;
  const FiniteGroup& g;
  const FiniteGroup& h;
  int domain() const { return g.order(); }
  int branch_values() const { return h.order(); }
  std::pair<int, int> seed() const { return {g.identity(), h.identity()}; }
  std::pair<int, int> step(const std::vector<int>& d, int x, int y) const {
    return {g.mul(x, y), h.mul(d[x], act.apply(x, d[y]))};
  }
  bool admits(const std::vector<int>& d) const {
    return is_crossed_hom_group(act, d);
  }
};

}  // namespace

std::vector<std::vector<int>> enumerate_crossed_homs_group(
    const GroupAction& action, long long budget) {
  CocycleLaw law{action, *action.actor(), *action.target()};
  return detail::propagation_enumerate(law, budget);
}

// --- 2-group level -------------------------------------------------------------

CrossedHomTwoGroup verify_crossed_hom_two_group(const TwoGroupAction& action,
                                                std::vector<int> d,
                                                std::vector<int> d0) {
  const TwoGroupPtr& p = action.actor();
  const TwoGroupPtr& q = action.target();
  try {
    verify_crossed_hom_group(action.phi(), d);
  } catch (const CheckError& e) {
    if (e.code() == Code::ActionMismatch) throw;
    throw CheckError(e.code(), "arrow level: " + e.detail());
  }
  try {
    verify_crossed_hom_group(action.phi0(), d0);
  } catch (const CheckError& e) {
    if (e.code() == Code::ActionMismatch) throw;
    throw CheckError(e.code(), "object level: " + e.detail());
  }
  for (int a = 0; a < p->arrows(); ++a) {
    if (q->src(d[a]) != d0[p->src(a)])
      throw CheckError(Code::NotGroupoidMorphism,
                       "src(Dp) ≠ D0(src p) at p=" + std::to_string(a));
    if (q->tgt(d[a]) != d0[p->tgt(a)])
      throw CheckError(Code::NotGroupoidMorphism,
                       "tgt(Dp) ≠ D0(tgt p) at p=" + std::to_string(a));
  }
  for (int c = 0; c < p->objects(); ++c)
    if (d[p->unit(c)] != q->unit(d0[c]))
      throw CheckError(Code::NotGroupoidMorphism,
                       "D(1_c) ≠ 1_{D0 c} at c=" + std::to_string(c));
  for (const auto& [a, b] : p->composable_pairs())
    if (d[p->comp(a, b)] != q->comp(d[a], d[b]))
      throw CheckError(Code::NotGroupoidMorphism,
                       "D(p*p') ≠ Dp*Dp' at (p,p')=" + wit({a, b}));
  return CrossedHomTwoGroup{action, std::move(d), std::move(d0)};
}

bool is_crossed_hom_two_group(const TwoGroupAction& action,
                              const std::vector<int>& d,
                              const std::vector<int>& d0) {
  try {
    verify_crossed_hom_two_group(action, d, d0);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
enumerate_crossed_homs_two_group(const TwoGroupAction& action,
                                 long long budget) {
  const auto arrow = enumerate_crossed_homs_group(action.phi(), budget);
  const auto object = enumerate_crossed_homs_group(action.phi0(), budget);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& d : arrow)
    for (const auto& d0 : object)
      if (is_crossed_hom_two_group(action, d, d0)) out.emplace_back(d, d0);
  return out;
}

// --- graph and hat -------------------------------------------------------------

namespace {

// Pair subsets {(Dp, p)} and {(D0 c, c)} of the semidirect carriers.
std::pair<std::vector<int>, std::vector<int>> graph_subsets(
    const SemidirectContext& ctx, const std::vector<int>& d,
    const std::vector<int>& d0) {
  const TwoGroupPtr& p = ctx.action.actor();
  const int np = p->arrows(), mp = p->objects();
  std::vector<int> arrows(np), objects(mp);
  for (int a = 0; a < np; ++a) arrows[a] = pair_index(d[a], a, np);
  for (int c = 0; c < mp; ++c) objects[c] = pair_index(d0[c], c, mp);
  return {std::move(arrows), std::move(objects)};
}

bool tables_shaped(const SemidirectContext& ctx, const std::vector<int>& d,
                   const std::vector<int>& d0) {
  const TwoGroupPtr& p = ctx.action.actor();
  const TwoGroupPtr& q = ctx.action.target();
  if ((int)d.size() != p->arrows() || (int)d0.size() != p->objects())
    return false;
  for (int v : d)
    if (v < 0 || v >= q->arrows()) return false;
  for (int v : d0)
    if (v < 0 || v >= q->objects()) return false;
  return true;
}

void require_same_action(const SemidirectContext& ctx,
                         const CrossedHomTwoGroup& hom) {
  if (!ctx.action.same_as(hom.action))
    throw CheckError(Code::ActionMismatch,
                     "semidirect context was built for a different action");
}

}  // namespace

bool crossed_hom_graph_closes(const SemidirectContext& ctx,
                              const std::vector<int>& d,
                              const std::vector<int>& d0) {
  if (!tables_shaped(ctx, d, d0)) return false;
  auto [arrows, objects] = graph_subsets(ctx, d, d0);
  try {
    sub_two_group(ctx.semidirect, std::move(arrows), std::move(objects));
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

SubTwoGroup crossed_hom_graph(const SemidirectContext& ctx,
                              const CrossedHomTwoGroup& hom) {
  require_same_action(ctx, hom);
  auto [arrows, objects] = graph_subsets(ctx, hom.d, hom.d0);
  return stage("graph of a verified crossed homomorphism", [&] {
    return sub_two_group(ctx.semidirect, std::move(arrows), std::move(objects));
  });
}

SubTwoGroup crossed_hom_graph(const CrossedHomTwoGroup& hom) {
  return crossed_hom_graph(make_semidirect_context(hom.action), hom);
}

std::pair<std::vector<int>, std::vector<int>> crossed_hom_hat_tables(
    const SemidirectContext& ctx, const std::vector<int>& d,
    const std::vector<int>& d0) {
  const TwoGroupPtr& q = ctx.action.target();
  const TwoGroupPtr& p = ctx.action.actor();
  const FiniteGroup& qa = *q->arrow_group();
  const FiniteGroup& qo = *q->object_group();
  const FiniteGroup& pa = *p->arrow_group();
  const FiniteGroup& po = *p->object_group();
  const int np = pa.order(), mp = po.order();
  std::vector<int> hat((std::size_t)qa.order() * np);
  std::vector<int> hat0((std::size_t)qo.order() * mp);
  for (int x = 0; x < qa.order(); ++x)
    for (int a = 0; a < np; ++a)
      hat[pair_index(x, a, np)] = pair_index(
          ctx.action.apply(pa.inv(a), qa.mul(qa.inv(x), d[a])),
          pa.identity(), np);
  for (int y = 0; y < qo.order(); ++y)
    for (int c = 0; c < mp; ++c)
      hat0[pair_index(y, c, mp)] = pair_index(
          ctx.action.apply0(po.inv(c), qo.mul(qo.inv(y), d0[c])),
          po.identity(), mp);
  return {std::move(hat), std::move(hat0)};
}

bool crossed_hom_hat_is_rb(const SemidirectContext& ctx,
                           const std::vector<int>& d,
                           const std::vector<int>& d0) {
  if (!tables_shaped(ctx, d, d0)) return false;
  auto [hat, hat0] = crossed_hom_hat_tables(ctx, d, d0);
  return is_rrb_two_group(ctx.adjoint, hat, hat0);
}

RRBTwoGroupOp crossed_hom_hat_operator(const SemidirectContext& ctx,
                                       const CrossedHomTwoGroup& hom) {
  require_same_action(ctx, hom);
  auto [hat, hat0] = crossed_hom_hat_tables(ctx, hom.d, hom.d0);
  return stage("hat of a verified crossed homomorphism", [&] {
    return verify_rrb_two_group(ctx.adjoint, std::move(hat), std::move(hat0));
  });
}

RRBTwoGroupOp crossed_hom_hat_operator(const CrossedHomTwoGroup& hom) {
  return crossed_hom_hat_operator(make_semidirect_context(hom.action), hom);
}

CrossedHomTwoGroup derived_crossed_hom(const CrossedHomTwoGroup& hom) {
  const TwoGroupPtr& p = hom.action.actor();
  const TwoGroupPtr& q = hom.action.target();
  const FiniteGroup& qa = *q->arrow_group();
  const FiniteGroup& qo = *q->object_group();
  const int np = p->arrows(), mp = p->objects();
  std::vector<std::vector<int>> phi(np), phi0(mp);
  for (int a = 0; a < np; ++a) {
    phi[a].resize(qa.order());
    for (int x = 0; x < qa.order(); ++x)
      phi[a][x] =
          qa.mul(qa.mul(hom.d[a], hom.action.apply(a, x)), qa.inv(hom.d[a]));
  }
  for (int c = 0; c < mp; ++c) {
    phi0[c].resize(qo.order());
    for (int y = 0; y < qo.order(); ++y)
      phi0[c][y] = qo.mul(qo.mul(hom.d0[c], hom.action.apply0(c, y)),
                          qo.inv(hom.d0[c]));
  }
  return stage("derived action", [&] {
    GroupAction phi_a = validate_group_action(p->arrow_group(),
                                              q->arrow_group(), std::move(phi),
                                              "derived arrow action");
    GroupAction phi0_a = validate_group_action(
        p->object_group(), q->object_group(), std::move(phi0),
        "derived object action");
    TwoGroupAction derived = validate_two_group_action(
        p, q, std::move(phi_a), std::move(phi0_a));
    std::vector<int> nd(np), nd0(mp);
    for (int a = 0; a < np; ++a) nd[a] = qa.inv(hom.d[a]);
    for (int c = 0; c < mp; ++c) nd0[c] = qo.inv(hom.d0[c]);
    return verify_crossed_hom_two_group(derived, std::move(nd),
                                        std::move(nd0));
  });
}

// --- crossed-module level ----------------------------------------------------------

CrossedHomXMod verify_crossed_hom_xmod(const XModAction& action,
                                       std::vector<int> d1,
                                       std::vector<int> d0) {
  const CrossedModule& gx = *action.actor_xm();
  const CrossedModule& hx = *action.target_xm();
  const FiniteGroup& g1 = *gx.g1();
  const FiniteGroup& g0 = *gx.g0();
  const FiniteGroup& h1 = *hx.g1();
  const FiniteGroup& h0 = *hx.g0();
  check_table(g1, h1, d1, "level-1 crossed homomorphism table");
  check_table(g0, h0, d0, "level-0 crossed homomorphism table");

  for (int a = 0; a < g1.order(); ++a)
    if (hx.boundary(d1[a]) != d0[gx.boundary(a)])
      throw CheckError(Code::SquareFailure,
                       "∂(D1 g1) ≠ D0(μ g1) at g1=" + std::to_string(a));

  try {
    verify_crossed_hom_group(level1_group_action(action), d1);
  } catch (const CheckError& e) {
    if (e.code() == Code::ActionMismatch) throw;
    throw CheckError(e.code(), "level 1: " + e.detail());
  }
  try {
    verify_crossed_hom_group(level0_group_action(action), d0);
  } catch (const CheckError& e) {
    if (e.code() == Code::ActionMismatch) throw;
    throw CheckError(e.code(), "level 0: " + e.detail());
  }

  for (int x = 0; x < g0.order(); ++x)
    for (int a = 0; a < g1.order(); ++a) {
      const int lhs = d1[gx.act_of(x, a)];
      const int inner = h1.mul(
          action.beta1(x)[d1[a]],
          action.alpha_map(gx.act_of(x, a))[h0.inv(d0[x])]);
      const int rhs = hx.act_of(d0[x], inner);
      if (lhs != rhs)
        throw CheckError(Code::MixedFailure,
                         "D1(g0 ▷ g1) ≠ D0(g0) ▷ (β1(g0)D1(g1)·α(g0 ▷ "
                         "g1)((D0 g0)⁻¹)) at (g0,g1,lhs,rhs)=" +
                             wit({x, a, lhs, rhs}));
    }
  return CrossedHomXMod{action, std::move(d1), std::move(d0)};
}

bool is_crossed_hom_xmod(const XModAction& action, const std::vector<int>& d1,
                         const std::vector<int>& d0) {
  try {
    verify_crossed_hom_xmod(action, d1, d0);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
enumerate_crossed_homs_xmod(const XModAction& action, long long budget) {
  const auto level1 =
      enumerate_crossed_homs_group(level1_group_action(action), budget);
  const auto level0 =
      enumerate_crossed_homs_group(level0_group_action(action), budget);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& d1 : level1)
    for (const auto& d0 : level0)
      if (is_crossed_hom_xmod(action, d1, d0)) out.emplace_back(d1, d0);
  return out;
}

// --- inverse correspondence ----------------------------------------------------

CrossedHomGroup invert_rrb_group(const RRBGroupOp& op) {
  std::vector<int> d =
      inverse_table(op.b, op.action.actor()->order(), "operator table");
  return stage("inverse of a bijective operator", [&] {
    return verify_crossed_hom_group(op.action, std::move(d));
  });
}

RRBGroupOp invert_crossed_hom_group(const CrossedHomGroup& hom) {
  std::vector<int> b = inverse_table(hom.d, hom.action.target()->order(),
                                     "crossed homomorphism table");
  return stage("inverse of a bijective crossed homomorphism", [&] {
    return verify_rrb_group(hom.action, std::move(b));
  });
}

CrossedHomTwoGroup invert_rrb_two_group(const RRBTwoGroupOp& op) {
  std::vector<int> d =
      inverse_table(op.b, op.action.actor()->arrows(), "arrow operator table");
  std::vector<int> d0 = inverse_table(op.b0, op.action.actor()->objects(),
                                      "object operator table");
  return stage("inverse of a bijective operator", [&] {
    return verify_crossed_hom_two_group(op.action, std::move(d),
                                        std::move(d0));
  });
}

RRBTwoGroupOp invert_crossed_hom_two_group(const CrossedHomTwoGroup& hom) {
  std::vector<int> b = inverse_table(hom.d, hom.action.target()->arrows(),
                                     "arrow crossed homomorphism table");
  std::vector<int> b0 = inverse_table(hom.d0, hom.action.target()->objects(),
                                      "object crossed homomorphism table");
  return stage("inverse of a bijective crossed homomorphism", [&] {
    return verify_rrb_two_group(hom.action, std::move(b), std::move(b0));
  });
}

CrossedHomXMod invert_rrb_xmod(const RRBXModOp& op) {
  std::vector<int> d1 = inverse_table(
      op.b1, op.action.actor_xm()->g1()->order(), "level-1 operator table");
  std::vector<int> d0 = inverse_table(
      op.b0, op.action.actor_xm()->g0()->order(), "level-0 operator table");
  return stage("inverse of a bijective operator", [&] {
    return verify_crossed_hom_xmod(op.action, std::move(d1), std::move(d0));
  });
}

RRBXModOp invert_crossed_hom_xmod(const CrossedHomXMod& hom) {
  std::vector<int> b1 =
      inverse_table(hom.d1, hom.action.target_xm()->g1()->order(),
                    "level-1 crossed homomorphism table");
  std::vector<int> b0 =
      inverse_table(hom.d0, hom.action.target_xm()->g0()->order(),
                    "level-0 crossed homomorphism table");
  return stage("inverse of a bijective crossed homomorphism", [&] {
    return verify_rrb_xmod(hom.action, std::move(b1), std::move(b0));
  });
}

}  // namespace rbcat
