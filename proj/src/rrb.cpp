#include "rbcat/rrb.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>

#include "propagation_search.hpp"
#include "rbcat/errors.hpp"
#include "rbcat/parallel.hpp"

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

void check_table(const FiniteGroup& h, const FiniteGroup& g,
                 const std::vector<int>& b, const std::string& what) {
  if ((int)b.size() != h.order())
    throw CheckError(Code::ActionMismatch,
                     what + " has " + std::to_string(b.size()) +
                         " entries for " + std::to_string(h.order()) +
                         " elements");
  for (int v : b)
    if (v < 0 || v >= g.order())
      throw CheckError(Code::ActionMismatch,
                       what + " value " + std::to_string(v) + " out of range");
}

bool group_action_is_adjoint(const GroupAction& a) {
  if (!a.actor()->same_table(*a.target())) return false;
  const FiniteGroup& g = *a.actor();
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (a.apply(x, y) != g.conj(x, y)) return false;
  return true;
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

RRBGroupOp verify_rrb_group(const GroupAction& action, std::vector<int> b) {
  const FiniteGroup& h = *action.target();
  const FiniteGroup& g = *action.actor();
  check_table(h, g, b, "operator table");
  const int n = h.order();
  auto violated = [&](std::size_t i) {
    const int x = (int)(i / n), y = (int)(i % n);
    return g.mul(b[x], b[y]) != b[h.mul(x, action.apply(b[x], y))];
  };
  if (auto i = find_first((std::size_t)n * n, violated)) {
    const int x = (int)(*i / n), y = (int)(*i % n);
    const int lhs = g.mul(b[x], b[y]);
    const int rhs = b[h.mul(x, action.apply(b[x], y))];
    throw CheckError(Code::RRBFailure,
                     "B(h)·B(h') ≠ B(h·φ(Bh)h') at (h,h',lhs,rhs)=" +
                         wit({x, y, lhs, rhs}));
  }
  return RRBGroupOp{action, std::move(b)};
}

bool is_rrb_group(const GroupAction& action, const std::vector<int>& b) {
  try {
    verify_rrb_group(action, b);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

namespace {

// Decided entries at h, h' force the entry at h·φ(Bh)h'.
struct OperatorLaw {
  const GroupAction& act;
  const FiniteGroup& h;
  const FiniteGroup& g;
  int domain() const { return h.order(); }
  int branch_values() const { return g.order(); }
  std::pair<int, int> seed() const { return {h.identity(), g.identity()}; }
  std::pair<int, int> step(const std::vector<int>& b, int x, int y) const {
    return {h.mul(x, act.apply(b[x], y)), g.mul(b[x], b[y])};
  }
  bool admits(const std::vector<int>& b) const { return is_rrb_group(act, b); }
};

}  // namespace

std::vector<std::vector<int>> enumerate_rrb_group(const GroupAction& action,
                                                  long long budget) {
  OperatorLaw law{action, *action.target(), *action.actor()};
  return detail::propagation_enumerate(law, budget);
}

// --- 2-group level -------------------------------------------------------------

RRBTwoGroupOp verify_rrb_two_group(const TwoGroupAction& action,
                                   std::vector<int> b, std::vector<int> b0) {
  const TwoGroupPtr& p = action.actor();
  const TwoGroupPtr& q = action.target();
  try {
    verify_rrb_group(action.phi(), b);
  } catch (const CheckError& e) {
    if (e.code() == Code::ActionMismatch) throw;
    throw CheckError(Code::ComponentFailure, "arrow level: " + e.detail());
  }
  try {
    verify_rrb_group(action.phi0(), b0);
  } catch (const CheckError& e) {
    if (e.code() == Code::ActionMismatch) throw;
    throw CheckError(Code::ComponentFailure, "object level: " + e.detail());
  }
  for (int x = 0; x < q->arrows(); ++x) {
    if (p->src(b[x]) != b0[q->src(x)])
      throw CheckError(Code::NotGroupoidMorphism,
                       "src(Bq) ≠ B0(src q) at q=" + std::to_string(x));
    if (p->tgt(b[x]) != b0[q->tgt(x)])
      throw CheckError(Code::NotGroupoidMorphism,
                       "tgt(Bq) ≠ B0(tgt q) at q=" + std::to_string(x));
  }
  for (int y = 0; y < q->objects(); ++y)
    if (b[q->unit(y)] != p->unit(b0[y]))
      throw CheckError(Code::NotGroupoidMorphism,
                       "B(1_y) ≠ 1_{B0 y} at y=" + std::to_string(y));
  const auto& cp = q->composable_pairs();
  auto breaks_comp = [&](std::size_t i) {
    const auto& [u, v] = cp[i];
    return b[q->comp(u, v)] != p->comp(b[u], b[v]);
  };
  if (auto i = find_first(cp.size(), breaks_comp)) {
    const auto& [u, v] = cp[*i];
    throw CheckError(Code::NotGroupoidMorphism,
                     "B(q*q') ≠ Bq*Bq' at (q,q')=" + wit({u, v}));
  }
  return RRBTwoGroupOp{action, std::move(b), std::move(b0)};
}

bool is_rrb_two_group(const TwoGroupAction& action, const std::vector<int>& b,
                      const std::vector<int>& b0) {
  try {
    verify_rrb_two_group(action, b, b0);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

std::vector<std::pair<std::vector<int>, std::vector<int>>>
enumerate_rrb_two_group(const TwoGroupAction& action, long long budget) {
  const auto arrow_ops = enumerate_rrb_group(action.phi(), budget);
  const auto object_ops = enumerate_rrb_group(action.phi0(), budget);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& b : arrow_ops)
    for (const auto& b0 : object_ops)
      if (is_rrb_two_group(action, b, b0)) out.emplace_back(b, b0);
  return out;  // outer/inner loops ascending, so already lexicographic
}

// --- graph and hat -------------------------------------------------------------

SemidirectContext make_semidirect_context(const TwoGroupAction& action) {
  TwoGroupPtr sd = semidirect_two_group(action);
  TwoGroupAction ad = adjoint_two_group_action(sd);
  return SemidirectContext{action, std::move(sd), std::move(ad)};
}

namespace {

// Pair subsets {(q, Bq)} and {(q0, B0 q0)} of the semidirect carriers.
std::pair<std::vector<int>, std::vector<int>> graph_subsets(
    const SemidirectContext& ctx, const std::vector<int>& b,
    const std::vector<int>& b0) {
  const TwoGroupPtr& q = ctx.action.target();
  const int np = ctx.action.actor()->arrows();
  const int mp = ctx.action.actor()->objects();
  std::vector<int> arrows(q->arrows()), objects(q->objects());
  for (int x = 0; x < q->arrows(); ++x) arrows[x] = pair_index(x, b[x], np);
  for (int y = 0; y < q->objects(); ++y) objects[y] = pair_index(y, b0[y], mp);
  return {std::move(arrows), std::move(objects)};
}

bool tables_shaped(const SemidirectContext& ctx, const std::vector<int>& b,
                   const std::vector<int>& b0) {
  const TwoGroupPtr& q = ctx.action.target();
  const TwoGroupPtr& p = ctx.action.actor();
  if ((int)b.size() != q->arrows() || (int)b0.size() != q->objects())
    return false;
  for (int v : b)
    if (v < 0 || v >= p->arrows()) return false;
  for (int v : b0)
    if (v < 0 || v >= p->objects()) return false;
  return true;
}

void require_same_action(const SemidirectContext& ctx,
                         const RRBTwoGroupOp& op) {
  if (!ctx.action.same_as(op.action))
    throw CheckError(Code::ActionMismatch,
                     "semidirect context was built for a different action");
}

}  // namespace

bool graph_closes(const SemidirectContext& ctx, const std::vector<int>& b,
                  const std::vector<int>& b0) {
  if (!tables_shaped(ctx, b, b0)) return false;
  auto [arrows, objects] = graph_subsets(ctx, b, b0);
  try {
    sub_two_group(ctx.semidirect, std::move(arrows), std::move(objects));
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

SubTwoGroup graph_two_subgroup(const SemidirectContext& ctx,
                               const RRBTwoGroupOp& op) {
  require_same_action(ctx, op);
  auto [arrows, objects] = graph_subsets(ctx, op.b, op.b0);
  return stage("graph of a verified operator", [&] {
    return sub_two_group(ctx.semidirect, std::move(arrows), std::move(objects));
  });
}

SubTwoGroup graph_two_subgroup(const RRBTwoGroupOp& op) {
  return graph_two_subgroup(make_semidirect_context(op.action), op);
}

std::pair<std::vector<int>, std::vector<int>> hat_tables(
    const SemidirectContext& ctx, const std::vector<int>& b,
    const std::vector<int>& b0) {
  const TwoGroupPtr& q = ctx.action.target();
  const FiniteGroup& pa = *ctx.action.actor()->arrow_group();
  const FiniteGroup& po = *ctx.action.actor()->object_group();
  const int np = pa.order(), mp = po.order();
  const int eq = q->arrow_group()->identity();
  const int eq0 = q->object_group()->identity();
  std::vector<int> hat((std::size_t)q->arrows() * np);
  std::vector<int> hat0((std::size_t)q->objects() * mp);
  for (int x = 0; x < q->arrows(); ++x)
    for (int a = 0; a < np; ++a)
      hat[pair_index(x, a, np)] = pair_index(eq, pa.mul(pa.inv(a), b[x]), np);
  for (int y = 0; y < q->objects(); ++y)
    for (int c = 0; c < mp; ++c)
      hat0[pair_index(y, c, mp)] =
          pair_index(eq0, po.mul(po.inv(c), b0[y]), mp);
  return {std::move(hat), std::move(hat0)};
}

bool hat_is_rb(const SemidirectContext& ctx, const std::vector<int>& b,
               const std::vector<int>& b0) {
  if (!tables_shaped(ctx, b, b0)) return false;
  auto [hat, hat0] = hat_tables(ctx, b, b0);
  return is_rrb_two_group(ctx.adjoint, hat, hat0);
}

RRBTwoGroupOp hat_operator(const SemidirectContext& ctx,
                           const RRBTwoGroupOp& op) {
  require_same_action(ctx, op);
  auto [hat, hat0] = hat_tables(ctx, op.b, op.b0);
  return stage("hat of a verified operator", [&] {
    return verify_rrb_two_group(ctx.adjoint, std::move(hat), std::move(hat0));
  });
}

RRBTwoGroupOp hat_operator(const RRBTwoGroupOp& op) {
  return hat_operator(make_semidirect_context(op.action), op);
}

// --- descendant structures ------------------------------------------------------

DescendantTwoGroup descendant_two_group(const RRBTwoGroupOp& op) {
  const TwoGroupPtr& q = op.action.target();
  const TwoGroupPtr& p = op.action.actor();
  const FiniteGroup& qa = *q->arrow_group();
  const FiniteGroup& qo = *q->object_group();
  const int n = qa.order(), m = qo.order();
  std::vector<int> atab((std::size_t)n * n), otab((std::size_t)m * m);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      atab[(std::size_t)x * n + y] = qa.mul(x, op.action.apply(op.b[x], y));
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      otab[(std::size_t)u * m + v] = qo.mul(u, op.action.apply0(op.b0[u], v));
  return stage("descendant of a verified operator", [&] {
    GroupPtr arrow =
        validate_group(std::move(atab), n, std::nullopt, qa.labels());
    GroupPtr object =
        validate_group(std::move(otab), m, std::nullopt, qo.labels());
    TwoGroupPtr desc = validate_two_group(arrow, object, q->src_map(),
                                          q->tgt_map(), q->unit_map());
    TwoGroupMorphism hom =
        validate_two_group_morphism(desc, p, op.b, op.b0, "operator map");
    return DescendantTwoGroup{std::move(desc), std::move(hom)};
  });
}

DescendantAction descendant_action(const RRBTwoGroupOp& op) {
  DescendantTwoGroup desc = descendant_two_group(op);
  const TwoGroupPtr& q = op.action.target();
  const TwoGroupPtr& p = op.action.actor();
  const FiniteGroup& pa = *p->arrow_group();
  const FiniteGroup& po = *p->object_group();
  const FiniteGroup& da = *desc.group->arrow_group();
  const FiniteGroup& dobj = *desc.group->object_group();
  const int nq = q->arrows(), mq = q->objects();
  const int np = pa.order(), mp = po.order();

  std::vector<std::vector<int>> phi(nq), phi0(mq);
  for (int x = 0; x < nq; ++x) {
    const int xd = da.inv(x);  // inverse in the descendant
    phi[x].resize(np);
    for (int a = 0; a < np; ++a)
      phi[x][a] = pa.mul(
          pa.mul(pa.inv(op.b[op.action.apply(a, xd)]), a), op.b[xd]);
  }
  for (int y = 0; y < mq; ++y) {
    const int yd = dobj.inv(y);
    phi0[y].resize(mp);
    for (int c = 0; c < mp; ++c)
      phi0[y][c] = po.mul(
          po.mul(po.inv(op.b0[op.action.apply0(c, yd)]), c), op.b0[yd]);
  }

  auto fail = [](const std::string& what) {
    throw CheckError(Code::InvariantViolation, what);
  };

  // Bijectivity of every map.
  auto bijective = [](const std::vector<int>& f) {
    std::vector<char> seen(f.size(), 0);
    for (int v : f) {
      if (v < 0 || v >= (int)f.size() || seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  for (int x = 0; x < nq; ++x)
    if (!bijective(phi[x]))
      fail("descendant action is not bijective at arrow " + std::to_string(x));
  for (int y = 0; y < mq; ++y)
    if (!bijective(phi0[y]))
      fail("descendant action is not bijective at object " +
           std::to_string(y));

  // Identity and the left action law for the twisted products.
  for (int a = 0; a < np; ++a)
    if (phi[da.identity()][a] != a) fail("descendant action moves e at arrow level");
  for (int c = 0; c < mp; ++c)
    if (phi0[dobj.identity()][c] != c)
      fail("descendant action moves e at object level");
  for (int x = 0; x < nq; ++x)
    for (int y = 0; y < nq; ++y) {
      const int xy = da.mul(x, y);
      for (int a = 0; a < np; ++a)
        if (phi[xy][a] != phi[x][phi[y][a]])
          fail("descendant action law fails at " + wit({x, y, a}));
    }
  for (int u = 0; u < mq; ++u)
    for (int v = 0; v < mq; ++v) {
      const int uv = dobj.mul(u, v);
      for (int c = 0; c < mp; ++c)
        if (phi0[uv][c] != phi0[u][phi0[v][c]])
          fail("descendant action law fails at objects " + wit({u, v, c}));
    }

  // Groupoid morphism conditions for (φ^B, φ0^B).
  for (int x = 0; x < nq; ++x)
    for (int a = 0; a < np; ++a) {
      if (p->src(phi[x][a]) != phi0[q->src(x)][p->src(a)])
        fail("descendant action breaks src at " + wit({x, a}));
      if (p->tgt(phi[x][a]) != phi0[q->tgt(x)][p->tgt(a)])
        fail("descendant action breaks tgt at " + wit({x, a}));
    }
  for (int y = 0; y < mq; ++y)
    for (int c = 0; c < mp; ++c)
      if (phi[q->unit(y)][p->unit(c)] != p->unit(phi0[y][c]))
        fail("descendant action breaks units at " + wit({y, c}));
  for (const auto& [x, y] : desc.group->composable_pairs())
    for (const auto& [a, c] : p->composable_pairs())
      if (phi[desc.group->comp(x, y)][p->comp(a, c)] !=
          p->comp(phi[x][a], phi[y][c]))
        fail("descendant action breaks composition at " + wit({x, y, a, c}));

  return DescendantAction{std::move(desc), std::move(phi), std::move(phi0)};
}

// --- operator calculus ------------------------------------------------------------

RRBTwoGroupOp twist_operator(const RRBTwoGroupOp& op,
                             const std::vector<int>& theta,
                             const std::vector<int>& theta0,
                             const std::vector<int>& rho,
                             const std::vector<int>& rho0) {
  const TwoGroupPtr& q = op.action.target();
  const TwoGroupPtr& p = op.action.actor();
  const int nq = q->arrows(), mq = q->objects();
  const int np = p->arrows(), mp = p->objects();
  auto shaped = [](const std::vector<int>& v, int size, int range) {
    if ((int)v.size() != size) return false;
    for (int x : v)
      if (x < 0 || x >= range) return false;
    return true;
  };
  if (!shaped(theta, nq, nq) || !shaped(theta0, mq, mq) ||
      !shaped(rho, np, np) || !shaped(rho0, mp, mp))
    throw CheckError(Code::NotAutomorphism, "twist table has wrong shape");

  TwoGroupPtr sd = semidirect_two_group(op.action);
  std::vector<int> pairmap((std::size_t)nq * np), pairmap0((std::size_t)mq * mp);
  for (int x = 0; x < nq; ++x)
    for (int a = 0; a < np; ++a)
      pairmap[pair_index(x, a, np)] = pair_index(theta[x], rho[a], np);
  for (int y = 0; y < mq; ++y)
    for (int c = 0; c < mp; ++c)
      pairmap0[pair_index(y, c, mp)] = pair_index(theta0[y], rho0[c], mp);
  try {
    TwoGroupMorphism pair_morphism = validate_two_group_morphism(
        sd, sd, std::move(pairmap), std::move(pairmap0), "twist pair map");
    if (!pair_morphism.f.is_bijective() || !pair_morphism.f0.is_bijective())
      throw CheckError(Code::NotBijective, "twist pair map is not bijective");
  } catch (const CheckError& e) {
    throw CheckError(Code::NotAutomorphism,
                     std::string("(θ×ρ, θ0×ρ0) is not a 2-group automorphism "
                                 "of the semidirect: ") +
                         e.what());
  }

  std::vector<int> rinv(np), rinv0(mp);
  for (int a = 0; a < np; ++a) rinv[rho[a]] = a;
  for (int c = 0; c < mp; ++c) rinv0[rho0[c]] = c;
  std::vector<int> nb(nq), nb0(mq);
  for (int x = 0; x < nq; ++x) nb[x] = rinv[op.b[theta[x]]];
  for (int y = 0; y < mq; ++y) nb0[y] = rinv0[op.b0[theta0[y]]];
  return stage("twisted operator", [&] {
    return verify_rrb_two_group(op.action, std::move(nb), std::move(nb0));
  });
}

RRBTwoGroupOp bar_operator(const RRBTwoGroupOp& op) {
  if (!op.action.is_adjoint())
    throw CheckError(Code::NotAdjointAction,
                     "the bar transform needs the adjoint action");
  const FiniteGroup& pa = *op.action.target()->arrow_group();
  const FiniteGroup& po = *op.action.target()->object_group();
  std::vector<int> nb(pa.order()), nb0(po.order());
  for (int x = 0; x < pa.order(); ++x)
    nb[x] = pa.mul(pa.inv(x), op.b[pa.inv(x)]);
  for (int y = 0; y < po.order(); ++y)
    nb0[y] = po.mul(po.inv(y), op.b0[po.inv(y)]);
  return stage("bar transform", [&] {
    return verify_rrb_two_group(op.action, std::move(nb), std::move(nb0));
  });
}

namespace {

// B⁺(p) = p·B(p) at both levels, for adjoint-action operators.
std::pair<std::vector<int>, std::vector<int>> plus_tables(
    const RRBTwoGroupOp& op) {
  const FiniteGroup& pa = *op.action.target()->arrow_group();
  const FiniteGroup& po = *op.action.target()->object_group();
  std::vector<int> bp(pa.order()), bp0(po.order());
  for (int x = 0; x < pa.order(); ++x) bp[x] = pa.mul(x, op.b[x]);
  for (int y = 0; y < po.order(); ++y) bp0[y] = po.mul(y, op.b0[y]);
  return {std::move(bp), std::move(bp0)};
}

}  // namespace

TwoGroupMorphism plus_morphism(const RRBTwoGroupOp& op) {
  if (!op.action.is_adjoint())
    throw CheckError(Code::NotAdjointAction,
                     "the plus map needs the adjoint action");
  DescendantTwoGroup desc = descendant_two_group(op);
  auto [bp, bp0] = plus_tables(op);
  return stage("plus map", [&] {
    return validate_two_group_morphism(desc.group, op.action.target(),
                                       std::move(bp), std::move(bp0),
                                       "plus map");
  });
}

CayleyFactorization cayley_factorization(const RRBTwoGroupOp& op) {
  if (!op.action.is_adjoint())
    throw CheckError(Code::NotAdjointAction,
                     "the Cayley decomposition needs the adjoint action");
  const TwoGroupPtr& p = op.action.target();
  const FiniteGroup& pa = *p->arrow_group();
  const FiniteGroup& po = *p->object_group();
  const int n = pa.order(), m = po.order();
  auto [bp, bp0] = plus_tables(op);

  auto image = [](std::vector<int> f) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
  };
  auto kernel = [](const std::vector<int>& f, int e) {
    std::vector<int> s;
    for (int i = 0; i < (int)f.size(); ++i)
      if (f[i] == e) s.push_back(i);
    return s;
  };

  SubTwoGroup p_plus = stage("image of the plus map", [&] {
    return sub_two_group(p, image(bp), image(bp0));
  });
  SubTwoGroup p_minus = stage("image of the operator", [&] {
    return sub_two_group(p, image(op.b), image(op.b0));
  });
  SubTwoGroup k_plus = stage("kernel of the operator", [&] {
    return sub_two_group(p, kernel(op.b, pa.identity()),
                         kernel(op.b0, po.identity()));
  });
  SubTwoGroup k_minus = stage("kernel of the plus map", [&] {
    return sub_two_group(p, kernel(bp, pa.identity()),
                         kernel(bp0, po.identity()));
  });

  // Kernels sit inside the matching images; re-index them there.
  auto positions = [](const SubTwoGroup& big, const std::vector<int>& ambient,
                      bool arrows) {
    std::vector<int> out;
    out.reserve(ambient.size());
    for (int a : ambient) {
      const int pos = arrows ? big.arrow_position(a) : big.object_position(a);
      if (pos < 0)
        throw CheckError(Code::InvariantViolation,
                         "kernel element " + std::to_string(a) +
                             " lies outside the expected image");
      out.push_back(pos);
    }
    return out;
  };
  QuotientTwoGroup q_plus = stage("quotient of the plus image", [&] {
    return quotient_two_group(p_plus.group,
                              positions(p_plus, k_plus.arrow_embed, true),
                              positions(p_plus, k_plus.object_embed, false));
  });
  QuotientTwoGroup q_minus = stage("quotient of the operator image", [&] {
    return quotient_two_group(p_minus.group,
                              positions(p_minus, k_minus.arrow_embed, true),
                              positions(p_minus, k_minus.object_embed, false));
  });

  // Coset map: class of B(p) ↦ class of B⁺(p), well defined and bijective.
  std::vector<int> th(q_minus.group->arrows(), -1);
  std::vector<int> th0(q_minus.group->objects(), -1);
  for (int x = 0; x < n; ++x) {
    const int cm = q_minus.arrow_proj[p_minus.arrow_position(op.b[x])];
    const int cp = q_plus.arrow_proj[p_plus.arrow_position(bp[x])];
    if (th[cm] < 0)
      th[cm] = cp;
    else if (th[cm] != cp)
      throw CheckError(Code::InvariantViolation,
                       "coset map is not well defined at arrow " +
                           std::to_string(x));
  }
  for (int y = 0; y < m; ++y) {
    const int cm = q_minus.object_proj[p_minus.object_position(op.b0[y])];
    const int cp = q_plus.object_proj[p_plus.object_position(bp0[y])];
    if (th0[cm] < 0)
      th0[cm] = cp;
    else if (th0[cm] != cp)
      throw CheckError(Code::InvariantViolation,
                       "coset map is not well defined at object " +
                           std::to_string(y));
  }
  TwoGroupMorphism theta = stage("coset map", [&] {
    return validate_two_group_morphism(q_minus.group, q_plus.group, th, th0,
                                       "coset map");
  });
  if (!theta.f.is_bijective() || !theta.f0.is_bijective())
    throw CheckError(Code::InvariantViolation, "coset map is not bijective");

  // Matched pairs (p⁺, p⁻) with θ[p⁻] = [p⁺] inside the direct product.
  const int nplus = p_plus.group->arrows(), nminus = p_minus.group->arrows();
  const int mplus = p_plus.group->objects(), mminus = p_minus.group->objects();
  std::vector<int> tw_arrows, tw_objects;
  for (int i = 0; i < nplus; ++i)
    for (int j = 0; j < nminus; ++j)
      if (theta.f(q_minus.arrow_proj[j]) == q_plus.arrow_proj[i])
        tw_arrows.push_back(pair_index(i, j, nminus));
  for (int i = 0; i < mplus; ++i)
    for (int j = 0; j < mminus; ++j)
      if (theta.f0(q_minus.object_proj[j]) == q_plus.object_proj[i])
        tw_objects.push_back(pair_index(i, j, mminus));
  TwoGroupPtr direct = direct_product_two_group(p_plus.group, p_minus.group);
  SubTwoGroup twisted = stage("matched-pair locus", [&] {
    return sub_two_group(direct, std::move(tw_arrows), std::move(tw_objects));
  });

  // σ(p) = (B⁺p, Bp) is an isomorphism from the descendant onto the locus.
  DescendantTwoGroup descendant = descendant_two_group(op);
  std::vector<int> sg(n), sg0(m);
  for (int x = 0; x < n; ++x) {
    sg[x] = twisted.arrow_position(pair_index(
        p_plus.arrow_position(bp[x]), p_minus.arrow_position(op.b[x]), nminus));
    if (sg[x] < 0)
      throw CheckError(Code::InvariantViolation,
                       "factor pair escapes the matched-pair locus at arrow " +
                           std::to_string(x));
  }
  for (int y = 0; y < m; ++y) {
    sg0[y] = twisted.object_position(
        pair_index(p_plus.object_position(bp0[y]),
                   p_minus.object_position(op.b0[y]), mminus));
    if (sg0[y] < 0)
      throw CheckError(Code::InvariantViolation,
                       "factor pair escapes the matched-pair locus at object " +
                           std::to_string(y));
  }
  TwoGroupMorphism sigma = stage("descendant factor map", [&] {
    return validate_two_group_morphism(descendant.group, twisted.group, sg,
                                       sg0, "factor map");
  });
  if (!sigma.f.is_bijective() || !sigma.f0.is_bijective())
    throw CheckError(Code::InvariantViolation,
                     "descendant factor map is not bijective");

  // p = p⁺·(p⁻)⁻¹ with the matched pair unique, by exhaustive scan.
  std::vector<std::pair<int, int>> fa(n), fo(m);
  for (int x = 0; x < n; ++x) fa[x] = {bp[x], op.b[x]};
  for (int y = 0; y < m; ++y) fo[y] = {bp0[y], op.b0[y]};
  for (int x = 0; x < n; ++x) {
    int count = 0;
    std::pair<int, int> found{-1, -1};
    for (int k = 0; k < twisted.group->arrows(); ++k) {
      const int d = twisted.arrow_embed[k];
      const int ap = p_plus.arrow_embed[d / nminus];
      const int am = p_minus.arrow_embed[d % nminus];
      if (pa.mul(ap, pa.inv(am)) == x) {
        ++count;
        found = {ap, am};
      }
    }
    if (count != 1 || found != fa[x])
      throw CheckError(Code::InvariantViolation,
                       "factorization is not unique at arrow " +
                           std::to_string(x));
  }
  for (int y = 0; y < m; ++y) {
    int count = 0;
    std::pair<int, int> found{-1, -1};
    for (int k = 0; k < twisted.group->objects(); ++k) {
      const int d = twisted.object_embed[k];
      const int ap = p_plus.object_embed[d / mminus];
      const int am = p_minus.object_embed[d % mminus];
      if (po.mul(ap, po.inv(am)) == y) {
        ++count;
        found = {ap, am};
      }
    }
    if (count != 1 || found != fo[y])
      throw CheckError(Code::InvariantViolation,
                       "factorization is not unique at object " +
                           std::to_string(y));
  }

  // The factor map is a groupoid morphism from the original 2-group.
  const TwoGroup& tg = *twisted.group;
  for (int x = 0; x < n; ++x)
    if (tg.src(sg[x]) != sg0[p->src(x)] || tg.tgt(sg[x]) != sg0[p->tgt(x)])
      throw CheckError(Code::InvariantViolation,
                       "factor map breaks src/tgt at arrow " +
                           std::to_string(x));
  for (int y = 0; y < m; ++y)
    if (sg[p->unit(y)] != tg.unit(sg0[y]))
      throw CheckError(Code::InvariantViolation,
                       "factor map breaks units at object " +
                           std::to_string(y));
  for (const auto& [u, v] : p->composable_pairs())
    if (sg[p->comp(u, v)] != tg.comp(sg[u], sg[v]))
      throw CheckError(Code::InvariantViolation,
                       "factor map breaks composition at " + wit({u, v}));

  return CayleyFactorization{std::move(p_plus),   std::move(p_minus),
                             std::move(k_plus),   std::move(k_minus),
                             std::move(q_plus),   std::move(q_minus),
                             std::move(theta),    std::move(direct),
                             std::move(twisted),  std::move(descendant),
                             std::move(sigma),    std::move(fa),
                             std::move(fo)};
}

// --- crossed-module level ----------------------------------------------------------

RRBXModOp verify_rrb_xmod(const XModAction& action, std::vector<int> b1,
                          std::vector<int> b0) {
  const CrossedModule& gx = *action.actor_xm();
  const CrossedModule& hx = *action.target_xm();
  const FiniteGroup& h1 = *hx.g1();
  const FiniteGroup& h0 = *hx.g0();
  check_table(h1, *gx.g1(), b1, "level-1 operator table");
  check_table(h0, *gx.g0(), b0, "level-0 operator table");

  for (int a = 0; a < h1.order(); ++a)
    if (gx.boundary(b1[a]) != b0[hx.boundary(a)])
      throw CheckError(Code::SquareFailure,
                       "μ(B1 a) ≠ B0(∂ a) at a=" + std::to_string(a));

  try {
    verify_rrb_group(level1_group_action(action), b1);
  } catch (const CheckError& e) {
    throw CheckError(Code::ComponentFailure, "level 1: " + e.detail());
  }
  try {
    verify_rrb_group(level0_group_action(action), b0);
  } catch (const CheckError& e) {
    throw CheckError(Code::ComponentFailure, "level 0: " + e.detail());
  }

  for (int x = 0; x < h0.order(); ++x)
    for (int a = 0; a < h1.order(); ++a) {
      const int lhs = gx.act_of(b0[x], b1[a]);
      const int inner = h1.mul(action.beta1(b0[x])[a],
                               action.alpha_map(lhs)[h0.inv(x)]);
      const int rhs = b1[hx.act_of(x, inner)];
      if (lhs != rhs)
        throw CheckError(Code::MixedIdentityFailure,
                         "(h0,h1,lhs,rhs)=" + wit({x, a, lhs, rhs}));
    }
  return RRBXModOp{action, std::move(b1), std::move(b0)};
}

bool is_rrb_xmod(const XModAction& action, const std::vector<int>& b1,
                 const std::vector<int>& b0) {
  try {
    verify_rrb_xmod(action, b1, b0);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> enumerate_rrb_xmod(
    const XModAction& action, long long budget) {
  const auto level1 = enumerate_rrb_group(level1_group_action(action), budget);
  const auto level0 = enumerate_rrb_group(level0_group_action(action), budget);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (const auto& b1 : level1)
    for (const auto& b0 : level0)
      if (is_rrb_xmod(action, b1, b0)) out.emplace_back(b1, b0);
  return out;
}

RRBTwoGroupOp rrb_xmod_to_two_group(const RRBXModOp& op) {
  const XModAction& a = op.action;
  const CrossedModule& gx = *a.actor_xm();
  const CrossedModule& hx = *a.target_xm();
  const FiniteGroup& h1 = *hx.g1();
  const FiniteGroup& h0 = *hx.g0();
  const int m = h0.order(), mg = gx.g0()->order();
  TwoGroupAction induced = two_group_action_from_xmod_action(a);
  std::vector<int> tb((std::size_t)h1.order() * m);
  for (int u = 0; u < h1.order(); ++u)
    for (int x = 0; x < m; ++x) {
      const int g0v = op.b0[x];
      const int inner = a.beta1_inv(g0v)[hx.act_of(h0.inv(x), u)];
      tb[pair_index(u, x, m)] =
          pair_index(gx.act_of(g0v, op.b1[inner]), g0v, mg);
    }
  return stage("induced 2-group operator", [&] {
    return verify_rrb_two_group(induced, std::move(tb), op.b0);
  });
}

RRBXModFromTwoGroup rrb_two_group_to_xmod(const RRBTwoGroupOp& op) {
  XModActionFromTwoGroup conv = xmod_action_from_two_group_action(op.action);
  const std::vector<int>& qker = conv.h.ker_embed;
  const std::vector<int>& pker = conv.g.ker_embed;
  std::vector<int> b1(qker.size());
  for (std::size_t k = 0; k < qker.size(); ++k) {
    const int image = op.b[qker[k]];
    const auto it = std::lower_bound(pker.begin(), pker.end(), image);
    if (it == pker.end() || *it != image)
      throw CheckError(Code::InvariantViolation,
                       "operator image of a src-kernel arrow leaves the "
                       "src-kernel at arrow " +
                           std::to_string(qker[k]));
    b1[k] = (int)(it - pker.begin());
  }
  RRBXModOp restricted = stage("restricted crossed-module operator", [&] {
    return verify_rrb_xmod(conv.action, std::move(b1), op.b0);
  });
  return RRBXModFromTwoGroup{std::move(restricted), std::move(conv)};
}

DescendantXMod descendant_xmod(const RRBXModOp& op) {
  const XModAction& a = op.action;
  const CrossedModule& gx = *a.actor_xm();
  const CrossedModule& hx = *a.target_xm();
  const FiniteGroup& g1 = *gx.g1();
  const FiniteGroup& g0 = *gx.g0();
  const FiniteGroup& h1 = *hx.g1();
  const FiniteGroup& h0 = *hx.g0();
  const int n1 = h1.order(), n0 = h0.order();

  std::vector<int> t1((std::size_t)n1 * n1), t0((std::size_t)n0 * n0);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n1; ++v)
      t1[(std::size_t)u * n1 + v] =
          h1.mul(u, a.beta1(gx.boundary(op.b1[u]))[v]);
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y)
      t0[(std::size_t)x * n0 + y] = h0.mul(x, a.beta0(op.b0[x])[y]);
  std::vector<std::vector<int>> act(n0);  // h0 ▷_B h1
  for (int x = 0; x < n0; ++x) {
    act[x].resize(n1);
    for (int u = 0; u < n1; ++u) {
      const int mixed = gx.act_of(op.b0[x], op.b1[u]);
      act[x][u] = hx.act_of(
          x, h1.mul(a.beta1(op.b0[x])[u], a.alpha_map(mixed)[h0.inv(x)]));
    }
  }
  XModPtr desc = stage("descendant crossed module", [&] {
    GroupPtr d1 = validate_group(std::move(t1), n1, std::nullopt, h1.labels());
    GroupPtr d0 = validate_group(std::move(t0), n0, std::nullopt, h0.labels());
    return validate_xmod(d1, d0, hx.mu().map(), act);
  });
  XModMorphism morphism = stage("operator map from the descendant", [&] {
    return validate_xmod_morphism(desc, a.actor_xm(), op.b1, op.b0,
                                  "operator map");
  });

  // θ(h1): G0 → G1 and the bijection pair (τ1, τ0)(h0), with † taken in the
  // descendant groups.
  std::vector<std::vector<int>> theta(n1), tau1(n0), tau0(n0);
  for (int u = 0; u < n1; ++u) {
    const int ud = desc->g1()->inv(u);
    theta[u].resize(g0.order());
    for (int z = 0; z < g0.order(); ++z)
      theta[u][z] = g1.mul(g1.inv(op.b1[a.beta1(z)[ud]]),
                           gx.act_of(z, op.b1[ud]));
  }
  for (int x = 0; x < n0; ++x) {
    const int xd = desc->g0()->inv(x);
    tau0[x].resize(g0.order());
    for (int z = 0; z < g0.order(); ++z)
      tau0[x][z] =
          g0.mul(g0.mul(g0.inv(op.b0[a.beta0(z)[xd]]), z), op.b0[xd]);
    tau1[x].resize(g1.order());
    for (int w = 0; w < g1.order(); ++w) {
      const int inner = hx.act_of(x, a.beta1(op.b0[x])[a.alpha_map(w)[xd]]);
      tau1[x][w] = g1.mul(g1.inv(op.b1[inner]), gx.act_of(op.b0[x], w));
    }
  }

  auto fail = [](const std::string& what) {
    throw CheckError(Code::InvariantViolation, what);
  };
  for (int u = 0; u < n1; ++u)
    if (!star_inverse_map(gx, theta[u]))
      fail("θ(h1) is not ⋆-invertible at h1=" + std::to_string(u));
  for (int x = 0; x < n0; ++x)
    if (!is_diff_pair(gx, tau1[x], tau0[x]))
      fail("(τ1,τ0)(h0) is not a boundary-compatible bijection pair at h0=" +
           std::to_string(x));
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n1; ++v)
      if (theta[desc->g1()->mul(u, v)] !=
          star_compose_maps(gx, theta[u], theta[v]))
        fail("θ(h1 ·_B h1') ≠ θ(h1) ⋆ θ(h1') at " + wit({u, v}));
  for (int x = 0; x < n0; ++x)
    for (int y = 0; y < n0; ++y) {
      const int xy = desc->g0()->mul(x, y);
      for (int w = 0; w < g1.order(); ++w)
        if (tau1[xy][w] != tau1[x][tau1[y][w]])
          fail("τ1 is not multiplicative at " + wit({x, y, w}));
      for (int z = 0; z < g0.order(); ++z)
        if (tau0[xy][z] != tau0[x][tau0[y][z]])
          fail("τ0 is not multiplicative at " + wit({x, y, z}));
    }
  for (int u = 0; u < n1; ++u) {
    auto [d1, d0] = delta_of_map(gx, theta[u]);
    if (d1 != tau1[hx.boundary(u)] || d0 != tau0[hx.boundary(u)])
      fail("Δ∘θ ≠ τ∘∂ at h1=" + std::to_string(u));
  }
  for (int x = 0; x < n0; ++x) {
    std::vector<int> t0inv(g0.order());
    for (int z = 0; z < g0.order(); ++z) t0inv[tau0[x][z]] = z;
    for (int u = 0; u < n1; ++u) {
      const int tu = desc->act_of(x, u);
      for (int z = 0; z < g0.order(); ++z)
        if (theta[tu][z] != tau1[x][theta[u][t0inv[z]]])
          fail("θ(h0 ▷_B h1) ≠ τ1(h0)∘θ(h1)∘τ0(h0)⁻¹ at " + wit({x, u, z}));
    }
  }

  return DescendantXMod{std::move(desc), std::move(morphism),
                        std::move(theta), std::move(tau1), std::move(tau0)};
}

std::pair<RRBTwoGroupOp, RRBTwoGroupOp> rb_group_to_rb_two_groups(
    const RRBGroupOp& rb) {
  if (!group_action_is_adjoint(rb.action))
    throw CheckError(Code::NotAdjointAction,
                     "the 2-group constructions need a Rota-Baxter operator "
                     "(adjoint action on one group)");
  const GroupPtr& g = rb.action.target();
  const FiniteGroup& gr = *g;
  const int n = gr.order();

  RRBTwoGroupOp discrete = stage("discrete 2-group operator", [&] {
    TwoGroupPtr d = discrete_two_group(g);
    return verify_rrb_two_group(adjoint_two_group_action(d), rb.b, rb.b);
  });

  RRBTwoGroupOp pair_op = stage("pair 2-group operator", [&] {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    XModPtr conj_xmod = validate_xmod(g, g, id, adjoint_action(g));
    TwoGroupPtr t = xmod_to_two_group(conj_xmod);
    std::vector<int> tb((std::size_t)n * n);
    for (int x = 0; x < n; ++x)
      for (int l = 0; l < n; ++l)
        tb[pair_index(x, l, n)] = pair_index(
            gr.mul(rb.b[gr.mul(x, l)], gr.inv(rb.b[l])), rb.b[l], n);
    return verify_rrb_two_group(adjoint_two_group_action(t), std::move(tb),
                                rb.b);
  });
  return {std::move(discrete), std::move(pair_op)};
}

}  // namespace rbcat
