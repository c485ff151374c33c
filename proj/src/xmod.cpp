#include "rbcat/xmod.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rbcat {

namespace {

std::string wit(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

XModPtr validate_xmod(GroupPtr g1, GroupPtr g0, std::vector<int> mu,
                      GroupAction act) {
  if (!act.actor()->same_table(*g0) || !act.target()->same_table(*g1))
    throw CheckError(Code::ActionMismatch,
                     "crossed-module action must be G0 acting on G1");
  GroupHom hmu = validate_group_hom(g1, g0, mu, "mu");

  const int n1 = g1->order(), n0 = g0->order();
  // mu(a) ▷ b = a·b·a⁻¹
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b)
      if (act.apply(mu[a], b) != g1->conj(a, b))
        throw CheckError(Code::Peiffer1Failure, "witness (a,b)=" + wit({a, b}));
  // mu(x ▷ a) = x·mu(a)·x⁻¹
  for (int x = 0; x < n0; ++x)
    for (int a = 0; a < n1; ++a)
      if (mu[act.apply(x, a)] != g0->conj(x, mu[a]))
        throw CheckError(Code::Peiffer2Failure, "witness (x,a)=" + wit({x, a}));

  return std::shared_ptr<const CrossedModule>(new CrossedModule(
      std::move(g1), std::move(g0), std::move(hmu), std::move(act)));
}

XModPtr validate_xmod(GroupPtr g1, GroupPtr g0, std::vector<int> mu,
                      std::vector<std::vector<int>> act_perms) {
  GroupAction act =
      validate_group_action(g0, g1, std::move(act_perms), "crossed-module action");
  return validate_xmod(std::move(g1), std::move(g0), std::move(mu),
                       std::move(act));
}

XModMorphism validate_xmod_morphism(const XModPtr& dom, const XModPtr& cod,
                                    std::vector<int> f1, std::vector<int> f0,
                                    const std::string& what) {
  GroupHom h1 = validate_group_hom(dom->g1(), cod->g1(), f1, what + " (level 1)");
  GroupHom h0 = validate_group_hom(dom->g0(), cod->g0(), f0, what + " (level 0)");
  for (int a = 0; a < dom->g1()->order(); ++a)
    if (cod->boundary(f1[a]) != f0[dom->boundary(a)])
      throw CheckError(Code::SquareFailure,
                       what + ": boundary square fails at " + std::to_string(a));
  for (int x = 0; x < dom->g0()->order(); ++x)
    for (int a = 0; a < dom->g1()->order(); ++a)
      if (f1[dom->act_of(x, a)] != cod->act_of(f0[x], f1[a]))
        throw CheckError(Code::EquivarianceFailure,
                         what + ": action not preserved at " + wit({x, a}));
  return XModMorphism{dom, cod, std::move(h1), std::move(h0)};
}

TwoGroupAsXMod two_group_to_xmod(const TwoGroupPtr& p) {
  const std::vector<int> ker = p->ker_src_elements();
  SubgroupQuotient sub =
      subgroup_and_quotient(p->arrow_group(), ker, /*want_quotient=*/false);
  const int k = (int)ker.size();
  std::vector<int> pos(p->arrows(), -1);
  for (int i = 0; i < k; ++i) pos[sub.embed[i]] = i;

  std::vector<int> mu(k);
  for (int i = 0; i < k; ++i) mu[i] = p->tgt(sub.embed[i]);

  const auto& arrow = *p->arrow_group();
  std::vector<std::vector<int>> perms(p->objects(), std::vector<int>(k));
  for (int x = 0; x < p->objects(); ++x) {
    const int u = p->unit(x);
    for (int i = 0; i < k; ++i) {
      const int img = arrow.mul(arrow.mul(u, sub.embed[i]), arrow.inv(u));
      if (pos[img] < 0)
        throw CheckError(Code::InvariantViolation,
                         "unit conjugation leaves ker(src) at " + wit({x, i}));
      perms[x][i] = pos[img];
    }
  }
  TwoGroupAsXMod res;
  res.xmod = validate_xmod(sub.subgroup, p->object_group(), std::move(mu),
                           std::move(perms));
  res.ker_embed = sub.embed;
  res.source = p;
  return res;
}

TwoGroupPtr xmod_to_two_group(const XModPtr& x) {
  GroupPtr arrow = semidirect_product(x->g1(), x->g0(), x->act());
  const int n0 = x->g0()->order(), n1 = x->g1()->order();
  std::vector<int> src(arrow->order()), tgt(arrow->order()), unit(n0);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n0; ++b) {
      src[pair_index(a, b, n0)] = b;
      tgt[pair_index(a, b, n0)] = x->g0()->mul(x->boundary(a), b);
    }
  for (int b = 0; b < n0; ++b) unit[b] = pair_index(x->g1()->identity(), b, n0);

  TwoGroupPtr p = validate_two_group(arrow, x->g0(), std::move(src),
                                     std::move(tgt), std::move(unit));
  // Composition must be (g1,g0)*(g1',g0') = (g1·g1', g0').
  for (const auto& [u, v] : p->composable_pairs()) {
    const int a = u / n0, av = v / n0, bv = v % n0;
    if (p->comp(u, v) != pair_index(x->g1()->mul(a, av), bv, n0))
      throw CheckError(Code::InvariantViolation,
                       "derived composition disagrees with (g1·g1', g0') at " +
                           wit({u, v}));
  }
  return p;
}

std::vector<int> pi_identification(const TwoGroup& p,
                                   const std::vector<int>& ker_embed) {
  const int n0 = p.objects();
  const auto& arrow = *p.arrow_group();
  std::vector<int> pi((std::size_t)ker_embed.size() * n0);
  for (std::size_t i = 0; i < ker_embed.size(); ++i)
    for (int b = 0; b < n0; ++b)
      pi[pair_index((int)i, b, n0)] = arrow.mul(ker_embed[i], p.unit(b));
  return pi;
}

// --- derivations ----------------------------------------------------------

int DerivationMonoid::element_index(const std::vector<int>& m) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), m);
  if (it == elements.end() || *it != m) return -1;
  return (int)(it - elements.begin());
}

int DerivationMonoid::unit_position(int element_index) const {
  auto it = std::lower_bound(unit_indices.begin(), unit_indices.end(),
                             element_index);
  if (it == unit_indices.end() || *it != element_index) return -1;
  return (int)(it - unit_indices.begin());
}

namespace {

bool is_derivation(const CrossedModule& h, const std::vector<int>& m) {
  const auto& h0 = *h.g0();
  const auto& h1 = *h.g1();
  for (int x = 0; x < h0.order(); ++x)
    for (int y = 0; y < h0.order(); ++y)
      if (m[h0.mul(x, y)] != h1.mul(m[x], h.act_of(x, m[y]))) return false;
  return true;
}

// All derivations by brute force over maps (small carriers) or by
// generators-first assignment with propagation of γ(xy) = γ(x)·(x▷γ(y)).
std::vector<std::vector<int>> all_derivations(const XModPtr& h) {
  const int n0 = h->g0()->order();
  const int n1 = h->g1()->order();
  std::vector<std::vector<int>> out;

  if (n0 <= 8) {
    std::vector<int> m(n0, 0);
    for (;;) {
      if (m[h->g0()->identity()] == h->g1()->identity() && is_derivation(*h, m))
        out.push_back(m);
      int i = 0;
      while (i < n0 && ++m[i] == n1) m[i++] = 0;
      if (i == n0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const auto& g0 = *h->g0();
  const auto& g1 = *h->g1();
  const std::vector<int>& gens = g0.generators();
  std::vector<int> base(n0, -1);
  base[g0.identity()] = g1.identity();

  // γ(x·y) = γ(x)·(x ▷ γ(y)) propagated over the closure of known points.
  auto propagate = [&](std::vector<int>& m, int seed) -> bool {
    std::vector<int> stack{seed};
    std::vector<int> known;
    for (int x = 0; x < n0; ++x)
      if (m[x] >= 0) known.push_back(x);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < known.size(); ++i) {
        const int y = known[i];
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
          const int ab = g0.mul(a, b);
          const int v = g1.mul(m[a], h->act_of(a, m[b]));
          if (m[ab] < 0) {
            m[ab] = v;
            known.push_back(ab);
            stack.push_back(ab);
          } else if (m[ab] != v) {
            return false;
          }
        }
      }
    }
    return true;
  };

  struct Node {
    std::vector<int> m;
    std::size_t gi;
  };
  std::vector<Node> stack{{base, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    if (node.gi == gens.size()) {
      if (std::find(node.m.begin(), node.m.end(), -1) != node.m.end()) continue;
      if (is_derivation(*h, node.m)) out.push_back(node.m);
      continue;
    }
    const int g = gens[node.gi];
    if (node.m[g] >= 0) {
      stack.push_back({std::move(node.m), node.gi + 1});
      continue;
    }
    for (int v = n1 - 1; v >= 0; --v) {
      std::vector<int> next = node.m;
      next[g] = v;
      if (propagate(next, g)) stack.push_back({std::move(next), node.gi + 1});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

DerivationMonoid derivation_monoid(const XModPtr& h) {
  DerivationMonoid dm;
  dm.elements = all_derivations(h);
  const int k = (int)dm.elements.size();

  std::vector<int> gamma_e(h->g0()->order(), h->g1()->identity());
  dm.identity_index = dm.element_index(gamma_e);
  if (dm.identity_index < 0)
    throw CheckError(Code::InvariantViolation,
                     "constant-identity map is not a derivation");

  dm.star.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const std::vector<int> prod =
          star_compose_maps(*h, dm.elements[i], dm.elements[j]);
      const int idx = dm.element_index(prod);
      if (idx < 0)
        throw CheckError(Code::InvariantViolation,
                         "derivations not closed under ⋆ at " + wit({i, j}));
      dm.star[i][j] = idx;
    }

  // Units located by exhaustive two-sided-inverse table search.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (dm.star[i][j] == dm.identity_index &&
          dm.star[j][i] == dm.identity_index) {
        dm.unit_indices.push_back(i);
        break;
      }

  const int u = (int)dm.unit_indices.size();
  std::vector<int> upos_of_elem(k, -1);
  for (int i = 0; i < u; ++i) upos_of_elem[dm.unit_indices[i]] = i;
  std::vector<int> table((std::size_t)u * u);
  std::vector<std::string> labels(u);
  for (int i = 0; i < u; ++i) {
    labels[i] = "d" + std::to_string(dm.unit_indices[i]);
    for (int j = 0; j < u; ++j) {
      const int prod = dm.star[dm.unit_indices[i]][dm.unit_indices[j]];
      if (upos_of_elem[prod] < 0)
        throw CheckError(Code::InvariantViolation,
                         "product of unit derivations is not a unit");
      table[(std::size_t)i * u + j] = upos_of_elem[prod];
    }
  }
  dm.unit_group = validate_group(std::move(table), u, std::nullopt, labels);
  return dm;
}

std::vector<int> star_compose_maps(const CrossedModule& g,
                                   const std::vector<int>& f1,
                                   const std::vector<int>& f2) {
  const auto& g0 = *g.g0();
  const auto& g1 = *g.g1();
  std::vector<int> r(g0.order());
  for (int x = 0; x < g0.order(); ++x)
    r[x] = g1.mul(f1[g0.mul(g.boundary(f2[x]), x)], f2[x]);
  return r;
}

std::optional<std::vector<int>> star_inverse_map(const CrossedModule& g,
                                                 const std::vector<int>& f) {
  const auto& g0 = *g.g0();
  const auto& g1 = *g.g1();
  const int n0 = g0.order();
  std::vector<int> big(n0), big_inv(n0, -1);
  for (int x = 0; x < n0; ++x) {
    big[x] = g0.mul(g.boundary(f[x]), x);
    if (big_inv[big[x]] >= 0) return std::nullopt;  // not injective
    big_inv[big[x]] = x;
  }
  std::vector<int> inv(n0);
  for (int x = 0; x < n0; ++x) inv[x] = g1.inv(f[big_inv[x]]);
  std::vector<int> e(n0, g1.identity());
  if (star_compose_maps(g, f, inv) != e || star_compose_maps(g, inv, f) != e)
    return std::nullopt;
  return inv;
}

bool is_diff_pair(const CrossedModule& g, const std::vector<int>& s1,
                  const std::vector<int>& s0) {
  const int n1 = g.g1()->order(), n0 = g.g0()->order();
  std::vector<char> seen1(n1, 0), seen0(n0, 0);
  for (int v : s1) {
    if (v < 0 || v >= n1 || seen1[v]) return false;
    seen1[v] = 1;
  }
  for (int v : s0) {
    if (v < 0 || v >= n0 || seen0[v]) return false;
    seen0[v] = 1;
  }
  for (int a = 0; a < n1; ++a)
    if (g.boundary(s1[a]) != s0[g.boundary(a)]) return false;
  return true;
}

std::pair<std::vector<int>, std::vector<int>> delta_of_map(
    const CrossedModule& g, const std::vector<int>& f) {
  const int n1 = g.g1()->order(), n0 = g.g0()->order();
  std::vector<int> d1(n1), d0(n0);
  for (int a = 0; a < n1; ++a) d1[a] = g.g1()->mul(f[g.boundary(a)], a);
  for (int x = 0; x < n0; ++x) d0[x] = g.g0()->mul(g.boundary(f[x]), x);
  return {d1, d0};
}

int ActorXMod::aut_index(const std::vector<int>& eps,
                         const std::vector<int>& rho) const {
  const std::pair<std::vector<int>, std::vector<int>> key{eps, rho};
  auto it = std::lower_bound(aut_elements.begin(), aut_elements.end(), key);
  if (it == aut_elements.end() || *it != key) return -1;
  return (int)(it - aut_elements.begin());
}

ActorXMod actor_xmod(const XModPtr& h) {
  ActorXMod res;
  res.ders = derivation_monoid(h);

  const AutomorphismGroup aut1 = automorphism_group(h->g1());
  const AutomorphismGroup aut0 = automorphism_group(h->g0());
  const int n1 = h->g1()->order(), n0 = h->g0()->order();

  for (const auto& eps : aut1.maps)
    for (const auto& rho : aut0.maps) {
      bool ok = true;
      for (int a = 0; a < n1 && ok; ++a)
        if (h->boundary(eps[a]) != rho[h->boundary(a)]) ok = false;
      for (int x = 0; x < n0 && ok; ++x)
        for (int a = 0; a < n1 && ok; ++a)
          if (eps[h->act_of(x, a)] != h->act_of(rho[x], eps[a])) ok = false;
      if (ok) res.aut_elements.emplace_back(eps, rho);
    }
  std::sort(res.aut_elements.begin(), res.aut_elements.end());

  const int na = (int)res.aut_elements.size();
  std::vector<int> table((std::size_t)na * na);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      std::vector<int> ce(n1), cr(n0);
      for (int a = 0; a < n1; ++a)
        ce[a] = res.aut_elements[i].first[res.aut_elements[j].first[a]];
      for (int x = 0; x < n0; ++x)
        cr[x] = res.aut_elements[i].second[res.aut_elements[j].second[x]];
      const int idx = res.aut_index(ce, cr);
      if (idx < 0)
        throw CheckError(Code::InvariantViolation,
                         "structure automorphisms not closed under composition");
      table[(std::size_t)i * na + j] = idx;
    }
  std::vector<std::string> labels(na);
  for (int i = 0; i < na; ++i) labels[i] = "a" + std::to_string(i);
  res.aut_group = validate_group(std::move(table), na, std::nullopt, labels);

  // Δ : D(H0,H1) → Aut(H1,H0,∂), γ ↦ (a ↦ γ(∂a)·a, x ↦ ∂γ(x)·x).
  const int nu = (int)res.ders.unit_indices.size();
  std::vector<int> delta(nu);
  for (int i = 0; i < nu; ++i) {
    const auto& gamma = res.ders.elements[res.ders.unit_indices[i]];
    auto [d1, d0] = delta_of_map(*h, gamma);
    const int idx = res.aut_index(d1, d0);
    if (idx < 0)
      throw CheckError(Code::InvariantViolation,
                       "Δ of a unit derivation is not a structure automorphism");
    delta[i] = idx;
  }

  // Aut acting on unit derivations by (ε,ρ) ▷ γ = ε∘γ∘ρ⁻¹.
  std::vector<std::vector<int>> perms(na, std::vector<int>(nu));
  for (int i = 0; i < na; ++i) {
    const auto& [eps, rho] = res.aut_elements[i];
    std::vector<int> rho_inv(n0);
    for (int x = 0; x < n0; ++x) rho_inv[rho[x]] = x;
    for (int j = 0; j < nu; ++j) {
      const auto& gamma = res.ders.elements[res.ders.unit_indices[j]];
      std::vector<int> m(n0);
      for (int x = 0; x < n0; ++x) m[x] = eps[gamma[rho_inv[x]]];
      const int idx = res.ders.element_index(m);
      const int up = idx < 0 ? -1 : res.ders.unit_position(idx);
      if (up < 0)
        throw CheckError(Code::InvariantViolation,
                         "automorphism image of a unit derivation escapes the "
                         "unit group");
      perms[i][j] = up;
    }
  }

  res.actor = validate_xmod(res.ders.unit_group, res.aut_group,
                            std::move(delta), std::move(perms));
  return res;
}

bool XModAction::is_adjoint() const {
  if (!g_->same_as(*h_)) return false;
  const auto& x = *g_;
  for (int a1 = 0; a1 < x.g1()->order(); ++a1)
    for (int h0 = 0; h0 < x.g0()->order(); ++h0) {
      const int expect =
          x.g1()->mul(a1, x.act_of(h0, x.g1()->inv(a1)));
      if (alpha_maps_[a1][h0] != expect) return false;
    }
  for (int a0 = 0; a0 < x.g0()->order(); ++a0) {
    for (int b = 0; b < x.g1()->order(); ++b)
      if (beta1_[a0][b] != x.act_of(a0, b)) return false;
    for (int y = 0; y < x.g0()->order(); ++y)
      if (beta0_[a0][y] != x.g0()->conj(a0, y)) return false;
  }
  return true;
}

XModAction validate_xmod_action(XModPtr g, XModPtr h,
                                std::vector<std::vector<int>> alpha,
                                std::vector<std::vector<int>> beta1,
                                std::vector<std::vector<int>> beta0) {
  const int g1n = g->g1()->order(), g0n = g->g0()->order();
  if ((int)alpha.size() != g1n || (int)beta1.size() != g0n ||
      (int)beta0.size() != g0n)
    throw CheckError(Code::ActionMismatch, "table sizes do not match G");

  auto actor = std::make_shared<ActorXMod>(actor_xmod(h));

  // α values must be unit derivations; β values structure automorphisms.
  std::vector<int> alpha_idx(g1n), beta_idx(g0n);
  for (int a = 0; a < g1n; ++a) {
    const int e = actor->ders.element_index(alpha[a]);
    const int up = e < 0 ? -1 : actor->ders.unit_position(e);
    if (up < 0)
      throw CheckError(Code::ActionMismatch,
                       "alpha(" + std::to_string(a) +
                           ") is not an invertible derivation");
    alpha_idx[a] = up;
  }
  for (int x = 0; x < g0n; ++x) {
    const int idx = actor->aut_index(beta1[x], beta0[x]);
    if (idx < 0)
      throw CheckError(Code::ActionMismatch,
                       "beta(" + std::to_string(x) +
                           ") is not a structure automorphism of H");
    beta_idx[x] = idx;
  }

  validate_group_hom(g->g1(), actor->ders.unit_group, alpha_idx, "alpha");
  validate_group_hom(g->g0(), actor->aut_group, beta_idx, "beta");

  // Δ∘α = β∘μ.
  const auto& delta = actor->actor->mu();
  for (int a = 0; a < g1n; ++a)
    if (delta(alpha_idx[a]) != beta_idx[g->boundary(a)])
      throw CheckError(Code::SquareFailure,
                       "Δ(alpha(a)) != beta(mu(a)) at a=" + std::to_string(a));

  // α(x ▷ a) = β(x) ▷ α(a).
  for (int x = 0; x < g0n; ++x)
    for (int a = 0; a < g1n; ++a)
      if (alpha_idx[g->act_of(x, a)] !=
          actor->actor->act_of(beta_idx[x], alpha_idx[a]))
        throw CheckError(Code::EquivarianceFailure,
                         "alpha not equivariant at " + wit({x, a}));

  XModAction res;
  res.g_ = std::move(g);
  res.h_ = std::move(h);
  res.actor_ = std::move(actor);
  res.alpha_maps_ = std::move(alpha);
  res.beta1_inv_.resize(g0n);
  res.beta0_inv_.resize(g0n);
  for (int x = 0; x < g0n; ++x) {
    res.beta1_inv_[x].resize(beta1[x].size());
    for (std::size_t i = 0; i < beta1[x].size(); ++i)
      res.beta1_inv_[x][beta1[x][i]] = (int)i;
    res.beta0_inv_[x].resize(beta0[x].size());
    for (std::size_t i = 0; i < beta0[x].size(); ++i)
      res.beta0_inv_[x][beta0[x][i]] = (int)i;
  }
  res.beta1_ = std::move(beta1);
  res.beta0_ = std::move(beta0);
  return res;
}

XModAction adjoint_xmod_action(const XModPtr& x) {
  const int n1 = x->g1()->order(), n0 = x->g0()->order();
  std::vector<std::vector<int>> alpha(n1, std::vector<int>(n0));
  for (int a = 0; a < n1; ++a)
    for (int y = 0; y < n0; ++y)
      alpha[a][y] = x->g1()->mul(a, x->act_of(y, x->g1()->inv(a)));
  std::vector<std::vector<int>> beta1(n0, std::vector<int>(n1));
  std::vector<std::vector<int>> beta0(n0, std::vector<int>(n0));
  for (int y = 0; y < n0; ++y) {
    for (int a = 0; a < n1; ++a) beta1[y][a] = x->act_of(y, a);
    for (int z = 0; z < n0; ++z) beta0[y][z] = x->g0()->conj(y, z);
  }
  return validate_xmod_action(x, x, std::move(alpha), std::move(beta1),
                              std::move(beta0));
}

XModAction trivial_xmod_action(const XModPtr& g, const XModPtr& h) {
  const int n1 = h->g1()->order(), n0 = h->g0()->order();
  std::vector<int> id1(n1), id0(n0);
  std::iota(id1.begin(), id1.end(), 0);
  std::iota(id0.begin(), id0.end(), 0);
  std::vector<std::vector<int>> alpha(
      g->g1()->order(), std::vector<int>(n0, h->g1()->identity()));
  std::vector<std::vector<int>> beta1(g->g0()->order(), id1);
  std::vector<std::vector<int>> beta0(g->g0()->order(), id0);
  return validate_xmod_action(g, h, std::move(alpha), std::move(beta1),
                              std::move(beta0));
}

XModPtr semidirect_xmod(const XModAction& act) {
  const XModPtr& g = act.actor_xm();
  const XModPtr& h = act.target_xm();
  const int g1n = g->g1()->order(), g0n = g->g0()->order();
  const int h1n = h->g1()->order(), h0n = h->g0()->order();

  // level-1 product uses β1∘μ, level-0 product uses β0.
  std::vector<std::vector<int>> p1(g1n), p0(g0n);
  for (int a = 0; a < g1n; ++a) p1[a] = act.beta1(g->boundary(a));
  for (int x = 0; x < g0n; ++x) p0[x] = act.beta0(x);
  GroupAction a1 = validate_group_action(g->g1(), h->g1(), p1, "beta1∘mu");
  GroupAction a0 = validate_group_action(g->g0(), h->g0(), p0, "beta0");
  GroupPtr e1 = semidirect_product(h->g1(), g->g1(), a1);
  GroupPtr e0 = semidirect_product(h->g0(), g->g0(), a0);

  std::vector<int> mu(e1->order());
  for (int b = 0; b < h1n; ++b)
    for (int a = 0; a < g1n; ++a)
      mu[pair_index(b, a, g1n)] =
          pair_index(h->boundary(b), g->boundary(a), g0n);

  // (h0,g0) ⊵ (h1,g1) = (h0 ▷ (β1(g0)h1 · α(g0▷g1)(h0⁻¹)), g0▷g1)
  std::vector<std::vector<int>> perms(e0->order(), std::vector<int>(e1->order()));
  for (int y = 0; y < h0n; ++y)
    for (int x = 0; x < g0n; ++x) {
      auto& row = perms[pair_index(y, x, g0n)];
      for (int b = 0; b < h1n; ++b)
        for (int a = 0; a < g1n; ++a) {
          const int ga = g->act_of(x, a);
          const int inner = h->g1()->mul(
              act.beta1(x)[b],
              act.apply_alpha(ga, h->g0()->inv(y)));
          row[pair_index(b, a, g1n)] =
              pair_index(h->act_of(y, inner), ga, g1n);
        }
    }
  return validate_xmod(e1, e0, std::move(mu), std::move(perms));
}

GroupAction level1_group_action(const XModAction& a) {
  const CrossedModule& gx = *a.actor_xm();
  std::vector<std::vector<int>> perms(gx.g1()->order());
  for (int x = 0; x < gx.g1()->order(); ++x)
    perms[x] = a.beta1(gx.boundary(x));
  return validate_group_action(gx.g1(), a.target_xm()->g1(), std::move(perms),
                               "level-1 action");
}

GroupAction level0_group_action(const XModAction& a) {
  std::vector<std::vector<int>> perms(a.actor_xm()->g0()->order());
  for (int x = 0; x < (int)perms.size(); ++x) perms[x] = a.beta0(x);
  return validate_group_action(a.actor_xm()->g0(), a.target_xm()->g0(),
                               std::move(perms), "level-0 action");
}

TwoGroupAction two_group_action_from_xmod_action(const XModAction& a) {
  const XModPtr& g = a.actor_xm();
  const XModPtr& h = a.target_xm();
  TwoGroupPtr p2 = xmod_to_two_group(g);
  TwoGroupPtr q2 = xmod_to_two_group(h);

  const int g0n = g->g0()->order(), h0n = h->g0()->order();
  const int h1n = h->g1()->order();

  // φ(g1,g0)(h1,h0) = (β1(μg1·g0)h1 · α(g1)(β0(g0)h0), β0(g0)h0)
  std::vector<std::vector<int>> perms(p2->arrows(),
                                      std::vector<int>(q2->arrows()));
  for (int a1 = 0; a1 < g->g1()->order(); ++a1)
    for (int a0 = 0; a0 < g0n; ++a0) {
      auto& row = perms[pair_index(a1, a0, g0n)];
      const int m = g->g0()->mul(g->boundary(a1), a0);
      for (int b1 = 0; b1 < h1n; ++b1)
        for (int b0 = 0; b0 < h0n; ++b0) {
          const int img0 = a.beta0(a0)[b0];
          const int img1 =
              h->g1()->mul(a.beta1(m)[b1], a.apply_alpha(a1, img0));
          row[pair_index(b1, b0, h0n)] = pair_index(img1, img0, h0n);
        }
    }
  std::vector<std::vector<int>> perms0(g0n, std::vector<int>(h0n));
  for (int a0 = 0; a0 < g0n; ++a0) perms0[a0] = a.beta0(a0);

  GroupAction phi = validate_group_action(p2->arrow_group(), q2->arrow_group(),
                                          std::move(perms), "phi");
  GroupAction phi0 = validate_group_action(p2->object_group(),
                                           q2->object_group(),
                                           std::move(perms0), "phi0");
  return validate_two_group_action(p2, q2, std::move(phi), std::move(phi0));
}

XModActionFromTwoGroup xmod_action_from_two_group_action(
    const TwoGroupAction& act) {
  TwoGroupAsXMod gx = two_group_to_xmod(act.actor());
  TwoGroupAsXMod hx = two_group_to_xmod(act.target());
  const TwoGroupPtr& p = act.actor();
  const TwoGroupPtr& q = act.target();

  const int kq = (int)hx.ker_embed.size();
  std::vector<int> qpos(q->arrows(), -1);
  for (int i = 0; i < kq; ++i) qpos[hx.ker_embed[i]] = i;
  const auto& qarrow = *q->arrow_group();

  // α(p)(q0) = φ(p)(ι q0)·(ι q0)⁻¹ for p ∈ ker(src).
  std::vector<std::vector<int>> alpha(gx.ker_embed.size(),
                                      std::vector<int>(q->objects()));
  for (std::size_t i = 0; i < gx.ker_embed.size(); ++i)
    for (int y = 0; y < q->objects(); ++y) {
      const int u = q->unit(y);
      const int v = qarrow.mul(act.apply(gx.ker_embed[i], u), qarrow.inv(u));
      if (qpos[v] < 0)
        throw CheckError(Code::InvariantViolation,
                         "derived alpha leaves ker(src)");
      alpha[i][y] = qpos[v];
    }

  // β(p0) = (φ(ι p0) restricted to ker(src), φ0(p0)).
  std::vector<std::vector<int>> beta1(p->objects(), std::vector<int>(kq));
  std::vector<std::vector<int>> beta0(p->objects());
  for (int x = 0; x < p->objects(); ++x) {
    const int u = p->unit(x);
    for (int i = 0; i < kq; ++i) {
      const int v = act.apply(u, hx.ker_embed[i]);
      if (qpos[v] < 0)
        throw CheckError(Code::InvariantViolation,
                         "derived beta1 leaves ker(src)");
      beta1[x][i] = qpos[v];
    }
    beta0[x] = act.phi0().perm(x);
  }

  XModActionFromTwoGroup res{
      validate_xmod_action(gx.xmod, hx.xmod, std::move(alpha),
                           std::move(beta1), std::move(beta0)),
      gx, hx};
  return res;
}

}  // namespace rbcat
