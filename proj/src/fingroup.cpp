#include "rbcat/fingroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rbcat {

const char* code_name(Code c) {
  switch (c) {
    case Code::NotClosed: return "NotClosed";
    case Code::NotAssociative: return "NotAssociative";
    case Code::NoIdentity: return "NoIdentity";
    case Code::NoInverse: return "NoInverse";
    case Code::ActionMismatch: return "ActionMismatch";
    case Code::NotSubgroup: return "NotSubgroup";
    case Code::NotNormal: return "NotNormal";
    case Code::NotHom: return "NotHom";
    case Code::NotAutomorphism: return "NotAutomorphism";
    case Code::NotBijective: return "NotBijective";
    case Code::InterchangeFailure: return "InterchangeFailure";
    case Code::GroupoidAxiomFailure: return "GroupoidAxiomFailure";
    case Code::NotGroupoidMorphism: return "NotGroupoidMorphism";
    case Code::EqPhiFailure: return "EqPhiFailure";
    case Code::Peiffer1Failure: return "Peiffer1Failure";
    case Code::Peiffer2Failure: return "Peiffer2Failure";
    case Code::EquivarianceFailure: return "EquivarianceFailure";
    case Code::SquareFailure: return "SquareFailure";
    case Code::RRBFailure: return "RRBFailure";
    case Code::ComponentFailure: return "ComponentFailure";
    case Code::MixedFailure: return "MixedFailure";
    case Code::MixedIdentityFailure: return "MixedIdentityFailure";
    case Code::IdentityFailure: return "IdentityFailure";
    case Code::CocycleFailure: return "CocycleFailure";
    case Code::NotAdjointAction: return "NotAdjointAction";
    case Code::BraidFailure: return "BraidFailure";
    case Code::FunctorialityFailure: return "FunctorialityFailure";
    case Code::InvariantViolation: return "InvariantViolation";
    case Code::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Code::ParseError: return "ParseError";
  }
  return "Unknown";
}

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

// Closure of {identity} ∪ gens under the raw table; works on unvalidated
// tables so it can drive both Light's test and greedy generator selection.
std::vector<char> closure_under(const std::vector<int>& table, int n,
                                int identity, const std::vector<int>& gens) {
  std::vector<char> in(n, 0);
  std::vector<int> stack;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      stack.push_back(x);
    }
  };
  add(identity);
  for (int g : gens) add(g);
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    for (int g : gens) {
      add(table[(std::size_t)a * n + g]);
      add(table[(std::size_t)g * n + a]);
    }
  }
  return in;
}

std::vector<int> greedy_generators(const std::vector<int>& table, int n,
                                   int identity) {
  std::vector<int> gens;
  std::vector<char> in = closure_under(table, n, identity, gens);
  for (int x = 0; x < n; ++x) {
    if (!in[x]) {
      gens.push_back(x);
      in = closure_under(table, n, identity, gens);
    }
  }
  return gens;
}

}  // namespace

int FiniteGroup::pow(int a, int k) const {
  int r = identity_;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

GroupPtr validate_group(std::vector<int> table, int n,
                        std::optional<int> identity_hint,
                        std::vector<std::string> labels) {
  if (n <= 0 || (std::size_t)n * n != table.size())
    throw CheckError(Code::NotClosed, "table is not " + std::to_string(n) +
                                          "x" + std::to_string(n));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0 || table[i] >= n)
      throw CheckError(Code::NotClosed,
                       "entry " + wit({(int)(i / n), (int)(i % n)}) + " = " +
                           std::to_string(table[i]) + " outside 0.." +
                           std::to_string(n - 1));

  auto at = [&](int a, int b) { return table[(std::size_t)a * n + b]; };

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      if (at(e, a) != a || at(a, e) != a) ok = false;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw CheckError(Code::NoIdentity, "no two-sided identity");
  if (identity_hint && *identity_hint != identity)
    throw CheckError(Code::NoIdentity,
                     "identity is " + std::to_string(identity) +
                         ", hint said " + std::to_string(*identity_hint));

  std::vector<int> inverses(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (at(a, b) == identity && at(b, a) == identity) {
        inverses[a] = b;
        break;
      }
    if (inverses[a] < 0)
      throw CheckError(Code::NoInverse,
                       "element " + std::to_string(a) + " has no inverse");
  }

  // Light's associativity test: (a·g)·b = a·(g·b) for every generator g is
  // equivalent to full associativity once {identity} ∪ gens generates.
  const std::vector<int> gens = greedy_generators(table, n, identity);
  for (int g : gens)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (at(at(a, g), b) != at(a, at(g, b)))
          throw CheckError(Code::NotAssociative,
                           "witness (a,g,b)=" + wit({a, g, b}));

  if (labels.empty()) {
    labels.resize(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  } else if ((int)labels.size() != n) {
    throw CheckError(Code::NotClosed, "labels size mismatch");
  }

  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->n_ = n;
  g->table_ = std::move(table);
  g->identity_ = identity;
  g->inverses_ = std::move(inverses);
  g->generators_ = gens;
  g->labels_ = std::move(labels);
  g->element_orders_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != identity) {
      x = g->mul(x, a);
      ++k;
    }
    g->element_orders_[a] = k;
  }
  return g;
}

GroupPtr validate_group(const std::vector<std::vector<int>>& rows,
                        std::optional<int> identity_hint,
                        std::vector<std::string> labels) {
  const int n = (int)rows.size();
  std::vector<int> flat;
  flat.reserve((std::size_t)n * n);
  for (const auto& r : rows) {
    if ((int)r.size() != n)
      throw CheckError(Code::NotClosed, "ragged table row");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return validate_group(std::move(flat), n, identity_hint, std::move(labels));
}

bool GroupHom::is_bijective() const {
  if (dom_->order() != cod_->order()) return false;
  std::vector<char> seen(cod_->order(), 0);
  for (int v : map_) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> GroupHom::kernel() const {
  std::vector<int> k;
  for (int a = 0; a < dom_->order(); ++a)
    if (map_[a] == cod_->identity()) k.push_back(a);
  return k;
}

std::vector<int> GroupHom::image() const {
  std::vector<int> im;
  std::vector<char> seen(cod_->order(), 0);
  for (int v : map_)
    if (!seen[v]) {
      seen[v] = 1;
      im.push_back(v);
    }
  std::sort(im.begin(), im.end());
  return im;
}

GroupHom validate_group_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map,
                            const std::string& what) {
  const int n = dom->order();
  if ((int)map.size() != n)
    throw CheckError(Code::NotHom, what + ": table has " +
                                       std::to_string(map.size()) +
                                       " entries, domain order " +
                                       std::to_string(n));
  for (int v : map)
    if (v < 0 || v >= cod->order())
      throw CheckError(Code::NotHom, what + ": value out of range");
  if (map[dom->identity()] != cod->identity())
    throw CheckError(Code::NotHom, what + ": identity not preserved");
  // Generator reduction: f(g·a) = f(g)·f(a) for generators g and all a,
  // together with f(e) = e, implies the full homomorphism law.
  for (int g : dom->generators())
    for (int a = 0; a < n; ++a)
      if (map[dom->mul(g, a)] != cod->mul(map[g], map[a]))
        throw CheckError(Code::NotHom,
                         what + ": f(g*a) != f(g)*f(a) at (g,a)=" + wit({g, a}));
  GroupHom h;
  h.dom_ = std::move(dom);
  h.cod_ = std::move(cod);
  h.map_ = std::move(map);
  return h;
}

GroupAction validate_group_action(GroupPtr actor, GroupPtr target,
                                  std::vector<std::vector<int>> perms,
                                  const std::string& what) {
  const int n = actor->order(), m = target->order();
  if ((int)perms.size() != n)
    throw CheckError(Code::ActionMismatch,
                     what + ": need one permutation per actor element");
  for (int g = 0; g < n; ++g) {
    const auto& p = perms[g];
    if ((int)p.size() != m)
      throw CheckError(Code::ActionMismatch, what + ": row size mismatch");
    std::vector<char> seen(m, 0);
    for (int v : p) {
      if (v < 0 || v >= m || seen[v])
        throw CheckError(Code::NotAutomorphism,
                         what + ": perm(" + std::to_string(g) +
                             ") is not a bijection of the target");
      seen[v] = 1;
    }
    // Automorphism law via target generators.
    for (int t : target->generators())
      for (int x = 0; x < m; ++x)
        if (p[target->mul(t, x)] != target->mul(p[t], p[x]))
          throw CheckError(Code::NotAutomorphism,
                           what + ": perm(" + std::to_string(g) +
                               ") breaks multiplicativity at " + wit({t, x}));
  }
  const auto& id_row = perms[actor->identity()];
  for (int x = 0; x < m; ++x)
    if (id_row[x] != x)
      throw CheckError(Code::NotHom,
                       what + ": perm(identity) is not the identity map");
  for (int g : actor->generators())
    for (int a = 0; a < n; ++a) {
      const int ga = actor->mul(g, a);
      for (int x = 0; x < m; ++x)
        if (perms[ga][x] != perms[g][perms[a][x]])
          throw CheckError(Code::NotHom, what +
                                             ": perm(g*a) != perm(g)∘perm(a) "
                                             "at (g,a,x)=" +
                                             wit({g, a, x}));
    }

  GroupAction act;
  act.actor_ = std::move(actor);
  act.target_ = std::move(target);
  act.inv_perms_.resize(n, std::vector<int>(m));
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < m; ++x) act.inv_perms_[g][perms[g][x]] = x;
  act.perms_ = std::move(perms);
  return act;
}

GroupAction adjoint_action(const GroupPtr& g) {
  const int n = g->order();
  std::vector<std::vector<int>> perms(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int x = 0; x < n; ++x) perms[a][x] = g->conj(a, x);
  return validate_group_action(g, g, std::move(perms), "adjoint");
}

GroupAction trivial_action(const GroupPtr& actor, const GroupPtr& target) {
  std::vector<int> id(target->order());
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> perms(actor->order(), id);
  return validate_group_action(actor, target, std::move(perms), "trivial");
}

GroupPtr semidirect_product(const GroupPtr& h, const GroupPtr& g,
                            const GroupAction& phi) {
  if (!phi.actor()->same_table(*g) || !phi.target()->same_table(*h))
    throw CheckError(Code::ActionMismatch,
                     "semidirect product needs an action of the second factor "
                     "on the first");
  const int nh = h->order(), ng = g->order(), n = nh * ng;
  std::vector<int> table((std::size_t)n * n);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int g1 = 0; g1 < ng; ++g1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int g2 = 0; g2 < ng; ++g2) {
          const int hr = h->mul(h1, phi.apply(g1, h2));
          const int gr = g->mul(g1, g2);
          table[(std::size_t)pair_index(h1, g1, ng) * n +
                pair_index(h2, g2, ng)] = pair_index(hr, gr, ng);
        }
  std::vector<std::string> labels(n);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int g1 = 0; g1 < ng; ++g1)
      labels[pair_index(h1, g1, ng)] =
          "(" + h->label(h1) + "," + g->label(g1) + ")";
  return validate_group(std::move(table), n, std::nullopt, std::move(labels));
}

int AutomorphismGroup::index_of(const std::vector<int>& m) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), m);
  if (it == maps.end() || *it != m) return -1;
  return (int)(it - maps.begin());
}

namespace {

// DFS over generator images with order pruning; propagates partial images by
// left multiplication and finally re-checks the full homomorphism law.
void hom_search(const FiniteGroup& a, const FiniteGroup& b, bool bijective_only,
                bool stop_at_first, std::vector<std::vector<int>>& out) {
  const int n = a.order();
  const std::vector<int>& gens = a.generators();

  struct Frame {
    std::vector<int> img;
  };

  // Orders of the elements of b bucketed for candidate lists.
  std::vector<std::vector<int>> by_divisor(1);
  auto candidates_for = [&](int ga) {
    std::vector<int> c;
    const int oa = a.element_order(ga);
    for (int x = 0; x < b.order(); ++x) {
      const int ob = b.element_order(x);
      if (bijective_only ? (ob == oa) : (oa % ob == 0)) c.push_back(x);
    }
    return c;
  };

  // Extends img by closing {e, gens[0..k]} under multiplication; returns
  // false on conflict. img is indexed by elements of a.
  auto propagate = [&](std::vector<int>& img, int seed) -> bool {
    std::vector<int> stack{seed};
    std::vector<int> known;
    known.reserve(n);
    for (int x = 0; x < n; ++x)
      if (img[x] >= 0) known.push_back(x);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < known.size(); ++i) {
        const int y = known[i];
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
          const int pq = a.mul(p, q);
          const int v = b.mul(img[p], img[q]);
          if (img[pq] < 0) {
            img[pq] = v;
            known.push_back(pq);
            stack.push_back(pq);
          } else if (img[pq] != v) {
            return false;
          }
        }
      }
      if (std::find(known.begin(), known.end(), x) == known.end())
        known.push_back(x);
    }
    return true;
  };

  std::vector<int> img(n, -1);
  img[a.identity()] = b.identity();

  std::vector<std::vector<int>> cand;
  for (int g : gens) cand.push_back(candidates_for(g));

  // Iterative DFS.
  struct Node {
    std::vector<int> img;
    std::size_t gen_idx;
    std::size_t cand_idx;
  };
  std::vector<Node> stack{{img, 0, 0}};
  while (!stack.empty()) {
    Node node = stack.back();
    stack.pop_back();
    if (node.gen_idx == gens.size()) {
      // Complete: every element must be assigned (gens generate a).
      const auto& m = node.img;
      bool total = std::find(m.begin(), m.end(), -1) == m.end();
      if (!total) continue;
      if (bijective_only) {
        std::vector<char> seen(b.order(), 0);
        bool bij = b.order() == n;
        for (int v : m) {
          if (v < 0 || seen[v]) {
            bij = false;
            break;
          }
          seen[v] = 1;
        }
        if (!bij) continue;
      }
      bool hom = true;
      for (int g : gens) {
        for (int x = 0; x < n && hom; ++x)
          if (m[a.mul(g, x)] != b.mul(m[g], m[x])) hom = false;
        if (!hom) break;
      }
      if (!hom) continue;
      out.push_back(m);
      if (stop_at_first) return;
      continue;
    }
    const int g = gens[node.gen_idx];
    if (node.img[g] >= 0) {
      stack.push_back({node.img, node.gen_idx + 1, 0});
      continue;
    }
    // Try candidates in descending order so the stack pops ascending.
    const auto& cs = cand[node.gen_idx];
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
      std::vector<int> next = node.img;
      next[g] = *it;
      if (propagate(next, g)) stack.push_back({std::move(next), node.gen_idx + 1, 0});
    }
  }
}

}  // namespace

AutomorphismGroup automorphism_group(const GroupPtr& g) {
  std::vector<std::vector<int>> maps;
  hom_search(*g, *g, /*bijective_only=*/true, /*stop_at_first=*/false, maps);
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());

  const int k = (int)maps.size();
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < k; ++i) index[maps[i]] = i;
  std::vector<int> table((std::size_t)k * k);
  const int n = g->order();
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = maps[i][maps[j][x]];
      auto it = index.find(comp);
      if (it == index.end())
        throw CheckError(Code::InvariantViolation,
                         "automorphisms not closed under composition");
      table[(std::size_t)i * k + j] = it->second;
    }
  AutomorphismGroup res;
  res.group = validate_group(std::move(table), k);
  res.maps = std::move(maps);
  return res;
}

SubgroupQuotient subgroup_and_quotient(const GroupPtr& g,
                                       std::vector<int> subset,
                                       bool want_quotient) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty())
    throw CheckError(Code::NotSubgroup, "empty subset");
  for (int x : subset)
    if (x < 0 || x >= g->order())
      throw CheckError(Code::NotSubgroup, "element out of range");

  const int k = (int)subset.size();
  std::vector<int> pos(g->order(), -1);
  for (int i = 0; i < k; ++i) pos[subset[i]] = i;

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (pos[g->mul(subset[i], subset[j])] < 0)
        throw CheckError(Code::NotSubgroup,
                         "not closed at " + wit({subset[i], subset[j]}));
  if (pos[g->identity()] < 0)
    throw CheckError(Code::NotSubgroup, "identity missing");
  for (int i = 0; i < k; ++i)
    if (pos[g->inv(subset[i])] < 0)
      throw CheckError(Code::NotSubgroup,
                       "inverse of " + std::to_string(subset[i]) + " missing");

  std::vector<int> table((std::size_t)k * k);
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    labels[i] = g->label(subset[i]);
    for (int j = 0; j < k; ++j)
      table[(std::size_t)i * k + j] = pos[g->mul(subset[i], subset[j])];
  }

  SubgroupQuotient res;
  res.subgroup = validate_group(std::move(table), k, std::nullopt, labels);
  res.embed = subset;

  res.normal = true;
  int bad_g = -1, bad_s = -1;
  for (int a = 0; a < g->order() && res.normal; ++a)
    for (int i = 0; i < k; ++i)
      if (pos[g->conj(a, subset[i])] < 0) {
        res.normal = false;
        bad_g = a;
        bad_s = subset[i];
        break;
      }
  if (!res.normal && want_quotient)
    throw CheckError(Code::NotNormal,
                     "conjugate of " + std::to_string(bad_s) + " by " +
                         std::to_string(bad_g) + " escapes the subgroup");

  if (res.normal) {
    // Cosets keyed by their smallest member.
    std::vector<int> coset_of(g->order(), -1);
    std::vector<int> reps;
    for (int a = 0; a < g->order(); ++a) {
      if (coset_of[a] >= 0) continue;
      std::vector<int> coset;
      for (int i = 0; i < k; ++i) coset.push_back(g->mul(a, subset[i]));
      const int rep = *std::min_element(coset.begin(), coset.end());
      const int idx = (int)reps.size();
      reps.push_back(rep);
      for (int x : coset) coset_of[x] = idx;
    }
    const int q = (int)reps.size();
    std::vector<int> qtable((std::size_t)q * q);
    for (int i = 0; i < q; ++i)
      for (int j = 0; j < q; ++j)
        qtable[(std::size_t)i * q + j] = coset_of[g->mul(reps[i], reps[j])];
    std::vector<std::string> qlabels(q);
    for (int i = 0; i < q; ++i) qlabels[i] = "[" + g->label(reps[i]) + "]";
    res.quotient = validate_group(std::move(qtable), q, std::nullopt, qlabels);
    res.projection = coset_of;
    validate_group_hom(g, res.quotient, res.projection, "quotient projection");
  }
  return res;
}

std::optional<std::vector<int>> find_isomorphism(const GroupPtr& a,
                                                 const GroupPtr& b) {
  if (a->order() != b->order()) return std::nullopt;
  std::vector<int> prof_a, prof_b;
  for (int x = 0; x < a->order(); ++x) prof_a.push_back(a->element_order(x));
  for (int x = 0; x < b->order(); ++x) prof_b.push_back(b->element_order(x));
  std::sort(prof_a.begin(), prof_a.end());
  std::sort(prof_b.begin(), prof_b.end());
  if (prof_a != prof_b) return std::nullopt;

  std::vector<std::vector<int>> found;
  hom_search(*a, *b, /*bijective_only=*/true, /*stop_at_first=*/true, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

GroupPtr make_trivial_group() { return validate_group({0}, 1, 0, {"e"}); }

GroupPtr make_cyclic_group(int n) {
  std::vector<int> table((std::size_t)n * n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    for (int j = 0; j < n; ++j) table[(std::size_t)i * n + j] = (i + j) % n;
  }
  return validate_group(std::move(table), n, 0, std::move(labels));
}

GroupPtr make_klein_group() {
  // Z2 x Z2 with bitwise-xor multiplication.
  std::vector<int> table(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table[(std::size_t)i * 4 + j] = i ^ j;
  return validate_group(std::move(table), 4, 0, {"e", "a", "b", "ab"});
}

GroupPtr make_s3() {
  // Permutations of {0,1,2}; composition (σ·τ)(x) = σ(τ(x)).
  const std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  const int n = 6;
  std::vector<int> table((std::size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> c(3);
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      for (int k = 0; k < n; ++k)
        if (perms[k] == c) {
          table[(std::size_t)i * n + j] = k;
          break;
        }
    }
  return validate_group(std::move(table), n, 0,
                        {"e", "(01)", "(02)", "(12)", "(012)", "(021)"});
}

}  // namespace rbcat
