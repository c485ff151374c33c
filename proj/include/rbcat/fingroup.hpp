#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rbcat/errors.hpp"

namespace rbcat {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group presented by its full multiplication table over dense
// element indices 0..n-1. Instances exist only after every axiom has been
// checked, so downstream code never re-validates.
class FiniteGroup {
 public:
  int order() const { return n_; }
  int mul(int a, int b) const { return table_[(std::size_t)a * n_ + b]; }
  int inv(int a) const { return inverses_[a]; }
  int identity() const { return identity_; }
  int element_order(int a) const { return element_orders_[a]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
  int pow(int a, int k) const;

  const std::vector<int>& table() const { return table_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // Small generating set found greedily (identity excluded).
  const std::vector<int>& generators() const { return generators_; }

  bool same_table(const FiniteGroup& o) const {
    return n_ == o.n_ && table_ == o.table_;
  }
  bool is_abelian() const;

 private:
  FiniteGroup() = default;

  int n_ = 0;
  std::vector<int> table_;
  int identity_ = 0;
  std::vector<int> inverses_;
  std::vector<int> element_orders_;
  std::vector<int> generators_;
  std::vector<std::string> labels_;

  friend GroupPtr validate_group(std::vector<int> table, int n,
                                 std::optional<int> identity_hint,
                                 std::vector<std::string> labels);
};

// Checks closure, identity (discovered, hint only cross-checked), inverses
// and associativity (Light's test over a generating set, equivalent to the
// full triple loop) and returns the validated group.
GroupPtr validate_group(std::vector<int> table, int n,
                        std::optional<int> identity_hint = std::nullopt,
                        std::vector<std::string> labels = {});
GroupPtr validate_group(const std::vector<std::vector<int>>& rows,
                        std::optional<int> identity_hint = std::nullopt,
                        std::vector<std::string> labels = {});

// A homomorphism between validated groups, stored as a full image table.
class GroupHom {
 public:
  const GroupPtr& domain() const { return dom_; }
  const GroupPtr& codomain() const { return cod_; }
  const std::vector<int>& map() const { return map_; }
  int operator()(int a) const { return map_[a]; }
  bool is_bijective() const;
  std::vector<int> kernel() const;  // sorted element list
  std::vector<int> image() const;   // sorted element list

 private:
  GroupHom() = default;
  GroupPtr dom_, cod_;
  std::vector<int> map_;

  friend GroupHom validate_group_hom(GroupPtr dom, GroupPtr cod,
                                     std::vector<int> map,
                                     const std::string& what);
};

GroupHom validate_group_hom(GroupPtr dom, GroupPtr cod, std::vector<int> map,
                            const std::string& what = "map");

// A left action of `actor` on `target` by group automorphisms:
// perm(e) = id, perm(g·g') = perm(g)∘perm(g'), each perm(g) ∈ Aut(target).
class GroupAction {
 public:
  const GroupPtr& actor() const { return actor_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<std::vector<int>>& perms() const { return perms_; }
  const std::vector<int>& perm(int g) const { return perms_[g]; }
  const std::vector<int>& inverse_perm(int g) const { return inv_perms_[g]; }
  int apply(int g, int x) const { return perms_[g][x]; }
  bool same_as(const GroupAction& o) const {
    return actor_->same_table(*o.actor_) && target_->same_table(*o.target_) &&
           perms_ == o.perms_;
  }

 private:
  GroupAction() = default;
  GroupPtr actor_, target_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> inv_perms_;

  friend GroupAction validate_group_action(GroupPtr actor, GroupPtr target,
                                           std::vector<std::vector<int>> perms,
                                           const std::string& what);
};

GroupAction validate_group_action(GroupPtr actor, GroupPtr target,
                                  std::vector<std::vector<int>> perms,
                                  const std::string& what = "action");

GroupAction adjoint_action(const GroupPtr& g);
GroupAction trivial_action(const GroupPtr& actor, const GroupPtr& target);

// Semidirect product H ⋊ G along phi : G → Aut(H); pair (h, g) gets dense
// index h*|G| + g and the product (h,g)(h',g') = (h·phi(g)h', g·g').
GroupPtr semidirect_product(const GroupPtr& h, const GroupPtr& g,
                            const GroupAction& phi);
inline GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
  return semidirect_product(a, b, trivial_action(b, a));
}
inline int pair_index(int h, int g, int n_g) { return h * n_g + g; }

struct AutomorphismGroup {
  GroupPtr group;                       // composition: maps[i]∘maps[j]
  std::vector<std::vector<int>> maps;   // sorted lexicographically
  int index_of(const std::vector<int>& m) const;  // -1 when absent
};

// Backtracking over generator images with element-order pruning; result is
// the full automorphism group with its composition table.
AutomorphismGroup automorphism_group(const GroupPtr& g);

struct SubgroupQuotient {
  GroupPtr subgroup;
  std::vector<int> embed;  // subgroup index -> parent element
  bool normal = false;
  GroupPtr quotient;            // set when normal
  std::vector<int> projection;  // parent element -> coset index, when normal
};

// Verifies the subset is a subgroup (closure, identity, inverses), decides
// normality, and when `want_quotient` also requires normality and builds the
// coset group together with the projection table.
SubgroupQuotient subgroup_and_quotient(const GroupPtr& g,
                                       std::vector<int> subset,
                                       bool want_quotient);

// Brute-force isomorphism search with element-order pruning. Intended for
// classification of small computed groups.
std::optional<std::vector<int>> find_isomorphism(const GroupPtr& a,
                                                 const GroupPtr& b);

GroupPtr make_trivial_group();
GroupPtr make_cyclic_group(int n);
GroupPtr make_klein_group();
GroupPtr make_s3();

}  // namespace rbcat
