#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "rbcat/fingroup.hpp"

namespace rbcat {

class TwoGroup;
using TwoGroupPtr = std::shared_ptr<const TwoGroup>;

// A strict finite 2-group: a group of arrows and a group of objects with
// source/target/unit homomorphisms. The groupoid composition is not free
// data; it is derived as p * p' = p · ι(src p)⁻¹ · p' on composable pairs
// and then every groupoid axiom plus the interchange law is checked.
class TwoGroup {
 public:
  const GroupPtr& arrow_group() const { return arrow_; }
  const GroupPtr& object_group() const { return object_; }
  int arrows() const { return arrow_->order(); }
  int objects() const { return object_->order(); }

  int src(int p) const { return src_[p]; }
  int tgt(int p) const { return tgt_[p]; }
  int unit(int x) const { return unit_[x]; }
  const std::vector<int>& src_map() const { return src_; }
  const std::vector<int>& tgt_map() const { return tgt_; }
  const std::vector<int>& unit_map() const { return unit_; }

  bool composable(int p, int q) const { return src_[p] == tgt_[q]; }
  // Groupoid composite p * q; caller must ensure composability.
  int comp(int p, int q) const { return comp_[(std::size_t)p * arrows() + q]; }
  int ginv(int p) const { return ginv_[p]; }

  const std::vector<int>& arrows_by_src(int x) const { return by_src_[x]; }
  const std::vector<int>& arrows_by_tgt(int x) const { return by_tgt_[x]; }
  const std::vector<std::pair<int, int>>& composable_pairs() const {
    return cpairs_;
  }
  // Generating pairs of the composability subgroup of arrow × arrow.
  const std::vector<std::pair<int, int>>& composable_generators() const {
    return cpair_gens_;
  }

  std::vector<int> ker_src_elements() const;  // sorted arrow list
  bool is_discrete() const;    // src = tgt = unit = id
  bool is_one_object() const;  // single object
  bool same_as(const TwoGroup& o) const {
    return arrow_->same_table(*o.arrow_) && object_->same_table(*o.object_) &&
           src_ == o.src_ && tgt_ == o.tgt_ && unit_ == o.unit_;
  }

 private:
  TwoGroup() = default;
  GroupPtr arrow_, object_;
  std::vector<int> src_, tgt_, unit_;
  std::vector<int> comp_;  // -1 when not composable
  std::vector<int> ginv_;
  std::vector<std::vector<int>> by_src_, by_tgt_;
  std::vector<std::pair<int, int>> cpairs_;
  std::vector<std::pair<int, int>> cpair_gens_;

  friend TwoGroupPtr validate_two_group(GroupPtr arrow, GroupPtr object,
                                        std::vector<int> src,
                                        std::vector<int> tgt,
                                        std::vector<int> unit);
};

TwoGroupPtr validate_two_group(GroupPtr arrow, GroupPtr object,
                               std::vector<int> src, std::vector<int> tgt,
                               std::vector<int> unit);

TwoGroupPtr discrete_two_group(const GroupPtr& g);
// One-object 2-groups exist exactly for abelian arrow groups.
TwoGroupPtr one_object_two_group(const GroupPtr& g);

// A homomorphism of 2-groups: group homs on both levels commuting with
// src, tgt, unit and preserving groupoid composition.
struct TwoGroupMorphism {
  TwoGroupPtr dom, cod;
  GroupHom f;   // arrows
  GroupHom f0;  // objects
};

TwoGroupMorphism validate_two_group_morphism(const TwoGroupPtr& dom,
                                             const TwoGroupPtr& cod,
                                             std::vector<int> f,
                                             std::vector<int> f0,
                                             const std::string& what = "morphism");

// An action of P on Q by 2-group automorphisms: group actions on both
// levels forming a groupoid morphism P×Q ⇉ P0×Q0 → Q ⇉ Q0 and satisfying
// φ(p*p')(q*q') = φ(p)q * φ(p')q'.
class TwoGroupAction {
 public:
  const TwoGroupPtr& actor() const { return p_; }
  const TwoGroupPtr& target() const { return q_; }
  const GroupAction& phi() const { return phi_; }
  const GroupAction& phi0() const { return phi0_; }
  int apply(int p, int q) const { return phi_.apply(p, q); }
  int apply0(int p0, int q0) const { return phi0_.apply(p0, q0); }
  bool is_adjoint() const;
  bool same_as(const TwoGroupAction& o) const {
    return p_->same_as(*o.p_) && q_->same_as(*o.q_) &&
           phi_.same_as(o.phi_) && phi0_.same_as(o.phi0_);
  }

 private:
  TwoGroupAction(TwoGroupPtr p, TwoGroupPtr q, GroupAction phi,
                 GroupAction phi0)
      : p_(std::move(p)), q_(std::move(q)), phi_(std::move(phi)),
        phi0_(std::move(phi0)) {}
  TwoGroupPtr p_, q_;
  GroupAction phi_, phi0_;

  friend TwoGroupAction validate_two_group_action(TwoGroupPtr p, TwoGroupPtr q,
                                                  GroupAction phi,
                                                  GroupAction phi0);
};

TwoGroupAction validate_two_group_action(TwoGroupPtr p, TwoGroupPtr q,
                                         GroupAction phi, GroupAction phi0);

TwoGroupAction adjoint_two_group_action(const TwoGroupPtr& p);
TwoGroupAction trivial_two_group_action(const TwoGroupPtr& p,
                                        const TwoGroupPtr& q);

// Semidirect 2-group Q ⋊ P: levelwise semidirect products with componentwise
// src/tgt/unit; the derived composition is checked to act componentwise.
TwoGroupPtr semidirect_two_group(const TwoGroupAction& act);

inline TwoGroupPtr direct_product_two_group(const TwoGroupPtr& a,
                                            const TwoGroupPtr& b) {
  return semidirect_two_group(trivial_two_group_action(b, a));
}

// A sub-2-group presented on re-indexed carriers with embeddings back into
// the ambient 2-group.
struct SubTwoGroup {
  TwoGroupPtr group;
  std::vector<int> arrow_embed;   // sub arrow index -> ambient arrow
  std::vector<int> object_embed;  // sub object index -> ambient object
  int arrow_position(int ambient_arrow) const;    // -1 when absent
  int object_position(int ambient_object) const;  // -1 when absent
};

// Verifies both subsets are subgroups closed under src, tgt and unit, and
// assembles the restricted 2-group.
SubTwoGroup sub_two_group(const TwoGroupPtr& p, std::vector<int> arrows,
                          std::vector<int> objects);

// Quotient by a normal sub-2-group, with the induced src/tgt/unit on cosets.
struct QuotientTwoGroup {
  TwoGroupPtr group;
  std::vector<int> arrow_proj;   // ambient arrow -> arrow coset
  std::vector<int> object_proj;  // ambient object -> object coset
};

QuotientTwoGroup quotient_two_group(const TwoGroupPtr& p,
                                    const std::vector<int>& normal_arrows,
                                    const std::vector<int>& normal_objects);

}  // namespace rbcat
