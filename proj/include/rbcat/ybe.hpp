#pragma once

// Set-theoretic Yang-Baxter solutions on finite carriers, their categorical
// refinement over a 2-group, and the solution built from a relative
// Rota-Baxter operator via its descendant products.

#include <utility>
#include <vector>

#include "rbcat/rrb.hpp"
#include "rbcat/twogroup.hpp"

namespace rbcat {

// A bijection R of X×X satisfying the braid relation
//   R12 ∘ R23 ∘ R12 = R23 ∘ R12 ∘ R23
// on X³. Pairs are encoded row-major: entry x·n + y holds R(x,y) as
// R1(x,y)·n + R2(x,y).
struct SetYBESolution {
  int n = 0;
  std::vector<int> table;

  int first(int x, int y) const { return table[x * n + y] / n; }
  int second(int x, int y) const { return table[x * n + y] % n; }
};

// Checks bijectivity and the braid relation over all n³ triples, scanning
// triples in lexicographic order so the reported witness is deterministic.
SetYBESolution verify_set_ybe(int n, std::vector<int> table);

bool is_set_ybe(int n, const std::vector<int>& table);

// A Yang-Baxter solution on the arrows of a 2-group together with one on its
// objects, compatible with the groupoid structure: R commutes with src and
// tgt into the object solution, preserves units, and preserves composition
// on composable pairs.
struct CatYBESolution {
  TwoGroupPtr group;
  SetYBESolution arrow;
  SetYBESolution object;
};

CatYBESolution verify_cat_ybe(const TwoGroupPtr& group,
                              std::vector<int> arrow_table,
                              std::vector<int> object_table);

bool is_cat_ybe(const TwoGroupPtr& group, const std::vector<int>& arrow_table,
                const std::vector<int>& object_table);

// The solution attached to a relative Rota-Baxter operator:
//   R(q, j) = (φ(Bq)j, u† ·B q ·B j)   with u = φ(Bq)j,
// where ·B and † are the product and inverse of the operator's descendant
// 2-group; the object-level table uses the same formula one level down.
CatYBESolution rb_solution(const RRBTwoGroupOp& op);

}  // namespace rbcat
