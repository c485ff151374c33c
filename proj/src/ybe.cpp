#include "rbcat/ybe.hpp"

#include <array>
#include <string>

#include "rbcat/errors.hpp"

namespace rbcat {

namespace {

std::string triple_str(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + ")";
}

}  // namespace

SetYBESolution verify_set_ybe(int n, std::vector<int> table) {
  if (n <= 0 || (int)table.size() != n * n)
    throw CheckError(Code::ActionMismatch,
                     "pair table has " + std::to_string(table.size()) +
                         " entries for carrier size " + std::to_string(n));
  for (int v : table)
    if (v < 0 || v >= n * n)
      throw CheckError(Code::ActionMismatch,
                       "pair table value " + std::to_string(v) +
                           " out of range");
  std::vector<char> seen(table.size(), 0);
  for (int v : table) {
    if (seen[v])
      throw CheckError(Code::NotBijective,
                       "pair map takes the value " + std::to_string(v / n) +
                           "," + std::to_string(v % n) + " twice");
    seen[v] = 1;
  }

  SetYBESolution r{n, std::move(table)};
  auto r12 = [&](std::array<int, 3> t) {
    return std::array<int, 3>{r.first(t[0], t[1]), r.second(t[0], t[1]), t[2]};
  };
  auto r23 = [&](std::array<int, 3> t) {
    return std::array<int, 3>{t[0], r.first(t[1], t[2]), r.second(t[1], t[2])};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const std::array<int, 3> t{x, y, z};
        const auto lhs = r12(r23(r12(t)));
        const auto rhs = r23(r12(r23(t)));
        if (lhs != rhs)
          throw CheckError(Code::BraidFailure,
                           "braid relation fails at " + triple_str(t) +
                               ": lhs=" + triple_str(lhs) +
                               " rhs=" + triple_str(rhs));
      }
  return r;
}

bool is_set_ybe(int n, const std::vector<int>& table) {
  try {
    verify_set_ybe(n, table);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

CatYBESolution verify_cat_ybe(const TwoGroupPtr& group,
                              std::vector<int> arrow_table,
                              std::vector<int> object_table) {
  const int n = group->arrows(), m = group->objects();
  SetYBESolution ra = verify_set_ybe(n, std::move(arrow_table));
  SetYBESolution ro = verify_set_ybe(m, std::move(object_table));

  // src and tgt intertwine the two solutions.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int a = ra.first(x, y), b = ra.second(x, y);
      if (ro.first(group->src(x), group->src(y)) != group->src(a) ||
          ro.second(group->src(x), group->src(y)) != group->src(b))
        throw CheckError(Code::FunctorialityFailure,
                         "src: R0(src×src) ≠ (src×src)R at (" +
                             std::to_string(x) + "," + std::to_string(y) +
                             ")");
      if (ro.first(group->tgt(x), group->tgt(y)) != group->tgt(a) ||
          ro.second(group->tgt(x), group->tgt(y)) != group->tgt(b))
        throw CheckError(Code::FunctorialityFailure,
                         "tgt: R0(tgt×tgt) ≠ (tgt×tgt)R at (" +
                             std::to_string(x) + "," + std::to_string(y) +
                             ")");
    }
  // Units map to units.
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v) {
      const int a = ra.first(group->unit(u), group->unit(v));
      const int b = ra.second(group->unit(u), group->unit(v));
      if (a != group->unit(ro.first(u, v)) || b != group->unit(ro.second(u, v)))
        throw CheckError(Code::FunctorialityFailure,
                         "unit: R(1×1) ≠ (1×1)R0 at (" + std::to_string(u) +
                             "," + std::to_string(v) + ")");
    }
  // Composition is preserved pairwise on composable pairs.
  const auto& cp = group->composable_pairs();
  for (const auto& [x, xp] : cp)
    for (const auto& [y, yp] : cp) {
      const int cx = group->comp(x, xp), cy = group->comp(y, yp);
      const int a = ra.first(x, y), b = ra.second(x, y);
      const int ap = ra.first(xp, yp), bp = ra.second(xp, yp);
      if (!group->composable(a, ap) || !group->composable(b, bp) ||
          ra.first(cx, cy) != group->comp(a, ap) ||
          ra.second(cx, cy) != group->comp(b, bp))
        throw CheckError(Code::FunctorialityFailure,
                         "comp: R(q*q', j*j') ≠ R(q,j)*R(q',j') at (" +
                             std::to_string(x) + "," + std::to_string(y) +
                             ")*(" + std::to_string(xp) + "," +
                             std::to_string(yp) + ")");
    }
  return CatYBESolution{group, std::move(ra), std::move(ro)};
}

bool is_cat_ybe(const TwoGroupPtr& group, const std::vector<int>& arrow_table,
                const std::vector<int>& object_table) {
  try {
    verify_cat_ybe(group, arrow_table, object_table);
    return true;
  } catch (const CheckError&) {
    return false;
  }
}

CatYBESolution rb_solution(const RRBTwoGroupOp& op) {
  DescendantTwoGroup desc = descendant_two_group(op);
  const FiniteGroup& da = *desc.group->arrow_group();
  const FiniteGroup& dobj = *desc.group->object_group();
  const TwoGroupPtr& q = op.action.target();
  const int n = q->arrows(), m = q->objects();
  std::vector<int> at((std::size_t)n * n), ot((std::size_t)m * m);
  for (int x = 0; x < n; ++x)
    for (int j = 0; j < n; ++j) {
      const int u = op.action.apply(op.b[x], j);
      at[x * n + j] = u * n + da.mul(da.mul(da.inv(u), x), j);
    }
  for (int y = 0; y < m; ++y)
    for (int k = 0; k < m; ++k) {
      const int u = op.action.apply0(op.b0[y], k);
      ot[y * m + k] = u * m + dobj.mul(dobj.mul(dobj.inv(u), y), k);
    }
  try {
    return verify_cat_ybe(q, std::move(at), std::move(ot));
  } catch (const CheckError& e) {
    throw CheckError(Code::InvariantViolation,
                     std::string("solution built from a verified operator "
                                 "failed verification: ") +
                         e.what());
  }
}

}  // namespace rbcat
