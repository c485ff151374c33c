#include <vector>

#include "doctest.h"
#include "rbcat/errors.hpp"
#include "rbcat/fingroup.hpp"
#include "rbcat/rrb.hpp"
#include "rbcat/twogroup.hpp"
#include "rbcat/ybe.hpp"
#include "testutil.hpp"

using namespace rbcat;
using namespace rbcat::test;

namespace {

std::vector<int> flip_table(int n) {
  std::vector<int> t((std::size_t)n * (std::size_t)n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[(std::size_t)(x * n + y)] = y * n + x;
  return t;
}

}  // namespace

TEST_CASE("set-level braid solutions and their failure witnesses") {
  GroupPtr s3 = make_s3();
  const int n = 6;

  CHECK(is_set_ybe(n, flip_table(n)));

  // Conjugation solution R(x, y) = (y, y⁻¹xy).
  std::vector<int> conj(36);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      conj[(std::size_t)(x * n + y)] = y * n + s3->conj(s3->inv(y), x);
  SetYBESolution rc = verify_set_ybe(n, conj);
  CHECK(rc.first(1, 4) == 4);
  CHECK(rc.second(1, 4) == s3->conj(5, 1));

  // Identity on pairs is a (trivial) solution.
  std::vector<int> idt(36);
  for (int i = 0; i < 36; ++i) idt[(std::size_t)i] = i;
  CHECK(is_set_ybe(n, idt));

  // A bijection of pairs that is not a braid solution.
  CHECK_FALSE(is_set_ybe(2, {0, 2, 3, 1}));
  CHECK(thrown_code([&] { verify_set_ybe(2, {0, 2, 3, 1}); }) ==
        Code::BraidFailure);
  // Duplicate image breaks bijectivity before the braid scan.
  CHECK(thrown_code([&] { verify_set_ybe(2, {0, 0, 1, 3}); }) ==
        Code::NotBijective);
  // Shape errors are reported as such.
  CHECK(thrown_code([&] { verify_set_ybe(2, {0, 2, 1}); }) ==
        Code::ActionMismatch);
  CHECK(thrown_code([&] { verify_set_ybe(2, {0, 2, 1, 4}); }) ==
        Code::ActionMismatch);
}

TEST_CASE("categorical solutions respect the groupoid structure") {
  GroupPtr s3 = make_s3();
  TwoGroupPtr d = discrete_two_group(s3);

  CatYBESolution fl = verify_cat_ybe(d, flip_table(6), flip_table(6));
  CHECK(fl.arrow.first(2, 3) == 3);
  CHECK(fl.object.second(2, 3) == 2);

  // Flipping arrows over identity objects breaks compatibility with the
  // object level.
  std::vector<int> idt(36);
  for (int i = 0; i < 36; ++i) idt[(std::size_t)i] = i;
  CHECK_FALSE(is_cat_ybe(d, flip_table(6), idt));
  CHECK(thrown_code([&] { verify_cat_ybe(d, flip_table(6), idt); }) ==
        Code::FunctorialityFailure);

  // One-object carrier: the object table is forced to the single pair.
  TwoGroupPtr o = one_object_two_group(make_cyclic_group(2));
  CHECK(is_cat_ybe(o, flip_table(2), {0}));
}

TEST_CASE("the solution attached to an operator, with frozen tables") {
  GroupPtr s3 = make_s3();
  TwoGroupAction ad = adjoint_two_group_action(discrete_two_group(s3));

  // Constant-identity operator: R(q, j) = (j, j⁻¹·q·j).
  RRBTwoGroupOp opz =
      verify_rrb_two_group(ad, std::vector<int>(6, 0), std::vector<int>(6, 0));
  CatYBESolution rz = rb_solution(opz);
  for (int x = 0; x < 6; ++x)
    for (int j = 0; j < 6; ++j) {
      CHECK(rz.arrow.first(x, j) == j);
      CHECK(rz.arrow.second(x, j) == s3->conj(s3->inv(j), x));
    }

  // Inversion operator: R(q, j) = (q⁻¹·j·q, q).
  RRBTwoGroupOp opi =
      verify_rrb_two_group(ad, inverse_table(*s3), inverse_table(*s3));
  CatYBESolution ri = rb_solution(opi);
  for (int x = 0; x < 6; ++x)
    for (int j = 0; j < 6; ++j) {
      CHECK(ri.arrow.first(x, j) == s3->conj(s3->inv(x), j));
      CHECK(ri.arrow.second(x, j) == x);
    }

  // Frozen full table for the operator sending the three reflections to one
  // of them; the object table coincides on this discrete carrier.
  RRBTwoGroupOp opd = verify_rrb_two_group(ad, {0, 3, 3, 3, 0, 0},
                                           {0, 3, 3, 3, 0, 0});
  CatYBESolution rd = rb_solution(opd);
  const std::vector<int> frozen = {
      0, 6,  12, 18, 24, 30,  // x = 0
      1, 15, 8,  19, 33, 26,  // x = 1
      2, 13, 9,  20, 31, 27,  // x = 2
      3, 14, 7,  21, 32, 25,  // x = 3
      4, 10, 16, 22, 28, 34,  // x = 4
      5, 11, 17, 23, 29, 35,  // x = 5
  };
  CHECK(rd.arrow.table == frozen);
  CHECK(rd.object.table == frozen);

  // Every enumerated operator yields a verified categorical solution fixing
  // the identity pair.
  for (const auto& [b, b0] : enumerate_rrb_two_group(ad, 10000000)) {
    RRBTwoGroupOp op = verify_rrb_two_group(ad, b, b0);
    CatYBESolution r = rb_solution(op);
    CHECK(r.arrow.first(0, 0) == 0);
    CHECK(r.arrow.second(0, 0) == 0);
    CHECK(is_cat_ybe(r.group, r.arrow.table, r.object.table));
    CHECK(is_set_ybe(6, r.arrow.table));
  }
}
