#include <doctest.h>

#include "random_gen.hpp"
#include "rquant/classical_ybe.hpp"
#include "rquant/errors.hpp"
#include "rquant/families.hpp"

using namespace rquant;
using rquant::testing::pow;
using rquant::testing::var;

namespace {

const Space kLine({"x"}, 1);
const Space kLine2 = kLine.power(2);

}  // namespace

TEST_SUITE("classical_ybe") {

TEST_CASE("r(1) and zero pass") {
  CHECK(check_classical(line_r(1)).passes());
  CHECK(check_classical(PolyVectorField::zero(kLine2)).passes());
  CHECK(check_classical(PolyVectorField::zero(Space({"a", "b"}, 2))).passes());
}

TEST_CASE("broken unitarity is reported with its residual") {
  const MPoly x = var("x_1"), y = var("x_2");
  const PolyVectorField r(kLine2, {x * y, x * y});
  const auto res = check_classical(r);
  CHECK_FALSE(res.passes());
  CHECK(res.unitarity == PolyVectorField(kLine2, {2 * x * y, 2 * x * y}));
}

TEST_CASE("family members are r-matrices") {
  CHECK(is_geometric_classical_rmatrix(algebra_r(AlgebraSpec::matrices2({1, 0, 0, 0}))).is_rmatrix);
  CHECK(is_geometric_classical_rmatrix(algebra_r(AlgebraSpec::matrices2({1, 2, 0, -1}))).is_rmatrix);
  CHECK(is_geometric_classical_rmatrix(permutation_r(PolyVectorField(kLine, {var("x") * var("x")}))).is_rmatrix);
  for (int n = 1; n <= 3; ++n) CHECK(check_classical(line_r(n)).passes());
}

TEST_CASE("r(2) with one sign flipped fails") {
  const MPoly x = var("x_1"), y = var("x_2");
  const PolyVectorField r(kLine2, {x * pow(y, 2), y * pow(x, 2)});
  const auto v = is_geometric_classical_rmatrix(r);
  CHECK_FALSE(v.is_rmatrix);
  // r21 = r here, so r + r21 = 2r; check one monomial by hand.
  CHECK(v.residual.unitarity.component("x_1").coeff({{"x_1", 1}, {"x_2", 2}}) == 2);
  CHECK(v.residual.unitarity.component("x_2").coeff({{"x_1", 2}, {"x_2", 1}}) == 2);
}

TEST_CASE("rejects fields not on a product") {
  CHECK_THROWS_AS(check_classical(PolyVectorField(kLine, {1})), MismatchError);
  CHECK_THROWS_AS(check_classical(PolyVectorField::zero(kLine.power(3))), MismatchError);
}

TEST_CASE("unitary fields have cyclically invariant residual") {
  const MPoly x = var("x_1"), y = var("x_2");
  // Unitary but not a solution.
  const PolyVectorField r(kLine2, {x * x * y, -(y * y * x)});
  const auto res = check_classical(r);
  REQUIRE(res.unitarity.is_zero());
  REQUIRE_FALSE(res.cybe.is_zero());
  CHECK(cyclic_slot_shift(res.cybe) == res.cybe);

  rquant::testing::Gen g(11);
  for (int i = 0; i < 10; ++i) {
    const auto v = g.field(kLine2);
    const auto u = v - vf_swap(v);
    const auto ru = check_classical(u);
    REQUIRE(ru.unitarity.is_zero());
    CHECK(cyclic_slot_shift(ru.cybe) == ru.cybe);
  }
}

}
