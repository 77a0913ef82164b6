#pragma once

#include <string>

#include "rquant/families.hpp"
#include "rquant/lie_cocycle.hpp"

namespace rquant::testing {

struct AlgebraIdentification {
  bool right_multiplications = true;  // a_i(x) = x b_i with b_i in cX
  bool commutator = true;             // [a_i, a_j] <-> b_i b_j - b_j b_i
  bool cocycle_identity = true;       // phi(eval(x)) = c x
  bool dual_action = true;            // a_i * eval(x) <-> -(c x) b_i
  std::string detail;
  bool passes() const { return right_multiplications && commutator && cocycle_identity && dual_action; }
};

/// Independent check that data extracted from algebra_r(A) is the algebra cX
/// with the commutator bracket, that pi is the identity once V* is matched
/// with cX through eval(x) <-> c x, and that the dual action is a*b = -ba.
/// `unit` is the coordinate vector of the algebra's unit.
inline AlgebraIdentification identify_algebra_data(const LieCocycleData& data, const AlgebraSpec& A,
                                                   const std::vector<Rat>& unit) {
  AlgebraIdentification out;
  const Space X = data.base;
  const std::size_t d = A.dim(), k = data.dim();
  const auto x = A.point(X, 1);

  SeriesMap at_unit;
  for (std::size_t j = 0; j < d; ++j) at_unit.emplace(X.coords()[j], HSeries::constant(MPoly(unit[j]), 0));

  std::vector<std::vector<MPoly>> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < d; ++j) b[i].push_back(poly_substitute(data.gplus_basis()[i].component(j), at_unit, 0)[0]);
    const auto xb = A.multiply(x, b[i]);
    for (std::size_t j = 0; j < d; ++j)
      if (!(xb[j] == data.gplus_basis()[i].component(j))) {
        out.right_multiplications = false;
        out.detail += "a_" + std::to_string(i + 1) + " is not right multiplication; ";
      }
  }

  const auto& c = data.structure();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto lhs = A.multiply(b[i], b[j]);
      const auto rhs = A.multiply(b[j], b[i]);
      for (std::size_t t = 0; t < d; ++t) {
        lhs[t] -= rhs[t];
        for (std::size_t m = 0; m < k; ++m) lhs[t] -= b[m][t] * c[i][j][m];
        if (!lhs[t].is_zero()) out.commutator = false;
      }
    }

  // iota(xi) = sum_{i,l} phi(i,l) xi_l b_i identifies V* with cX.
  auto iota = [&](const std::vector<MPoly>& xi) {
    std::vector<MPoly> v(d);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (data.phi(i, l) != 0)
          for (std::size_t t = 0; t < d; ++t) v[t] += xi[l] * b[i][t] * data.phi(i, l);
    return v;
  };
  std::vector<MPoly> eval;
  for (const auto& w : data.v_basis) eval.push_back(w);
  const auto cx = A.multiply(A.c_poly(), x);
  const auto ie = iota(eval);
  for (std::size_t t = 0; t < d; ++t)
    if (!(ie[t] == cx[t])) out.cocycle_identity = false;

  for (std::size_t i = 0; i < k; ++i) {
    std::vector<MPoly> acted(k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t l = 0; l < k; ++l)
        if (data.action_on_vdual[i](r, l) != 0) acted[r] += eval[l] * data.action_on_vdual[i](r, l);
    const auto lhs = iota(acted);
    const auto rhs = A.multiply(cx, b[i]);
    for (std::size_t t = 0; t < d; ++t)
      if (!(lhs[t] == -rhs[t])) out.dual_action = false;
  }
  return out;
}

}  // namespace rquant::testing
