#pragma once

#include <string>
#include <vector>

#include "rquant/formal_diffeo.hpp"
#include "rquant/vector_field.hpp"

namespace rquant {

/// Finite-dimensional associative algebra with basis e_1..e_d, product
/// e_i e_j = sum_k mult[i][j][k] e_k, and a distinguished element c.
/// Construction throws DomainError unless the product is associative.
class AlgebraSpec {
 public:
  AlgebraSpec(std::vector<std::string> coords, std::vector<std::vector<std::vector<Rat>>> mult,
              std::vector<Rat> c);

  /// Q itself with c given.
  static AlgebraSpec scalars(const Rat& c, const std::string& coord = "x");
  /// 2x2 matrices, basis e11, e12, e21, e22, coordinates x11..x22.
  static AlgebraSpec matrices2(const std::vector<Rat>& c);

  std::size_t dim() const { return coords_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }
  const std::vector<std::vector<std::vector<Rat>>>& mult() const { return mult_; }
  const std::vector<Rat>& c() const { return c_; }
  Space space() const { return Space(coords_, 1); }

  /// Product of two elements with polynomial coordinates.
  std::vector<MPoly> multiply(const std::vector<MPoly>& a, const std::vector<MPoly>& b) const;
  std::vector<HSeries> multiply(const std::vector<HSeries>& a, const std::vector<HSeries>& b) const;
  std::vector<MPoly> c_poly() const;
  /// The point of the given slot of X^k as an algebra element.
  std::vector<MPoly> point(const Space& product, int slot) const;

 private:
  std::vector<std::string> coords_;
  std::vector<std::vector<std::vector<Rat>>> mult_;
  std::vector<Rat> c_;
};

/// r^v(x, y) = (v(x), -v(y)).
PolyVectorField permutation_r(const PolyVectorField& v);
/// R^g(x, y) = (g(x), g^{-1}(y)) with g = e^{hbar v}.
FormalDiffeo permutation_R(const PolyVectorField& v, int order);

/// r_c(x, y) = (x c y, -y c x).
PolyVectorField algebra_r(const AlgebraSpec& A);
/// R_c(x, y) = (x(1 + hbar c y), y(1 + hbar c x + hbar^2 c x c y)^{-1}).
FormalDiffeo algebra_R(const AlgebraSpec& A, int order);

/// c * (x y^n d/dx - y x^n d/dy) on the line.
PolyVectorField line_r(int n, const Rat& c = 1);
/// (x(1 + n hbar' y^n)^{1/n}, y(1 + n hbar' x^n + n^2 hbar'^2 x^n y^n)^{-1/n})
/// with hbar' = c hbar.
FormalDiffeo line_R(int n, int order, const Rat& c = 1);

struct IntertwiningReport {
  bool classical;
  bool quantum;
  bool passes() const { return classical && quantum; }
};

/// Checks the substitution m_n: u -> x^n, v -> y^n against the n = 1 case:
/// classically line_r(n) o m_n = m_n o (n r(1)); quantum-mechanically m_n
/// applied to R(1) with hbar -> n hbar gives the n-th powers of R(n).
IntertwiningReport check_monomial_intertwining(int n, int order);

/// Same classical identity with an arbitrary scale s in place of n
/// (s = n holds, other scales fail).
bool classical_intertwining_with_scale(int n, const Rat& s);

}  // namespace rquant
