#include "rquant/families.hpp"

#include "rquant/errors.hpp"
#include "rquant/flows.hpp"

namespace rquant {

namespace {

std::vector<HSeries> as_series(const std::vector<MPoly>& v, int order) {
  std::vector<HSeries> out;
  for (const auto& p : v) out.push_back(HSeries::constant(p, order));
  return out;
}

}  // namespace

AlgebraSpec::AlgebraSpec(std::vector<std::string> coords, std::vector<std::vector<std::vector<Rat>>> mult,
                         std::vector<Rat> c)
    : coords_(std::move(coords)), mult_(std::move(mult)), c_(std::move(c)) {
  const std::size_t d = coords_.size();
  if (d == 0) throw DomainError("algebra must have positive dimension");
  if (c_.size() != d) throw DomainError("element c has wrong number of coordinates");
  if (mult_.size() != d) throw DomainError("structure constants have wrong shape");
  for (const auto& row : mult_) {
    if (row.size() != d) throw DomainError("structure constants have wrong shape");
    for (const auto& v : row)
      if (v.size() != d) throw DomainError("structure constants have wrong shape");
  }
  // (e_i e_j) e_k = e_i (e_j e_k)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t t = 0; t < d; ++t) {
          Rat lhs = 0, rhs = 0;
          for (std::size_t s = 0; s < d; ++s) {
            lhs += mult_[i][j][s] * mult_[s][k][t];
            rhs += mult_[j][k][s] * mult_[i][s][t];
          }
          if (lhs != rhs) {
            throw DomainError("algebra product is not associative at (e" + std::to_string(i + 1) + " e" +
                              std::to_string(j + 1) + ") e" + std::to_string(k + 1));
          }
        }
}

AlgebraSpec AlgebraSpec::scalars(const Rat& c, const std::string& coord) {
  return AlgebraSpec({coord}, {{{Rat(1)}}}, {c});
}

AlgebraSpec AlgebraSpec::matrices2(const std::vector<Rat>& c) {
  // Basis index 2*(row) + col for e_{row+1, col+1}.
  std::vector<std::vector<std::vector<Rat>>> m(4, std::vector<std::vector<Rat>>(4, std::vector<Rat>(4, Rat(0))));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int b2 = 0; b2 < 2; ++b2)
        for (int e = 0; e < 2; ++e) {
          if (b != b2) continue;
          m[static_cast<std::size_t>(2 * a + b)][static_cast<std::size_t>(2 * b2 + e)]
           [static_cast<std::size_t>(2 * a + e)] = 1;
        }
  return AlgebraSpec({"x11", "x12", "x21", "x22"}, std::move(m), c);
}

std::vector<MPoly> AlgebraSpec::multiply(const std::vector<MPoly>& a, const std::vector<MPoly>& b) const {
  const std::size_t d = dim();
  std::vector<MPoly> out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const MPoly ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k)
        if (mult_[i][j][k] != 0) out[k] += ab * mult_[i][j][k];
    }
  }
  return out;
}

std::vector<HSeries> AlgebraSpec::multiply(const std::vector<HSeries>& a, const std::vector<HSeries>& b) const {
  const std::size_t d = dim();
  const int n = a.front().order();
  std::vector<HSeries> out(d, HSeries(n));
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j].is_zero()) continue;
      const HSeries ab = a[i] * b[j];
      for (std::size_t k = 0; k < d; ++k)
        if (mult_[i][j][k] != 0) out[k] += ab * mult_[i][j][k];
    }
  }
  return out;
}

std::vector<MPoly> AlgebraSpec::c_poly() const {
  std::vector<MPoly> out;
  for (const auto& q : c_) out.emplace_back(q);
  return out;
}

std::vector<MPoly> AlgebraSpec::point(const Space& product, int slot) const {
  std::vector<MPoly> out;
  for (std::size_t j = 0; j < dim(); ++j) out.push_back(MPoly::variable(product.coord(slot, j)));
  return out;
}

PolyVectorField permutation_r(const PolyVectorField& v) {
  if (v.space().slots() != 1) throw MismatchError("permutation_r expects a field on X");
  const Space X2 = v.space().power(2);
  return vf_relocate(v, X2, {1}) - vf_relocate(v, X2, {2});
}

FormalDiffeo permutation_R(const PolyVectorField& v, int order) {
  if (v.space().slots() != 1) throw MismatchError("permutation_R expects a field on X");
  const Space X2 = v.space().power(2);
  const auto g = vf_exp(v, order);
  const auto g1 = fd_relocate(g, X2, {1});
  const auto ginv2 = fd_relocate(fd_inverse(g), X2, {2});
  const std::size_t d = v.space().dim();
  std::vector<HSeries> imgs(g1.images().begin(), g1.images().begin() + static_cast<long>(d));
  imgs.insert(imgs.end(), ginv2.images().begin() + static_cast<long>(d), ginv2.images().end());
  return FormalDiffeo(X2, order, std::move(imgs));
}

PolyVectorField algebra_r(const AlgebraSpec& A) {
  const Space X2 = A.space().power(2);
  const auto x = A.point(X2, 1);
  const auto y = A.point(X2, 2);
  const auto c = A.c_poly();
  const auto xcy = A.multiply(A.multiply(x, c), y);
  const auto ycx = A.multiply(A.multiply(y, c), x);
  std::vector<MPoly> comps = xcy;
  for (const auto& p : ycx) comps.push_back(-p);
  return PolyVectorField(X2, std::move(comps));
}

FormalDiffeo algebra_R(const AlgebraSpec& A, int order) {
  const Space X2 = A.space().power(2);
  const auto x = as_series(A.point(X2, 1), order);
  const auto y = as_series(A.point(X2, 2), order);
  const auto c = as_series(A.c_poly(), order);
  const auto h = HSeries::hbar_power(1, order);

  // x(1 + hbar c y) = x + hbar x c y
  auto first = A.multiply(A.multiply(x, c), y);
  for (std::size_t k = 0; k < first.size(); ++k) first[k] = x[k] + first[k] * h;

  // y (1 + w)^{-1} = sum_k (-1)^k y w^k with w = hbar c x + hbar^2 c x c y.
  const auto cx = A.multiply(c, x);
  const auto cxcy = A.multiply(cx, A.multiply(c, y));
  std::vector<HSeries> w(A.dim(), HSeries(order));
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = cx[k].shifted(1) + cxcy[k].shifted(2);
  auto term = y;
  auto second = y;
  for (int k = 1; k <= order; ++k) {
    term = A.multiply(term, w);
    for (auto& t : term) t = -t;
    for (std::size_t j = 0; j < second.size(); ++j) second[j] += term[j];
  }
  first.insert(first.end(), second.begin(), second.end());
  return FormalDiffeo(X2, order, std::move(first));
}

PolyVectorField line_r(int n, const Rat& c) {
  if (n < 1) throw DomainError("line_r needs n >= 1");
  const Space X2 = Space({"x"}, 2);
  const MPoly x = MPoly::variable(X2.coord(1, 0));
  const MPoly y = MPoly::variable(X2.coord(2, 0));
  MPoly xn = 1, yn = 1;
  for (int i = 0; i < n; ++i) {
    xn = xn * x;
    yn = yn * y;
  }
  return PolyVectorField(X2, {x * yn * c, -(y * xn * c)});
}

FormalDiffeo line_R(int n, int order, const Rat& c) {
  if (n < 1) throw DomainError("line_R needs n >= 1");
  const Space X2 = Space({"x"}, 2);
  const MPoly x = MPoly::variable(X2.coord(1, 0));
  const MPoly y = MPoly::variable(X2.coord(2, 0));
  MPoly xn = 1, yn = 1;
  for (int i = 0; i < n; ++i) {
    xn = xn * x;
    yn = yn * y;
  }
  const Rat nn(n);
  const auto one = HSeries::constant(MPoly(1), order);
  const auto first_base = one + HSeries::constant(yn * (nn * c), order).shifted(1);
  const auto second_base = one + HSeries::constant(xn * (nn * c), order).shifted(1) +
                           HSeries::constant(xn * yn * (nn * nn * c * c), order).shifted(2);
  const auto first = series_pow_rational(first_base, Rat(1, n)) * x;
  const auto second = series_pow_rational(second_base, Rat(-1, n)) * y;
  return FormalDiffeo(X2, order, {first, second});
}

bool classical_intertwining_with_scale(int n, const Rat& s) {
  const auto rn = line_r(n);
  const auto r1 = line_r(1);
  const Space& X2 = rn.space();
  SeriesMap mn;
  for (const auto& coord : X2.coords()) {
    MPoly p = 1;
    for (int i = 0; i < n; ++i) p = p * MPoly::variable(coord);
    mn.emplace(coord, HSeries::constant(p, 0));
  }
  // Both sides are derivations along m_n, so generators and one mixed
  // monomial suffice.
  const MPoly u = MPoly::variable(X2.coord(1, 0));
  const MPoly v = MPoly::variable(X2.coord(2, 0));
  for (const MPoly& F : {u, v, u * u * v}) {
    const MPoly lhs = rn.apply(poly_substitute(F, mn, 0)[0]);
    const MPoly rhs = poly_substitute(r1.apply(F) * s, mn, 0)[0];
    if (!(lhs == rhs)) return false;
  }
  return true;
}

IntertwiningReport check_monomial_intertwining(int n, int order) {
  IntertwiningReport rep{classical_intertwining_with_scale(n, Rat(n)), true};
  const auto R1 = algebra_R(AlgebraSpec::scalars(1), order);
  const auto Rn = line_R(n, order);
  SeriesMap mn;
  for (const auto& coord : R1.space().coords()) {
    MPoly p = 1;
    for (int i = 0; i < n; ++i) p = p * MPoly::variable(coord);
    mn.emplace(coord, HSeries::constant(p, order));
  }
  for (std::size_t j = 0; j < R1.space().dim(); ++j) {
    const HSeries lhs = series_substitute(R1.image(j).rescaled(Rat(n)), mn);
    const HSeries rhs = series_pow(Rn.image(j), static_cast<unsigned>(n));
    if (!(lhs == rhs)) rep.quantum = false;
  }
  return rep;
}

}  // namespace rquant
