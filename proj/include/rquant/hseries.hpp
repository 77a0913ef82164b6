#pragma once

#include <map>
#include <string>
#include <vector>

#include "rquant/mpoly.hpp"

namespace rquant {

/// Power series in hbar with polynomial coefficients, truncated at an
/// explicit order N: coefficients 0..N are stored, everything of hbar-degree
/// above N is discarded. Binary operations require equal orders.
class HSeries {
 public:
  /// The zero series of the given order.
  explicit HSeries(int order = 0);
  HSeries(int order, std::vector<MPoly> coeffs);

  /// p * hbar^0.
  static HSeries constant(const MPoly& p, int order);
  /// hbar^k (zero if k > order).
  static HSeries hbar_power(int k, int order);

  int order() const { return order_; }
  const MPoly& operator[](int m) const { return coeffs_[static_cast<std::size_t>(m)]; }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  /// Lowest m with a nonzero coefficient, or -1 for zero.
  int valuation() const;

  /// Drops orders above m (m <= order).
  HSeries truncated(int m) const;
  /// Multiplies by hbar^k, discarding what falls above the order.
  HSeries shifted(int k) const;
  /// Substitutes hbar -> s*hbar, i.e. scales coefficient m by s^m.
  HSeries rescaled(const Rat& s) const;
  HSeries renamed(const std::map<std::string, std::string>& names) const;

  HSeries operator-() const;
  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const HSeries& o);
  HSeries& operator*=(const MPoly& p);
  HSeries& operator*=(const Rat& c);

  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(const HSeries& a, const HSeries& b);
  friend HSeries operator*(HSeries a, const MPoly& p) { return a *= p; }
  friend HSeries operator*(const MPoly& p, HSeries a) { return a *= p; }
  friend HSeries operator*(HSeries a, const Rat& c) { return a *= c; }
  friend HSeries operator*(const Rat& c, HSeries a) { return a *= c; }
  friend HSeries operator*(HSeries a, long c) { return a *= Rat(c); }
  friend HSeries operator*(long c, HSeries a) { return a *= Rat(c); }

  bool operator==(const HSeries& o) const;

  std::string to_string(const std::string& hbar = "h") const;

 private:
  int order_;
  std::vector<MPoly> coeffs_;
};

/// Multiplicative inverse of a series whose hbar^0 coefficient is 1.
/// Throws DomainError otherwise.
HSeries series_inverse(const HSeries& a);

/// a^p for rational p via the binomial series sum_k C(p,k)(a-1)^k.
/// Requires the hbar^0 coefficient to be 1.
HSeries series_pow_rational(const HSeries& a, const Rat& p);

/// a^k for a nonnegative integer k by repeated squaring.
HSeries series_pow(const HSeries& a, unsigned k);

using SeriesMap = std::map<std::string, HSeries>;

/// F evaluated at the series point `images` (a homomorphism Q[vars] ->
/// Q[vars'][[hbar]]), truncated at `order`. Every variable F depends on must
/// have an image of order >= `order`; throws DomainError otherwise.
HSeries poly_substitute(const MPoly& F, const SeriesMap& images, int order);
/// Same, using the common order of the images.
HSeries poly_substitute(const MPoly& F, const SeriesMap& images);

/// Applies poly_substitute to every coefficient of F and re-sums with the
/// hbar weights: sum_m hbar^m F_m(images).
HSeries series_substitute(const HSeries& F, const SeriesMap& images);

}  // namespace rquant
