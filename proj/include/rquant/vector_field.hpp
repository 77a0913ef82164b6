#pragma once

#include <string>
#include <vector>

#include "rquant/hseries.hpp"
#include "rquant/space.hpp"

namespace rquant {

/// Which two slots of X^3 a two-slot object is placed on.
enum class SlotPair { k12, k13, k23 };

std::vector<int> slot_map(SlotPair pair);
std::string to_string(SlotPair pair);

/// Polynomial derivation sum_j c_j d/dx_j of Q[space] (components aligned
/// with space.coords()). Variables that are not coordinates of the space are
/// treated as constants, so components may depend polynomially on external
/// parameters.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  PolyVectorField(Space space, std::vector<MPoly> components);

  static PolyVectorField zero(const Space& space);
  /// c * d/d(coord).
  static PolyVectorField along(const Space& space, const std::string& coord, const MPoly& c);

  const Space& space() const { return space_; }
  const std::vector<MPoly>& components() const { return comps_; }
  const MPoly& component(std::size_t j) const { return comps_.at(j); }
  const MPoly& component(const std::string& coord) const;

  bool is_zero() const;

  /// v(F) = sum_j c_j dF/dx_j.
  MPoly apply(const MPoly& F) const;
  HSeries apply(const HSeries& F) const;

  PolyVectorField renamed(const Space& target, const std::map<std::string, std::string>& names) const;

  PolyVectorField operator-() const;
  PolyVectorField& operator+=(const PolyVectorField& o);
  PolyVectorField& operator-=(const PolyVectorField& o);
  PolyVectorField& operator*=(const MPoly& f);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator-(PolyVectorField a, const PolyVectorField& b) { return a -= b; }
  friend PolyVectorField operator*(const MPoly& f, PolyVectorField a) { return a *= f; }

  bool operator==(const PolyVectorField& o) const;

  /// "(x_1*x_2)*d/dx_1 + (-x_1*x_2)*d/dx_2".
  std::string to_string() const;

 private:
  Space space_;
  std::vector<MPoly> comps_;
};

/// vf_apply: v(F).
MPoly vf_apply(const PolyVectorField& v, const MPoly& F);

/// [v, w] with components v(w_i) - w(v_i).
PolyVectorField vf_bracket(const PolyVectorField& v, const PolyVectorField& w);

/// r_{12}, r_{13} or r_{23}: a field on X^2 copied onto two slots of X^3.
PolyVectorField vf_place(const PolyVectorField& r, SlotPair pair);

/// Conjugation by the flip (x, y) -> (y, x) of X^2.
PolyVectorField vf_swap(const PolyVectorField& r);

/// Moves a field on X^k to X^m along a slot map (slot s goes to slot_map[s-1]).
PolyVectorField vf_relocate(const PolyVectorField& v, const Space& target,
                            const std::vector<int>& slot_map);

/// Power series sum_m hbar^m b_m of vector fields on one space. `terms`
/// holds b_0..b_{K-1}.
struct VfSeries {
  Space space;
  std::vector<PolyVectorField> terms;

  /// B(T) = sum_m hbar^m b_m(T), truncated at T's order.
  HSeries apply(const HSeries& T) const;
  bool operator==(const VfSeries& o) const = default;
};

}  // namespace rquant
