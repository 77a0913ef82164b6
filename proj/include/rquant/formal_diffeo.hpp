#pragma once

#include <map>
#include <string>
#include <vector>

#include "rquant/hseries.hpp"
#include "rquant/vector_field.hpp"

namespace rquant {

/// Formal diffeomorphism of a space, stored as a point map: each coordinate
/// x_j goes to a series x_j + O(hbar). The induced algebra homomorphism on
/// Q[space] is F -> poly_substitute(F, images). Coefficients may involve
/// variables outside the space; those are fixed parameters.
class FormalDiffeo {
 public:
  FormalDiffeo() = default;
  /// Throws DomainError unless every image has order `order` and hbar^0
  /// part equal to its coordinate.
  FormalDiffeo(Space space, int order, std::vector<HSeries> images);

  static FormalDiffeo identity(const Space& space, int order);

  const Space& space() const { return space_; }
  int order() const { return order_; }
  const std::vector<HSeries>& images() const { return images_; }
  const HSeries& image(std::size_t j) const { return images_.at(j); }
  const HSeries& image(const std::string& coord) const;

  /// coordinate name -> image, ready for poly_substitute.
  SeriesMap as_map() const;
  /// The algebra homomorphism F -> F(images).
  HSeries pullback(const MPoly& F) const;

  FormalDiffeo truncated(int m) const;
  bool is_identity() const;
  bool operator==(const FormalDiffeo& o) const;

  std::string to_string() const;

 private:
  Space space_;
  int order_ = 0;
  std::vector<HSeries> images_;
};

/// Point map phi o psi: coordinate images of phi evaluated along psi.
/// Coordinates are processed in parallel (OpenMP).
FormalDiffeo fd_compose(const FormalDiffeo& phi, const FormalDiffeo& psi);

/// The unique psi with phi o psi = psi o phi = id mod hbar^{N+1}.
FormalDiffeo fd_inverse(const FormalDiffeo& phi);

/// R_{12}, R_{13} or R_{23} on X^3 for a map on X^2.
FormalDiffeo fd_lift(const FormalDiffeo& phi, SlotPair pair);

/// sigma o phi o sigma for the flip sigma of X^2.
FormalDiffeo fd_swap(const FormalDiffeo& phi);

/// Moves a map on X^k to X^m along a slot map; untouched slots are fixed.
FormalDiffeo fd_relocate(const FormalDiffeo& phi, const Space& target, const std::vector<int>& slot_map);

/// The hbar^1 coefficients as a vector field: R = 1 + hbar r + O(hbar^2).
/// Throws DomainError when the order is 0.
PolyVectorField classical_limit(const FormalDiffeo& R);

/// Residuals of the quantum Yang-Baxter equation and unitarity; an empty
/// map means the check was not run.
struct QuantumResidual {
  std::map<std::string, HSeries> qybe;
  std::map<std::string, HSeries> unitarity;

  bool qybe_passes() const;
  bool unitarity_passes() const;
  bool passes() const { return qybe_passes() && unitarity_passes(); }
};

/// R12 R13 R23 - R23 R13 R12, coordinatewise on X^3.
std::map<std::string, HSeries> check_qybe(const FormalDiffeo& R);
/// R o R21 - id, coordinatewise on X^2.
std::map<std::string, HSeries> check_unitarity_q(const FormalDiffeo& R);
QuantumResidual check_quantum(const FormalDiffeo& R);

namespace detail {
/// Serial reference for fd_compose, kept for tests and benchmarks.
FormalDiffeo fd_compose_serial(const FormalDiffeo& phi, const FormalDiffeo& psi);
}  // namespace detail

}  // namespace rquant
