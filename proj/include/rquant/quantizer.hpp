#pragma once

#include <vector>

#include "rquant/classical_ybe.hpp"
#include "rquant/formal_diffeo.hpp"
#include "rquant/lie_cocycle.hpp"

namespace rquant {

/// e^{hbar b} in the formal group of g+, stored through b in g+[[hbar]]:
/// log[i] is the coefficient series of basis element a_i. Coefficients may be
/// polynomials in parameters (e.g. the point x). A log of order N determines
/// e^{hbar b} modulo hbar^{N+2}.
struct GroupElement {
  std::vector<HSeries> log;
  int order() const { return log.empty() ? 0 : log.front().order(); }
  bool operator==(const GroupElement& o) const = default;
};

/// Element of V*[[hbar]] in the dual basis w_1^*..w_k^*.
struct DualVector {
  std::vector<HSeries> comps;
  bool operator==(const DualVector& o) const = default;
};

GroupElement identity_element(std::size_t dim, int order);

/// Group product, realised as composition of the flows on X (right action,
/// so the point maps compose in reverse) and read back with vf_log.
/// Equivalent to the truncated Campbell-Hausdorff product.
GroupElement group_mul(const VectorFieldAlgebra& gplus, const GroupElement& g1, const GroupElement& g2);

/// The hbar-series matrix of b* acting on V*, sum_i b_i * action_on_vdual[i].
std::vector<std::vector<HSeries>> dual_action_matrix(const LieCocycleData& data, const GroupElement& b);

/// g * xi = exp(hbar b*) xi.
DualVector act(const LieCocycleData& data, const GroupElement& g, const DualVector& xi);

/// Pi(e^{hbar b}) = sum_{m>=1} hbar^{m-1} (b*)^{m-1} pi(b) / m!.
DualVector pi_forward(const LieCocycleData& data, const GroupElement& b);

/// The unique b with pi_forward(b) = xi, solved order by order through phi.
GroupElement pi_inverse(const LieCocycleData& data, const DualVector& xi);

/// Restriction of point evaluation to V: component l is w_l at the point,
/// written in the coordinates of the given slot of X^2.
DualVector eval_dual(const LieCocycleData& data, int slot, int order);

/// The map of X^2 that sends the `acted_slot` point u to p o u, where p is
/// the `param_slot` point, and fixes the parameter slot.
FormalDiffeo circ_action(const LieCocycleData& data, int param_slot, int acted_slot, int order);

/// x o y: images of the second-slot coordinates (x = slot 1, y = slot 2).
std::vector<HSeries> circ(const LieCocycleData& data, int order);

/// z with y o z = x (x = slot 1, y = slot 2), one series per coordinate.
std::vector<HSeries> circ_left_inverse(const LieCocycleData& data, int order);

struct QuantizeOptions {
  /// Re-check the classical limit, QYBE and unitarity before returning.
  bool verify = true;
};

struct Quantization {
  LieCocycleData data;
  FormalDiffeo R;
  /// Filled when QuantizeOptions::verify is set.
  QuantumResidual residual;
  bool classical_limit_matches = false;
};

/// Runs the full construction: extract g+ and pi, build x o y and assemble
/// (RF)(x,y) = F(z, z o y) with y o z = x. With verification on, a failure of
/// any defining property raises InternalError.
Quantization quantize_full(const PolyVectorField& r, int order, QuantizeOptions opts = {});

FormalDiffeo quantize(const PolyVectorField& r, int order, QuantizeOptions opts = {});

}  // namespace rquant
