#pragma once

#include "rquant/vector_field.hpp"

namespace rquant {

/// Left-hand sides of the classical Yang-Baxter equation (on X^3) and of
/// unitarity r + r_21 (on X^2). Both are exact; the check passes iff both
/// vanish identically.
struct ClassicalResidual {
  PolyVectorField cybe;
  PolyVectorField unitarity;

  bool passes() const { return cybe.is_zero() && unitarity.is_zero(); }
};

/// [r12,r13] + [r12,r23] + [r13,r23] and r + r21.
ClassicalResidual check_classical(const PolyVectorField& r);

struct ClassicalVerdict {
  bool is_rmatrix;
  ClassicalResidual residual;
};

ClassicalVerdict is_geometric_classical_rmatrix(const PolyVectorField& r);

/// Relabels slots of a field on X^3 by the cyclic shift 1->2->3->1.
PolyVectorField cyclic_slot_shift(const PolyVectorField& w);

}  // namespace rquant
