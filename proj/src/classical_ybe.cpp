#include "rquant/classical_ybe.hpp"

#include "rquant/errors.hpp"

namespace rquant {

ClassicalResidual check_classical(const PolyVectorField& r) {
  if (r.space().slots() != 2) {
    throw MismatchError("check_classical expects a field on X^2, got " + r.space().name());
  }
  const auto r12 = vf_place(r, SlotPair::k12);
  const auto r13 = vf_place(r, SlotPair::k13);
  const auto r23 = vf_place(r, SlotPair::k23);
  auto cybe = vf_bracket(r12, r13) + vf_bracket(r12, r23) + vf_bracket(r13, r23);
  auto unitarity = r + vf_swap(r);
  return ClassicalResidual{std::move(cybe), std::move(unitarity)};
}

ClassicalVerdict is_geometric_classical_rmatrix(const PolyVectorField& r) {
  auto res = check_classical(r);
  const bool ok = res.passes();
  return ClassicalVerdict{ok, std::move(res)};
}

PolyVectorField cyclic_slot_shift(const PolyVectorField& w) {
  if (w.space().slots() != 3) throw MismatchError("cyclic_slot_shift expects a field on X^3");
  return vf_relocate(w, w.space(), {2, 3, 1});
}

}  // namespace rquant
