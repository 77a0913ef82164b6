#pragma once

#include "rquant/formal_diffeo.hpp"
#include "rquant/vector_field.hpp"

namespace rquant {

/// e^{hbar v}: x_j -> sum_{m<=N} hbar^m v^m(x_j) / m!.
FormalDiffeo vf_exp(const PolyVectorField& v, int order);

/// e^{hbar B} for an hbar-series B = sum_m hbar^m b_m of vector fields.
FormalDiffeo vf_exp(const VfSeries& b, int order);

/// Inverse of vf_exp: the series b_0 .. b_{N-1} with vf_exp(b, N) = phi,
/// solved order by order.
VfSeries vf_log(const FormalDiffeo& phi);

}  // namespace rquant
