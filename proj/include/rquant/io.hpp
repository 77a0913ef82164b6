#pragma once

#include <filesystem>
#include <json.hpp>

#include "rquant/classical_ybe.hpp"
#include "rquant/families.hpp"
#include "rquant/formal_diffeo.hpp"
#include "rquant/lie_cocycle.hpp"

namespace rquant::io {

using json = nlohmann::json;

// Polynomial literal: [{"coeff": "num/den", "exps": [e_1, ..., e_n]}, ...]
// with exponents aligned to a variable list declared by the enclosing object.
json poly_to_json(const MPoly& p, const VarList& coords);
MPoly poly_from_json(const json& j, const VarList& coords);

// Space: {"base": [...], "slots": k, "coords": [...]}; "coords" is written
// for readability and validated when present.
json space_to_json(const Space& s);
Space space_from_json(const json& j);

// Vector field: {"space": ..., "components": {coord: polynomial literal}}.
json field_to_json(const PolyVectorField& v);
PolyVectorField field_from_json(const json& j);

// Formal diffeomorphism: {"space": ..., "order": N,
//   "images": {coord: [polynomial literal for hbar^0, ..., hbar^N]}}.
json diffeo_to_json(const FormalDiffeo& R);
FormalDiffeo diffeo_from_json(const json& j);

// Algebra: {"coords": [...], "mult": d x d x d array of rationals, "c": [...]}.
json algebra_to_json(const AlgebraSpec& A);
AlgebraSpec algebra_from_json(const json& j);

// Reports. Rationals are "num/den" strings throughout.
json classical_residual_to_json(const ClassicalResidual& res);
json quantum_residual_to_json(const QuantumResidual& res, const Space& space);
json lie_report_to_json(const LieCocycleData& data);

json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const json& j);

}  // namespace rquant::io
