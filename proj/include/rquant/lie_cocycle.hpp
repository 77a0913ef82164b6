#pragma once

#include <optional>
#include <vector>

#include "rquant/linalg.hpp"
#include "rquant/vector_field.hpp"

namespace rquant {

/// Coordinate of a sparse vector in a space of polynomial vector fields (or
/// polynomials, with comp = 0): component index plus coordinate monomial.
struct SpanKey {
  std::size_t comp;
  Exponents exps;
  bool operator<(const SpanKey& o) const;
  bool operator==(const SpanKey& o) const = default;
};

using SparseVec = std::map<SpanKey, Rat>;
/// Sparse vector whose entries are polynomials in external parameters.
using ParamVec = std::map<SpanKey, MPoly>;

/// Subspace spanned by finitely many sparse rational vectors, kept as a
/// reduced row echelon basis. Columns are ordered by descending graded-lex
/// monomial, then component, so each basis vector has a distinct leading
/// term.
class LinearSpan {
 public:
  LinearSpan() = default;
  explicit LinearSpan(const std::vector<SparseVec>& spanning);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVec>& basis() const { return basis_; }
  const std::vector<SpanKey>& pivots() const { return pivots_; }

  /// Coordinates of v in the basis, or nullopt when v is outside the span.
  std::optional<std::vector<MPoly>> coordinates(const ParamVec& v) const;

 private:
  std::vector<SparseVec> basis_;
  std::vector<SpanKey> pivots_;
};

/// Splits a polynomial into coordinate monomials (over `coords`) with
/// coefficients that are polynomials in the remaining variables.
std::map<Exponents, MPoly> split_by_coords(const MPoly& p, const VarList& coords);

ParamVec to_param_vec(const PolyVectorField& v);
ParamVec to_param_vec(const MPoly& p, const VarList& coords);

/// Finite-dimensional Lie algebra of vector fields on X, given by a basis.
class VectorFieldAlgebra {
 public:
  VectorFieldAlgebra() = default;
  /// Row-reduces the spanning set to a basis and computes structure
  /// constants. Throws ExtractionError when brackets leave the span.
  VectorFieldAlgebra(const Space& space, const std::vector<PolyVectorField>& spanning);

  const Space& space() const { return space_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<PolyVectorField>& basis() const { return basis_; }
  /// structure()[i][j][m]: [a_i, a_j] = sum_m c^m_ij a_m.
  const std::vector<std::vector<std::vector<Rat>>>& structure() const { return structure_; }

  /// Coordinates of v in the basis (entries may depend on parameters).
  std::optional<std::vector<MPoly>> coordinates(const PolyVectorField& v) const;
  /// sum_i coeffs[i] * a_i, optionally moved into a slot of a product space.
  PolyVectorField combine(const std::vector<MPoly>& coeffs) const;
  /// Bracket of two coordinate vectors via the structure constants.
  std::vector<MPoly> bracket(const std::vector<MPoly>& a, const std::vector<MPoly>& b) const;

 private:
  Space space_;
  std::vector<PolyVectorField> basis_;
  LinearSpan span_;
  std::vector<std::vector<std::vector<Rat>>> structure_;
};

/// The Lie algebra g+, its module V = g-, and the bijective 1-cocycle
/// pi: g+ -> V* sliced out of a classical r-matrix.
///
/// Conventions: a.w = vf_apply(a, w) for a in g+, w in V; the dual action is
/// (a*f)(w) = -f(a.w), so action_on_vdual[i] is the negative transpose of
/// the matrix of a_i on V. phi has column l equal to the g+-coordinates of
/// phi_r(w_l^*); cocycle = phi^{-1} has column i equal to pi(a_i) in the dual
/// basis w^*.
struct LieCocycleData {
  Space base;
  VectorFieldAlgebra gplus;
  std::vector<MPoly> v_basis;
  LinearSpan v_span;
  std::vector<RatMatrix> action_on_vdual;
  RatMatrix cocycle;
  RatMatrix phi;

  std::size_t dim() const { return gplus.dim(); }
  const std::vector<PolyVectorField>& gplus_basis() const { return gplus.basis(); }
  const std::vector<std::vector<std::vector<Rat>>>& structure() const { return gplus.structure(); }
  /// Coordinates of a function in the basis of V.
  std::optional<std::vector<MPoly>> v_coordinates(const MPoly& w) const;
};

/// Extracts g+, V and pi from r. r must pass check_classical; failures to
/// close, to act, or to be bijective raise ExtractionError.
LieCocycleData extract(const PolyVectorField& r);

/// Rebuilds r on X^2 from the bases and phi:
/// sum phi_il (a_i(x) w_l(y) - w_l(x) a_i(y)).
PolyVectorField reconstruct(const LieCocycleData& data);

struct Lemma1Report {
  bool passes;
  /// (i, j, pi([a_i,a_j]) - a_i*pi(a_j) + a_j*pi(a_i)) for every i < j.
  struct Entry {
    std::size_t i;
    std::size_t j;
    std::vector<Rat> residual;
  };
  std::vector<Entry> entries;
};

Lemma1Report verify_lemma1(const LieCocycleData& data);

}  // namespace rquant
