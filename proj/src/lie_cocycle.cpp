#include "rquant/lie_cocycle.hpp"

#include <algorithm>
#include <set>

#include "rquant/classical_ybe.hpp"
#include "rquant/errors.hpp"

namespace rquant {

namespace {

MPoly::Terms single_term(const Exponents& e, const Rat& c) {
  MPoly::Terms t;
  t.emplace(e, c);
  return t;
}

SparseVec constant_part(const ParamVec& v, const std::string& what) {
  SparseVec out;
  for (const auto& [k, c] : v) {
    if (!c.is_constant()) throw DomainError(what + ": coefficients must be rational constants");
    if (c.constant_term() != 0) out.emplace(k, c.constant_term());
  }
  return out;
}

PolyVectorField field_from_sparse(const Space& space, const SparseVec& v) {
  std::vector<MPoly::Terms> comps(space.dim());
  for (const auto& [k, c] : v) comps.at(k.comp).emplace(k.exps, c);
  std::vector<MPoly> polys;
  auto vars = std::make_shared<const VarList>(space.coords());
  for (auto& t : comps) polys.emplace_back(vars, std::move(t));
  return PolyVectorField(space, std::move(polys));
}

MPoly poly_from_sparse(const VarList& coords, const SparseVec& v) {
  MPoly::Terms t;
  for (const auto& [k, c] : v) t.emplace(k.exps, c);
  return MPoly(coords, std::move(t));
}

std::map<std::string, std::string> slot_to_base(const Space& product, int slot) {
  std::map<std::string, std::string> m;
  for (std::size_t j = 0; j < product.base_dim(); ++j) m[product.coord(slot, j)] = product.base()[j];
  return m;
}

std::vector<Rat> to_rats(const std::vector<MPoly>& v, const std::string& what) {
  std::vector<Rat> out;
  for (const auto& p : v) {
    if (!p.is_constant()) throw InternalError(what + ": expected constant coordinates");
    out.push_back(p.constant_term());
  }
  return out;
}

}  // namespace

bool SpanKey::operator<(const SpanKey& o) const {
  if (exps != o.exps) return GrlexLess{}(o.exps, exps);
  return comp < o.comp;
}

LinearSpan::LinearSpan(const std::vector<SparseVec>& spanning) {
  std::set<SpanKey> keys;
  for (const auto& v : spanning)
    for (const auto& [k, c] : v) keys.insert(k);
  const std::vector<SpanKey> cols(keys.begin(), keys.end());
  if (cols.empty()) return;
  std::map<SpanKey, std::size_t> index;
  for (std::size_t j = 0; j < cols.size(); ++j) index.emplace(cols[j], j);

  RatMatrix m(spanning.size(), cols.size());
  for (std::size_t i = 0; i < spanning.size(); ++i)
    for (const auto& [k, c] : spanning[i]) m(i, index.at(k)) = c;
  const auto piv = rref(m);
  for (std::size_t i = 0; i < piv.size(); ++i) {
    SparseVec row;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (m(i, j) != 0) row.emplace(cols[j], m(i, j));
    }
    basis_.push_back(std::move(row));
    pivots_.push_back(cols[piv[i]]);
  }
}

std::optional<std::vector<MPoly>> LinearSpan::coordinates(const ParamVec& v) const {
  std::vector<MPoly> c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    auto it = v.find(pivots_[i]);
    if (it != v.end()) c[i] = it->second;
  }
  ParamVec rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (const auto& [k, b] : basis_[i]) rest[k] -= c[i] * b;
  }
  for (const auto& [k, r] : rest) {
    if (!r.is_zero()) return std::nullopt;
  }
  return c;
}

std::map<Exponents, MPoly> split_by_coords(const MPoly& p, const VarList& coords) {
  const auto& vars = p.vars();
  std::vector<std::size_t> pos(vars.size(), coords.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = std::find(coords.begin(), coords.end(), vars[i]);
    if (it != coords.end()) pos[i] = static_cast<std::size_t>(it - coords.begin());
  }
  std::map<Exponents, MPoly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents ce(coords.size(), 0);
    Exponents pe = e;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (pos[i] == coords.size()) continue;
      ce[pos[i]] = e[i];
      pe[i] = 0;
    }
    out[std::move(ce)] += MPoly(p.vars_ptr(), single_term(pe, c));
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

ParamVec to_param_vec(const PolyVectorField& v) {
  ParamVec out;
  for (std::size_t j = 0; j < v.space().dim(); ++j) {
    for (auto& [e, c] : split_by_coords(v.component(j), v.space().coords())) {
      out.emplace(SpanKey{j, e}, std::move(c));
    }
  }
  return out;
}

ParamVec to_param_vec(const MPoly& p, const VarList& coords) {
  ParamVec out;
  for (auto& [e, c] : split_by_coords(p, coords)) out.emplace(SpanKey{0, e}, std::move(c));
  return out;
}

VectorFieldAlgebra::VectorFieldAlgebra(const Space& space, const std::vector<PolyVectorField>& spanning)
    : space_(space) {
  std::vector<SparseVec> rows;
  for (const auto& v : spanning) {
    if (!(v.space() == space)) throw MismatchError("spanning field lives on a different space");
    rows.push_back(constant_part(to_param_vec(v), "Lie algebra spanning set"));
  }
  span_ = LinearSpan(rows);
  for (const auto& b : span_.basis()) basis_.push_back(field_from_sparse(space_, b));

  const std::size_t k = basis_.size();
  structure_.assign(k, std::vector<std::vector<Rat>>(k, std::vector<Rat>(k, Rat(0))));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const auto br = vf_bracket(basis_[i], basis_[j]);
      auto c = coordinates(br);
      if (!c) {
        throw ExtractionError("g+ is not closed under the bracket: [a" + std::to_string(i) + ", a" +
                              std::to_string(j) + "] = " + br.to_string() + " lies outside the span");
      }
      const auto q = to_rats(*c, "structure constants");
      for (std::size_t m = 0; m < k; ++m) {
        structure_[i][j][m] = q[m];
        structure_[j][i][m] = -q[m];
      }
    }
  }
}

std::optional<std::vector<MPoly>> VectorFieldAlgebra::coordinates(const PolyVectorField& v) const {
  if (!(v.space() == space_)) throw MismatchError("coordinates: field lives on a different space");
  return span_.coordinates(to_param_vec(v));
}

PolyVectorField VectorFieldAlgebra::combine(const std::vector<MPoly>& coeffs) const {
  if (coeffs.size() != basis_.size()) throw MismatchError("combine: coefficient vector has wrong length");
  auto out = PolyVectorField::zero(space_);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) out += coeffs[i] * basis_[i];
  }
  return out;
}

std::vector<MPoly> VectorFieldAlgebra::bracket(const std::vector<MPoly>& a, const std::vector<MPoly>& b) const {
  const std::size_t k = basis_.size();
  std::vector<MPoly> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || b[j].is_zero()) continue;
      const MPoly ab = a[i] * b[j];
      for (std::size_t m = 0; m < k; ++m) {
        if (structure_[i][j][m] != 0) out[m] += ab * structure_[i][j][m];
      }
    }
  }
  return out;
}

std::optional<std::vector<MPoly>> LieCocycleData::v_coordinates(const MPoly& w) const {
  return v_span.coordinates(to_param_vec(w, base.coords()));
}

LieCocycleData extract(const PolyVectorField& r) {
  const Space& X2 = r.space();
  if (X2.slots() != 2) throw MismatchError("extract expects a field on X^2, got " + X2.name());
  const auto verdict = is_geometric_classical_rmatrix(r);
  if (!verdict.is_rmatrix) {
    throw ExtractionError(
        "input is not a geometric classical r-matrix (" +
        std::string(verdict.residual.unitarity.is_zero() ? "CYBE residual " + verdict.residual.cybe.to_string()
                                                         : "unitarity residual " +
                                                               verdict.residual.unitarity.to_string()) +
        ")");
  }

  LieCocycleData data;
  data.base = X2.base_space();
  const Space& X = data.base;
  const std::size_t d = X.base_dim();
  VarList xs, ys;
  for (std::size_t j = 0; j < d; ++j) {
    xs.push_back(X2.coord(1, j));
    ys.push_back(X2.coord(2, j));
  }
  const auto to_base_x = slot_to_base(X2, 1);
  const auto to_base_y = slot_to_base(X2, 2);

  // g+: first-slot components sliced along monomials of the second slot.
  std::map<Exponents, SparseVec> gplus_rows;
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [ye, coeff] : split_by_coords(r.component(j), ys)) {
      for (const auto& [xe, c] : split_by_coords(coeff.renamed(to_base_x), X.coords())) {
        if (!c.is_constant()) throw ExtractionError("r has coefficients outside Q[X x X]");
        gplus_rows[ye][SpanKey{j, xe}] += c.constant_term();
      }
    }
  }
  std::vector<PolyVectorField> gplus_spanning;
  for (const auto& [ye, row] : gplus_rows) gplus_spanning.push_back(field_from_sparse(X, row));
  data.gplus = VectorFieldAlgebra(X, gplus_spanning);

  // V: functions of the first slot multiplying the second-slot components.
  std::map<std::pair<std::size_t, Exponents>, SparseVec> v_rows;
  for (std::size_t j = 0; j < d; ++j) {
    for (const auto& [xe, coeff] : split_by_coords(r.component(d + j), xs)) {
      for (const auto& [ye, c] : split_by_coords(coeff, ys)) {
        if (!c.is_constant()) throw ExtractionError("r has coefficients outside Q[X x X]");
        v_rows[{j, ye}][SpanKey{0, xe}] += c.constant_term();
      }
    }
  }
  std::vector<SparseVec> v_spanning;
  for (auto& [key, row] : v_rows) {
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    v_spanning.push_back(row);
  }
  data.v_span = LinearSpan(v_spanning);
  for (const auto& b : data.v_span.basis()) data.v_basis.push_back(poly_from_sparse(X.coords(), b));

  const std::size_t k = data.gplus.dim();
  if (data.v_basis.size() != k) {
    throw ExtractionError("cocycle not bijective: dim g+ = " + std::to_string(k) +
                          " but dim V = " + std::to_string(data.v_basis.size()));
  }

  // Action of g+ on V and the contragredient action on V*.
  for (std::size_t i = 0; i < k; ++i) {
    RatMatrix act(k, k);
    for (std::size_t l = 0; l < k; ++l) {
      const MPoly img = vf_apply(data.gplus_basis()[i], data.v_basis[l]);
      const auto c = data.v_coordinates(img);
      if (!c) {
        throw ExtractionError("V is not a g+-module: a" + std::to_string(i) + " . w" + std::to_string(l) +
                              " = " + img.to_string() + " lies outside V");
      }
      const auto q = to_rats(*c, "V action");
      for (std::size_t m = 0; m < k; ++m) act(m, l) = q[m];
    }
    data.action_on_vdual.push_back(-act.transposed());
  }

  // phi_r: r_first = sum_m a'_m (x) y^m = sum_{i,l} phi_il a_i (x) w_l(y).
  std::vector<MPoly> second_factor(k);
  for (const auto& [ye, row] : gplus_rows) {
    const auto c = data.gplus.coordinates(field_from_sparse(X, row));
    if (!c) throw InternalError("g+ spanning vector outside its own span");
    const MPoly ymono = MPoly::monomial(X.coords(), ye);
    for (std::size_t i = 0; i < k; ++i) second_factor[i] += (*c)[i] * ymono;
  }
  data.phi = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto c = data.v_coordinates(second_factor[i]);
    if (!c) {
      throw ExtractionError("second-slot function " + second_factor[i].to_string() +
                            " paired with a" + std::to_string(i) + " lies outside V");
    }
    const auto q = to_rats(*c, "phi_r");
    for (std::size_t l = 0; l < k; ++l) data.phi(i, l) = q[l];
  }
  try {
    data.cocycle = inverse(data.phi);
  } catch (const DomainError&) {
    throw ExtractionError("cocycle not bijective: the pairing matrix phi_r is singular");
  }
  return data;
}

PolyVectorField reconstruct(const LieCocycleData& data) {
  const Space X2 = data.base.power(2);
  const std::size_t k = data.dim();
  auto out = PolyVectorField::zero(X2);
  for (std::size_t i = 0; i < k; ++i) {
    const auto a1 = vf_relocate(data.gplus_basis()[i], X2, {1});
    const auto a2 = vf_relocate(data.gplus_basis()[i], X2, {2});
    for (std::size_t l = 0; l < k; ++l) {
      if (data.phi(i, l) == 0) continue;
      const MPoly w1 = data.v_basis[l].renamed(slot_renaming(data.base, X2, {1}));
      const MPoly w2 = data.v_basis[l].renamed(slot_renaming(data.base, X2, {2}));
      out += (w2 * data.phi(i, l)) * a1;
      out -= (w1 * data.phi(i, l)) * a2;
    }
  }
  return out;
}

Lemma1Report verify_lemma1(const LieCocycleData& data) {
  const std::size_t k = data.dim();
  auto pi_of = [&](std::size_t i) {
    std::vector<Rat> col(k);
    for (std::size_t l = 0; l < k; ++l) col[l] = data.cocycle(l, i);
    return col;
  };
  Lemma1Report rep{true, {}};
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      std::vector<Rat> res(k, Rat(0));
      for (std::size_t m = 0; m < k; ++m) {
        const Rat& c = data.structure()[i][j][m];
        if (c == 0) continue;
        const auto p = pi_of(m);
        for (std::size_t l = 0; l < k; ++l) res[l] += c * p[l];
      }
      const auto ai_pj = data.action_on_vdual[i].apply(pi_of(j));
      const auto aj_pi = data.action_on_vdual[j].apply(pi_of(i));
      for (std::size_t l = 0; l < k; ++l) res[l] += aj_pi[l] - ai_pj[l];
      if (std::any_of(res.begin(), res.end(), [](const Rat& q) { return q != 0; })) rep.passes = false;
      rep.entries.push_back({i, j, std::move(res)});
    }
  }
  return rep;
}

}  // namespace rquant
