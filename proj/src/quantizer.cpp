#include "rquant/quantizer.hpp"

#include "rquant/errors.hpp"
#include "rquant/flows.hpp"

namespace rquant {

namespace {

using SeriesMatrix = std::vector<std::vector<HSeries>>;

std::vector<HSeries> mat_vec(const SeriesMatrix& m, const std::vector<HSeries>& v, int order) {
  std::vector<HSeries> out(m.size(), HSeries(order));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j].is_zero() || v[j].is_zero()) continue;
      out[i] += m[i][j] * v[j];
    }
  return out;
}

std::vector<HSeries> rat_mat_vec(const RatMatrix& m, const std::vector<HSeries>& v, int order) {
  std::vector<HSeries> out(m.rows(), HSeries(order));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) out[i] += v[j] * m(i, j);
    }
  return out;
}

void require_dim(const LieCocycleData& data, std::size_t n, const char* what) {
  if (n != data.dim()) {
    throw MismatchError(std::string(what) + ": vector has length " + std::to_string(n) + ", expected " +
                        std::to_string(data.dim()));
  }
}

int common_order(const std::vector<HSeries>& v, int fallback) {
  if (v.empty()) return fallback;
  const int n = v.front().order();
  for (const auto& s : v) {
    if (s.order() != n) throw MismatchError("components carry different truncation orders");
  }
  return n;
}

VfSeries flow_generator(const VectorFieldAlgebra& gplus, const GroupElement& g, const Space& target,
                        int acted_slot, int terms) {
  VfSeries B{target, {}};
  for (int m = 0; m < terms; ++m) {
    auto field = PolyVectorField::zero(target);
    for (std::size_t i = 0; i < g.log.size(); ++i) {
      if (m > g.log[i].order() || g.log[i][m].is_zero()) continue;
      field += g.log[i][m] * vf_relocate(gplus.basis()[i], target, {acted_slot});
    }
    B.terms.push_back(std::move(field));
  }
  return B;
}

}  // namespace

GroupElement identity_element(std::size_t dim, int order) {
  return GroupElement{std::vector<HSeries>(dim, HSeries(order))};
}

GroupElement group_mul(const VectorFieldAlgebra& gplus, const GroupElement& g1, const GroupElement& g2) {
  if (g1.log.size() != gplus.dim() || g2.log.size() != gplus.dim()) {
    throw MismatchError("group_mul: element length does not match dim g+");
  }
  const int n = common_order(g1.log, 0);
  if (common_order(g2.log, n) != n) throw MismatchError("group_mul: truncation orders differ");
  for (const auto& s : g1.log)
    for (const auto& c : s.coeffs())
      for (const auto& v : c.support())
        if (gplus.space().index_of(v) != gplus.space().dim())
          throw DomainError("group_mul: parameter '" + v + "' clashes with a coordinate of X");

  const Space& X = gplus.space();
  const int flow_order = n + 1;
  const auto p1 = vf_exp(flow_generator(gplus, g1, X, 1, flow_order), flow_order);
  const auto p2 = vf_exp(flow_generator(gplus, g2, X, 1, flow_order), flow_order);
  // e^{hbar b1} e^{hbar b2} acts on functions as F -> F o p2 o p1.
  const VfSeries log = vf_log(fd_compose(p2, p1));

  std::vector<std::vector<MPoly>> coeffs(gplus.dim(), std::vector<MPoly>(static_cast<std::size_t>(n + 1)));
  for (int m = 0; m <= n; ++m) {
    const auto c = gplus.coordinates(log.terms[static_cast<std::size_t>(m)]);
    if (!c) throw InternalError("group_mul: product left the formal group of g+");
    for (std::size_t i = 0; i < gplus.dim(); ++i) coeffs[i][static_cast<std::size_t>(m)] = (*c)[i];
  }
  GroupElement out;
  for (auto& c : coeffs) out.log.emplace_back(n, std::move(c));
  return out;
}

std::vector<std::vector<HSeries>> dual_action_matrix(const LieCocycleData& data, const GroupElement& b) {
  require_dim(data, b.log.size(), "dual_action_matrix");
  const std::size_t k = data.dim();
  const int n = common_order(b.log, 0);
  SeriesMatrix m(k, std::vector<HSeries>(k, HSeries(n)));
  for (std::size_t i = 0; i < k; ++i) {
    if (b.log[i].is_zero()) continue;
    const auto& A = data.action_on_vdual[i];
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c)
        if (A(r, c) != 0) m[r][c] += b.log[i] * A(r, c);
  }
  return m;
}

DualVector act(const LieCocycleData& data, const GroupElement& g, const DualVector& xi) {
  require_dim(data, xi.comps.size(), "act");
  const int n = common_order(xi.comps, g.order());
  const auto bstar = dual_action_matrix(data, g);
  std::vector<HSeries> term = xi.comps;
  std::vector<HSeries> acc = xi.comps;
  for (int m = 1; m <= n; ++m) {
    term = mat_vec(bstar, term, n);
    for (auto& t : term) t *= Rat(1, m);
    for (std::size_t l = 0; l < acc.size(); ++l) acc[l] += term[l].shifted(m);
  }
  return DualVector{std::move(acc)};
}

DualVector pi_forward(const LieCocycleData& data, const GroupElement& b) {
  require_dim(data, b.log.size(), "pi_forward");
  const int n = common_order(b.log, 0);
  const auto bstar = dual_action_matrix(data, b);
  std::vector<HSeries> term = rat_mat_vec(data.cocycle, b.log, n);
  std::vector<HSeries> acc = term;
  for (int m = 2; m <= n + 1; ++m) {
    term = mat_vec(bstar, term, n);
    for (auto& t : term) t *= Rat(1, m);
    for (std::size_t l = 0; l < acc.size(); ++l) acc[l] += term[l].shifted(m - 1);
  }
  return DualVector{std::move(acc)};
}

GroupElement pi_inverse(const LieCocycleData& data, const DualVector& xi) {
  require_dim(data, xi.comps.size(), "pi_inverse");
  const int n = common_order(xi.comps, 0);
  const std::size_t k = data.dim();
  std::vector<std::vector<MPoly>> b(k, std::vector<MPoly>(static_cast<std::size_t>(n + 1)));
  auto current = [&] {
    GroupElement g;
    for (auto& c : b) g.log.emplace_back(n, c);
    return g;
  };
  for (int m = 0; m <= n; ++m) {
    // Order m of pi_forward(b) is pi(b_m) plus terms in b_0..b_{m-1}.
    const auto have = pi_forward(data, current());
    std::vector<MPoly> res(k);
    for (std::size_t l = 0; l < k; ++l) res[l] = xi.comps[l][m] - have.comps[l][m];
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (data.phi(i, l) != 0) b[i][static_cast<std::size_t>(m)] += res[l] * data.phi(i, l);
  }
  return current();
}

DualVector eval_dual(const LieCocycleData& data, int slot, int order) {
  const Space X2 = data.base.power(2);
  std::vector<int> smap{slot};
  const auto names = slot_renaming(data.base, X2, smap);
  DualVector out;
  for (const auto& w : data.v_basis) out.comps.push_back(HSeries::constant(w.renamed(names), order));
  return out;
}

FormalDiffeo circ_action(const LieCocycleData& data, int param_slot, int acted_slot, int order) {
  const Space X2 = data.base.power(2);
  DualVector xi = eval_dual(data, param_slot, order);
  for (auto& c : xi.comps) c = -c;
  const GroupElement b = pi_inverse(data, xi);
  return vf_exp(flow_generator(data.gplus, b, X2, acted_slot, order), order);
}

std::vector<HSeries> circ(const LieCocycleData& data, int order) {
  const auto D = circ_action(data, 1, 2, order);
  const std::size_t d = data.base.base_dim();
  return std::vector<HSeries>(D.images().begin() + static_cast<long>(d), D.images().end());
}

std::vector<HSeries> circ_left_inverse(const LieCocycleData& data, int order) {
  // (u, y) -> (y o u, y) inverts to (x, y) -> (z, y) with y o z = x.
  const auto inv = fd_inverse(circ_action(data, 2, 1, order));
  const std::size_t d = data.base.base_dim();
  return std::vector<HSeries>(inv.images().begin(), inv.images().begin() + static_cast<long>(d));
}

Quantization quantize_full(const PolyVectorField& r, int order, QuantizeOptions opts) {
  if (order < 1) throw DomainError("quantize needs truncation order >= 1");
  Quantization q;
  q.data = extract(r);
  const Space X2 = q.data.base.power(2);

  // R = (x, y) -> (z, z o y): the circle map with slot 1 evaluated along z.
  const auto xo = circ_action(q.data, 1, 2, order);
  auto zmap_images = FormalDiffeo::identity(X2, order).images();
  const auto z = circ_left_inverse(q.data, order);
  for (std::size_t j = 0; j < z.size(); ++j) zmap_images[j] = z[j];
  const FormalDiffeo zmap(X2, order, std::move(zmap_images));
  q.R = fd_compose(xo, zmap);

  if (opts.verify) {
    q.classical_limit_matches = (classical_limit(q.R) == r);
    if (!q.classical_limit_matches) {
      throw InternalError("quantize: classical limit " + classical_limit(q.R).to_string() +
                          " differs from the input r");
    }
    q.residual = check_quantum(q.R);
    if (!q.residual.qybe_passes()) throw InternalError("quantize: result violates the quantum Yang-Baxter equation");
    if (!q.residual.unitarity_passes()) throw InternalError("quantize: result violates unitarity R R21 = 1");
  }
  return q;
}

FormalDiffeo quantize(const PolyVectorField& r, int order, QuantizeOptions opts) {
  return quantize_full(r, order, opts).R;
}

}  // namespace rquant
