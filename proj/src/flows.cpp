#include "rquant/flows.hpp"

namespace rquant {

FormalDiffeo vf_exp(const PolyVectorField& v, int order) {
  std::vector<HSeries> imgs;
  for (const auto& x : v.space().coords()) {
    std::vector<MPoly> c(static_cast<std::size_t>(order + 1));
    MPoly term = MPoly::variable(x);
    c[0] = term;
    for (int m = 1; m <= order; ++m) {
      term = v.apply(term) * Rat(1, m);
      if (term.is_zero()) break;
      c[static_cast<std::size_t>(m)] = term;
    }
    imgs.emplace_back(order, std::move(c));
  }
  return FormalDiffeo(v.space(), order, std::move(imgs));
}

FormalDiffeo vf_exp(const VfSeries& b, int order) {
  std::vector<HSeries> imgs;
  for (const auto& x : b.space.coords()) {
    HSeries term = HSeries::constant(MPoly::variable(x), order);
    HSeries acc = term;
    for (int m = 1; m <= order; ++m) {
      term = b.apply(term) * Rat(1, m);
      if (term.is_zero()) break;
      acc += term.shifted(m);
    }
    imgs.push_back(std::move(acc));
  }
  return FormalDiffeo(b.space, order, std::move(imgs));
}

VfSeries vf_log(const FormalDiffeo& phi) {
  VfSeries b{phi.space(), {}};
  const int n = phi.order();
  for (int m = 0; m < n; ++m) {
    b.terms.push_back(PolyVectorField::zero(phi.space()));
    const FormalDiffeo cur = vf_exp(b, n);
    std::vector<MPoly> comps;
    for (std::size_t j = 0; j < phi.space().dim(); ++j) {
      comps.push_back(phi.image(j)[m + 1] - cur.image(j)[m + 1]);
    }
    b.terms.back() = PolyVectorField(phi.space(), std::move(comps));
  }
  return b;
}

}  // namespace rquant
