#pragma once

#include <ostream>
#include <random>

#include "rquant/formal_diffeo.hpp"
#include "rquant/quantizer.hpp"

namespace rquant {

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const HSeries& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const PolyVectorField& v) { return os << v.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const FormalDiffeo& f) { return os << f.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  for (const auto& s : g.log) os << "[" << s.to_string() << "] ";
  return os;
}

}  // namespace rquant

namespace rquant::testing {

inline MPoly var(const std::string& name) { return MPoly::variable(name); }

inline MPoly pow(const MPoly& p, unsigned k) {
  MPoly out = 1;
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rat rat(int span = 5) {
    const int num = uniform(-span, span);
    const int den = uniform(1, 3);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }

  Rat nonzero_rat(int span = 5) {
    Rat q = 0;
    while (q == 0) q = rat(span);
    return q;
  }

  MPoly poly(const VarList& vars, int max_deg = 2, int max_terms = 3) {
    MPoly out;
    const int terms = uniform(0, max_terms);
    for (int t = 0; t < terms; ++t) {
      Exponents e(vars.size(), 0);
      int budget = vars.empty() ? 0 : uniform(0, max_deg);
      while (budget > 0) {
        e[static_cast<std::size_t>(uniform(0, static_cast<int>(vars.size()) - 1))] += 1;
        --budget;
      }
      out += MPoly::monomial(vars, e, rat());
    }
    return out;
  }

  HSeries series(const VarList& vars, int order, int max_deg = 2) {
    std::vector<MPoly> c;
    for (int m = 0; m <= order; ++m) c.push_back(poly(vars, max_deg));
    return HSeries(order, std::move(c));
  }

  /// 1 + O(hbar).
  HSeries unit_series(const VarList& vars, int order, int max_deg = 2) {
    auto s = series(vars, order, max_deg);
    auto c = s.coeffs();
    c[0] = 1;
    return HSeries(order, std::move(c));
  }

  PolyVectorField field(const Space& space, int max_deg = 2) {
    std::vector<MPoly> comps;
    for (std::size_t j = 0; j < space.dim(); ++j) comps.push_back(poly(space.coords(), max_deg));
    return PolyVectorField(space, std::move(comps));
  }

  FormalDiffeo diffeo(const Space& space, int order, int max_deg = 2) {
    std::vector<HSeries> imgs;
    for (const auto& c : space.coords()) {
      std::vector<MPoly> coeffs{var(c)};
      for (int m = 1; m <= order; ++m) coeffs.push_back(poly(space.coords(), max_deg, 2));
      imgs.emplace_back(order, std::move(coeffs));
    }
    return FormalDiffeo(space, order, std::move(imgs));
  }

  GroupElement group_element(std::size_t dim, int order) {
    GroupElement g;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<MPoly> c;
      for (int m = 0; m <= order; ++m) c.emplace_back(rat(3));
      g.log.emplace_back(order, std::move(c));
    }
    return g;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace rquant::testing
