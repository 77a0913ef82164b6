#include "property_suite.hpp"

#include <functional>

#include "random_gen.hpp"
#include "rquant/flows.hpp"

namespace rquant::testing {

namespace {

using Check = std::function<bool(Gen&, std::string&)>;

PropertyResult run(const std::string& name, int cases, std::uint32_t seed, const Check& check) {
  PropertyResult res{name, cases, 0, {}};
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    std::string info;
    bool ok = false;
    try {
      ok = check(gen, info);
    } catch (const std::exception& e) {
      info = std::string("threw: ") + e.what();
    }
    if (!ok) {
      if (res.failures == 0) res.first_failure = "case " + std::to_string(i) + ": " + info;
      ++res.failures;
    }
  }
  return res;
}

const VarList kXYZ{"x", "y", "z"};
const Space kPlane({"x", "y"}, 1);
const Space kLine({"x"}, 1);

}  // namespace

std::vector<PropertyResult> run_property_suite(int cases, std::uint32_t seed) {
  std::vector<PropertyResult> out;
  auto add = [&](const std::string& name, const Check& c) {
    out.push_back(run(name, cases, seed + static_cast<std::uint32_t>(out.size()) * 7919u, c));
  };

  add("polynomial ring laws", [](Gen& g, std::string& info) {
    const auto a = g.poly(kXYZ), b = g.poly(kXYZ), c = g.poly(kXYZ);
    info = a.to_string() + " | " + b.to_string() + " | " + c.to_string();
    return (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
           a * (b + c) == a * b + a * c && a - a == MPoly() && a * MPoly(1) == a;
  });

  add("series ring laws", [](Gen& g, std::string& info) {
    const int n = g.uniform(0, 4);
    const auto a = g.series(kXYZ, n), b = g.series(kXYZ, n), c = g.series(kXYZ, n);
    info = a.to_string();
    return (a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c &&
           (a + b) - b == a;
  });

  add("series inverse and rational powers", [](Gen& g, std::string& info) {
    const int n = g.uniform(0, 4);
    const auto a = g.unit_series({"x", "y"}, n);
    const int k = g.uniform(1, 4);
    const Rat p(g.uniform(-3, 3), g.uniform(1, 3));
    info = a.to_string() + " p=" + pretty_rat(p) + " k=" + std::to_string(k);
    const auto one = HSeries::constant(1, n);
    return series_inverse(a) * a == one &&
           series_pow_rational(a, p) * series_pow_rational(a, -p) == one &&
           series_pow(series_pow_rational(a, Rat(1, k)), static_cast<unsigned>(k)) == a;
  });

  add("substitution is a homomorphism", [](Gen& g, std::string& info) {
    const int n = g.uniform(0, 3);
    const auto F = g.poly(kXYZ), G = g.poly(kXYZ);
    SeriesMap imgs;
    for (const auto& v : kXYZ) imgs.emplace(v, g.series(kXYZ, n));
    info = F.to_string() + " | " + G.to_string();
    return poly_substitute(F * G, imgs) == poly_substitute(F, imgs) * poly_substitute(G, imgs) &&
           poly_substitute(F + G, imgs) == poly_substitute(F, imgs) + poly_substitute(G, imgs);
  });

  add("serial and parallel multiplication agree", [](Gen& g, std::string& info) {
    const auto a = g.poly(kXYZ, 6, 40);
    const auto b = g.poly(a.vars(), 6, 40).aligned(a.vars());
    info = std::to_string(a.size()) + "x" + std::to_string(b.size()) + " terms";
    return kernels::mul_serial(a.terms(), b.terms()) == kernels::mul_parallel(a.terms(), b.terms());
  });

  add("Jacobi identity", [](Gen& g, std::string& info) {
    const auto u = g.field(kPlane), v = g.field(kPlane), w = g.field(kPlane);
    info = u.to_string();
    const auto j = vf_bracket(u, vf_bracket(v, w)) + vf_bracket(v, vf_bracket(w, u)) + vf_bracket(w, vf_bracket(u, v));
    return j.is_zero() && vf_bracket(u, v) == -vf_bracket(v, u);
  });

  add("derivation law", [](Gen& g, std::string& info) {
    const auto v = g.field(kPlane, 3);
    const auto F = g.poly({"x", "y"}), G = g.poly({"x", "y"});
    info = v.to_string();
    return vf_apply(v, F * G) == vf_apply(v, F) * G + F * vf_apply(v, G) &&
           vf_apply(vf_bracket(v, v), F).is_zero();
  });

  add("placement commutes with bracket", [](Gen& g, std::string& info) {
    const Space X2 = kLine.power(2);
    const auto a = g.field(X2), b = g.field(X2);
    const SlotPair pair = static_cast<SlotPair>(g.uniform(0, 2));
    info = a.to_string() + " at " + to_string(pair);
    return vf_place(vf_bracket(a, b), pair) == vf_bracket(vf_place(a, pair), vf_place(b, pair));
  });

  add("exponential is an algebra homomorphism", [](Gen& g, std::string& info) {
    const int n = g.uniform(0, 4);
    const auto v = g.field(kPlane);
    const auto e = vf_exp(v, n);
    const auto F = g.poly({"x", "y"}), G = g.poly({"x", "y"});
    info = v.to_string() + " N=" + std::to_string(n);
    return e.pullback(F * G) == e.pullback(F) * e.pullback(G);
  });

  add("composition is associative with unit", [](Gen& g, std::string& info) {
    const int n = g.uniform(0, 3);
    const auto a = g.diffeo(kPlane, n), b = g.diffeo(kPlane, n), c = g.diffeo(kPlane, n);
    const auto id = FormalDiffeo::identity(kPlane, n);
    info = a.to_string();
    return fd_compose(fd_compose(a, b), c) == fd_compose(a, fd_compose(b, c)) && fd_compose(a, id) == a &&
           fd_compose(id, a) == a && fd_compose(a, b) == detail::fd_compose_serial(a, b);
  });

  add("inverse round trips", [](Gen& g, std::string& info) {
    const int n = g.uniform(0, 4);
    const auto a = g.diffeo(kPlane, n);
    const auto inv = fd_inverse(a);
    info = a.to_string();
    return fd_compose(a, inv).is_identity() && fd_compose(inv, a).is_identity() && fd_inverse(inv) == a;
  });

  add("lift respects composition", [](Gen& g, std::string& info) {
    const int n = g.uniform(0, 3);
    const Space X2 = kLine.power(2);
    const auto a = g.diffeo(X2, n), b = g.diffeo(X2, n);
    const SlotPair pair = static_cast<SlotPair>(g.uniform(0, 2));
    info = a.to_string();
    return fd_lift(fd_compose(a, b), pair) == fd_compose(fd_lift(a, pair), fd_lift(b, pair));
  });

  add("log and exp round trips", [](Gen& g, std::string& info) {
    const int n = g.uniform(1, 4);
    const auto v = g.field(kPlane);
    info = v.to_string();
    const auto lv = vf_log(vf_exp(v, n));
    bool ok = lv.terms.front() == v;
    for (std::size_t m = 1; m < lv.terms.size(); ++m) ok = ok && lv.terms[m].is_zero();
    const auto phi = g.diffeo(kPlane, n);
    return ok && vf_exp(vf_log(phi), n) == phi;
  });

  return out;
}

}  // namespace rquant::testing
