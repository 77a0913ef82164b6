#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "property_suite.hpp"
#include "random_gen.hpp"

using namespace rquant;
using rquant::testing::var;

namespace {

const Space kLine({"x"}, 1);

struct Produced {
  std::string label;
  PolyVectorField r;
  Quantization q;
};

// Everything quantized by checks 1-4, re-examined by check 5.
std::vector<Produced> g_produced;

bool quantize_and_compare(const std::string& label, const PolyVectorField& r, const FormalDiffeo& expected,
                          int order, std::ostream& log) {
  auto q = quantize_full(r, order, QuantizeOptions{false});
  const bool ok = q.R == expected;
  if (!ok) {
    for (std::size_t j = 0; j < expected.space().dim(); ++j) {
      const HSeries d = q.R.image(j) - expected.image(j);
      if (!d.is_zero()) log << "    " << label << " " << expected.space().coords()[j] << ": " << d.to_string() << "\n";
    }
  }
  g_produced.push_back({label, r, std::move(q)});
  return ok;
}

PolyVectorField monomial_field(unsigned k) { return PolyVectorField(kLine, {rquant::testing::pow(var("x"), k)}); }

bool worked_example(std::ostream& log) {
  return quantize_and_compare("r(1)", line_r(1), line_R(1, 6), 6, log);
}

bool line_family(std::ostream& log) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) ok &= quantize_and_compare("r(" + std::to_string(n) + ")", line_r(n), line_R(n, 5), 5, log);
  return ok;
}

bool matrix_algebra(std::ostream& log) {
  bool ok = true;
  for (const auto& [name, c] : {std::pair{"e11", std::vector<Rat>{1, 0, 0, 0}},
                                std::pair{"identity", std::vector<Rat>{1, 0, 0, 1}}}) {
    const auto A = AlgebraSpec::matrices2(c);
    ok &= quantize_and_compare(std::string("r_c, c=") + name, algebra_r(A), algebra_R(A, 3), 3, log);
    const auto& data = g_produced.back().q.data;
    const auto id = rquant::testing::identify_algebra_data(data, A, {1, 0, 0, 1});
    const std::size_t expected_dim = (name == std::string("e11")) ? 2 : 4;
    if (!id.passes() || data.dim() != expected_dim) {
      log << "    c=" << name << ": dim " << data.dim() << ", right mult " << id.right_multiplications
          << ", commutator " << id.commutator << ", pi identity " << id.cocycle_identity << ", dual action "
          << id.dual_action << "\n";
      ok = false;
    }
  }
  return ok;
}

bool permutation_family(std::ostream& log) {
  bool ok = true;
  for (unsigned k = 0; k <= 2; ++k) {
    const auto v = monomial_field(k);
    ok &= quantize_and_compare("r^v, v=x^" + std::to_string(k) + " d/dx", permutation_r(v), permutation_R(v, 5), 5,
                               log);
  }
  return ok;
}

bool definition_contracts(std::ostream& log) {
  bool ok = !g_produced.empty();
  for (const auto& p : g_produced) {
    const auto res = check_quantum(p.q.R);
    const bool lim = classical_limit(p.q.R) == p.r;
    if (!res.qybe_passes() || !res.unitarity_passes() || !lim) {
      log << "    " << p.label << ": qybe " << res.qybe_passes() << ", unitarity " << res.unitarity_passes()
          << ", classical limit " << lim << "\n";
      ok = false;
    }
  }
  return ok;
}

std::vector<std::pair<std::string, PolyVectorField>> family_inputs() {
  std::vector<std::pair<std::string, PolyVectorField>> out;
  for (int n = 1; n <= 3; ++n) out.emplace_back("r(" + std::to_string(n) + ")", line_r(n));
  for (unsigned k = 0; k <= 2; ++k)
    out.emplace_back("r^v, v=x^" + std::to_string(k) + " d/dx", permutation_r(monomial_field(k)));
  out.emplace_back("r_c, c=e11", algebra_r(AlgebraSpec::matrices2({1, 0, 0, 0})));
  out.emplace_back("r_c, c=identity", algebra_r(AlgebraSpec::matrices2({1, 0, 0, 1})));
  return out;
}

bool lemma1_suite(std::ostream& log) {
  bool ok = true;
  for (const auto& [label, r] : family_inputs()) {
    const auto data = extract(r);
    if (!verify_lemma1(data).passes) {
      log << "    " << label << ": cocycle identity fails\n";
      ok = false;
    }
    if (data.dim() < 2) continue;
    int detected = 0, total = 0;
    for (std::size_t l = 0; l < data.dim(); ++l)
      for (std::size_t i = 0; i < data.dim(); ++i) {
        auto bad = data;
        bad.cocycle(l, i) += 1;
        ++total;
        if (!verify_lemma1(bad).passes) ++detected;
      }
    log << "    " << label << ": " << detected << "/" << total << " single-entry perturbations detected\n";
    if (detected == 0) ok = false;
  }
  return ok;
}

bool cocycle_relation(std::ostream& log) {
  bool ok = true;
  rquant::testing::Gen gen(4242);
  for (const auto& [label, r] : family_inputs()) {
    const auto data = extract(r);
    int bad = 0;
    for (int t = 0; t < 20; ++t) {
      const auto g1 = gen.group_element(data.dim(), 4);
      const auto g2 = gen.group_element(data.dim(), 4);
      const auto lhs = pi_forward(data, group_mul(data.gplus, g1, g2));
      const auto moved = act(data, g1, pi_forward(data, g2));
      const auto p1 = pi_forward(data, g1);
      for (std::size_t l = 0; l < data.dim(); ++l)
        if (!(lhs.comps[l] == moved.comps[l] + p1.comps[l])) {
          ++bad;
          break;
        }
    }
    if (bad) {
      log << "    " << label << ": " << bad << "/20 pairs fail\n";
      ok = false;
    }
  }
  return ok;
}

bool intertwining(std::ostream& log) {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const auto rep = check_monomial_intertwining(n, 3);
    if (!rep.passes()) {
      log << "    n=" << n << ": classical " << rep.classical << ", quantum " << rep.quantum << "\n";
      ok = false;
    }
  }
  return ok;
}

bool property_suites(std::ostream& log) {
  bool ok = true;
  for (const auto& r : rquant::testing::run_property_suite(100, 20240601)) {
    log << "    " << (r.passes() ? "ok   " : "FAIL ") << r.name << " (" << r.cases - r.failures << "/" << r.cases
        << ")\n";
    if (!r.passes()) {
      log << "      " << r.first_failure << "\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::ostream&)>>> checks{
      {"worked example: quantize(r(1), N=6) equals the closed form", worked_example},
      {"line family n=1,2,3 at N=5 equals the closed forms", line_family},
      {"2x2 matrices, c=e11 and c=identity at N=3, with g+ = cX and pi = id", matrix_algebra},
      {"permutation family v=d/dx, x d/dx, x^2 d/dx at N=5", permutation_family},
      {"every quantization satisfies QYBE, unitarity and R = 1 + hbar r", definition_contracts},
      {"cocycle identity on all family data; perturbations detected", lemma1_suite},
      {"Pi(g1 g2) = g1 * Pi(g2) + Pi(g1), 20 random pairs per context at N=4", cocycle_relation},
      {"monomial substitution intertwines r(n) and R(n) with n=1 for n=1,2,3", intertwining},
      {"randomized property suites, 100 cases each", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::ostringstream log;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = checks[i].second(log);
    } catch (const std::exception& e) {
      log << "    threw: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << checks[i].first << " (" << std::fixed
              << std::setprecision(3) << secs << " s)\n"
              << log.str();
    if (!ok) ++failed;
  }
  std::cout << (checks.size() - failed) << "/" << checks.size() << " acceptance checks passed\n";
  return failed == 0 ? 0 : 1;
}
