#include "rquant/hseries.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rquant/errors.hpp"

namespace rquant {

namespace {

void require_same_order(const HSeries& a, const HSeries& b, const char* op) {
  if (a.order() != b.order()) {
    throw MismatchError(std::string("series ") + op + ": truncation orders differ (" +
                        std::to_string(a.order()) + " vs " + std::to_string(b.order()) + ")");
  }
}

bool is_unit_leading(const HSeries& a) { return a[0] == MPoly(1); }

// True when the image is exactly the variable itself; such variables are
// left inside the coefficients instead of being expanded.
bool is_identity_image(const std::string& var, const HSeries& img) {
  if (!(img[0] == MPoly::variable(var))) return false;
  for (int m = 1; m <= img.order(); ++m) {
    if (!img[m].is_zero()) return false;
  }
  return true;
}

struct Substituter {
  std::vector<std::string> active;       // variables expanded via Horner
  std::vector<const HSeries*> images;    // truncated to `order`
  int order;

  // F expanded in active[k..]; inactive variables stay in the coefficients.
  HSeries run(const MPoly& F, std::size_t k) const {
    if (F.is_zero()) return HSeries(order);
    while (k < active.size() && !F.depends_on(active[k])) ++k;
    if (k == active.size()) return HSeries::constant(F, order);

    const auto& vars = F.vars();
    const auto idx = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), active[k]) - vars.begin());
    // Split F = sum_e var^e * F_e.
    std::map<std::uint32_t, MPoly::Terms> parts;
    for (const auto& [e, c] : F.terms()) {
      Exponents rest = e;
      rest[idx] = 0;
      parts[e[idx]].emplace(std::move(rest), c);
    }
    const std::uint32_t top = parts.rbegin()->first;
    HSeries acc(order);
    for (std::uint32_t e = top + 1; e-- > 0;) {
      if (e != top) acc *= *images[k];
      auto it = parts.find(e);
      if (it != parts.end()) acc += run(MPoly(F.vars_ptr(), std::move(it->second)), k + 1);
    }
    return acc;
  }
};

}  // namespace

HSeries::HSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order + 1)) {
  if (order < 0) throw DomainError("negative truncation order");
}

HSeries::HSeries(int order, std::vector<MPoly> coeffs) : order_(order), coeffs_(std::move(coeffs)) {
  if (order < 0) throw DomainError("negative truncation order");
  if (coeffs_.size() > static_cast<std::size_t>(order + 1)) {
    throw DomainError("series has more coefficients than its truncation order allows");
  }
  coeffs_.resize(static_cast<std::size_t>(order + 1));
}

HSeries HSeries::constant(const MPoly& p, int order) {
  HSeries s(order);
  s.coeffs_[0] = p;
  return s;
}

HSeries HSeries::hbar_power(int k, int order) {
  HSeries s(order);
  if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = MPoly(1);
  return s;
}

bool HSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MPoly& p) { return p.is_zero(); });
}

int HSeries::valuation() const {
  for (int m = 0; m <= order_; ++m) {
    if (!(*this)[m].is_zero()) return m;
  }
  return -1;
}

HSeries HSeries::truncated(int m) const {
  if (m > order_) {
    throw MismatchError("cannot truncate a series of order " + std::to_string(order_) +
                        " to higher order " + std::to_string(m));
  }
  return HSeries(m, std::vector<MPoly>(coeffs_.begin(), coeffs_.begin() + m + 1));
}

HSeries HSeries::shifted(int k) const {
  HSeries out(order_);
  for (int m = 0; m + k <= order_; ++m) {
    if (m + k >= 0) out.coeffs_[static_cast<std::size_t>(m + k)] = (*this)[m];
  }
  return out;
}

HSeries HSeries::rescaled(const Rat& s) const {
  HSeries out = *this;
  Rat w = 1;
  for (auto& c : out.coeffs_) {
    c *= w;
    w *= s;
  }
  return out;
}

HSeries HSeries::renamed(const std::map<std::string, std::string>& names) const {
  HSeries out = *this;
  for (auto& c : out.coeffs_) c = c.renamed(names);
  return out;
}

HSeries HSeries::operator-() const {
  HSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

HSeries& HSeries::operator+=(const HSeries& o) {
  require_same_order(*this, o, "add");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  require_same_order(*this, o, "sub");
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

HSeries& HSeries::operator*=(const HSeries& o) { return *this = *this * o; }

HSeries& HSeries::operator*=(const MPoly& p) {
  for (auto& c : coeffs_) c = c * p;
  return *this;
}

HSeries& HSeries::operator*=(const Rat& c) {
  for (auto& k : coeffs_) k *= c;
  return *this;
}

HSeries operator*(const HSeries& a, const HSeries& b) {
  require_same_order(a, b, "mul");
  HSeries out(a.order_);
  const int va = a.valuation();
  const int vb = b.valuation();
  if (va < 0 || vb < 0) return out;
  for (int i = va; i <= a.order_; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = vb; i + j <= a.order_; ++j) {
      if (b[j].is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return out;
}

bool HSeries::operator==(const HSeries& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::string HSeries::to_string(const std::string& hbar) const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m <= order_; ++m) {
    if ((*this)[m].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (m == 0) {
      os << "(" << (*this)[m].to_string() << ")";
    } else {
      os << hbar;
      if (m > 1) os << "^" << m;
      os << "*(" << (*this)[m].to_string() << ")";
    }
  }
  if (first) os << "0";
  os << " + O(" << hbar << "^" << order_ + 1 << ")";
  return os.str();
}

HSeries series_inverse(const HSeries& a) {
  if (!is_unit_leading(a)) {
    throw DomainError("series_inverse: hbar^0 coefficient must be 1, got " + a[0].to_string());
  }
  const int n = a.order();
  std::vector<MPoly> b(static_cast<std::size_t>(n + 1));
  b[0] = MPoly(1);
  for (int m = 1; m <= n; ++m) {
    MPoly acc;
    for (int k = 1; k <= m; ++k) {
      if (a[k].is_zero()) continue;
      acc += a[k] * b[static_cast<std::size_t>(m - k)];
    }
    b[static_cast<std::size_t>(m)] = -acc;
  }
  return HSeries(n, std::move(b));
}

HSeries series_pow_rational(const HSeries& a, const Rat& p) {
  if (!is_unit_leading(a)) {
    throw DomainError("series_pow_rational: hbar^0 coefficient must be 1, got " + a[0].to_string());
  }
  const int n = a.order();
  const HSeries t = a - HSeries::constant(MPoly(1), n);
  HSeries out = HSeries::constant(MPoly(1), n);
  HSeries tk = HSeries::constant(MPoly(1), n);
  for (int k = 1; k <= n; ++k) {
    tk *= t;
    if (tk.is_zero()) break;
    out += tk * binomial(p, static_cast<unsigned>(k));
  }
  return out;
}

HSeries series_pow(const HSeries& a, unsigned k) {
  HSeries out = HSeries::constant(MPoly(1), a.order());
  HSeries base = a;
  while (k > 0) {
    if (k & 1U) out *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return out;
}

HSeries poly_substitute(const MPoly& F, const SeriesMap& images, int order) {
  Substituter sub;
  sub.order = order;
  std::vector<HSeries> truncated;
  truncated.reserve(images.size());
  for (const auto& var : F.support()) {
    auto it = images.find(var);
    if (it == images.end()) {
      throw DomainError("poly_substitute: no image for variable '" + var + "'");
    }
    if (it->second.order() < order) {
      throw MismatchError("poly_substitute: image of '" + var + "' has order " +
                          std::to_string(it->second.order()) + " < " + std::to_string(order));
    }
    if (is_identity_image(var, it->second)) continue;
    sub.active.push_back(var);
    truncated.push_back(it->second.order() == order ? it->second : it->second.truncated(order));
  }
  for (const auto& t : truncated) sub.images.push_back(&t);
  return sub.run(F, 0);
}

HSeries poly_substitute(const MPoly& F, const SeriesMap& images) {
  if (images.empty()) {
    if (!F.support().empty()) {
      throw DomainError("poly_substitute: no image for variable '" + F.support().front() + "'");
    }
    return HSeries::constant(F, 0);
  }
  const int order = images.begin()->second.order();
  for (const auto& [v, s] : images) {
    if (s.order() != order) throw MismatchError("poly_substitute: images have different orders");
  }
  return poly_substitute(F, images, order);
}

HSeries series_substitute(const HSeries& F, const SeriesMap& images) {
  const int n = F.order();
  std::vector<MPoly> acc(static_cast<std::size_t>(n + 1));
  for (int m = 0; m <= n; ++m) {
    if (F[m].is_zero()) continue;
    const HSeries part = poly_substitute(F[m], images, n - m);
    for (int k = 0; k + m <= n; ++k) acc[static_cast<std::size_t>(k + m)] += part[k];
  }
  return HSeries(n, std::move(acc));
}

}  // namespace rquant
