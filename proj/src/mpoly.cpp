#include "rquant/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rquant/errors.hpp"

namespace rquant {

namespace {

const std::shared_ptr<const VarList>& empty_vars() {
  static const auto empty = std::make_shared<const VarList>();
  return empty;
}

void drop_zeros(MPoly::Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = total_degree(a);
  const auto db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](auto x, auto y) { return x > y; });
}

std::uint32_t total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::shared_ptr<const VarList> union_vars(const std::shared_ptr<const VarList>& a,
                                          const std::shared_ptr<const VarList>& b) {
  if (a == b || *a == *b) return a;
  if (b->empty()) return a;
  if (a->empty()) return b;
  auto covers = [](const VarList& big, const VarList& small) {
    return std::all_of(small.begin(), small.end(), [&](const std::string& v) {
      return std::find(big.begin(), big.end(), v) != big.end();
    });
  };
  if (covers(*a, *b)) return a;
  if (covers(*b, *a)) return b;
  VarList merged = *a;
  for (const auto& v : *b) {
    if (std::find(merged.begin(), merged.end(), v) == merged.end()) merged.push_back(v);
  }
  return std::make_shared<const VarList>(std::move(merged));
}

MPoly::MPoly() : vars_(empty_vars()) {}

MPoly::MPoly(const Rat& c) : vars_(empty_vars()) {
  if (c != 0) {
    Rat q = c;
    q.canonicalize();
    terms_.emplace(Exponents{}, std::move(q));
  }
}

MPoly::MPoly(long c) : MPoly(Rat(c)) {}

MPoly::MPoly(VarList vars, Terms terms)
    : MPoly(std::make_shared<const VarList>(std::move(vars)), std::move(terms)) {}

MPoly::MPoly(std::shared_ptr<const VarList> vars, Terms terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  // Coefficients from outside may carry uncancelled fractions; GMP arithmetic
  // and equality assume canonical form.
  for (auto& [e, c] : terms_) {
    if (e.size() != vars_->size()) {
      throw DomainError("exponent vector length does not match variable list");
    }
    c.canonicalize();
  }
  drop_zeros(terms_);
}

MPoly MPoly::variable(const std::string& name) {
  Terms t;
  t.emplace(Exponents{1}, Rat(1));
  return MPoly(VarList{name}, std::move(t));
}

MPoly MPoly::monomial(const VarList& vars, Exponents exps, const Rat& c) {
  Terms t;
  t.emplace(std::move(exps), c);
  return MPoly(vars, std::move(t));
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rat MPoly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [e, c] = *terms_.begin();
  return total_degree(e) == 0 ? c : Rat(0);
}

Rat MPoly::coeff(const std::map<std::string, std::uint32_t>& mono) const {
  Exponents e(vars_->size(), 0);
  for (const auto& [name, k] : mono) {
    if (k == 0) continue;
    auto it = std::find(vars_->begin(), vars_->end(), name);
    if (it == vars_->end()) return 0;
    e[static_cast<std::size_t>(it - vars_->begin())] = k;
  }
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(total_degree(terms_.rbegin()->first));
}

std::uint32_t MPoly::degree_in(std::string_view var) const {
  auto it = std::find(vars_->begin(), vars_->end(), var);
  if (it == vars_->end()) return 0;
  const auto i = static_cast<std::size_t>(it - vars_->begin());
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

std::vector<std::string> MPoly::support() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    for (const auto& [e, c] : terms_) {
      if (e[i] > 0) {
        out.push_back((*vars_)[i]);
        break;
      }
    }
  }
  return out;
}

bool MPoly::depends_on(std::string_view var) const { return degree_in(var) > 0; }

MPoly MPoly::aligned(const std::shared_ptr<const VarList>& target) const {
  if (target == vars_ || *target == *vars_) {
    MPoly out = *this;
    out.vars_ = target;
    return out;
  }
  std::vector<std::size_t> pos(vars_->size(), target->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it != target->end()) pos[i] = static_cast<std::size_t>(it - target->begin());
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (pos[i] == target->size()) {
        throw DomainError("cannot align polynomial: variable '" + (*vars_)[i] +
                          "' missing from target list");
      }
      ne[pos[i]] = e[i];
    }
    out.emplace(std::move(ne), c);
  }
  MPoly p;
  p.vars_ = target;
  p.terms_ = std::move(out);
  return p;
}

MPoly MPoly::aligned(const VarList& target) const {
  return aligned(std::make_shared<const VarList>(target));
}

MPoly MPoly::derivative(std::string_view var) const {
  auto it = std::find(vars_->begin(), vars_->end(), var);
  MPoly out;
  out.vars_ = vars_;
  if (it == vars_->end()) return out;
  const auto i = static_cast<std::size_t>(it - vars_->begin());
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents ne = e;
    --ne[i];
    out.terms_[std::move(ne)] += c * e[i];
  }
  drop_zeros(out.terms_);
  return out;
}

MPoly MPoly::renamed(const std::map<std::string, std::string>& names) const {
  VarList nv;
  nv.reserve(vars_->size());
  for (const auto& v : *vars_) {
    auto it = names.find(v);
    nv.push_back(it == names.end() ? v : it->second);
  }
  // Two old names may collapse onto one new name; merge their exponents.
  VarList uniq;
  std::vector<std::size_t> pos(nv.size());
  for (std::size_t i = 0; i < nv.size(); ++i) {
    auto it = std::find(uniq.begin(), uniq.end(), nv[i]);
    if (it == uniq.end()) {
      pos[i] = uniq.size();
      uniq.push_back(nv[i]);
    } else {
      pos[i] = static_cast<std::size_t>(it - uniq.begin());
    }
  }
  Terms out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(uniq.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] += e[i];
    out[std::move(ne)] += c;
  }
  return MPoly(std::move(uniq), std::move(out));
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  auto target = union_vars(vars_, o.vars_);
  if (target != vars_) *this = aligned(target);
  const MPoly rhs = (o.vars_ == target) ? o : o.aligned(target);
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rat q = c;
  q.canonicalize();
  for (auto& [e, v] : terms_) v *= q;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (b.is_constant()) return MPoly(a) *= b.constant_term();
  if (a.is_constant()) return MPoly(b) *= a.constant_term();
  auto target = union_vars(a.vars_, b.vars_);
  const MPoly& la = (a.vars_ == target) ? a : a.aligned(target);
  const MPoly lb_storage = (b.vars_ == target) ? MPoly() : b.aligned(target);
  const MPoly& lb = (b.vars_ == target) ? b : lb_storage;
  MPoly out;
  out.vars_ = target;
  if (la.size() * lb.size() >= kernels::parallel_threshold()) {
    out.terms_ = kernels::mul_parallel(la.terms_, lb.terms_);
  } else {
    out.terms_ = kernels::mul_serial(la.terms_, lb.terms_);
  }
  return out;
}

bool MPoly::operator==(const MPoly& o) const {
  if (vars_ == o.vars_ || *vars_ == *o.vars_) return terms_ == o.terms_;
  if (terms_.size() != o.terms_.size()) return false;
  auto target = union_vars(vars_, o.vars_);
  return aligned(target).terms_ == o.aligned(target).terms_;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    bool wrote = false;
    if (!unit || total_degree(e) == 0) {
      os << pretty_rat(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (*vars_)[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace rquant
