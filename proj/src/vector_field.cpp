#include "rquant/vector_field.hpp"

#include <algorithm>
#include <sstream>

#include "rquant/errors.hpp"

namespace rquant {

std::vector<int> slot_map(SlotPair pair) {
  switch (pair) {
    case SlotPair::k12: return {1, 2};
    case SlotPair::k13: return {1, 3};
    case SlotPair::k23: return {2, 3};
  }
  return {};
}

std::string to_string(SlotPair pair) {
  switch (pair) {
    case SlotPair::k12: return "12";
    case SlotPair::k13: return "13";
    case SlotPair::k23: return "23";
  }
  return "?";
}

PolyVectorField::PolyVectorField(Space space, std::vector<MPoly> components)
    : space_(std::move(space)), comps_(std::move(components)) {
  if (comps_.size() != space_.dim()) {
    throw MismatchError("vector field needs one component per coordinate of " + space_.name());
  }
}

PolyVectorField PolyVectorField::zero(const Space& space) {
  return PolyVectorField(space, std::vector<MPoly>(space.dim()));
}

PolyVectorField PolyVectorField::along(const Space& space, const std::string& coord, const MPoly& c) {
  auto v = zero(space);
  const auto i = space.index_of(coord);
  if (i == space.dim()) throw DomainError("'" + coord + "' is not a coordinate of " + space.name());
  v.comps_[i] = c;
  return v;
}

const MPoly& PolyVectorField::component(const std::string& coord) const {
  const auto i = space_.index_of(coord);
  if (i == space_.dim()) throw DomainError("'" + coord + "' is not a coordinate of " + space_.name());
  return comps_[i];
}

bool PolyVectorField::is_zero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const MPoly& p) { return p.is_zero(); });
}

MPoly PolyVectorField::apply(const MPoly& F) const {
  MPoly out;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (comps_[j].is_zero()) continue;
    const auto& x = space_.coords()[j];
    if (!F.depends_on(x)) continue;
    out += comps_[j] * F.derivative(x);
  }
  return out;
}

HSeries PolyVectorField::apply(const HSeries& F) const {
  std::vector<MPoly> c;
  c.reserve(static_cast<std::size_t>(F.order() + 1));
  for (const auto& p : F.coeffs()) c.push_back(apply(p));
  return HSeries(F.order(), std::move(c));
}

PolyVectorField PolyVectorField::renamed(const Space& target,
                                         const std::map<std::string, std::string>& names) const {
  auto out = zero(target);
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    const auto& from = space_.coords()[j];
    auto it = names.find(from);
    const std::string to = it == names.end() ? from : it->second;
    const auto i = target.index_of(to);
    if (i == target.dim()) throw MismatchError("renaming sends '" + from + "' outside " + target.name());
    out.comps_[i] += comps_[j].renamed(names);
  }
  return out;
}

PolyVectorField PolyVectorField::operator-() const {
  auto out = *this;
  for (auto& c : out.comps_) c = -c;
  return out;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  if (!(space_ == o.space_)) throw MismatchError("adding vector fields on different spaces");
  for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] += o.comps_[j];
  return *this;
}

PolyVectorField& PolyVectorField::operator-=(const PolyVectorField& o) {
  if (!(space_ == o.space_)) throw MismatchError("subtracting vector fields on different spaces");
  for (std::size_t j = 0; j < comps_.size(); ++j) comps_[j] -= o.comps_[j];
  return *this;
}

PolyVectorField& PolyVectorField::operator*=(const MPoly& f) {
  for (auto& c : comps_) c = c * f;
  return *this;
}

bool PolyVectorField::operator==(const PolyVectorField& o) const {
  return space_ == o.space_ && comps_ == o.comps_;
}

std::string PolyVectorField::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < comps_.size(); ++j) {
    if (comps_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << comps_[j].to_string() << ")*d/d" << space_.coords()[j];
  }
  if (first) os << "0";
  return os.str();
}

MPoly vf_apply(const PolyVectorField& v, const MPoly& F) { return v.apply(F); }

PolyVectorField vf_bracket(const PolyVectorField& v, const PolyVectorField& w) {
  if (!(v.space() == w.space())) throw MismatchError("bracket of vector fields on different spaces");
  std::vector<MPoly> out(v.space().dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = v.apply(w.component(i)) - w.apply(v.component(i));
  return PolyVectorField(v.space(), std::move(out));
}

PolyVectorField vf_relocate(const PolyVectorField& v, const Space& target,
                            const std::vector<int>& slot_map) {
  return v.renamed(target, slot_renaming(v.space(), target, slot_map));
}

PolyVectorField vf_place(const PolyVectorField& r, SlotPair pair) {
  if (r.space().slots() != 2) throw MismatchError("vf_place expects a field on X^2, got " + r.space().name());
  return vf_relocate(r, r.space().power(3), slot_map(pair));
}

PolyVectorField vf_swap(const PolyVectorField& r) {
  if (r.space().slots() != 2) throw MismatchError("vf_swap expects a field on X^2, got " + r.space().name());
  return vf_relocate(r, r.space(), {2, 1});
}

HSeries VfSeries::apply(const HSeries& T) const {
  const int n = T.order();
  std::vector<MPoly> acc(static_cast<std::size_t>(n + 1));
  for (std::size_t m = 0; m < terms.size() && static_cast<int>(m) <= n; ++m) {
    if (terms[m].is_zero()) continue;
    for (int k = 0; k + static_cast<int>(m) <= n; ++k) {
      if (T[k].is_zero()) continue;
      acc[m + static_cast<std::size_t>(k)] += terms[m].apply(T[k]);
    }
  }
  return HSeries(n, std::move(acc));
}

}  // namespace rquant
