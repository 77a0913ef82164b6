#include "rquant/formal_diffeo.hpp"

#include <algorithm>
#include <sstream>

#include "rquant/errors.hpp"

namespace rquant {

namespace {

void require_compatible(const FormalDiffeo& a, const FormalDiffeo& b, const char* what) {
  if (!(a.space() == b.space())) {
    throw MismatchError(std::string(what) + ": maps live on " + a.space().name() + " and " +
                        b.space().name() + " with different coordinates");
  }
  if (a.order() != b.order()) {
    throw MismatchError(std::string(what) + ": truncation orders differ (" + std::to_string(a.order()) +
                        " vs " + std::to_string(b.order()) + ")");
  }
}

HSeries compose_one(const HSeries& image, const SeriesMap& along) {
  // Parameters (variables outside the space) keep their values.
  SeriesMap full = along;
  const int n = image.order();
  for (const auto& c : image.coeffs()) {
    for (const auto& v : c.support()) {
      if (!full.contains(v)) full.emplace(v, HSeries::constant(MPoly::variable(v), n));
    }
  }
  return series_substitute(image, full);
}

std::map<std::string, HSeries> difference(const FormalDiffeo& a, const FormalDiffeo& b) {
  std::map<std::string, HSeries> out;
  for (std::size_t j = 0; j < a.space().dim(); ++j) out.emplace(a.space().coords()[j], a.image(j) - b.image(j));
  return out;
}

bool all_zero(const std::map<std::string, HSeries>& m) {
  return !m.empty() && std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

}  // namespace

FormalDiffeo::FormalDiffeo(Space space, int order, std::vector<HSeries> images)
    : space_(std::move(space)), order_(order), images_(std::move(images)) {
  if (images_.size() != space_.dim()) {
    throw MismatchError("formal diffeomorphism needs one image per coordinate of " + space_.name());
  }
  for (std::size_t j = 0; j < images_.size(); ++j) {
    const auto& c = space_.coords()[j];
    if (images_[j].order() != order_) {
      throw MismatchError("image of '" + c + "' has order " + std::to_string(images_[j].order()) +
                          ", expected " + std::to_string(order_));
    }
    if (!(images_[j][0] == MPoly::variable(c))) {
      throw DomainError("image of '" + c + "' is not " + c + " + O(hbar): hbar^0 part is " +
                        images_[j][0].to_string());
    }
  }
}

FormalDiffeo FormalDiffeo::identity(const Space& space, int order) {
  std::vector<HSeries> imgs;
  for (const auto& c : space.coords()) imgs.push_back(HSeries::constant(MPoly::variable(c), order));
  return FormalDiffeo(space, order, std::move(imgs));
}

const HSeries& FormalDiffeo::image(const std::string& coord) const {
  const auto i = space_.index_of(coord);
  if (i == space_.dim()) throw DomainError("'" + coord + "' is not a coordinate of " + space_.name());
  return images_[i];
}

SeriesMap FormalDiffeo::as_map() const {
  SeriesMap m;
  for (std::size_t j = 0; j < images_.size(); ++j) m.emplace(space_.coords()[j], images_[j]);
  return m;
}

HSeries FormalDiffeo::pullback(const MPoly& F) const {
  SeriesMap m = as_map();
  for (const auto& v : F.support()) {
    if (!m.contains(v)) m.emplace(v, HSeries::constant(MPoly::variable(v), order_));
  }
  return poly_substitute(F, m, order_);
}

FormalDiffeo FormalDiffeo::truncated(int m) const {
  std::vector<HSeries> imgs;
  for (const auto& s : images_) imgs.push_back(s.truncated(m));
  return FormalDiffeo(space_, m, std::move(imgs));
}

bool FormalDiffeo::is_identity() const { return *this == identity(space_, order_); }

bool FormalDiffeo::operator==(const FormalDiffeo& o) const {
  return space_ == o.space_ && order_ == o.order_ && images_ == o.images_;
}

std::string FormalDiffeo::to_string() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < images_.size(); ++j) {
    os << space_.coords()[j] << " -> " << images_[j].to_string() << "\n";
  }
  return os.str();
}

FormalDiffeo fd_compose(const FormalDiffeo& phi, const FormalDiffeo& psi) {
  require_compatible(phi, psi, "fd_compose");
  const SeriesMap along = psi.as_map();
  const auto n = static_cast<long>(phi.space().dim());
  std::vector<HSeries> imgs(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < n; ++j) {
    const auto u = static_cast<std::size_t>(j);
    imgs[u] = compose_one(phi.image(u), along);
  }
  return FormalDiffeo(phi.space(), phi.order(), std::move(imgs));
}

namespace detail {
FormalDiffeo fd_compose_serial(const FormalDiffeo& phi, const FormalDiffeo& psi) {
  require_compatible(phi, psi, "fd_compose");
  const SeriesMap along = psi.as_map();
  std::vector<HSeries> imgs;
  for (const auto& s : phi.images()) imgs.push_back(compose_one(s, along));
  return FormalDiffeo(phi.space(), phi.order(), std::move(imgs));
}
}  // namespace detail

FormalDiffeo fd_inverse(const FormalDiffeo& phi) {
  // psi = x - delta(psi) where phi = id + delta; each pass fixes one more order.
  const auto id = FormalDiffeo::identity(phi.space(), phi.order());
  FormalDiffeo psi = id;
  for (int pass = 0; pass < phi.order(); ++pass) {
    const FormalDiffeo image = fd_compose(phi, psi);
    std::vector<HSeries> next;
    for (std::size_t j = 0; j < phi.space().dim(); ++j) {
      next.push_back(id.image(j) - (image.image(j) - psi.image(j)));
    }
    psi = FormalDiffeo(phi.space(), phi.order(), std::move(next));
  }
  return psi;
}

FormalDiffeo fd_relocate(const FormalDiffeo& phi, const Space& target, const std::vector<int>& slot_map) {
  const auto names = slot_renaming(phi.space(), target, slot_map);
  auto out = FormalDiffeo::identity(target, phi.order()).images();
  for (std::size_t j = 0; j < phi.space().dim(); ++j) {
    const auto& to = names.at(phi.space().coords()[j]);
    out[target.index_of(to)] = phi.image(j).renamed(names);
  }
  return FormalDiffeo(target, phi.order(), std::move(out));
}

FormalDiffeo fd_lift(const FormalDiffeo& phi, SlotPair pair) {
  if (phi.space().slots() != 2) throw MismatchError("fd_lift expects a map on X^2, got " + phi.space().name());
  return fd_relocate(phi, phi.space().power(3), slot_map(pair));
}

FormalDiffeo fd_swap(const FormalDiffeo& phi) {
  if (phi.space().slots() != 2) throw MismatchError("fd_swap expects a map on X^2, got " + phi.space().name());
  return fd_relocate(phi, phi.space(), {2, 1});
}

PolyVectorField classical_limit(const FormalDiffeo& R) {
  if (R.order() < 1) throw DomainError("classical_limit needs truncation order >= 1");
  std::vector<MPoly> comps;
  for (const auto& s : R.images()) comps.push_back(s[1]);
  return PolyVectorField(R.space(), std::move(comps));
}

bool QuantumResidual::qybe_passes() const { return all_zero(qybe); }
bool QuantumResidual::unitarity_passes() const { return all_zero(unitarity); }

std::map<std::string, HSeries> check_qybe(const FormalDiffeo& R) {
  if (R.space().slots() != 2) throw MismatchError("check_qybe expects a map on X^2, got " + R.space().name());
  const auto r12 = fd_lift(R, SlotPair::k12);
  const auto r13 = fd_lift(R, SlotPair::k13);
  const auto r23 = fd_lift(R, SlotPair::k23);
  const auto lhs = fd_compose(fd_compose(r12, r13), r23);
  const auto rhs = fd_compose(fd_compose(r23, r13), r12);
  return difference(lhs, rhs);
}

std::map<std::string, HSeries> check_unitarity_q(const FormalDiffeo& R) {
  if (R.space().slots() != 2) {
    throw MismatchError("check_unitarity_q expects a map on X^2, got " + R.space().name());
  }
  return difference(fd_compose(R, fd_swap(R)), FormalDiffeo::identity(R.space(), R.order()));
}

QuantumResidual check_quantum(const FormalDiffeo& R) {
  return QuantumResidual{check_qybe(R), check_unitarity_q(R)};
}

}  // namespace rquant
