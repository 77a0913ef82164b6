#include "rquant/space.hpp"

#include <algorithm>
#include <set>

#include "rquant/errors.hpp"

namespace rquant {

Space::Space(std::vector<std::string> base, int slots) : base_(std::move(base)), slots_(slots) {
  if (slots_ < 1) throw DomainError("a space needs at least one slot");
  if (base_.empty()) throw DomainError("a space needs at least one coordinate");
  std::set<std::string> seen(base_.begin(), base_.end());
  if (seen.size() != base_.size()) throw DomainError("duplicate coordinate names in space");
  for (int s = 1; s <= slots_; ++s)
    for (std::size_t j = 0; j < base_.size(); ++j) coords_.push_back(coord(s, j));
}

std::string Space::coord(int slot, std::size_t j) const {
  if (slots_ == 1) return base_.at(j);
  return base_.at(j) + "_" + std::to_string(slot);
}

std::size_t Space::index_of(const std::string& name) const {
  auto it = std::find(coords_.begin(), coords_.end(), name);
  return static_cast<std::size_t>(it - coords_.begin());
}

std::pair<int, std::size_t> Space::slot_of(std::size_t i) const {
  return {static_cast<int>(i / base_.size()) + 1, i % base_.size()};
}

std::string Space::name() const {
  return slots_ == 1 ? std::string("X") : "X^" + std::to_string(slots_);
}

std::map<std::string, std::string> slot_renaming(const Space& from, const Space& to,
                                                 const std::vector<int>& slot_map) {
  if (from.base() != to.base()) throw MismatchError("slot renaming between different base spaces");
  if (slot_map.size() != static_cast<std::size_t>(from.slots())) {
    throw MismatchError("slot map size does not match source space");
  }
  std::map<std::string, std::string> out;
  for (int s = 1; s <= from.slots(); ++s) {
    const int t = slot_map[static_cast<std::size_t>(s - 1)];
    if (t < 1 || t > to.slots()) throw MismatchError("slot map points outside target space");
    for (std::size_t j = 0; j < from.base_dim(); ++j) out[from.coord(s, j)] = to.coord(t, j);
  }
  return out;
}

}  // namespace rquant
