#pragma once

#include <map>
#include <string>
#include <vector>

namespace rquant {

/// Affine space X = A^d, or a product X^k. Coordinates of a product carry a
/// slot tag: base name "x" in slot 2 becomes "x_2". Placements between
/// products are therefore pure renamings.
class Space {
 public:
  Space() = default;
  Space(std::vector<std::string> base, int slots = 1);

  const std::vector<std::string>& base() const { return base_; }
  int slots() const { return slots_; }
  std::size_t dim() const { return base_.size() * static_cast<std::size_t>(slots_); }
  std::size_t base_dim() const { return base_.size(); }
  const std::vector<std::string>& coords() const { return coords_; }

  /// Name of base coordinate j in the given slot (1-based).
  std::string coord(int slot, std::size_t j) const;
  /// Position of a coordinate name in coords(), or dim() if absent.
  std::size_t index_of(const std::string& name) const;
  /// (slot, base index) of coordinate i.
  std::pair<int, std::size_t> slot_of(std::size_t i) const;

  Space base_space() const { return Space(base_, 1); }
  Space power(int k) const { return Space(base_, k); }

  /// "X" for a single slot, "X^k" otherwise.
  std::string name() const;

  bool operator==(const Space& o) const { return base_ == o.base_ && slots_ == o.slots_; }

 private:
  std::vector<std::string> base_;
  int slots_ = 1;
  std::vector<std::string> coords_;
};

/// Renaming that carries coordinates of `from` (slot s) to `to` (slot
/// slot_map[s-1]). Both spaces must share the base.
std::map<std::string, std::string> slot_renaming(const Space& from, const Space& to,
                                                 const std::vector<int>& slot_map);

}  // namespace rquant
