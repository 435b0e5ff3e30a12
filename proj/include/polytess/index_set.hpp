#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace polytess {

/// A subset of {1, ..., ambient}, kept sorted and duplicate-free. Subsets
/// index cube vertices, face barycenters, and the cuboid tiles, and the
/// bijection with bit masks (element j <-> bit j-1) fixes the canonical
/// binary-counter enumeration order used everywhere.
class IndexSet {
 public:
  IndexSet(int ambient, std::vector<int> members)
      : ambient_(ambient), members_(std::move(members)) {
    if (ambient_ < 1) throw std::invalid_argument("IndexSet: ambient must be >= 1");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int j : members_) {
      if (j < 1 || j > ambient_) {
        throw std::invalid_argument("IndexSet: member outside [1, ambient]");
      }
    }
  }

  IndexSet(int ambient, std::initializer_list<int> members)
      : IndexSet(ambient, std::vector<int>(members)) {}

  static IndexSet empty(int ambient) { return IndexSet(ambient, std::vector<int>{}); }

  static IndexSet full(int ambient) {
    std::vector<int> all(static_cast<size_t>(ambient));
    for (int j = 1; j <= ambient; ++j) all[static_cast<size_t>(j - 1)] = j;
    return IndexSet(ambient, std::move(all));
  }

  /// Bit i-1 of mask set <=> element i belongs to the set.
  static IndexSet from_mask(int ambient, std::uint64_t mask) {
    std::vector<int> members;
    for (int j = 1; j <= ambient; ++j) {
      if (mask & (std::uint64_t{1} << (j - 1))) members.push_back(j);
    }
    return IndexSet(ambient, std::move(members));
  }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int j : members_) m |= std::uint64_t{1} << (j - 1);
    return m;
  }

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool is_empty() const { return members_.empty(); }

  bool contains(int j) const {
    return std::binary_search(members_.begin(), members_.end(), j);
  }

  /// The set with j adjoined.
  IndexSet with(int j) const {
    std::vector<int> m = members_;
    m.push_back(j);
    return IndexSet(ambient_, std::move(m));
  }

  const std::vector<int>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const IndexSet& other) const = default;

 private:
  int ambient_;
  std::vector<int> members_;
};

}  // namespace polytess
