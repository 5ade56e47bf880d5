#pragma once

#include <vector>

#include "exchange/subset_mask.hpp"

namespace exchange {

/// Pairwise-disjoint parts covering [n].
class Partition {
 public:
  /// Throws std::invalid_argument unless the parts are disjoint and cover [n].
  Partition(int n, std::vector<SubsetMask> parts);

  /// Consecutive blocks {1..sizes[0]}, {sizes[0]+1..}, ... covering [sum of sizes].
  static Partition consecutive(const std::vector<int>& sizes);
  /// t consecutive blocks of size k each.
  static Partition equal_blocks(int k, int t);

  int ground_size() const { return n_; }
  int part_count() const { return static_cast<int>(parts_.size()); }
  const std::vector<SubsetMask>& parts() const { return parts_; }
  const SubsetMask& part(int index) const { return parts_.at(static_cast<std::size_t>(index)); }
  /// Common part size, or -1 when the parts differ in size.
  int uniform_part_size() const;

  /// |A ∩ X_j| for every part, in part order.
  std::vector<int> intersection_counts(SubsetMask a) const;

 private:
  int n_;
  std::vector<SubsetMask> parts_;
};

/// Per-part intersection statistics of a set against an equipartition into
/// parts of size k. p(i) counts parts meeting the set in exactly i elements,
/// s(i) in at least i. Both are stored from index k down to 0.
class ProfileVector {
 public:
  /// Builds the profile from exact counts p(k), ..., p(0) (descending).
  static ProfileVector from_exact_counts(std::vector<int> p_descending);

  int part_size() const { return k_; }
  int p(int i) const { return p_[static_cast<std::size_t>(k_ - i)]; }
  int s(int i) const { return s_[static_cast<std::size_t>(k_ - i)]; }
  /// (p(k), ..., p(0)).
  const std::vector<int>& p_vector() const { return p_; }
  /// (s(k), ..., s(0)).
  const std::vector<int>& s_vector() const { return s_; }
  /// Σ i·p(i), the size of the profiled set.
  int set_size() const;

  bool operator==(const ProfileVector&) const = default;

 private:
  int k_ = 0;
  std::vector<int> p_;
  std::vector<int> s_;
};

/// Profile of a against an equipartition. Throws std::invalid_argument
/// ("unequal parts") if the parts are not all the same size.
ProfileVector profile(SubsetMask a, const Partition& partition);

}  // namespace exchange
