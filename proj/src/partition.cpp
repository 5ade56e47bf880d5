#include "exchange/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace exchange {

Partition::Partition(int n, std::vector<SubsetMask> parts) : n_(n), parts_(std::move(parts)) {
  SubsetMask seen;
  for (SubsetMask part : parts_) {
    if (!part.disjoint_from(seen)) throw std::invalid_argument("partition parts overlap");
    seen |= part;
  }
  if (seen != SubsetMask::full(n)) throw std::invalid_argument("partition parts do not cover the ground set");
}

Partition Partition::consecutive(const std::vector<int>& sizes) {
  std::vector<SubsetMask> parts;
  int next = 1;
  for (int size : sizes) {
    if (size < 0) throw std::invalid_argument("negative part size");
    parts.push_back(SubsetMask::range(next, next + size - 1));
    next += size;
  }
  return Partition(next - 1, std::move(parts));
}

Partition Partition::equal_blocks(int k, int t) { return consecutive(std::vector<int>(static_cast<std::size_t>(t), k)); }

int Partition::uniform_part_size() const {
  if (parts_.empty()) return -1;
  const int k = parts_.front().cardinality();
  for (SubsetMask part : parts_) {
    if (part.cardinality() != k) return -1;
  }
  return k;
}

std::vector<int> Partition::intersection_counts(SubsetMask a) const {
  std::vector<int> counts;
  counts.reserve(parts_.size());
  for (SubsetMask part : parts_) counts.push_back((a & part).cardinality());
  return counts;
}

ProfileVector ProfileVector::from_exact_counts(std::vector<int> p_descending) {
  if (p_descending.empty()) throw std::invalid_argument("profile needs at least one entry");
  ProfileVector v;
  v.k_ = static_cast<int>(p_descending.size()) - 1;
  v.p_ = std::move(p_descending);
  v.s_.resize(v.p_.size());
  std::partial_sum(v.p_.begin(), v.p_.end(), v.s_.begin());
  return v;
}

int ProfileVector::set_size() const {
  int total = 0;
  for (int i = 1; i <= k_; ++i) total += i * p(i);
  return total;
}

ProfileVector profile(SubsetMask a, const Partition& partition) {
  const int k = partition.uniform_part_size();
  if (k < 0) throw std::invalid_argument("unequal parts");
  std::vector<int> p(static_cast<std::size_t>(k) + 1, 0);
  for (int c : partition.intersection_counts(a)) ++p[static_cast<std::size_t>(k - c)];
  return ProfileVector::from_exact_counts(std::move(p));
}

}  // namespace exchange
