#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exchange {

/// Largest ground set a SubsetMask can address.
inline constexpr int kMaxGroundSize = 64;

/// A subset of the ground set [n] = {1, ..., n}, stored as a 64-bit vector.
/// Element e lives in bit e-1.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static SubsetMask of(std::initializer_list<int> elements);
  static SubsetMask of(const std::vector<int>& elements);
  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static SubsetMask range(int lo, int hi);
  /// [n] itself.
  static SubsetMask full(int n);
  static constexpr SubsetMask singleton(int e) { return SubsetMask(std::uint64_t{1} << (e - 1)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int cardinality() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1U; }
  constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint_from(SubsetMask other) const { return (bits_ & other.bits_) == 0; }
  /// Largest element, 0 for the empty set.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }
  /// Smallest element, 0 for the empty set.
  constexpr int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  constexpr SubsetMask with(int e) const { return SubsetMask(bits_ | (std::uint64_t{1} << (e - 1))); }
  constexpr SubsetMask without(int e) const { return SubsetMask(bits_ & ~(std::uint64_t{1} << (e - 1))); }

  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  /// Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }
  constexpr SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }

  constexpr bool operator==(const SubsetMask&) const = default;

  /// Elements in increasing order.
  std::vector<int> elements() const;

  /// Calls fn(e) for every element e in increasing order.
  template <typename Fn>
  constexpr void for_each(Fn&& fn) const {
    for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      fn(std::countr_zero(rest) + 1);
    }
  }

  /// "{1,2,5}" style rendering.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Canonical family order: by cardinality, then by numeric value of the bits.
struct CanonicalLess {
  constexpr bool operator()(SubsetMask a, SubsetMask b) const {
    const int ca = a.cardinality();
    const int cb = b.cardinality();
    return ca != cb ? ca < cb : a.bits() < b.bits();
  }
};

constexpr std::strong_ordering canonical_compare(SubsetMask a, SubsetMask b) {
  if (auto c = a.cardinality() <=> b.cardinality(); c != 0) return c;
  return a.bits() <=> b.bits();
}

/// Binomial coefficient in 64-bit arithmetic; valid while the result fits.
constexpr std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace exchange

template <>
struct std::hash<exchange::SubsetMask> {
  std::size_t operator()(exchange::SubsetMask m) const noexcept { return std::hash<std::uint64_t>{}(m.bits()); }
};
