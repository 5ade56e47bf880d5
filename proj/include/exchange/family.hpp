#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "exchange/subset_mask.hpp"

namespace exchange {

using BigInt = boost::multiprecision::cpp_int;

using MemberPredicate = std::function<bool(SubsetMask)>;
using MemberVisitor = std::function<void(SubsetMask)>;
using MemberEnumerator = std::function<void(const MemberVisitor&)>;

/// Ground sets up to this size are enumerated by scanning all 2^n masks.
inline constexpr int kScanLimit = 24;

/// Description of a family given by a membership oracle.
struct ImplicitFamily {
  std::string name;
  MemberPredicate contains;
  /// Yields every member exactly once, in any order. Optional for n <= kScanLimit.
  MemberEnumerator enumerate;
  std::optional<BigInt> size;
  std::optional<int> rank;
};

/// A set system over [n]. Immutable once built; copies share state.
class Family {
 public:
  /// The empty family on the empty ground set.
  Family();
  /// Explicit family; members are deduplicated and put in canonical order.
  /// Throws std::invalid_argument if a member has elements outside [n].
  static Family from_members(int n, std::vector<SubsetMask> members, std::string name = "explicit");
  static Family from_oracle(int n, ImplicitFamily spec);

  int ground_size() const;
  bool is_explicit() const;
  const std::string& name() const;

  bool contains(SubsetMask a) const;

  /// Visits every member once. Explicit families visit in canonical order;
  /// implicit ones scan 2^n for n <= kScanLimit and use the structured
  /// enumerator beyond.
  void for_each_member(const MemberVisitor& visit) const;
  /// Filtered scan of all 2^n masks. Throws ScaleError above kScanLimit.
  void scan_members(const MemberVisitor& visit) const;
  /// The structured enumerator of an implicit family (falls back to the
  /// scan when none was supplied).
  void enumerate_structured(const MemberVisitor& visit) const;

  /// All members in canonical order.
  std::vector<SubsetMask> members() const;
  /// Number of members, by enumeration.
  std::uint64_t count() const;
  /// Explicit copy of this family.
  Family materialize() const;

  const std::optional<BigInt>& size_formula() const;
  const std::optional<int>& rank_formula() const;

 private:
  struct State;
  explicit Family(std::shared_ptr<const State> state);
  std::shared_ptr<const State> state_;
};

bool is_atomic(const Family& family);
/// Checks one-element deletions, which is equivalent to full downward closure.
bool is_downward_closed(const Family& family);
/// Largest member cardinality, by enumeration. Throws std::domain_error
/// ("empty family") when the family has no members.
int rank(const Family& family);

/// Downward closure of the given sets, together with the empty set and all
/// singletons of [n].
Family atomic_downward_closure(int n, const std::vector<SubsetMask>& generators);

}  // namespace exchange
