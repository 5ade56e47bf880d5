#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "exchange/family.hpp"

namespace exchange {

/// Exchange conditions between pairs of members A, B.
enum class Condition {
  kWeak,     ///< some a∈A gives B+a ∈ F, or some b∈B gives A+b ∈ F
  kCond3,    ///< swap clauses: B+a, A+b−a ∈ F, or A+b, B+a−b ∈ F
  kOrdered,  ///< weak, and if |A| < |B| then some b∈B gives A+b ∈ F
  kStrong,   ///< if |A| <= |B| then some b∈B gives A+b ∈ F
  kBoth,     ///< non-empty A, B: some a, b give B+a ∈ F and A+b ∈ F
  kMatroid,  ///< |A| = |B| disjoint, or |A| < |B|: some b gives A+b ∈ F
};

inline constexpr Condition kAllConditions[] = {Condition::kWeak,   Condition::kCond3, Condition::kOrdered,
                                               Condition::kStrong, Condition::kBoth,  Condition::kMatroid};

std::string_view condition_name(Condition c);
std::optional<Condition> parse_condition(std::string_view name);

/// Which b the matroid-like condition may use when A and B overlap.
enum class MatroidReading {
  kOutsideA,  ///< b ∈ B∖A (default)
  kAnyOfB,    ///< b ∈ B; overlapping pairs then pass trivially
};

/// A pair of members violating a condition.
struct Witness {
  Condition condition;
  SubsetMask a;
  SubsetMask b;
  std::string detail;
};

struct VerifyOptions {
  unsigned threads = 1;
  MatroidReading matroid_reading = MatroidReading::kOutsideA;
};

/// Checks one ordered pair. Returns the failure detail, or nullopt when the
/// pair satisfies the condition or is not a pair the condition quantifies over
/// (e.g. overlapping sets for the disjoint-pair conditions).
///
/// Empty sets: pairs of two empty sets always pass. For condition 3, when
/// exactly one set is empty the missing element drops out of the clause, so
/// A = ∅ passes iff some b∈B has {b} ∈ F and B−b ∈ F.
std::optional<std::string> check_pair(Condition condition, const Family& family, SubsetMask a, SubsetMask b,
                                      MatroidReading reading = MatroidReading::kOutsideA);

/// Scans ordered pairs of members by ascending (|A|+|B|, A, B) in canonical
/// order and returns the first violation, or nullopt if the family passes.
/// With several threads the result is still the scan-order-first violation.
std::optional<Witness> verify(Condition condition, const Family& family, const VerifyOptions& options = {});

std::optional<Witness> check_weak_exchange(const Family& family);
std::optional<Witness> check_condition3(const Family& family);
std::optional<Witness> check_size_ordered(const Family& family);
std::optional<Witness> check_strong_ordered(const Family& family);
std::optional<Witness> check_both(const Family& family);
std::optional<Witness> check_matroid_like(const Family& family, MatroidReading reading = MatroidReading::kOutsideA);

/// The explicit ordered-condition counterexample in aak_family(s, t):
/// A = {a1, a2, a2'} with a1 the first element of block 1 and a2, a2' the
/// first two of block 2, B = block 1 minus a1. Checked against the
/// membership oracle. nullopt when s <= 4 or t < 2, where no such pair exists.
std::optional<Witness> find_thm2_violation_in_aak(int s, int t);

/// `VIOLATION <condition> A={...} B={...} <detail>`
std::string format_witness(const Witness& w);

}  // namespace exchange
