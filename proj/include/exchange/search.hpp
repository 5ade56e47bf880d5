#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "exchange/errors.hpp"
#include "exchange/family.hpp"
#include "exchange/numbers.hpp"
#include "exchange/verifiers.hpp"

namespace exchange {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;
/// Largest n for the downward-closed family search.
inline constexpr int kMaxDownwardClosedSearch = 5;
/// Largest n for searches over arbitrary atomic families.
inline constexpr int kMaxAtomicSearch = 4;
/// Largest n for min_rank (families restricted to small members).
inline constexpr int kMaxRankSearch = 5;

/// Thrown when a search exceeds its node budget. Carries what was settled:
/// no qualifying family has fewer than `settled_below` members (or, for the
/// rank search, rank below it).
class BudgetExceeded : public ScaleError {
 public:
  BudgetExceeded(std::uint64_t nodes, std::int64_t settled_below)
      : ScaleError("search budget exceeded after " + std::to_string(nodes) + " nodes; nothing below " +
                   std::to_string(settled_below)),
        nodes_(nodes),
        settled_below_(settled_below) {}
  std::uint64_t nodes() const { return nodes_; }
  std::int64_t settled_below() const { return settled_below_; }

 private:
  std::uint64_t nodes_;
  std::int64_t settled_below_;
};

struct SearchQuery {
  int n = 1;
  Condition condition = Condition::kCond3;
  bool downward_closed = true;
  std::uint64_t budget = kDefaultNodeBudget;
};

struct SearchResult {
  int n = 0;
  Condition condition = Condition::kCond3;
  bool downward_closed = true;
  BigInt minimum;
  Family witness;
  std::uint64_t nodes_explored = 0;
};

/// Smallest atomic family on [n] (downward closed when requested) passing
/// the condition. Sizes are tried in increasing order, so the first family
/// found is minimal. Throws ScaleError ("search scale exceeded") past the
/// size limits above.
SearchResult min_family_size(const SearchQuery& query);

struct RankSearchResult {
  int n = 0;
  int minimum = 0;
  Family witness;
  std::uint64_t nodes_explored = 0;
};

/// Smallest rank of an atomic family on [n] passing the weak exchange
/// condition. Ranks are tried in increasing order over all atomic families
/// whose members have at most that many elements.
RankSearchResult min_rank(int n, std::uint64_t budget = kDefaultNodeBudget);

/// Calls visit(family) for every atomic downward-closed family on [n].
void for_each_atomic_downward_closed(int n, const std::function<void(const Family&)>& visit);

/// k-uniform hypergraph on [n].
struct Hypergraph {
  int n = 0;
  int k = 0;
  std::vector<SubsetMask> edges;

  /// Throws std::invalid_argument if an edge is not a k-subset of [n].
  static Hypergraph make(int n, int k, std::vector<SubsetMask> edges);
  static Hypergraph complete(int n, int k);
};

/// Largest vertex set containing no edge. Exact, n <= 24.
int independence_number(const Hypergraph& h);

/// C(n,k) / C(alpha,k) in lowest terms; needs 0 <= k <= alpha <= n.
BigRational kns_bound(int n, int k, int alpha);

/// Evaluated bounds for a given n.
struct BoundEntry {
  std::string name;
  std::string value;
  bool heuristic = false;
};

std::vector<BoundEntry> bound_report(long long n);
void write_bound_report(std::ostream& out, const std::vector<BoundEntry>& report);

}  // namespace exchange
