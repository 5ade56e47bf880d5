#include "exchange/verifiers.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "exchange/constructions.hpp"

namespace exchange {

namespace {

constexpr std::string_view kWeakDetail = "no a in A with B+a in F and no b in B with A+b in F";
constexpr std::string_view kAugmentDetail = "no b in B with A+b in F";

bool some_augments(const Family& f, SubsetMask target, SubsetMask from) {
  bool found = false;
  from.for_each([&](int e) {
    if (!found && f.contains(target.with(e))) found = true;
  });
  return found;
}

bool weak_holds(const Family& f, SubsetMask a, SubsetMask b) {
  if (a.empty() && b.empty()) return true;
  return some_augments(f, b, a) || some_augments(f, a, b);
}

bool cond3_holds(const Family& f, SubsetMask a, SubsetMask b) {
  if (a.empty() && b.empty()) return true;
  if (a.empty() || b.empty()) {
    // Only the clause growing the empty set survives: {x} ∈ F and S−x ∈ F.
    const SubsetMask nonempty = a.empty() ? b : a;
    bool found = false;
    nonempty.for_each([&](int x) {
      if (!found && f.contains(SubsetMask::singleton(x)) && f.contains(nonempty.without(x))) found = true;
    });
    return found;
  }
  bool found = false;
  a.for_each([&](int x) {
    if (found) return;
    const bool b_plus_a = f.contains(b.with(x));
    b.for_each([&](int y) {
      if (found) return;
      if (b_plus_a && f.contains(a.with(y).without(x))) found = true;
      else if (f.contains(a.with(y)) && f.contains(b.with(x).without(y))) found = true;
    });
  });
  return found;
}

bool both_holds(const Family& f, SubsetMask a, SubsetMask b) {
  if (a.empty() || b.empty()) return true;
  return some_augments(f, b, a) && some_augments(f, a, b);
}

std::size_t to_index(int value) { return static_cast<std::size_t>(value); }

}  // namespace

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::kWeak: return "weak";
    case Condition::kCond3: return "cond3";
    case Condition::kOrdered: return "ordered";
    case Condition::kStrong: return "strong";
    case Condition::kBoth: return "both";
    case Condition::kMatroid: return "matroid";
  }
  throw std::logic_error("unknown condition");
}

std::optional<Condition> parse_condition(std::string_view name) {
  for (Condition c : kAllConditions) {
    if (condition_name(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<std::string> check_pair(Condition condition, const Family& f, SubsetMask a, SubsetMask b,
                                      MatroidReading reading) {
  const bool disjoint = a.disjoint_from(b);
  switch (condition) {
    case Condition::kWeak:
      if (!disjoint || weak_holds(f, a, b)) return std::nullopt;
      return std::string(kWeakDetail);
    case Condition::kCond3:
      if (!disjoint || cond3_holds(f, a, b)) return std::nullopt;
      return std::string("no (a,b) satisfies either swap clause");
    case Condition::kOrdered:
      if (!disjoint) return std::nullopt;
      if (!weak_holds(f, a, b)) return std::string(kWeakDetail);
      if (a.cardinality() < b.cardinality() && !some_augments(f, a, b)) {
        return "|A|<|B| and " + std::string(kAugmentDetail);
      }
      return std::nullopt;
    case Condition::kStrong:
      if (!disjoint || b.empty() || a.cardinality() > b.cardinality() || some_augments(f, a, b)) return std::nullopt;
      return "|A|<=|B| and " + std::string(kAugmentDetail);
    case Condition::kBoth:
      if (!disjoint || both_holds(f, a, b)) return std::nullopt;
      return std::string("no (a,b) with B+a in F and A+b in F");
    case Condition::kMatroid: {
      const int ca = a.cardinality();
      const int cb = b.cardinality();
      const bool qualifies = (ca == cb && disjoint) || ca < cb;
      if (!qualifies || b.empty()) return std::nullopt;
      if (reading == MatroidReading::kAnyOfB && !disjoint) return std::nullopt;
      if (some_augments(f, a, b - a)) return std::nullopt;
      return std::string("no b in B\\A with A+b in F");
    }
  }
  throw std::logic_error("unknown condition");
}

std::optional<Witness> verify(Condition condition, const Family& family, const VerifyOptions& options) {
  const std::vector<SubsetMask> members = family.members();
  if (members.empty()) return std::nullopt;
  const int max_card = members.back().cardinality();
  // first[c] = index of the first member of cardinality c; first[max_card+1] = size.
  std::vector<std::size_t> first(to_index(max_card) + 2, members.size());
  for (std::size_t i = members.size(); i-- > 0;) first[to_index(members[i].cardinality())] = i;
  for (int c = max_card; c >= 0; --c) first[to_index(c)] = std::min(first[to_index(c)], first[to_index(c) + 1]);

  const unsigned threads = std::max(1U, options.threads);
  for (int total = 0; total <= 2 * max_card; ++total) {
    const int ca_lo = std::max(0, total - max_card);
    const int ca_hi = std::min(total, max_card);
    const std::size_t a_begin = first[to_index(ca_lo)];
    const std::size_t a_end = first[to_index(ca_hi) + 1];
    if (a_begin >= a_end) continue;

    // Scans A indices [lo, hi) and returns the first failing (A, B) index pair.
    // Stops early once a smaller A index is known to fail.
    std::atomic<std::size_t> best_a{std::numeric_limits<std::size_t>::max()};
    auto scan = [&](std::size_t lo, std::size_t hi, std::optional<Witness>& out) {
      for (std::size_t i = lo; i < hi && i < best_a.load(std::memory_order_relaxed); ++i) {
        const SubsetMask a = members[i];
        const int cb = total - a.cardinality();
        for (std::size_t j = first[to_index(cb)]; j < first[to_index(cb) + 1]; ++j) {
          if (auto detail = check_pair(condition, family, a, members[j], options.matroid_reading)) {
            out = Witness{condition, a, members[j], std::move(*detail)};
            std::size_t current = best_a.load();
            while (i < current && !best_a.compare_exchange_weak(current, i)) {
            }
            return;
          }
        }
      }
    };

    const std::size_t span = a_end - a_begin;
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, span));
    std::vector<std::optional<Witness>> found(workers);
    if (workers == 1) {
      scan(a_begin, a_end, found[0]);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (span + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = a_begin + w * chunk;
        const std::size_t hi = std::min(a_end, lo + chunk);
        pool.emplace_back([&, lo, hi, w] { scan(lo, hi, found[w]); });
      }
    }
    // Chunks are in scan order, so the first chunk with a hit holds the minimum.
    for (auto& hit : found) {
      if (hit) return std::move(hit);
    }
  }
  return std::nullopt;
}

std::optional<Witness> check_weak_exchange(const Family& f) { return verify(Condition::kWeak, f); }
std::optional<Witness> check_condition3(const Family& f) { return verify(Condition::kCond3, f); }
std::optional<Witness> check_size_ordered(const Family& f) { return verify(Condition::kOrdered, f); }
std::optional<Witness> check_strong_ordered(const Family& f) { return verify(Condition::kStrong, f); }
std::optional<Witness> check_both(const Family& f) { return verify(Condition::kBoth, f); }
std::optional<Witness> check_matroid_like(const Family& f, MatroidReading reading) {
  VerifyOptions options;
  options.matroid_reading = reading;
  return verify(Condition::kMatroid, f, options);
}

std::optional<Witness> find_thm2_violation_in_aak(int s, int t) {
  if (s <= 4 || t < 2) return std::nullopt;
  const Family family = aak_family(s, t);
  const SubsetMask a = SubsetMask::of({1, s + 1, s + 2});
  const SubsetMask b = SubsetMask::range(2, s);
  if (!family.contains(a) || !family.contains(b)) throw std::logic_error("counterexample sets are not members");
  auto detail = check_pair(Condition::kOrdered, family, a, b);
  if (!detail) throw std::logic_error("counterexample pair satisfies the ordered condition");
  return Witness{Condition::kOrdered, a, b, std::move(*detail)};
}

std::string format_witness(const Witness& w) {
  return "VIOLATION " + std::string(condition_name(w.condition)) + " A=" + w.a.to_string() + " B=" + w.b.to_string() +
         " " + w.detail;
}

}  // namespace exchange
