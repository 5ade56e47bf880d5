#include "exchange/search.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "exchange/constructions.hpp"

namespace exchange {

namespace {

std::vector<SubsetMask> sets_by_size(int n, int lo, int hi) {
  std::vector<SubsetMask> out;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < end; ++bits) {
    const int c = std::popcount(bits);
    if (c >= lo && c <= hi) out.emplace_back(bits);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::vector<SubsetMask> atomic_base(int n) {
  std::vector<SubsetMask> base{SubsetMask()};
  for (int e = 1; e <= n; ++e) base.push_back(SubsetMask::singleton(e));
  return base;
}

// Include/exclude search over a list of candidate sets added to the atomic
// base. With `closed`, a candidate may only be included once all of its
// one-smaller subsets are present; candidates come in canonical order, so
// every downward-closed family is produced exactly once.
class SubfamilySearch {
 public:
  using Accept = std::function<bool(const Family&)>;

  SubfamilySearch(int n, std::vector<SubsetMask> candidates, bool closed, std::uint64_t budget)
      : n_(n), candidates_(std::move(candidates)), closed_(closed), budget_(budget) {
    chosen_ = atomic_base(n);
    for (SubsetMask m : chosen_) present_ |= std::uint64_t{1} << m.bits();
  }

  /// First family (in include-first order) with exactly `extra` candidates
  /// that accept() approves; any number of candidates when extra < 0.
  std::optional<Family> find(int extra, const Accept& accept, std::int64_t settled_below) {
    extra_ = extra;
    accept_ = &accept;
    settled_below_ = settled_below;
    found_.reset();
    dfs(0, 0);
    return found_;
  }

  /// Visits every family reachable by the include/exclude tree.
  void for_each(const std::function<void(const Family&)>& visit) {
    const Accept accept = [&](const Family& f) {
      visit(f);
      return false;
    };
    find(-1, accept, 0);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool includable(SubsetMask m) const {
    if (!closed_) return true;
    bool ok = true;
    m.for_each([&](int e) {
      if (!((present_ >> m.without(e).bits()) & 1U)) ok = false;
    });
    return ok;
  }

  bool dfs(std::size_t index, int added) {
    if (++nodes_ > budget_) throw BudgetExceeded(nodes_, settled_below_);
    const bool complete = extra_ >= 0 ? added == extra_ : index == candidates_.size();
    if (complete) {
      Family family = Family::from_members(n_, chosen_, "search");
      if ((*accept_)(family)) {
        found_ = std::move(family);
        return true;
      }
      return false;
    }
    if (index == candidates_.size()) return false;
    if (extra_ >= 0 && static_cast<int>(candidates_.size() - index) < extra_ - added) return false;

    const SubsetMask m = candidates_[index];
    if (includable(m)) {
      chosen_.push_back(m);
      present_ |= std::uint64_t{1} << m.bits();
      const bool hit = dfs(index + 1, added + 1);
      present_ &= ~(std::uint64_t{1} << m.bits());
      chosen_.pop_back();
      if (hit) return true;
    }
    return dfs(index + 1, added);
  }

  int n_;
  std::vector<SubsetMask> candidates_;
  bool closed_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<SubsetMask> chosen_;
  std::uint64_t present_ = 0;  // bit m set when mask m is in the family (n <= 6)
  int extra_ = -1;
  const Accept* accept_ = nullptr;
  std::int64_t settled_below_ = 0;
  std::optional<Family> found_;
};

}  // namespace

SearchResult min_family_size(const SearchQuery& q) {
  const int limit = q.downward_closed ? kMaxDownwardClosedSearch : kMaxAtomicSearch;
  if (q.n < 1 || q.n > limit) {
    throw ScaleError("search scale exceeded: n=" + std::to_string(q.n) + " outside 1.." + std::to_string(limit));
  }
  SubfamilySearch search(q.n, sets_by_size(q.n, 2, q.n), q.downward_closed, q.budget);
  const SubfamilySearch::Accept accept = [&](const Family& f) { return !verify(q.condition, f).has_value(); };
  const int base = q.n + 1;
  for (int size = base; size <= (1 << q.n); ++size) {
    if (auto found = search.find(size - base, accept, size)) {
      return SearchResult{q.n, q.condition, q.downward_closed, size, std::move(*found), search.nodes()};
    }
  }
  // The power set passes every condition, so this is unreachable.
  throw std::logic_error("no family passes " + std::string(condition_name(q.condition)));
}

RankSearchResult min_rank(int n, std::uint64_t budget) {
  if (n < 1 || n > kMaxRankSearch) {
    throw ScaleError("search scale exceeded: n=" + std::to_string(n) + " outside 1.." + std::to_string(kMaxRankSearch));
  }
  const SubfamilySearch::Accept accept = [](const Family& f) { return !check_weak_exchange(f).has_value(); };
  std::uint64_t nodes = 0;
  for (int r = 1; r <= n; ++r) {
    SubfamilySearch search(n, sets_by_size(n, 2, r), false, budget - nodes);
    std::optional<Family> found;
    try {
      found = search.find(-1, accept, r);
    } catch (const BudgetExceeded& e) {
      throw BudgetExceeded(nodes + e.nodes(), r);
    }
    nodes += search.nodes();
    if (found) return RankSearchResult{n, rank(*found), std::move(*found), nodes};
  }
  throw std::logic_error("no atomic family passes the weak exchange condition");
}

void for_each_atomic_downward_closed(int n, const std::function<void(const Family&)>& visit) {
  if (n < 1 || n > kMaxDownwardClosedSearch) {
    throw ScaleError("search scale exceeded: n=" + std::to_string(n));
  }
  SubfamilySearch search(n, sets_by_size(n, 2, n), true, kDefaultNodeBudget);
  search.for_each(visit);
}

Hypergraph Hypergraph::make(int n, int k, std::vector<SubsetMask> edges) {
  if (n < 0 || n > kMaxGroundSize || k < 0) throw std::invalid_argument("bad hypergraph dimensions");
  for (SubsetMask e : edges) {
    if (e.cardinality() != k || e.max_element() > n) {
      throw std::invalid_argument("edge " + e.to_string() + " is not a " + std::to_string(k) + "-subset of [" +
                                  std::to_string(n) + "]");
    }
  }
  return Hypergraph{n, k, std::move(edges)};
}

Hypergraph Hypergraph::complete(int n, int k) {
  if (n > kScanLimit) throw ScaleError("complete hypergraph limited to n <= 24");
  return make(n, k, sets_by_size(n, k, k));
}

int independence_number(const Hypergraph& h) {
  if (h.n > kScanLimit) throw ScaleError("independence number limited to n <= 24");
  // Edges grouped by their largest vertex: adding v can only complete those.
  std::vector<std::vector<SubsetMask>> closing(static_cast<std::size_t>(h.n) + 1);
  for (SubsetMask e : h.edges) closing[static_cast<std::size_t>(e.max_element())].push_back(e);
  int best = 0;
  auto dfs = [&](auto&& self, int v, SubsetMask current, int size) -> void {
    if (size + (h.n - v + 1) <= best) return;
    if (v > h.n) {
      best = size;
      return;
    }
    const SubsetMask grown = current.with(v);
    bool free = true;
    for (SubsetMask e : closing[static_cast<std::size_t>(v)]) {
      if (e.subset_of(grown)) {
        free = false;
        break;
      }
    }
    if (free) self(self, v + 1, grown, size + 1);
    self(self, v + 1, current, size);
  };
  dfs(dfs, 1, SubsetMask(), 0);
  return best;
}

BigRational kns_bound(int n, int k, int alpha) {
  if (k < 0 || k > alpha || alpha > n) throw std::invalid_argument("kns bound needs 0 <= k <= alpha <= n");
  return BigRational(binomial(n, k), binomial(alpha, k));
}

namespace {

std::string format_double(double x) {
  std::ostringstream out;
  out << std::setprecision(6) << x;
  return out.str();
}

std::string big_log2(const BigInt& x) {
  // msb gives the integer part; the top 53 bits give the fraction.
  const auto msb = static_cast<long>(boost::multiprecision::msb(x));
  const long shift = std::max(0L, msb - 52);
  const auto top = static_cast<double>(static_cast<std::uint64_t>(x >> shift));
  return format_double(std::log2(top) + static_cast<double>(shift));
}

// Largest k with 2^(k-2) <= n/k.
int thm3_part_size(long long n) {
  int k = 1;
  while (k < 60 && std::ldexp(1.0, k - 1) * (k + 1) <= static_cast<double>(n)) ++k;
  return k;
}

}  // namespace

std::vector<BoundEntry> bound_report(long long n) {
  if (n < 2) throw std::invalid_argument("bound report needs n >= 2");
  const double nd = static_cast<double>(n);
  const double log_n = std::log2(nd);
  std::vector<BoundEntry> r;
  r.push_back({"n", std::to_string(n), false});
  const int k = kmax(n);
  r.push_back({"rank_lower_bound", std::to_string(k), false});
  r.push_back({"downward_closed_size_lower_log2", std::to_string(k), false});
  r.push_back({"thm1_size_lower_log2", format_double(1.42 * std::sqrt(nd)), true});
  r.push_back({"aak_size_upper_log2", format_double(std::sqrt(2.0 * nd * log_n)), true});
  r.push_back({"thm2_size_lower_log2", format_double(0.5 * std::sqrt(nd) * log_n), true});
  r.push_back({"thm3_size_upper_log2", format_double(2.0 * nd * std::log2(log_n) / log_n), true});
  r.push_back({"thm3_rank_upper", format_double(2.0 * nd / log_n), true});

  if (n <= 100'000) {
    const AakParams p = choose_aak_params(static_cast<int>(n));
    const BigInt size = aak_size(p.s, p.t);
    r.push_back({"aak_s", std::to_string(p.s), false});
    r.push_back({"aak_t", std::to_string(p.t), false});
    r.push_back({"aak_ground_size", std::to_string(p.n()), false});
    r.push_back({"aak_size_exact", size.str(), false});
    r.push_back({"aak_size_exact_log2", big_log2(size), false});
  } else {
    r.push_back({"aak_size_exact", "skipped: n > 100000", false});
  }

  const int part = thm3_part_size(n);
  if (n >= 3 && part >= 3 && n % part == 0 && n <= 4096) {
    const BigInt size = thm3_size(static_cast<int>(n), part);
    r.push_back({"thm3_k", std::to_string(part), false});
    r.push_back({"thm3_rank_exact", std::to_string(thm3_rank(static_cast<int>(n), part)), false});
    r.push_back({"thm3_size_exact", size.str(), false});
    r.push_back({"thm3_size_exact_log2", big_log2(size), false});
  } else {
    r.push_back({"thm3_size_exact", "n/a: needs k >= 3 dividing n <= 4096 (k=" + std::to_string(part) + ")", false});
  }
  return r;
}

void write_bound_report(std::ostream& out, const std::vector<BoundEntry>& report) {
  for (const BoundEntry& e : report) {
    out << e.name << '=' << e.value;
    if (e.heuristic) out << " (heuristic: o(1) dropped)";
    out << '\n';
  }
}

}  // namespace exchange
