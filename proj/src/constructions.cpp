#include "exchange/constructions.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "exchange/errors.hpp"
#include "exchange/numbers.hpp"

namespace exchange {

namespace {

using CountPredicate = std::function<bool(const std::vector<int>&)>;

// Calls visit(c) for every c-element subset of part.
void for_each_subset_of_size(SubsetMask part, int c, SubsetMask acc, const MemberVisitor& visit) {
  if (c == 0) {
    visit(acc);
    return;
  }
  if (part.cardinality() < c) return;
  const int e = part.min_element();
  for_each_subset_of_size(part.without(e), c - 1, acc.with(e), visit);
  for_each_subset_of_size(part.without(e), c, acc, visit);
}

void product_of_parts(const std::vector<SubsetMask>& parts, const std::vector<int>& counts, std::size_t j,
                      SubsetMask acc, const MemberVisitor& visit) {
  if (j == parts.size()) {
    visit(acc);
    return;
  }
  for_each_subset_of_size(parts[j], counts[j], SubsetMask(),
                          [&](SubsetMask chosen) { product_of_parts(parts, counts, j + 1, acc | chosen, visit); });
}

// Structured enumeration for families whose membership depends only on the
// per-block intersection counts: walk all count vectors, then expand each
// accepted vector into its product of block subsets.
MemberEnumerator count_pattern_enumerator(Partition partition, CountPredicate accept) {
  return [partition = std::move(partition), accept = std::move(accept)](const MemberVisitor& visit) {
    const auto& parts = partition.parts();
    std::vector<int> counts(parts.size(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t j) {
      if (j == parts.size()) {
        if (accept(counts)) product_of_parts(parts, counts, 0, SubsetMask(), visit);
        return;
      }
      for (int c = 0; c <= parts[j].cardinality(); ++c) {
        counts[j] = c;
        walk(j + 1);
      }
      counts[j] = 0;
    };
    walk(0);
  };
}

MemberPredicate count_pattern_predicate(Partition partition, CountPredicate accept) {
  return [partition = std::move(partition), accept = std::move(accept)](SubsetMask a) {
    return accept(partition.intersection_counts(a));
  };
}

// 2^e, or a value larger than any block count when e is large.
std::int64_t capped_pow2(int e) { return e >= 62 ? std::int64_t{1} << 62 : std::int64_t{1} << e; }

bool thm3_accepts(const std::vector<int>& counts, int k) {
  // at_least[i] = number of blocks meeting A in >= i elements.
  std::vector<int> at_least(static_cast<std::size_t>(k) + 1, 0);
  for (int c : counts) {
    for (int i = 1; i <= c; ++i) ++at_least[static_cast<std::size_t>(i)];
  }
  if (at_least[static_cast<std::size_t>(k)] > 1) return false;
  for (int i = 2; i <= k - 1; ++i) {
    if (at_least[static_cast<std::size_t>(i)] > capped_pow2(k - 1 - i)) return false;
  }
  return true;
}

}  // namespace

Family aak_family(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("aak construction needs s, t >= 1");
  if (static_cast<long long>(s) * t > kMaxGroundSize) throw ScaleError("aak construction limited to s*t <= 64");
  const Partition blocks = Partition::equal_blocks(s, t);
  CountPredicate accept = [](const std::vector<int>& counts) {
    int big = 0;
    for (int c : counts) big += c > 1 ? 1 : 0;
    return big <= 1;
  };
  ImplicitFamily spec;
  spec.name = "aak(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")";
  spec.contains = count_pattern_predicate(blocks, accept);
  spec.enumerate = count_pattern_enumerator(blocks, accept);
  spec.size = aak_size(s, t);
  spec.rank = s + t - 1;
  return Family::from_oracle(s * t, std::move(spec));
}

BigInt aak_size(int s, int t) {
  if (s < 1 || t < 1) throw std::invalid_argument("aak construction needs s, t >= 1");
  const BigInt head = BigInt(t) * pow(BigInt(2), static_cast<unsigned>(s)) - BigInt(s + 1) * (t - 1);
  return head * pow(BigInt(s + 1), static_cast<unsigned>(t - 1));
}

namespace {

// log2 of aak_size(s, t) in floating point; only used to shortlist candidates.
long double approx_log2_aak_size(int s, int t) {
  const long double ratio = std::ldexp(static_cast<long double>(s + 1) * (t - 1) / t, -s);
  const long double head = std::log2(static_cast<long double>(t)) + s + std::log1p(-ratio) / std::log(2.0L);
  return head + (t - 1) * std::log2(static_cast<long double>(s + 1));
}

}  // namespace

AakParams choose_aak_params(int n) {
  if (n < 1) throw std::invalid_argument("choose_aak_params needs n >= 1");
  std::vector<long double> approx(static_cast<std::size_t>(n) + 1);
  long double lowest = std::numeric_limits<long double>::infinity();
  for (int s = 1; s <= n; ++s) {
    approx[static_cast<std::size_t>(s)] = approx_log2_aak_size(s, (n + s - 1) / s);
    lowest = std::min(lowest, approx[static_cast<std::size_t>(s)]);
  }
  // Exact comparison among everything within two bits of the estimate.
  std::optional<AakParams> best;
  BigInt best_size;
  for (int s = 1; s <= n; ++s) {
    if (approx[static_cast<std::size_t>(s)] > lowest + 2) continue;
    const int t = (n + s - 1) / s;
    BigInt size = aak_size(s, t);
    if (!best || size < best_size) {
      best_size = std::move(size);
      best = AakParams{s, t};
    }
  }
  return *best;
}

Partition tight_rank_partition(int n) {
  if (n < 1) throw std::invalid_argument("tight rank construction needs n >= 1");
  const int k = kmax(n);
  std::vector<int> sizes;
  for (int i = 1; i < k; ++i) sizes.push_back(i);
  sizes.push_back(n - k * (k - 1) / 2);
  return Partition::consecutive(sizes);
}

Family tight_rank_family(int n) {
  if (n > kMaxGroundSize) throw ScaleError("tight rank construction limited to n <= 64");
  const Partition blocks = tight_rank_partition(n);
  // The first block A meets decides which F_i can hold A.
  CountPredicate accept = [](const std::vector<int>& counts) {
    std::size_t j = 0;
    while (j < counts.size() && counts[j] == 0) ++j;
    for (++j; j < counts.size(); ++j) {
      if (counts[j] > 1) return false;
    }
    return true;
  };
  ImplicitFamily spec;
  spec.name = "tight(n=" + std::to_string(n) + ")";
  spec.contains = count_pattern_predicate(blocks, accept);
  spec.enumerate = count_pattern_enumerator(blocks, accept);
  spec.rank = kmax(n);
  return Family::from_oracle(n, std::move(spec));
}

namespace {

void validate_thm3_shape(int n, int k) {
  if (n < 3 || k < 3) throw std::invalid_argument("thm3 construction needs n >= 3 and k >= 3");
  if (n % k != 0) throw std::invalid_argument("thm3 construction needs k to divide n");
  if (k - 2 >= 62 || (std::int64_t{1} << (k - 2)) > n / k) {
    throw std::invalid_argument("thm3 construction needs 2^(k-2) <= n/k");
  }
}

}  // namespace

void validate_thm3_params(int n, int k) {
  validate_thm3_shape(n, k);
  if (n > kMaxGroundSize) throw ScaleError("thm3 construction limited to n <= 64");
}

Family thm3_family(int n, int k) {
  validate_thm3_params(n, k);
  const Partition blocks = Partition::equal_blocks(k, n / k);
  CountPredicate accept = [k](const std::vector<int>& counts) { return thm3_accepts(counts, k); };
  ImplicitFamily spec;
  spec.name = "thm3(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  spec.contains = count_pattern_predicate(blocks, accept);
  spec.enumerate = count_pattern_enumerator(blocks, accept);
  spec.size = thm3_size(n, k);
  spec.rank = thm3_rank(n, k);
  return Family::from_oracle(n, std::move(spec));
}

int thm3_rank(int n, int k) {
  validate_thm3_shape(n, k);
  return n / k + (1 << (k - 2));
}

ProfileVector thm3_max_profile(int n, int k) {
  validate_thm3_shape(n, k);
  const int t = n / k;
  // s(i) for i = k..0, then p(i) = s(i) − s(i+1).
  std::vector<int> s_desc;
  s_desc.push_back(1);
  for (int i = k - 1; i >= 2; --i) s_desc.push_back(1 << (k - 1 - i));
  s_desc.push_back(t);
  s_desc.push_back(t);
  std::vector<int> p_desc(s_desc.size());
  p_desc[0] = s_desc[0];
  for (std::size_t j = 1; j < s_desc.size(); ++j) p_desc[j] = s_desc[j] - s_desc[j - 1];
  return ProfileVector::from_exact_counts(std::move(p_desc));
}

BigInt thm3_size(int n, int k) {
  validate_thm3_shape(n, k);
  // State: (s(2), ..., s(k)) over the blocks processed so far.
  std::map<std::vector<int>, BigInt> states;
  states[std::vector<int>(static_cast<std::size_t>(k - 1), 0)] = 1;
  std::vector<BigInt> ways;
  for (int c = 0; c <= k; ++c) ways.push_back(binomial(k, c));
  for (int block = 0; block < n / k; ++block) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [state, count] : states) {
      for (int c = 0; c <= k; ++c) {
        std::vector<int> grown = state;
        bool ok = true;
        for (int i = 2; i <= c; ++i) {
          const int value = ++grown[static_cast<std::size_t>(i - 2)];
          const std::int64_t cap = i == k ? 1 : capped_pow2(k - 1 - i);
          if (value > cap) ok = false;
        }
        if (ok) next[grown] += count * ways[static_cast<std::size_t>(c)];
      }
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [state, count] : states) total += count;
  return total;
}

Family powerset_family(int n) {
  if (n < 0 || n > 63) throw ScaleError("power set family limited to 0 <= n <= 63");
  ImplicitFamily spec;
  spec.name = "powerset(n=" + std::to_string(n) + ")";
  spec.contains = [](SubsetMask) { return true; };
  spec.enumerate = [n](const MemberVisitor& visit) {
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < end; ++bits) visit(SubsetMask(bits));
  };
  spec.size = pow(BigInt(2), static_cast<unsigned>(n));
  spec.rank = n;
  return Family::from_oracle(n, std::move(spec));
}

}  // namespace exchange
