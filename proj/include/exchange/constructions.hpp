#pragma once

#include "exchange/family.hpp"
#include "exchange/partition.hpp"

namespace exchange {

/// Part size s and number of parts t of the block construction; n = s·t.
struct AakParams {
  int s = 1;
  int t = 1;
  int n() const { return s * t; }
  bool operator==(const AakParams&) const = default;
};

/// Sets meeting every block except possibly one in at most one element,
/// over t consecutive blocks of size s.
Family aak_family(int s, int t);
/// Exact size (t·2^s − (s+1)(t−1))·(s+1)^(t−1) of aak_family(s, t).
BigInt aak_size(int s, int t);
/// The (s, t) with s·t >= n minimizing aak_size(s, ⌈n/s⌉); ties go to the
/// smaller s. When s·t > n the construction lives on the padded ground set.
AakParams choose_aak_params(int n);

/// Block sizes 1, 2, ..., k−1, n − C(k,2) with k = kmax(n).
Partition tight_rank_partition(int n);
/// Union over i of the sets missing every block before i and meeting every
/// block after i at most once. Atomic, weak exchange, rank kmax(n).
Family tight_rank_family(int n);

/// Throws std::invalid_argument naming the first violated requirement:
/// n, k >= 3; k divides n; 2^(k−2) <= n/k; n <= 64.
void validate_thm3_params(int n, int k);
/// Sets A with s_A(k) <= 1 and s_A(i) <= 2^(k−1−i) for 2 <= i <= k−1,
/// against n/k consecutive blocks of size k.
Family thm3_family(int n, int k);
/// n/k + 2^(k−2).
int thm3_rank(int n, int k);
/// Profile of a largest member: s = (1, 1, 2, 4, ..., 2^(k−3), n/k, n/k).
ProfileVector thm3_max_profile(int n, int k);
/// Exact member count of thm3_family(n, k), by dynamic programming over blocks.
BigInt thm3_size(int n, int k);

/// All subsets of [n].
Family powerset_family(int n);

}  // namespace exchange
