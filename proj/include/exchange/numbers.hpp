#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace exchange {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial(int n, int k);

/// The integer closest to sqrt(x), rounding halves up. Exact.
std::int64_t nearest_integer_sqrt(std::int64_t x);

/// max{k : k(k-1)/2 < n}. Throws std::logic_error if this ever differs from
/// the integer closest to sqrt(2n).
int kmax(std::int64_t n);

}  // namespace exchange
