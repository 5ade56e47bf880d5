#include "exchange/numbers.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace exchange {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::int64_t nearest_integer_sqrt(std::int64_t x) {
  if (x < 0) throw std::domain_error("negative argument");
  // Largest m with m - 1/2 <= sqrt(x), i.e. (2m - 1)^2 <= 4x.
  auto m = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(x))));
  while (m > 0 && (2 * m - 1) * (2 * m - 1) > 4 * x) --m;
  while ((2 * m + 1) * (2 * m + 1) <= 4 * x) ++m;
  return m;
}

int kmax(std::int64_t n) {
  if (n < 1) throw std::domain_error("kmax needs n >= 1");
  // Start near the answer and walk to the exact boundary.
  auto k = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(n)));
  if (k < 1) k = 1;
  while (k > 1 && k * (k - 1) / 2 >= n) --k;
  while ((k + 1) * k / 2 < n) ++k;
  if (k != nearest_integer_sqrt(2 * n)) {
    throw std::logic_error("kmax(" + std::to_string(n) + ") disagrees with the nearest integer to sqrt(2n)");
  }
  return static_cast<int>(k);
}

}  // namespace exchange
