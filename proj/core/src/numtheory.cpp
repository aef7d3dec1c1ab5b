#include "psl2cov/numtheory.hpp"

namespace psl2cov {

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  std::vector<PrimeFactor> factors;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    factors.push_back({d, e});
  }
  if (n > 1) factors.push_back({n, 1});
  return factors;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].exponent == 1;
}

std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f[0].prime, f[0].exponent);
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t result = 1;
  while (exponent-- > 0) result *= base;
  return result;
}

}  // namespace psl2cov
