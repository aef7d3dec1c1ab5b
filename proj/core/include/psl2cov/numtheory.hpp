#ifndef PSL2COV_NUMTHEORY_HPP_
#define PSL2COV_NUMTHEORY_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace psl2cov {

struct PrimeFactor {
  std::uint64_t prime;
  int exponent;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimeFactor> factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// (p, m) with n = p^m, or nullopt when n is not a prime power (n < 2 included).
std::optional<std::pair<std::uint64_t, int>> prime_power(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exponent);

/// Non-negative residue of a signed value.
inline std::uint64_t mod_floor(std::int64_t value, std::uint64_t modulus) {
  auto m = static_cast<std::int64_t>(modulus);
  auto r = value % m;
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace psl2cov

#endif  // PSL2COV_NUMTHEORY_HPP_
