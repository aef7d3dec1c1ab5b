#include "support.hpp"

#include <algorithm>

#include "psl2cov/numtheory.hpp"

namespace psl2cov::testing {

std::vector<std::uint64_t> prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = std::max<std::uint64_t>(lo, 4); q <= hi; ++q) {
    if (prime_power(q)) out.push_back(q);
  }
  return out;
}

}  // namespace psl2cov::testing
