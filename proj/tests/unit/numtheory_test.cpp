#include <gtest/gtest.h>

#include <numeric>

#include "psl2cov/numtheory.hpp"

namespace psl2cov {
namespace {

TEST(NumTheory, FactorizeSmallValues) {
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(360), (std::vector<PrimeFactor>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(97), (std::vector<PrimeFactor>{{97, 1}}));
}

TEST(NumTheory, FactorizationMultipliesBack) {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    std::uint64_t product = 1;
    for (const auto& f : factorize(n)) {
      EXPECT_TRUE(is_prime(f.prime));
      product *= ipow(f.prime, static_cast<unsigned>(f.exponent));
    }
    EXPECT_EQ(product, n);
  }
}

TEST(NumTheory, PrimePowerDetection) {
  EXPECT_EQ(prime_power(8), (std::pair<std::uint64_t, int>{2, 3}));
  EXPECT_EQ(prime_power(81), (std::pair<std::uint64_t, int>{3, 4}));
  EXPECT_EQ(prime_power(101), (std::pair<std::uint64_t, int>{101, 1}));
  EXPECT_FALSE(prime_power(1));
  EXPECT_FALSE(prime_power(12));
  EXPECT_FALSE(prime_power(100));
}

TEST(NumTheory, EulerPhiCountsUnits) {
  for (std::uint64_t n = 1; n < 300; ++n) {
    std::uint64_t count = 0;
    for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    EXPECT_EQ(euler_phi(n), count) << n;
  }
}

TEST(NumTheory, ModFloorIsNonNegative) {
  EXPECT_EQ(mod_floor(-1, 7), 6u);
  EXPECT_EQ(mod_floor(14, 7), 0u);
  EXPECT_EQ(mod_floor(-15, 7), 6u);
}

}  // namespace
}  // namespace psl2cov
