#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wilnot/modmath.hpp"

namespace wilnot {

namespace {

// Independent oracles: sieve for primality, unreduced 64-bit Pascal rows
// for binomials.
std::vector<bool> sieve(int limit) {
  std::vector<bool> prime(static_cast<std::size_t>(limit) + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (int i = 2; i * i <= limit; ++i)
    if (prime[i])
      for (int j = i * i; j <= limit; j += i) prime[j] = false;
  return prime;
}

std::vector<std::vector<std::uint64_t>> exact_pascal(int max_n) {
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    t[n].assign(static_cast<std::size_t>(n) + 1, 1);
    for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

}  // namespace

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(9));
  EXPECT_TRUE(is_prime(7919));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(4294967291ULL));  // largest prime below 2^32
}

TEST(IsPrime, AgreesWithSieve) {
  auto prime = sieve(20000);
  for (int n = 0; n <= 20000; ++n) ASSERT_EQ(is_prime(static_cast<std::uint64_t>(n)), prime[n]) << n;
}

TEST(Dimension, ParityClass) {
  EXPECT_EQ(Dimension(2).parity_class(), ParityClass::Prime);
  EXPECT_EQ(Dimension(7).parity_class(), ParityClass::Prime);
  EXPECT_EQ(Dimension(4).parity_class(), ParityClass::EvenComposite);
  EXPECT_EQ(Dimension(9).parity_class(), ParityClass::Other);
  EXPECT_THROW(Dimension(1), std::invalid_argument);
}

TEST(BinomMod, Examples) {
  EXPECT_EQ(binom_mod(4, 2, 5), 1);
  EXPECT_EQ(binom_mod(5, 2, 4), 2);
  for (int n = 0; n < 20; ++n) EXPECT_EQ(binom_mod(n, 0, 7), 1);
  EXPECT_EQ(binom_mod(3, 5, 7), 0);
}

TEST(BinomTable, PascalRuleAndBoundaries) {
  for (int m : {2, 4, 6, 9, 12}) {
    BinomTable t(m, 40);
    for (int n = 1; n <= 40; ++n) {
      EXPECT_EQ(t.at(n, 0), 1 % m);
      EXPECT_EQ(t.at(n, n), 1 % m);
      for (int k = 1; k < n; ++k) ASSERT_EQ(t.at(n, k), (t.at(n - 1, k - 1) + t.at(n - 1, k)) % m);
    }
  }
  EXPECT_THROW(BinomTable(4, 3).at(4, 1), std::out_of_range);
}

TEST(BinomMod, MatchesExactIntegersForCompositeModuli) {
  auto exact = exact_pascal(60);
  for (int m : {4, 6, 8, 9, 10, 12, 15}) {
    BinomTable t(m, 60);
    for (int n = 0; n <= 60; ++n)
      for (int k = 0; k <= n; ++k) ASSERT_EQ(static_cast<std::uint64_t>(t.at(n, k)), exact[n][k] % m);
  }
}

TEST(BinomMod, LucasAgreesWithPascalBelowPSquared) {
  for (int p : {2, 3, 5, 7, 11, 13}) {
    BinomTable t(p, p * p);
    for (int n = 0; n < p * p; ++n)
      for (int k = 0; k <= n; ++k) ASSERT_EQ(binom_lucas(n, k, p), t.at(n, k)) << p << " " << n << " " << k;
  }
  EXPECT_THROW(binom_lucas(5, 2, 4), std::invalid_argument);
}

TEST(BinomExact, MatchesPascalAndDetectsOverflow) {
  auto exact = exact_pascal(62);
  for (int n = 0; n <= 62; ++n)
    for (int k = 0; k <= n; ++k) ASSERT_EQ(binom_exact(n, k), exact[n][k]);
  EXPECT_THROW(binom_exact(70, 35), std::overflow_error);
}

TEST(HockeyStick, Examples) {
  EXPECT_EQ(hockey_stick_lhs(0, 3), 4u);
  EXPECT_EQ(hockey_stick_lhs(2, 2), 10u);
  EXPECT_EQ(hockey_stick_lhs(1, 0), 1u);
  EXPECT_THROW(hockey_stick_lhs(60, 60), std::overflow_error);
}

TEST(HockeyStick, IdentityHoldsUpTo30) {
  auto exact = exact_pascal(61);
  for (int l = 0; l <= 30; ++l)
    for (int k = 0; k <= 30; ++k) ASSERT_EQ(hockey_stick_lhs(l, k), exact[l + k + 1][k]) << l << " " << k;
}

TEST(BinomIdentities, VanishingFamily) {
  for (int d : {3, 5, 7, 11, 13}) {
    EXPECT_EQ(binom_mod(d - 2, d - 2, d), 1);        // r = 0
    EXPECT_EQ(binom_mod(d - 1, d - 2, d), d - 1);    // r = 1
    for (int r = 2; r <= d - 1; ++r) EXPECT_EQ(binom_mod(r + d - 2, d - 2, d), 0) << d << " " << r;
  }
}

TEST(BinomIdentities, StageFourDelta) {
  for (int d : {2, 3, 5, 7, 11, 13}) {
    for (int k = -1; k + 1 <= d - 1; ++k)
      for (int m = 0; m <= k + 1; ++m) {
        int want = m == k + 1 ? 1 : 0;
        ASSERT_EQ(binom_mod(k - m + d, d - 1, d), want) << d << " " << k << " " << m;
      }
  }
}

TEST(ModInverse, Examples) {
  EXPECT_EQ(mod_inverse(3, 4), 3);
  for (int d = 2; d < 10; ++d) EXPECT_EQ(mod_inverse(1, d), 1);
  EXPECT_THROW(mod_inverse(2, 4), NotInvertibleError);
  EXPECT_THROW(mod_inverse(0, 7), NotInvertibleError);
}

TEST(ModInverse, EveryUnitUpTo50) {
  for (int d = 2; d <= 50; ++d) {
    for (int x = 1; x < d; ++x) {
      if (gcd(x, d) != 1) {
        EXPECT_THROW(mod_inverse(x, d), NotInvertibleError);
        continue;
      }
      int p = mod_inverse(x, d);
      ASSERT_GE(p, 0);
      ASSERT_LT(p, d);
      ASSERT_EQ(p * x % d, 1 % d) << x << " mod " << d;
    }
  }
}

TEST(ModNormalize, NegativeValues) {
  EXPECT_EQ(mod_normalize(-1, 4), 3);
  EXPECT_EQ(mod_normalize(-16, 4), 0);
  EXPECT_EQ(mod_normalize(13, 5), 3);
}

}  // namespace wilnot
