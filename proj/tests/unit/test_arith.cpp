#include <cstdint>
#include <random>

#include <gtest/gtest.h>

#include "pillai/primality.hpp"
#include "pillai/roots.hpp"

namespace pillai {
namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(Primality, Examples) {
  EXPECT_TRUE(is_prime(17));
  EXPECT_FALSE(is_prime(215));
  EXPECT_FALSE(is_prime(12));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(0));
  EXPECT_TRUE(is_prime(2));
}

TEST(Primality, MatchesTrialDivisionBelow200000) {
  for (std::uint64_t n = 0; n < 200000; ++n) ASSERT_EQ(is_prime_u64(n), trial_division_prime(n)) << n;
}

TEST(Primality, StrongPseudoprimesAreRejected) {
  // Carmichael numbers and strong pseudoprimes to several small bases.
  for (std::uint64_t n : {561ULL, 1105ULL, 1729ULL, 2047ULL, 3215031751ULL, 3825123056546413051ULL}) {
    EXPECT_FALSE(is_prime_u64(n)) << n;
  }
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
}

TEST(Primality, BigNumbersAgainstGmp) {
  const Nat m127 = power(Nat(2), 127) - 1;
  EXPECT_TRUE(is_prime(m127));
  EXPECT_EQ(primality(m127).certainty, Certainty::kProbableBpsw);
  EXPECT_FALSE(is_prime(power(Nat(2), 128) + 1));
  EXPECT_FALSE(is_prime(m127 * m127));

  gmp_randclass rng(gmp_randinit_default);
  rng.seed(12345);
  for (int i = 0; i < 3000; ++i) {
    Nat n = rng.get_z_bits(70 + i % 300) | 1;
    const bool expected = mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
    ASSERT_EQ(is_prime(n), expected) << n.get_str();
  }
}

TEST(Primality, LucasCatchesBase2Pseudoprimes) {
  // Products of two primes p, 2p-1 are classic base-2 strong pseudoprime
  // shapes; none may pass.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(7);
  int tested = 0;
  while (tested < 50) {
    Nat p = rng.get_z_bits(40);
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    const Nat q = 2 * p - 1;
    if (!is_prime(q)) continue;
    ++tested;
    EXPECT_FALSE(is_prime(p * q));
  }
}

TEST(Primality, ConfirmAddsRounds) {
  const Nat m127 = power(Nat(2), 127) - 1;
  EXPECT_EQ(confirm_prime(m127).certainty, Certainty::kProbableBpswMr);
  EXPECT_EQ(confirm_prime(17).certainty, Certainty::kDeterministic);
}

TEST(IntegerRoot, Examples) {
  EXPECT_EQ(integer_nth_root(289, 2), 17);
  EXPECT_EQ(integer_nth_root(46224, 2), 214);
  EXPECT_EQ(integer_nth_root(46225, 2), 215);
  EXPECT_EQ(integer_nth_root(123456789, 1), 123456789);
  EXPECT_EQ(integer_nth_root(0, 5), 0);
  EXPECT_EQ(integer_nth_root(1, 5), 1);
  EXPECT_EQ(integer_nth_root(7, 9), 1);
  EXPECT_THROW(integer_nth_root(5, 0), DomainError);
}

TEST(IntegerRoot, PostconditionOnRandomInstances) {
  std::mt19937_64 rng(20261018);
  gmp_randclass grng(gmp_randinit_default);
  grng.seed(99);
  for (int i = 0; i < 100000; ++i) {
    const unsigned long bits = 1 + rng() % 400;
    const Nat x = grng.get_z_bits(bits);
    const unsigned long n = 1 + rng() % 40;
    const Nat r = integer_nth_root(x, n);
    ASSERT_LE(power(r, n), x);
    ASSERT_GT(power(r + 1, n), x);
  }
}

TEST(IntegerRoot, AgreesWithGmpRoot) {
  gmp_randclass grng(gmp_randinit_default);
  grng.seed(5);
  for (int i = 0; i < 2000; ++i) {
    const Nat x = grng.get_z_bits(64 + i % 900);
    const unsigned long n = 2 + i % 37;
    Nat expected;
    mpz_root(expected.get_mpz_t(), x.get_mpz_t(), n);
    ASSERT_EQ(integer_nth_root(x, n), expected);
  }
}

TEST(Valuation, Basics) {
  EXPECT_EQ(valuation(144, 2), 4U);
  EXPECT_EQ(valuation(144, 3), 2U);
  EXPECT_EQ(valuation(145, 3), 0U);
  EXPECT_THROW(valuation(0, 3), DomainError);
  unsigned long e = 0;
  EXPECT_TRUE(is_power_of(1, 7, &e));
  EXPECT_EQ(e, 0U);
  EXPECT_TRUE(is_power_of(343, 7, &e));
  EXPECT_EQ(e, 3U);
  EXPECT_FALSE(is_power_of(342, 7));
}

TEST(PrimePower, Decomposition) {
  auto pp = prime_power_decomposition(289);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->prime, 17);
  EXPECT_EQ(pp->exponent, 2U);
  EXPECT_FALSE(prime_power_decomposition(144));
  EXPECT_FALSE(prime_power_decomposition(215 * 215));
  EXPECT_FALSE(prime_power_decomposition(1));

  pp = prime_power_decomposition(power(Nat(2), 6));
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->prime, 2);
  EXPECT_EQ(pp->exponent, 6U);

  const Nat big_prime = power(Nat(2), 89) - 1;
  for (unsigned long e : {1UL, 2UL, 3UL, 6UL, 10UL, 13UL}) {
    pp = prime_power_decomposition(power(big_prime, e));
    ASSERT_TRUE(pp) << e;
    EXPECT_EQ(pp->prime, big_prime);
    EXPECT_EQ(pp->exponent, e);
  }
  EXPECT_FALSE(prime_power_decomposition(power(big_prime, 3) * 1009));
  EXPECT_FALSE(prime_power_decomposition(power(big_prime * (power(Nat(2), 61) - 1), 2)));
}

}  // namespace
}  // namespace pillai
