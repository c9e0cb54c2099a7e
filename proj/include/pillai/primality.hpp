#ifndef PILLAI_PRIMALITY_HPP
#define PILLAI_PRIMALITY_HPP

// Primality testing.
//
// Below 2^64 the Miller-Rabin test with the first twelve prime bases is
// deterministic. Above, a Baillie-PSW test is used (strong base-2
// Miller-Rabin plus a strong Lucas test with Selfridge parameters); no
// counterexample is known, but it is a probable-prime test and callers that
// report primes say so through `Certainty`.

#include <array>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "pillai/nat.hpp"

namespace pillai {

enum class Certainty {
  kDeterministic,  // n < 2^64, fixed witness set
  kProbableBpsw,   // Baillie-PSW passed
  kProbableBpswMr  // Baillie-PSW plus extra random-base Miller-Rabin rounds
};

inline std::string_view to_string(Certainty c) {
  switch (c) {
    case Certainty::kDeterministic: return "deterministic";
    case Certainty::kProbableBpsw: return "bpsw";
    case Certainty::kProbableBpswMr: return "bpsw+mr";
  }
  return "unknown";
}

struct PrimalityVerdict {
  bool prime = false;
  Certainty certainty = Certainty::kDeterministic;
};

/// Primes up to and including `limit` (Eratosthenes).
inline std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

inline bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline bool strong_probable_prime(const mpz_class& n, const mpz_class& a) {
  mpz_class d = n - 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x;
  const mpz_class n_minus_1 = n - 1;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

// Halves x modulo odd n.
inline void half_mod(mpz_class& x, const mpz_class& n) {
  if (mpz_odd_p(x.get_mpz_t())) x += n;
  mpz_tdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
}

/// Strong Lucas probable-prime test, Selfridge method A parameters.
/// Requires n odd, n > 2, and n not a perfect square.
inline bool strong_lucas_probable_prime(const mpz_class& n) {
  long D = 5;
  for (;;) {
    const mpz_class dz(D);
    const int j = mpz_jacobi(dz.get_mpz_t(), n.get_mpz_t());
    if (j == -1) break;
    if (j == 0 && abs(dz) != n) return false;  // shares a factor with n
    D = D > 0 ? -(D + 2) : -(D - 2);
  }
  const mpz_class P = 1;
  const mpz_class Q = (1 - D) / 4;
  mpz_class Dm = D;
  Dm %= n;
  if (Dm < 0) Dm += n;
  mpz_class Qm = Q % n;
  if (Qm < 0) Qm += n;

  mpz_class d = n + 1;
  const mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  mpz_class U = 1;
  mpz_class V = P;
  mpz_class Qk = Qm;
  const auto bits = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
  for (long i = bits - 2; i >= 0; --i) {
    U = U * V % n;
    V = (V * V - 2 * Qk) % n;
    if (V < 0) V += n;
    Qk = Qk * Qk % n;
    if (mpz_tstbit(d.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) {
      mpz_class u_next = P * U + V;
      mpz_class v_next = Dm * U + P * V;
      half_mod(u_next, n);
      half_mod(v_next, n);
      U = u_next % n;
      V = v_next % n;
      Qk = Qk * Qm % n;
    }
  }
  if (U == 0 || V == 0) return true;
  for (mp_bitcnt_t r = 1; r < s; ++r) {
    V = (V * V - 2 * Qk) % n;
    if (V < 0) V += n;
    if (V == 0) return true;
    Qk = Qk * Qk % n;
  }
  return false;
}

// Product of the odd primes below 1000; one gcd rules out most composites.
inline const mpz_class& small_primorial() {
  static const mpz_class value = [] {
    mpz_class acc = 1;
    for (std::uint32_t p : primes_up_to(997)) {
      if (p != 2) acc *= p;
    }
    return acc;
  }();
  return value;
}

}  // namespace detail

/// Deterministic for every 64-bit input.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t a : kBases) {
    if (!detail::strong_probable_prime_u64(n, a)) return false;
  }
  return true;
}

/// Baillie-PSW for arbitrary n (exact answer below 2^64 via `is_prime_u64`).
inline PrimalityVerdict primality(const Nat& n) {
  if (sgn(n) <= 0) return {false, Certainty::kDeterministic};
  if (fits_u64(n)) return {is_prime_u64(to_u64(n)), Certainty::kDeterministic};
  if (mpz_even_p(n.get_mpz_t())) return {false, Certainty::kDeterministic};
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), detail::small_primorial().get_mpz_t());
  if (g != 1) return {false, Certainty::kDeterministic};
  if (!detail::strong_probable_prime(n, 2)) return {false, Certainty::kDeterministic};
  if (mpz_perfect_square_p(n.get_mpz_t())) return {false, Certainty::kDeterministic};
  if (!detail::strong_lucas_probable_prime(n)) return {false, Certainty::kDeterministic};
  return {true, Certainty::kProbableBpsw};
}

inline bool is_prime(const Nat& n) { return primality(n).prime; }

/// Extra Miller-Rabin rounds with pseudo-random bases seeded from n, for
/// primes a caller is about to report. Leaves deterministic verdicts alone.
inline PrimalityVerdict confirm_prime(const Nat& n, int rounds = 32) {
  PrimalityVerdict verdict = primality(n);
  if (!verdict.prime || verdict.certainty == Certainty::kDeterministic) return verdict;
  std::seed_seq seed{static_cast<unsigned>(mpz_fdiv_ui(n.get_mpz_t(), 4294967291UL)),
                     static_cast<unsigned>(mpz_sizeinbase(n.get_mpz_t(), 2))};
  std::mt19937_64 rng(seed);
  const mpz_class span = n - 3;
  for (int i = 0; i < rounds; ++i) {
    mpz_class a = from_u64(rng());
    a = a % span + 2;
    if (!detail::strong_probable_prime(n, a)) return {false, Certainty::kDeterministic};
  }
  return {true, Certainty::kProbableBpswMr};
}

}  // namespace pillai

#endif  // PILLAI_PRIMALITY_HPP
