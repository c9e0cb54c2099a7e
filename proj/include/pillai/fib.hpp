#ifndef PILLAI_FIB_HPP
#define PILLAI_FIB_HPP

// Fibonacci and Lucas numbers and the arithmetic facts about them that the
// searches and audits lean on: the F_m - F_n = F * L factorization, the
// entry point z(p), p-adic valuations of F_k, and a few finite scans.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pillai/errors.hpp"
#include "pillai/nat.hpp"
#include "pillai/primality.hpp"
#include "pillai/roots.hpp"

namespace pillai {

/// Upper bound on sequence indices. Exists so that oversize requests fail
/// with SizeError instead of exhausting memory.
struct FibWindow {
  FibIndex max_index = 1'000'000;

  void check(FibIndex n) const {
    if (n > max_index) {
      throw SizeError("Fibonacci index " + std::to_string(n) + " exceeds window bound " +
                      std::to_string(max_index));
    }
  }
};

inline constexpr FibWindow kDefaultWindow{};

/// (F_n, F_{n+1}) by fast doubling:
///   F_{2k}   = F_k (2 F_{k+1} - F_k)
///   F_{2k+1} = F_k^2 + F_{k+1}^2
inline std::pair<Nat, Nat> fib_pair(FibIndex n, const FibWindow& window = kDefaultWindow) {
  window.check(n);
  Nat a = 0;  // F_k
  Nat b = 1;  // F_{k+1}
  Nat t;
  for (int bit = 31; bit >= 0; --bit) {
    // (a, b) <- (F_{2k}, F_{2k+1})
    t = a * (2 * b - a);
    b = a * a + b * b;
    a.swap(t);
    if ((n >> bit) & 1U) {
      a += b;
      a.swap(b);
    }
  }
  return {a, b};
}

inline Nat fib(FibIndex n, const FibWindow& window = kDefaultWindow) {
  return fib_pair(n, window).first;
}

/// L_n = 2 F_{n+1} - F_n (equivalently F_{n-1} + F_{n+1}).
inline Nat lucas(FibIndex n, const FibWindow& window = kDefaultWindow) {
  auto [f, f_next] = fib_pair(n, window);
  return 2 * f_next - f;
}

/// F_0..F_n by the recurrence; used by the searches, which touch every
/// index in a range many times.
inline std::vector<Nat> fib_table(FibIndex n, const FibWindow& window = kDefaultWindow) {
  window.check(n);
  std::vector<Nat> table(static_cast<std::size_t>(n) + 1);
  table[0] = 0;
  if (n >= 1) table[1] = 1;
  for (std::size_t i = 2; i <= n; ++i) table[i] = table[i - 1] + table[i - 2];
  return table;
}

/// (F_n mod m, F_{n+1} mod m) by fast doubling, never forming F_n.
inline std::pair<Nat, Nat> fib_pair_mod(FibIndex n, const Nat& m) {
  if (m < 1) throw DomainError("modulus must be positive");
  Nat a = 0;
  Nat b = 1 % m;
  Nat t;
  for (int bit = 31; bit >= 0; --bit) {
    t = a * (2 * b - a);
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    b = a * a + b * b;
    mpz_mod(b.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
    a.swap(t);
    if ((n >> bit) & 1U) {
      a += b;
      if (a >= m) a -= m;
      a.swap(b);
    }
  }
  return {a, b};
}

inline std::pair<std::uint64_t, std::uint64_t> fib_pair_mod_u64(std::uint64_t n, std::uint64_t m) {
  using detail::mul_mod;
  std::uint64_t a = 0;
  std::uint64_t b = 1 % m;
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t two_b_minus_a = ((2 * static_cast<unsigned __int128>(b)) % m + m - a) % m;
    const std::uint64_t t = mul_mod(a, two_b_minus_a, m);
    const std::uint64_t s =
        static_cast<std::uint64_t>((static_cast<unsigned __int128>(mul_mod(a, a, m)) + mul_mod(b, b, m)) % m);
    a = t;
    b = s;
    if ((n >> bit) & 1U) {
      const std::uint64_t sum = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
      a = b;
      b = sum;
    }
  }
  return {a, b};
}

/// Result of the F_m - F_n = F_i * L_j factorization.
struct FibDiffFactor {
  FibIndex fib_index = 0;    // (m - delta n) / 2
  FibIndex lucas_index = 0;  // (m + delta n) / 2
  int delta = 1;             // (-1)^((m - n) / 2)
};

/// For m >= n, m = n (mod 2): F_m - F_n = F_{(m - delta n)/2} L_{(m + delta n)/2}
/// with delta = (-1)^((m-n)/2). For m = n this is the degenerate F_0 L_m = 0;
/// callers must handle it.
inline FibDiffFactor fib_diff_factor(FibIndex m, FibIndex n) {
  if (m < n) throw DomainError("fib_diff_factor requires m >= n");
  if ((m - n) % 2 != 0) throw DomainError("fib_diff_factor requires m = n (mod 2)");
  const int delta = ((m - n) / 2) % 2 == 0 ? 1 : -1;
  const auto mm = static_cast<std::int64_t>(m);
  const auto nn = static_cast<std::int64_t>(n);
  return {static_cast<FibIndex>((mm - delta * nn) / 2), static_cast<FibIndex>((mm + delta * nn) / 2),
          delta};
}

struct EntryPointData {
  Nat p;
  std::uint64_t z = 0;    // least k >= 1 with p | F_k
  unsigned long e_p = 0;  // nu_p(F_z)
};

namespace detail {

// Below this bound z(p) is found by walking (F_k, F_{k+1}) mod p.
inline constexpr std::uint64_t kEntryPointScanLimit = 1'000'000;

inline std::uint64_t entry_point_scan(std::uint64_t p) {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  for (std::uint64_t k = 1;; ++k) {
    const std::uint64_t next = (a + b) % p;
    a = b;
    b = next;
    if (a == 0) return k;
  }
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// z(p) divides p - (5/p) (or equals 5 when p = 5): strip prime factors off
// that multiple while F stays divisible by p.
inline std::uint64_t entry_point_by_order(std::uint64_t p) {
  if (p == 2) return 3;
  if (p == 5) return 5;
  const int legendre = mpz_kronecker_ui(mpz_class(5).get_mpz_t(), p);
  std::uint64_t z = legendre == 1 ? p - 1 : p + 1;
  for (std::uint64_t q : distinct_prime_factors(z)) {
    while (z % q == 0 && fib_pair_mod_u64(z / q, p).first == 0) z /= q;
  }
  return z;
}

}  // namespace detail

/// Entry point (order of appearance) z(p) and e_p = nu_p(F_{z(p)}).
/// Small primes are handled by scanning the sequence mod p; larger ones
/// (p > 10^6) through the divisor structure of p - (5/p). p must be prime
/// and below 2^63.
inline EntryPointData entry_point(const Nat& p) {
  if (!is_prime(p)) throw DomainError("entry_point requires a prime, got " + to_decimal(p));
  if (mpz_sizeinbase(p.get_mpz_t(), 2) > 63) throw SizeError("entry_point supports p < 2^63");
  const std::uint64_t pu = to_u64(p);
  EntryPointData out;
  out.p = p;
  out.z = pu <= detail::kEntryPointScanLimit ? detail::entry_point_scan(pu)
                                             : detail::entry_point_by_order(pu);
  if (out.z > 0xFFFFFFFFULL) throw SizeError("entry point exceeds index range");
  // e_p: grow the modulus p^j until F_z mod p^j is nonzero.
  unsigned long j = 2;
  for (;;) {
    const Nat modulus = power(p, j);
    const Nat residue = fib_pair_mod(static_cast<FibIndex>(out.z), modulus).first;
    if (residue != 0) {
      out.e_p = valuation(residue, p);
      break;
    }
    j *= 2;
  }
  return out;
}

namespace detail {
// F_k with fewer digits than this is divided out exactly as a cross-check.
inline constexpr std::size_t kExactValuationDigits = 10'000;
}  // namespace detail

/// nu_p(F_k). Zero unless z(p) | k; otherwise F_k mod p^j is evaluated for
/// growing j (never materialising F_k), and for F_k below 10^4 digits the
/// answer is confirmed by exact division.
inline unsigned long nu_p_fib(const Nat& p, FibIndex k, const FibWindow& window = kDefaultWindow) {
  window.check(k);
  if (k == 0) throw DomainError("nu_p(F_0) is infinite");
  const EntryPointData ep = entry_point(p);
  if (k % ep.z != 0) return 0;

  unsigned long j = ep.e_p + 1;
  unsigned long f = 0;
  for (;;) {
    const Nat residue = fib_pair_mod(k, power(p, j)).first;
    if (residue != 0) {
      f = valuation(residue, p);
      break;
    }
    j *= 2;
  }

  // Approximate digit count of F_k is k log10(alpha).
  if (static_cast<double>(k) * 0.20898764 < static_cast<double>(detail::kExactValuationDigits)) {
    const unsigned long exact = valuation(fib(k, window), p);
    if (exact != f) throw std::logic_error("nu_p_fib: modular and exact valuations disagree");
  }
  return f;
}

/// gcd(F_m, F_n), computed on the values and checked against F_{gcd(m,n)}.
inline Nat fib_gcd(FibIndex m, FibIndex n, const FibWindow& window = kDefaultWindow) {
  const Nat fm = fib(m, window);
  const Nat fn = fib(n, window);
  Nat by_values;
  mpz_gcd(by_values.get_mpz_t(), fm.get_mpz_t(), fn.get_mpz_t());
  const Nat by_index = fib(std::gcd(m, n), window);
  if (by_values != by_index) throw std::logic_error("fib_gcd: gcd(F_m, F_n) != F_gcd(m,n)");
  return by_values;
}

struct FibPrimePower {
  FibIndex k = 0;
  Nat p;
  unsigned long ell = 0;

  friend bool operator==(const FibPrimePower&, const FibPrimePower&) = default;
};

/// All F_k = p^ell with 2 <= k <= k_max, p prime, ell >= 2.
inline std::vector<FibPrimePower> fib_perfect_power_scan(FibIndex k_max,
                                                         const FibWindow& window = kDefaultWindow) {
  if (k_max < 2) throw DomainError("fib_perfect_power_scan requires k_max >= 2");
  const auto table = fib_table(k_max, window);
  std::vector<FibPrimePower> out;
  for (FibIndex k = 2; k <= k_max; ++k) {
    auto pp = prime_power_decomposition(table[k]);
    if (pp && pp->exponent >= 2) out.push_back({k, pp->prime, pp->exponent});
  }
  return out;
}

struct GapVanishing {
  FibIndex b = 0;
  FibIndex c = 0;
  int sign = -1;  // +1 for F_b - F_c + F_{b-c}, -1 for F_b - F_c - F_{b-c}

  friend bool operator==(const GapVanishing&, const GapVanishing&) = default;
};

/// Every 1 <= c < b <= b_max and sign with F_b - F_c +/- F_{b-c} = 0.
inline std::vector<GapVanishing> fib_gap_nonvanishing(FibIndex b_max,
                                                      const FibWindow& window = kDefaultWindow) {
  if (b_max < 2) throw DomainError("fib_gap_nonvanishing requires b_max >= 2");
  const auto table = fib_table(b_max, window);
  std::vector<GapVanishing> out;
  for (FibIndex b = 2; b <= b_max; ++b) {
    for (FibIndex c = 1; c < b; ++c) {
      const Nat base = table[b] - table[c];
      if (base + table[b - c] == 0) out.push_back({b, c, +1});
      if (base - table[b - c] == 0) out.push_back({b, c, -1});
    }
  }
  return out;
}

}  // namespace pillai

#endif  // PILLAI_FIB_HPP
