#ifndef PILLAI_ROOTS_HPP
#define PILLAI_ROOTS_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "pillai/errors.hpp"
#include "pillai/nat.hpp"
#include "pillai/primality.hpp"

namespace pillai {

/// floor(x^(1/n)) by Newton iteration from above, followed by an exact
/// correction so that r^n <= x < (r+1)^n always holds.
inline Nat integer_nth_root(const Nat& x, unsigned long n) {
  if (n == 0) throw DomainError("integer_nth_root: n must be >= 1");
  if (sgn(x) < 0) throw DomainError("integer_nth_root: x must be >= 0");
  if (n == 1 || x < 2) return x;

  const auto bits = static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2));
  if (n >= bits) return Nat(1);  // 2^n > x >= 1

  // Starting point strictly above the root: 2^ceil(bits/n) > x^(1/n).
  Nat r = 1;
  r <<= (bits + n - 1) / n;

  Nat rpow;
  Nat next;
  for (;;) {
    mpz_pow_ui(rpow.get_mpz_t(), r.get_mpz_t(), n - 1);
    mpz_fdiv_q(next.get_mpz_t(), x.get_mpz_t(), rpow.get_mpz_t());
    next += (n - 1) * r;
    next /= n;
    if (next >= r) break;
    r.swap(next);
  }
  // Correction step.
  while (power(r, n) > x) --r;
  while (power(r + 1, n) <= x) ++r;
  return r;
}

/// Largest e with p^e | x, for x != 0 and p >= 2.
inline unsigned long valuation(const Nat& x, const Nat& p) {
  if (sgn(x) == 0) throw DomainError("valuation of zero is infinite");
  if (p < 2) throw DomainError("valuation base must be >= 2");
  Nat rest;
  return static_cast<unsigned long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

/// True iff x = p^e for some e >= 0 (x > 0, p >= 2); sets `exponent`.
inline bool is_power_of(const Nat& x, const Nat& p, unsigned long* exponent = nullptr) {
  if (sgn(x) <= 0) return false;
  Nat rest;
  const auto e = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  if (rest != 1) return false;
  if (exponent != nullptr) *exponent = static_cast<unsigned long>(e);
  return true;
}

struct PrimePower {
  Nat prime;
  unsigned long exponent = 0;
};

namespace detail {

// e-th power residue tables modulo small primes m with m = 1 (mod e).
// Non-residues rule out most candidates before any root is taken.
class PowerResidueFilter {
 public:
  explicit PowerResidueFilter(unsigned long max_exponent) {
    const auto exponents = primes_up_to(static_cast<std::uint32_t>(max_exponent));
    const auto moduli = primes_up_to(20000);
    tables_.resize(max_exponent + 1);
    for (std::uint32_t e : exponents) {
      auto& per_exp = tables_[e];
      for (std::uint32_t m : moduli) {
        if (per_exp.size() == kModuliPerExponent) break;
        if (m % e != 1) continue;
        Table t;
        t.modulus = m;
        t.residue.assign(m, false);
        for (std::uint64_t y = 0; y < m; ++y) t.residue[detail::pow_mod(y, e, m)] = true;
        per_exp.push_back(std::move(t));
      }
    }
  }

  // False means x is certainly not an e-th power.
  bool may_be_power(const Nat& x, unsigned long e) const {
    if (e >= tables_.size()) return true;
    for (const auto& t : tables_[e]) {
      if (!t.residue[mpz_fdiv_ui(x.get_mpz_t(), t.modulus)]) return false;
    }
    return true;
  }

 private:
  static constexpr std::size_t kModuliPerExponent = 4;
  struct Table {
    unsigned long modulus = 0;
    std::vector<bool> residue;
  };
  std::vector<std::vector<Table>> tables_;
};

inline const PowerResidueFilter& power_filter() {
  static const PowerResidueFilter filter(256);
  return filter;
}

inline const std::vector<std::uint32_t>& exponent_primes() {
  static const auto primes = primes_up_to(1u << 20);
  return primes;
}

}  // namespace detail

inline std::optional<PrimePower> prime_power_decomposition(const Nat& x);

/// As `prime_power_decomposition`, for x already known not to be prime;
/// only exponents e >= 2 can be found.
inline std::optional<PrimePower> composite_prime_power(const Nat& x) {
  if (x < 4) return std::nullopt;

  // A small prime factor q forces p = q.
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), detail::small_primorial().get_mpz_t());
  if (mpz_even_p(x.get_mpz_t())) g = 2;
  if (g != 1) {
    Nat q = 2;
    if (g != 2) {
      static const auto small = primes_up_to(997);
      for (std::uint32_t cand : small) {
        if (mpz_divisible_ui_p(g.get_mpz_t(), cand)) {
          q = cand;
          break;
        }
      }
    }
    unsigned long e = 0;
    if (is_power_of(x, q, &e)) return PrimePower{q, e};
    return std::nullopt;
  }

  // Otherwise p > 997, so e <= log(x)/log(1000).
  const auto bits = static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2));
  const unsigned long max_e = bits / 9 + 1;
  for (std::uint32_t e : detail::exponent_primes()) {
    if (e > max_e) break;
    if (!detail::power_filter().may_be_power(x, e)) continue;
    Nat r = integer_nth_root(x, e);
    if (power(r, e) != x) continue;
    // x = r^e; r is either prime or itself a prime power.
    auto inner = prime_power_decomposition(r);
    if (!inner) return std::nullopt;
    inner->exponent *= e;
    return inner;
  }
  return std::nullopt;
}

/// If x = p^e with p prime and e >= 1, returns (p, e). Exact: prime
/// exponents up to log2(x) are tried with integer roots; residue tables
/// only skip exponents for which no root can exist.
inline std::optional<PrimePower> prime_power_decomposition(const Nat& x) {
  if (x < 2) return std::nullopt;
  if (is_prime(x)) return PrimePower{x, 1};
  return composite_prime_power(x);
}

}  // namespace pillai

#endif  // PILLAI_ROOTS_HPP
