#ifndef PILLAI_NAT_HPP
#define PILLAI_NAT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "pillai/errors.hpp"

namespace pillai {

/// Exact integers. `Nat` is used where the value is nonnegative by
/// construction; `Int` where it may be negative (the shift c).
using Nat = mpz_class;
using Int = mpz_class;

/// Index into the Fibonacci/Lucas sequences.
using FibIndex = std::uint32_t;

inline std::string to_decimal(const mpz_class& x) { return x.get_str(10); }

/// Parses a plain decimal integer: optional sign, digits only.
inline Int parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty()) throw DomainError("empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw DomainError("not a decimal integer: '" + std::string(text) + "'");
    }
  }
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  return Int(owned, 10);
}

/// Parses integers written either plainly or in exact scientific form
/// such as "1e35" or "2.3e41". The result must be an integer.
inline Int parse_integer_literal(std::string_view text) {
  const auto e_pos = text.find_first_of("eE");
  if (e_pos == std::string_view::npos) return parse_decimal(text);

  std::string_view mantissa = text.substr(0, e_pos);
  const long exponent = std::stol(std::string(text.substr(e_pos + 1)));
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  bool negative = false;
  for (std::size_t i = 0; i < mantissa.size(); ++i) {
    const char ch = mantissa[i];
    if (i == 0 && (ch == '-' || ch == '+')) {
      negative = ch == '-';
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch >= '0' && ch <= '9') {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else {
      throw DomainError("malformed number: '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw DomainError("malformed number: '" + std::string(text) + "'");
  const long shift = exponent - frac_digits;
  if (shift < 0) {
    // Only acceptable when the dropped digits are zeros.
    const auto drop = static_cast<std::size_t>(-shift);
    if (drop > digits.size() ||
        digits.find_first_not_of('0', digits.size() - drop) != std::string::npos) {
      throw DomainError("not an integer: '" + std::string(text) + "'");
    }
    digits.resize(digits.size() - drop);
    if (digits.empty()) digits = "0";
  } else {
    digits.append(static_cast<std::size_t>(shift), '0');
  }
  Int value(digits, 10);
  return negative ? Int(-value) : value;
}

inline std::uint64_t to_u64(const mpz_class& x) {
  if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) {
    throw SizeError("value does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

inline mpz_class from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

inline bool fits_u64(const mpz_class& x) {
  return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

/// p^e for a machine exponent.
inline Nat power(const Nat& base, unsigned long exponent) {
  Nat out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace pillai

#endif  // PILLAI_NAT_HPP
