#ifndef PILLAI_INTERVAL_HPP
#define PILLAI_INTERVAL_HPP

// Closed intervals [lo, hi] of MPFR floats with outward (directed)
// rounding: every operation returns an interval containing the exact result
// for all inputs in the operand intervals.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "pillai/errors.hpp"
#include "pillai/nat.hpp"

namespace pillai {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = kDefaultPrecision) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
  }
  ~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
  }
  Interval(const Interval& other) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  Interval(Interval&& other) noexcept : Interval(other.precision()) { swap(other); }
  Interval& operator=(Interval other) noexcept {
    swap(other);
    return *this;
  }
  void swap(Interval& other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
  }

  // --- construction -------------------------------------------------------

  static Interval from_long(long v, mpfr_prec_t prec = kDefaultPrecision) {
    Interval out(prec);
    mpfr_set_si(out.lo_, v, MPFR_RNDD);
    mpfr_set_si(out.hi_, v, MPFR_RNDU);
    return out;
  }
  static Interval from_int(const mpz_class& v, mpfr_prec_t prec = kDefaultPrecision) {
    Interval out(prec);
    mpfr_set_z(out.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(out.hi_, v.get_mpz_t(), MPFR_RNDU);
    return out;
  }
  static Interval from_rational(const mpz_class& num, const mpz_class& den,
                                mpfr_prec_t prec = kDefaultPrecision) {
    return from_int(num, prec) / from_int(den, prec);
  }
  /// Exact decimal literal such as "1.51e12" or "0.16", enclosed outward.
  static Interval from_decimal(std::string_view text, mpfr_prec_t prec = kDefaultPrecision) {
    Interval out(prec);
    const std::string s(text);
    if (mpfr_set_str(out.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(out.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
      throw DomainError("malformed decimal literal: " + s);
    }
    return out;
  }
  /// The double is taken as an exact binary value.
  static Interval from_double(double v, mpfr_prec_t prec = kDefaultPrecision) {
    Interval out(prec);
    mpfr_set_d(out.lo_, v, MPFR_RNDD);
    mpfr_set_d(out.hi_, v, MPFR_RNDU);
    return out;
  }
  static Interval hull(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  static Interval pi(mpfr_prec_t prec = kDefaultPrecision) {
    Interval out(prec);
    mpfr_const_pi(out.lo_, MPFR_RNDD);
    mpfr_const_pi(out.hi_, MPFR_RNDU);
    return out;
  }

  // --- inspection ---------------------------------------------------------

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }
  double lower_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
  double upper_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }
  double midpoint_d() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    const double out = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return out;
  }
  /// Upper bound on (hi - lo) / 2.
  double radius_d() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(w, w, 1, MPFR_RNDU);
    const double out = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return out;
  }
  bool is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }

  bool certainly_positive() const { return mpfr_sgn(lo_) > 0; }
  bool certainly_negative() const { return mpfr_sgn(hi_) < 0; }
  bool certainly_less(const Interval& o) const { return mpfr_less_p(hi_, o.lo_) != 0; }
  bool certainly_less_equal(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_) != 0; }
  bool certainly_greater(const Interval& o) const { return o.certainly_less(*this); }
  bool contains(const Interval& o) const {
    return mpfr_lessequal_p(lo_, o.lo_) && mpfr_lessequal_p(o.hi_, hi_);
  }
  bool overlaps(const Interval& o) const {
    return mpfr_lessequal_p(lo_, o.hi_) && mpfr_lessequal_p(o.lo_, hi_);
  }

  /// floor(lo) and floor(hi) as integers.
  std::pair<mpz_class, mpz_class> floor_bounds() const {
    mpz_class a;
    mpz_class b;
    mpfr_get_z(a.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(b.get_mpz_t(), hi_, MPFR_RNDD);
    return {a, b};
  }
  /// Smallest integer certainly >= the value.
  mpz_class ceil_upper() const {
    mpz_class out;
    mpfr_get_z(out.get_mpz_t(), hi_, MPFR_RNDU);
    return out;
  }

  /// Decimal rendering of the upper (or lower) endpoint, rounded outward.
  std::string upper_string(int digits = 6) const { return endpoint_string(hi_, digits, MPFR_RNDU); }
  std::string lower_string(int digits = 6) const { return endpoint_string(lo_, digits, MPFR_RNDD); }
  std::string midpoint_string(int digits = 12) const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    std::string out = endpoint_string(m, digits, MPFR_RNDN);
    mpfr_clear(m);
    return out;
  }

  // --- arithmetic ---------------------------------------------------------

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_add(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_sub(out.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(out.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return out;
  }
  friend Interval operator-(const Interval& a) {
    Interval out(a.precision());
    mpfr_neg(out.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(out.hi_, a.lo_, MPFR_RNDU);
    return out;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval out(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_}) {
      for (mpfr_srcptr y : {b.lo_, b.hi_}) {
        mpfr_mul(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
        mpfr_mul(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(t);
    return out;
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (!b.certainly_positive() && !b.certainly_negative()) {
      throw PrecisionError("interval division by an interval containing zero");
    }
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval out(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    bool first = true;
    for (mpfr_srcptr x : {a.lo_, a.hi_}) {
      for (mpfr_srcptr y : {b.lo_, b.hi_}) {
        mpfr_div(t, x, y, MPFR_RNDD);
        if (first || mpfr_less_p(t, out.lo_)) mpfr_set(out.lo_, t, MPFR_RNDD);
        mpfr_div(t, x, y, MPFR_RNDU);
        if (first || mpfr_greater_p(t, out.hi_)) mpfr_set(out.hi_, t, MPFR_RNDU);
        first = false;
      }
    }
    mpfr_clear(t);
    return out;
  }
  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  // Monotone increasing functions map endpoints to endpoints.
  friend Interval log(const Interval& a) {
    if (!a.certainly_positive()) throw DomainError("log of an interval not certainly positive");
    return a.monotone(mpfr_log);
  }
  friend Interval exp(const Interval& a) { return a.monotone(mpfr_exp); }
  friend Interval sqrt(const Interval& a) {
    if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt of an interval with negative part");
    return a.monotone(mpfr_sqrt);
  }
  friend Interval abs(const Interval& a) {
    if (mpfr_sgn(a.lo_) >= 0) return a;
    if (mpfr_sgn(a.hi_) <= 0) return -a;
    Interval out(a.precision());
    mpfr_set_zero(out.lo_, 1);
    mpfr_t t;
    mpfr_init2(t, a.precision());
    mpfr_neg(t, a.lo_, MPFR_RNDU);
    mpfr_max(out.hi_, t, a.hi_, MPFR_RNDU);
    mpfr_clear(t);
    return out;
  }
  /// Integer power; exact 1 for exponent 0.
  friend Interval pow(const Interval& a, long e) {
    if (e == 0) return from_long(1, a.precision());
    if (e < 0) return from_long(1, a.precision()) / pow(a, -e);
    const auto ue = static_cast<unsigned long>(e);
    if (e % 2 == 1 || mpfr_sgn(a.lo_) >= 0) {
      // x^e is increasing here.
      Interval out(a.precision());
      mpfr_pow_ui(out.lo_, a.lo_, ue, MPFR_RNDD);
      mpfr_pow_ui(out.hi_, a.hi_, ue, MPFR_RNDU);
      return out;
    }
    return pow(abs(a), e);  // even power of an interval reaching below zero
  }
  /// Real power with a positive base.
  friend Interval pow(const Interval& a, const Interval& e) { return exp(e * log(a)); }

  friend Interval max(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_max(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }
  friend Interval min(const Interval& a, const Interval& b) {
    Interval out(std::max(a.precision(), b.precision()));
    mpfr_min(out.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_min(out.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return out;
  }

 private:
  using UnaryFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

  Interval monotone(UnaryFn fn) const {
    Interval out(precision());
    fn(out.lo_, lo_, MPFR_RNDD);
    fn(out.hi_, hi_, MPFR_RNDU);
    return out;
  }

  static std::string endpoint_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(x)) return "0";
    char* buf = nullptr;
    std::string fmt = "%." + std::to_string(std::max(digits - 1, 0)) + "R*e";
    mpfr_asprintf(&buf, fmt.c_str(), rnd, x);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
  }

  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace pillai

#endif  // PILLAI_INTERVAL_HPP
