#ifndef PILLAI_CERTIFIED_REAL_HPP
#define PILLAI_CERTIFIED_REAL_HPP

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "pillai/interval.hpp"

namespace pillai {

/// A real number known through a recipe that produces a rigorous enclosure
/// at any requested working precision. Holds the enclosure at the current
/// precision; `refined` re-evaluates the recipe from scratch.
class CertifiedReal {
 public:
  using Generator = std::function<Interval(mpfr_prec_t)>;

  explicit CertifiedReal(Generator generator, mpfr_prec_t prec = kDefaultPrecision)
      : generator_(std::make_shared<Generator>(std::move(generator))), value_((*generator_)(prec)) {}

  static CertifiedReal constant(long v) {
    return CertifiedReal([v](mpfr_prec_t prec) { return Interval::from_long(v, prec); });
  }
  static CertifiedReal integer(const mpz_class& v) {
    return CertifiedReal([v](mpfr_prec_t prec) { return Interval::from_int(v, prec); });
  }
  static CertifiedReal decimal(std::string literal) {
    return CertifiedReal([s = std::move(literal)](mpfr_prec_t prec) {
      return Interval::from_decimal(s, prec);
    });
  }

  const Interval& enclosure() const { return value_; }
  mpfr_prec_t precision() const { return value_.precision(); }
  Interval at(mpfr_prec_t prec) const { return (*generator_)(prec); }
  CertifiedReal refined(mpfr_prec_t prec) const { return CertifiedReal(generator_, prec); }

  double midpoint() const { return value_.midpoint_d(); }
  double radius() const { return value_.radius_d(); }
  double lower() const { return value_.lower_d(); }
  double upper() const { return value_.upper_d(); }

  /// Re-evaluates at doubling precision until `decided` returns true or the
  /// cap is reached (then PrecisionError).
  template <class Predicate>
  CertifiedReal refine_until(Predicate decided, mpfr_prec_t cap = mpfr_prec_t{1} << 20) const {
    CertifiedReal current = *this;
    while (!decided(current.enclosure())) {
      if (current.precision() * 2 > cap) {
        throw PrecisionError("certified evaluation did not settle below " + std::to_string(cap) +
                             " bits");
      }
      current = current.refined(current.precision() * 2);
    }
    return current;
  }

  // Composition builds a new recipe from the operands' recipes.
  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
    return combine(a, b, [](const Interval& x, const Interval& y) { return x + y; });
  }
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
    return combine(a, b, [](const Interval& x, const Interval& y) { return x - y; });
  }
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
    return combine(a, b, [](const Interval& x, const Interval& y) { return x * y; });
  }
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
    return combine(a, b, [](const Interval& x, const Interval& y) { return x / y; });
  }
  friend CertifiedReal operator-(const CertifiedReal& a) {
    return a.map([](const Interval& x) { return -x; });
  }
  friend CertifiedReal log(const CertifiedReal& a) {
    return a.map([](const Interval& x) { return log(x); });
  }
  friend CertifiedReal exp(const CertifiedReal& a) {
    return a.map([](const Interval& x) { return exp(x); });
  }
  friend CertifiedReal sqrt(const CertifiedReal& a) {
    return a.map([](const Interval& x) { return sqrt(x); });
  }
  friend CertifiedReal pow(const CertifiedReal& a, long e) {
    return a.map([e](const Interval& x) { return pow(x, e); });
  }

  template <class Fn>
  CertifiedReal map(Fn fn) const {
    auto g = generator_;
    return CertifiedReal([g, fn](mpfr_prec_t prec) { return fn((*g)(prec)); }, precision());
  }

 private:
  CertifiedReal(std::shared_ptr<Generator> generator, mpfr_prec_t prec)
      : generator_(std::move(generator)), value_((*generator_)(prec)) {}

  template <class Fn>
  static CertifiedReal combine(const CertifiedReal& a, const CertifiedReal& b, Fn fn) {
    auto ga = a.generator_;
    auto gb = b.generator_;
    return CertifiedReal([ga, gb, fn](mpfr_prec_t prec) { return fn((*ga)(prec), (*gb)(prec)); },
                         std::max(a.precision(), b.precision()));
  }

  std::shared_ptr<Generator> generator_;
  Interval value_;
};

/// Constants of Q(sqrt 5) used throughout.
namespace constants {

inline Interval sqrt5(mpfr_prec_t prec) { return sqrt(Interval::from_long(5, prec)); }
inline Interval alpha(mpfr_prec_t prec) {
  return (Interval::from_long(1, prec) + sqrt5(prec)) / Interval::from_long(2, prec);
}
inline Interval log_alpha(mpfr_prec_t prec) { return log(alpha(prec)); }
inline Interval log_sqrt5(mpfr_prec_t prec) { return log(sqrt5(prec)); }
inline Interval log_of(long v, mpfr_prec_t prec) { return log(Interval::from_long(v, prec)); }

inline CertifiedReal log_alpha() { return CertifiedReal([](mpfr_prec_t p) { return log_alpha(p); }); }

}  // namespace constants

}  // namespace pillai

#endif  // PILLAI_CERTIFIED_REAL_HPP
