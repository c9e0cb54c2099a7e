#ifndef PILLAI_BOUNDS_HPP
#define PILLAI_BOUNDS_HPP

// Lower bounds for linear forms in logarithms (the general t-log bound and
// the sharper two-log bound), the x < 2^s T (log T)^s lemma, the S-unit
// solution count, and the linear forms of the proof as certified reals.

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pillai/certified_real.hpp"
#include "pillai/errors.hpp"
#include "pillai/nat.hpp"

namespace pillai::bounds {

using Real = CertifiedReal;

inline Real dec(const std::string& literal) { return CertifiedReal::decimal(literal); }
inline Real num(long v) { return CertifiedReal::constant(v); }
inline Real log_of(long v) {
  return Real([v](mpfr_prec_t p) { return constants::log_of(v, p); });
}
inline Real log_alpha() { return constants::log_alpha(); }
inline Real log_sqrt5() { return Real([](mpfr_prec_t p) { return constants::log_sqrt5(p); }); }

/// Inputs to the t-logarithm bound.
struct LinearFormSpec {
  int t = 0;
  int D = 0;
  Real B = num(1);
  std::vector<Real> A;

  void validate() const {
    if (t < 2) throw DomainError("linear form needs t >= 2");
    if (D < 1) throw DomainError("degree D must be >= 1");
    if (static_cast<int>(A.size()) != t) throw DomainError("need exactly t coefficients A_i");
    if (B.enclosure().certainly_less(Interval::from_long(1))) throw DomainError("B must be >= 1");
    const auto floor016 = Interval::from_decimal("0.16");
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (A[i].enclosure().certainly_less(floor016)) {
        throw DomainError("A_" + std::to_string(i + 1) + " is below the 0.16 floor");
      }
    }
  }
};

/// 1.4 * 30^(t+3) * t^4.5 * D^2 * (1 + log D).
inline Real matveev_constant(int t, int D) {
  return Real([t, D](mpfr_prec_t p) {
    auto T = Interval::from_long(t, p);
    auto Dd = Interval::from_long(D, p);
    auto t45 = pow(T, Interval::from_decimal("4.5", p));
    return Interval::from_decimal("1.4", p) * pow(Interval::from_long(30, p), t + 3) * t45 *
           pow(Dd, 2) * (Interval::from_long(1, p) + log(Dd));
  });
}

/// Right-hand side of log|Gamma| > -C(t, D) (1 + log B) A_1 ... A_t.
inline Real matveev_bound(const LinearFormSpec& spec) {
  spec.validate();
  Real prod = matveev_constant(spec.t, spec.D) * (num(1) + log(spec.B));
  for (const auto& a : spec.A) prod = prod * a;
  return -prod;
}

struct TwoLogSpec {
  int D = 0;
  Real log_A1 = num(1);
  Real log_A2 = num(1);
  Int b1 = 1;
  Int b2 = 1;
};

struct TwoLogBound {
  Real b_prime;
  std::string branch;  // "log b' + 0.14", "21/D" or "1/2"
  Real max_term;
  Real bound;       // -24.34 D^4 max^2 log A1 log A2, as the theorem states
  Real bound_d2;    // the same with D^2, for comparison with the chain as written
};

inline TwoLogBound lmn_two_log_bound(const TwoLogSpec& s) {
  if (s.D < 1) throw DomainError("degree D must be >= 1");
  const auto inv_d = Interval::from_long(1, 64) / Interval::from_long(s.D, 64);
  if (s.log_A1.enclosure().certainly_less(inv_d) || s.log_A2.enclosure().certainly_less(inv_d)) {
    throw DomainError("log A_i must be >= 1/D");
  }
  if (s.b1 < 1 || s.b2 < 1) throw DomainError("b1, b2 must be positive");
  const Real Dr = num(s.D);
  TwoLogBound out{num(0), "", num(0), num(0), num(0)};
  out.b_prime = num(0) + Real::integer(abs(s.b1)) / (Dr * s.log_A2) +
                Real::integer(abs(s.b2)) / (Dr * s.log_A1);
  const Real cand_b = log(out.b_prime) + dec("0.14");
  const Real cand_d = num(21) / Dr;
  const Real cand_h = dec("0.5");
  out.max_term = Real([cand_b, cand_d, cand_h](mpfr_prec_t p) {
    return max(max(cand_b.at(p), cand_d.at(p)), cand_h.at(p));
  });
  const double mb = cand_b.midpoint();
  const double md = cand_d.midpoint();
  out.branch = mb >= md && mb >= 0.5 ? "log b' + 0.14" : (md >= 0.5 ? "21/D" : "1/2");
  const Real common = dec("24.34") * pow(out.max_term, 2) * s.log_A1 * s.log_A2;
  out.bound = -(pow(Dr, 4) * common);
  out.bound_d2 = -(pow(Dr, 2) * common);
  return out;
}

/// x < 2^s T (log T)^s, valid when T > (4 s^2)^s.
inline Real gl_lemma_bound(int s, const Real& T) {
  if (s < 1) throw DomainError("s must be >= 1");
  const Nat threshold = power(Nat(4L * s * s), static_cast<unsigned long>(s));
  const auto thr = Interval::from_int(threshold, 64);
  const auto settled = T.refine_until([&](const Interval& x) {
    return x.certainly_greater(thr) || x.certainly_less_equal(thr);
  });
  if (!settled.enclosure().certainly_greater(thr)) {
    throw DomainError("hypothesis T > (4s^2)^s fails: T = " + settled.enclosure().upper_string(8) +
                      " <= " + to_decimal(threshold));
  }
  return pow(num(2), s) * T * pow(log(T), s);
}

inline Real gl_lemma_bound(int s, double T) {
  return gl_lemma_bound(s, Real([T](mpfr_prec_t p) { return Interval::from_double(T, p); }));
}

struct CountBound {
  unsigned long s = 0;
  unsigned long r = 0;
  unsigned long base = 0;      // 8s
  Nat exponent;                // 4 s^4 (s + r + 1)
  std::optional<Nat> value;    // (8s)^exponent, when small enough to form
  double log10_value = 0;
  double log10_paper_figure = 0;  // of 2 (8s)^exponent, the +- count
};

/// (8s)^(4 s^4 (s + r + 1)).
inline CountBound av_count_bound(unsigned long s, unsigned long r) {
  if (s < 1) throw DomainError("s must be >= 1");
  CountBound out;
  out.s = s;
  out.r = r;
  out.base = 8 * s;
  out.exponent = Nat(4) * power(Nat(s), 4) * (s + r + 1);
  const double lg = std::log10(static_cast<double>(out.base));
  out.log10_value = out.exponent.get_d() * lg;
  out.log10_paper_figure = out.log10_value + std::log10(2.0);
  if (out.exponent.fits_ulong_p() && out.log10_value < 1e6) {
    out.value = power(Nat(out.base), out.exponent.get_ui());
  }
  return out;
}

// The linear forms of the proof, as certified reals.

/// alpha^k p^-l / sqrt5 - 1.
inline Real gamma_kl(long k, long ell, const Nat& p) {
  return Real([k, ell, p](mpfr_prec_t pr) {
    auto lam = Interval::from_long(k, pr) * constants::log_alpha(pr) -
               Interval::from_long(ell, pr) * log(Interval::from_int(p, pr)) - constants::log_sqrt5(pr);
    return exp(lam) - Interval::from_long(1, pr);
  });
}

/// k log alpha - l log p - log sqrt5.
inline Real lambda_kl(long k, long ell, const Nat& p) {
  return Real([k, ell, p](mpfr_prec_t pr) {
    return Interval::from_long(k, pr) * constants::log_alpha(pr) -
           Interval::from_long(ell, pr) * log(Interval::from_int(p, pr)) - constants::log_sqrt5(pr);
  });
}

/// alpha^k p^-l ((sqrt5 (1 - p^(l'-l))) / (1 - alpha^(k'-k)))^-1 - 1.
inline Real gamma_prime_kl(long k, long ell, long k2, long ell2, const Nat& p) {
  return Real([=](mpfr_prec_t pr) {
    const auto one = Interval::from_long(1, pr);
    const auto a = constants::alpha(pr);
    const auto lp = log(Interval::from_int(p, pr));
    const auto top = constants::sqrt5(pr) * (one - exp(Interval::from_long(ell2 - ell, pr) * lp));
    const auto den = one - pow(a, k2 - k);
    const auto lead = exp(Interval::from_long(k, pr) * log(a) - Interval::from_long(ell, pr) * lp);
    return lead * den / top - one;
  });
}

/// Resolves x < G(x) to an explicit bound. Works in y = log x: `log_rhs(y)`
/// encloses log G(e^y), and y - log_rhs(y) must change sign once on
/// [y_lo, y_hi], from negative to positive. Bisection with certified sign
/// tests; every admissible x satisfies x < e^{y_hi}.
struct FixedPoint {
  double y_lo = 0;
  double y_hi = 0;
  Real x_upper = num(0);  // e^{y_hi}
};

inline FixedPoint solve_fixed_point(const std::function<Interval(const Interval&, mpfr_prec_t)>& log_rhs,
                                    double y_lo, double y_hi, mpfr_prec_t prec = kDefaultPrecision) {
  auto h = [&](double y) {
    const auto Y = Interval::from_double(y, prec);
    return Y - log_rhs(Y, prec);
  };
  if (!h(y_lo).certainly_negative()) throw DomainError("fixed point: lower end is not below the root");
  if (!h(y_hi).certainly_positive()) throw DomainError("fixed point: upper end is not above the root");
  for (;;) {
    const double mid = y_lo + 0.5 * (y_hi - y_lo);
    if (mid <= y_lo || mid >= y_hi) break;
    const auto v = h(mid);
    if (v.certainly_negative()) {
      y_lo = mid;
    } else if (v.certainly_positive()) {
      y_hi = mid;
    } else {
      break;
    }
  }
  return {y_lo, y_hi, Real([y = y_hi](mpfr_prec_t p) { return exp(Interval::from_double(y, p)); })};
}

}  // namespace pillai::bounds

#endif  // PILLAI_BOUNDS_HPP
