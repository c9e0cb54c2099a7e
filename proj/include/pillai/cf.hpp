#ifndef PILLAI_CF_HPP
#define PILLAI_CF_HPP

// Certified continued fractions and the Legendre reduction step.

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "pillai/certified_real.hpp"
#include "pillai/errors.hpp"
#include "pillai/fib.hpp"
#include "pillai/nat.hpp"

namespace pillai::cf {

/// log(alpha) / log(sqrt5).
inline CertifiedReal tau_alpha_sqrt5(mpfr_prec_t prec = kDefaultPrecision) {
  return CertifiedReal(
      [](mpfr_prec_t p) { return constants::log_alpha(p) / constants::log_sqrt5(p); }, prec);
}

inline CertifiedReal golden_ratio(mpfr_prec_t prec = kDefaultPrecision) {
  return CertifiedReal([](mpfr_prec_t p) { return constants::alpha(p); }, prec);
}

struct CFExpansion {
  std::vector<Int> a;  // partial quotients a_0..a_N
  std::vector<Int> p;  // convergent numerators
  std::vector<Int> q;  // convergent denominators
  mpfr_prec_t precision = 0;  // working precision that certified every a_i

  std::size_t size() const { return a.size(); }

  Int max_quotient(std::size_t last_index) const {
    Int m = 0;
    for (std::size_t i = 0; i <= last_index && i < a.size(); ++i) m = std::max(m, a[i]);
    return m;
  }

  /// One line per index: `i a_i q_i`.
  void dump(std::ostream& out) const {
    for (std::size_t i = 0; i < a.size(); ++i) {
      out << i << " " << to_decimal(a[i]) << " " << to_decimal(q[i]) << "\n";
    }
  }
};

namespace detail {

// Attempts n quotients at a fixed precision; returns fewer when a complete
// quotient straddles an integer.
inline std::vector<Int> quotients_at(const CertifiedReal& x, std::size_t n, mpfr_prec_t prec) {
  std::vector<Int> a;
  Interval y = x.at(prec);
  const auto one = Interval::from_long(1, prec);
  while (a.size() < n) {
    auto [lo, hi] = y.floor_bounds();
    if (lo != hi) break;
    a.push_back(lo);
    if (a.size() == n) break;
    const auto frac = y - Interval::from_int(lo, prec);
    if (!frac.certainly_positive()) break;
    y = one / frac;
  }
  return a;
}

}  // namespace detail

/// First n_terms partial quotients of an irrational x. Each a_i is accepted
/// only when the enclosure of the i-th complete quotient has a constant
/// integer part; otherwise the whole expansion is redone at twice the
/// precision, up to `cap` bits (then PrecisionError).
inline CFExpansion cf_expand(const CertifiedReal& x, std::size_t n_terms,
                             mpfr_prec_t start_precision = 0, mpfr_prec_t cap = mpfr_prec_t{1} << 20) {
  if (n_terms < 1) throw DomainError("cf_expand needs n_terms >= 1");
  // Each quotient costs roughly log2(a_i) + 2 bits; start near that.
  mpfr_prec_t prec = start_precision ? start_precision
                                     : std::max<mpfr_prec_t>(x.precision(), 64 + 4 * static_cast<mpfr_prec_t>(n_terms));
  std::vector<Int> a;
  for (;;) {
    a = detail::quotients_at(x, n_terms, prec);
    if (a.size() == n_terms) break;
    if (prec * 2 > cap) {
      throw PrecisionError("continued fraction: only " + std::to_string(a.size()) +
                           " quotients certified below " + std::to_string(cap) + " bits");
    }
    prec *= 2;
  }
  CFExpansion out;
  out.a = std::move(a);
  out.precision = prec;
  Int p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
  Int p_cur = out.a[0], q_cur = 1;
  out.p.push_back(p_cur);
  out.q.push_back(q_cur);
  for (std::size_t i = 1; i < out.a.size(); ++i) {
    Int p_next = out.a[i] * p_cur + p_prev;
    Int q_next = out.a[i] * q_cur + q_prev;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    out.p.push_back(p_cur);
    out.q.push_back(q_cur);
  }
  return out;
}

struct LegendreResult {
  Nat M;
  std::size_t N = 0;     // minimal N with q_N > M
  Int a_M;               // max a_i, 0 <= i <= N
  Int denominator;       // a(M) + 2: |x - r/s| > 1/(denominator s^2) for 0 < s < M
  std::size_t N_fib = 0; // minimal n with F_n > M (sufficient since q_n >= F_n)
  Int a_M_fib;           // max a_i, 0 <= i <= N_fib
  Int denominator_fib;
  CFExpansion expansion;
};

inline LegendreResult legendre_reduce(const CertifiedReal& x, const Nat& M) {
  if (M < 1) throw DomainError("legendre_reduce needs M >= 1");
  LegendreResult out;
  out.M = M;
  // q_n >= F_n guarantees termination by index N_fib.
  FibIndex nf = 1;
  while (fib(nf) <= M) ++nf;
  out.N_fib = nf;
  out.expansion = cf_expand(x, nf + 1);
  const auto& q = out.expansion.q;
  std::size_t n = 0;
  while (q[n] <= M) ++n;
  out.N = n;
  out.a_M = out.expansion.max_quotient(n);
  out.denominator = out.a_M + 2;
  out.a_M_fib = out.expansion.max_quotient(nf);
  out.denominator_fib = out.a_M_fib + 2;
  return out;
}

/// Numerical closures that follow from the reduction with a(M) = a_max.
struct ReductionClosure {
  CertifiedReal log_bound;  // log((a_max + 2) k1 l1)
  long log_bound_ceiling = 0;
  CertifiedReal k_gap_at_201;  // 201 / log alpha
  CertifiedReal k_gap_at_203;  // 203 / log alpha
  Nat p_power_bound;           // 53 (a_max + 2) k1^2
};

inline ReductionClosure apply_reduction_331(const Nat& k1_bound, const Nat& ell1_bound, long a_max = 330) {
  if (k1_bound < 1 || ell1_bound < 1) throw DomainError("bounds must be positive");
  const Nat factor = Nat(a_max + 2) * k1_bound * ell1_bound;
  ReductionClosure out{CertifiedReal([factor](mpfr_prec_t p) { return log(Interval::from_int(factor, p)); }),
                       0,
                       CertifiedReal([](mpfr_prec_t p) {
                         return Interval::from_long(201, p) / constants::log_alpha(p);
                       }),
                       CertifiedReal([](mpfr_prec_t p) {
                         return Interval::from_long(203, p) / constants::log_alpha(p);
                       }),
                       Nat(53) * (a_max + 2) * k1_bound * k1_bound};
  out.log_bound_ceiling = out.log_bound.enclosure().ceil_upper().get_si();
  return out;
}

}  // namespace pillai::cf

#endif  // PILLAI_CF_HPP
