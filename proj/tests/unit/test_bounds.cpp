#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pillai/audit.hpp"
#include "pillai/bounds.hpp"
#include "pillai/height.hpp"
#include "pillai/search.hpp"

namespace pillai {
namespace {

using bounds::dec;
using bounds::num;
using bounds::Real;

const double kLogAlpha = std::log((1 + std::sqrt(5.0)) / 2);

void expect_near_rel(const Real& r, double want, double rel = 1e-12) {
  EXPECT_NEAR(r.midpoint(), want, std::fabs(want) * rel) << r.enclosure().upper_string(12);
}

// ---- heights ---------------------------------------------------------------

TEST(Height, Examples) {
  expect_near_rel(height(QuadraticNumber(3, 0, 2)), std::log(3.0));
  expect_near_rel(height(QuadraticNumber(-7, 0, 3)), std::log(7.0));
  expect_near_rel(height(QuadraticNumber::alpha()), 0.5 * kLogAlpha);
  expect_near_rel(height(QuadraticNumber::sqrt5()), 0.5 * std::log(5.0));
  EXPECT_NEAR(height(QuadraticNumber::alpha()).midpoint(), 0.2406, 1e-4);
  EXPECT_THROW(height(QuadraticNumber(0)), DomainError);
}

TEST(Height, Normalization) {
  const QuadraticNumber g(4, -6, -10);
  EXPECT_EQ(g.a(), -2);
  EXPECT_EQ(g.b(), 3);
  EXPECT_EQ(g.q(), 5);
  EXPECT_EQ(g.conjugate(), QuadraticNumber(-2, -3, 5));
  EXPECT_EQ(QuadraticNumber::alpha() * QuadraticNumber::beta(), QuadraticNumber(-1));
  EXPECT_EQ(QuadraticNumber::alpha() + QuadraticNumber::beta(), QuadraticNumber(1));
  const std::vector<Int> mp{1, -1, -1};
  EXPECT_EQ(QuadraticNumber::alpha().minimal_polynomial(), mp);
  // (1 + sqrt5)/4: 16x^2 - 8x - 4 -> 4x^2 - 2x - 1
  const std::vector<Int> mp2{4, -2, -1};
  EXPECT_EQ(QuadraticNumber(1, 1, 4).minimal_polynomial(), mp2);
}

TEST(Height, PowerIsExact) {
  const std::vector<QuadraticNumber> gs{QuadraticNumber::alpha(), QuadraticNumber::sqrt5(), QuadraticNumber(3, 0, 2),
                                        QuadraticNumber(2, 1, 3), QuadraticNumber(-5, 2, 7)};
  for (const auto& g : gs) {
    const auto hg = height(g);
    for (long s = -10; s <= 10; ++s) {
      if (s == 0) continue;
      const auto direct = height(pow(g, s));
      const auto scaled = hg * num(std::labs(s));
      EXPECT_TRUE(direct.enclosure().overlaps(scaled.enclosure())) << g.to_string() << "^" << s;
      EXPECT_NEAR(direct.midpoint(), scaled.midpoint(), 1e-25 * (1 + scaled.midpoint()));
    }
  }
}

TEST(HeightCalculus, Examples) {
  auto g = HeightExpr::symbolic("g", num(1));
  EXPECT_NEAR(pow(g, -3).bound().value.midpoint(), 3.0, 1e-30);
  // g * g^-1 = 1 exactly, but the calculus only gives 2 h(g).
  auto a = HeightExpr::exact(QuadraticNumber::alpha(), "alpha");
  auto b = (a * pow(a, -1)).bound();
  expect_near_rel(b.value, kLogAlpha);
  ASSERT_EQ(b.trace.size(), 4u);
  EXPECT_EQ(b.trace.back().rfind("product", 0), 0u);
  // sum rule adds log 2
  auto s = (HeightExpr::symbolic("x", num(2)) + HeightExpr::symbolic("y", num(3))).bound();
  expect_near_rel(s.value, 5 + std::log(2.0));
  EXPECT_FALSE((a + HeightExpr::symbolic("y", num(0))).exact_value().has_value());
  EXPECT_EQ(*(a - a * a).exact_value(), QuadraticNumber(-1));
}

// Random trees of small quadratic leaves: the calculus never undercuts the
// exact height.
TEST(HeightCalculus, NeverBelowExactHeight) {
  std::mt19937_64 rng(20240531);
  std::uniform_int_distribution<int> coef(-9, 9), den(1, 5), op(0, 4), expo(-3, 3), depth(1, 3);
  std::function<HeightExpr(int)> gen = [&](int d) -> HeightExpr {
    if (d == 0) {
      QuadraticNumber g;
      while (g.is_zero()) g = QuadraticNumber(coef(rng), coef(rng), den(rng));
      return HeightExpr::exact(g);
    }
    const int o = op(rng);
    if (o == 4) {
      long e = 0;
      while (e == 0) e = expo(rng);
      return pow(gen(d - 1), e);
    }
    auto x = gen(d - 1);
    auto y = gen(d - 1);
    if (o == 0) return x + y;
    if (o == 1) return x - y;
    if (o == 2) return x * y;
    return x / y;
  };
  int checked = 0;
  while (checked < 1000) {
    const auto e = gen(depth(rng));
    std::optional<QuadraticNumber> v;
    try {
      v = e.exact_value();
    } catch (const DomainError&) {
      continue;  // division by zero inside the tree
    }
    if (!v || v->is_zero()) continue;
    const auto exact = height(*v);
    const auto bound = e.bound().value;
    ASSERT_FALSE(bound.enclosure().certainly_less(exact.enclosure()))
        << e.name() << ": " << bound.midpoint() << " < " << exact.midpoint();
    ++checked;
  }
}

// ---- Matveev -----------------------------------------------------------------

double matveev_oracle(int t, int D) {
  return 1.4 * std::pow(30.0, t + 3) * std::pow(t, 4.5) * D * D * (1 + std::log(static_cast<double>(D)));
}

TEST(Matveev, Constant) {
  for (int t : {2, 3, 4}) {
    for (int D : {1, 2, 3}) expect_near_rel(bounds::matveev_constant(t, D), matveev_oracle(t, D), 1e-13);
  }
  EXPECT_NEAR(bounds::matveev_constant(3, 2).midpoint(), 9.6974e11, 1e8);
}

TEST(Matveev, Examples) {
  // Gamma with A = (log alpha, 2 log p, log 5) at log p = 1, B = 1: the
  // coefficient of (log p)(1 + log k).
  bounds::LinearFormSpec gamma{3, 2, num(1), {bounds::log_alpha(), num(2), bounds::log_of(5)}};
  const double coeff = -bounds::matveev_bound(gamma).midpoint();
  EXPECT_NEAR(coeff, matveev_oracle(3, 2) * kLogAlpha * 2 * std::log(5.0), 1);
  EXPECT_NEAR(coeff / 1.502e12, 1, 1e-3);

  bounds::LinearFormSpec tiny{2, 1, num(1), {dec("0.16"), dec("0.16")}};
  const auto v = bounds::matveev_bound(tiny);
  EXPECT_TRUE(v.enclosure().certainly_negative());
  expect_near_rel(v, -matveev_oracle(2, 1) * 0.16 * 0.16, 1e-13);
}

TEST(Matveev, Preconditions) {
  EXPECT_THROW(bounds::matveev_bound({1, 1, num(1), {num(1)}}), DomainError);
  EXPECT_THROW(bounds::matveev_bound({2, 0, num(1), {num(1), num(1)}}), DomainError);
  EXPECT_THROW(bounds::matveev_bound({2, 1, num(1), {num(1)}}), DomainError);
  EXPECT_THROW(bounds::matveev_bound({2, 1, dec("0.5"), {num(1), num(1)}}), DomainError);
  EXPECT_THROW(bounds::matveev_bound({2, 1, num(1), {num(1), dec("0.15")}}), DomainError);
}

TEST(Matveev, MonotoneInInputs) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.16, 50.0);
  for (int i = 0; i < 200; ++i) {
    const int t = 2 + i % 3;
    std::vector<Real> A;
    for (int j = 0; j < t; ++j) A.push_back(Real([x = u(rng)](mpfr_prec_t p) { return Interval::from_double(x, p); }));
    const Real B([x = 1 + u(rng) * 100](mpfr_prec_t p) { return Interval::from_double(x, p); });
    const auto base = bounds::matveev_bound({t, 2, B, A});
    auto bigger_b = bounds::matveev_bound({t, 2, B + num(1), A});
    EXPECT_TRUE(bigger_b.enclosure().certainly_less(base.enclosure()));
    auto A2 = A;
    A2[i % t] = A2[i % t] + dec("0.5");
    EXPECT_TRUE(bounds::matveev_bound({t, 2, B, A2}).enclosure().certainly_less(base.enclosure()));
  }
}

// ---- two-log bound -----------------------------------------------------------

TEST(TwoLog, ExampleWithMaxBranch) {
  bounds::TwoLogSpec s;
  s.D = 2;
  s.log_A1 = dec("0.5");
  s.log_A2 = bounds::log_of(5) / num(2);
  // b' large enough that log b' + 0.14 stays below 21/D = 10.5
  s.b1 = 1000;
  s.b2 = 3;
  const auto r = bounds::lmn_two_log_bound(s);
  EXPECT_EQ(r.branch, "21/D");
  EXPECT_NEAR(r.max_term.midpoint(), 10.5, 1e-30);
  const double want = -24.34 * 16 * 0.5 * (std::log(5.0) / 2) * 110.25;
  expect_near_rel(r.bound, want, 1e-13);
  EXPECT_NEAR(r.bound.midpoint(), -1.7276e4, 1);
  expect_near_rel(r.bound_d2, want / 4, 1e-13);
  const double bp = 1000 / (2 * std::log(5.0) / 2) + 3 / (2 * 0.5);
  expect_near_rel(r.b_prime, bp, 1e-13);
}

TEST(TwoLog, SmallArguments) {
  bounds::TwoLogSpec s;
  s.D = 2;
  s.log_A1 = dec("0.5");
  s.log_A2 = dec("0.5");
  const auto r = bounds::lmn_two_log_bound(s);
  EXPECT_NEAR(r.b_prime.midpoint(), 2.0, 1e-30);
  EXPECT_EQ(r.branch, "21/D");

  s.D = 100;
  s.log_A1 = dec("0.01");
  s.log_A2 = dec("0.01");
  s.b1 = 1;
  s.b2 = 1;
  // b' = 2, log 2 + 0.14 = 0.833 beats 21/100 and 1/2
  EXPECT_EQ(bounds::lmn_two_log_bound(s).branch, "log b' + 0.14");
  // b' = 0.002
  s.log_A1 = num(10);
  s.log_A2 = num(10);
  EXPECT_EQ(bounds::lmn_two_log_bound(s).branch, "1/2");
  s.b2 = 0;
  EXPECT_THROW(bounds::lmn_two_log_bound(s), DomainError);
}

TEST(TwoLog, BPrimeAtMostOnePointSevenK1) {
  // b1 < k1, b2 = l1 - l2 < k1 / log 5 with log A1 = 1/2, log A2 = (log 5)/2.
  for (long k1 : {10L, 1000L, 123456789L}) {
    bounds::TwoLogSpec s;
    s.D = 2;
    s.log_A1 = dec("0.5");
    s.log_A2 = bounds::log_of(5) / num(2);
    s.b1 = k1;
    s.b2 = static_cast<long>(std::floor(k1 / std::log(5.0)));
    const auto r = bounds::lmn_two_log_bound(s);
    EXPECT_TRUE(r.b_prime.enclosure().certainly_less(Interval::from_decimal("1.7") * Interval::from_long(k1)));
  }
}

TEST(TwoLog, Preconditions) {
  bounds::TwoLogSpec s;
  s.D = 2;
  s.log_A1 = dec("0.4");
  s.log_A2 = num(1);
  EXPECT_THROW(bounds::lmn_two_log_bound(s), DomainError);
  s.D = 0;
  EXPECT_THROW(bounds::lmn_two_log_bound(s), DomainError);
}

// ---- analytic lemma, counting bound -------------------------------------------

TEST(GlBound, Examples) {
  expect_near_rel(bounds::gl_lemma_bound(1, 30.0), 60 * std::log(30.0), 1e-14);
  EXPECT_NEAR(bounds::gl_lemma_bound(1, 30.0).midpoint(), 204.07, 0.01);
  try {
    bounds::gl_lemma_bound(2, 100.0);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("T > (4s^2)^s"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("256"), std::string::npos);
  }
  EXPECT_THROW(bounds::gl_lemma_bound(1, 4.0), DomainError);
  EXPECT_NO_THROW(bounds::gl_lemma_bound(2, 257.0));
  EXPECT_THROW(bounds::gl_lemma_bound(0, 10.0), DomainError);
}

TEST(AvCount, Examples) {
  const auto a = bounds::av_count_bound(1, 0);
  ASSERT_TRUE(a.value);
  EXPECT_EQ(*a.value, Nat(16777216));  // 8^8
  const auto b = bounds::av_count_bound(2, 1);
  EXPECT_EQ(b.exponent, 256);
  ASSERT_TRUE(b.value);
  EXPECT_EQ(*b.value, power(Nat(16), 256));
  const auto c = bounds::av_count_bound(3, 2);
  EXPECT_EQ(c.base, 24u);
  EXPECT_EQ(c.exponent, 1944);
  EXPECT_NEAR(c.log10_paper_figure, std::log10(2.0) + 1944 * std::log10(24.0), 1e-9);
  EXPECT_GT(c.log10_paper_figure, 2500);
  EXPECT_THROW(bounds::av_count_bound(0, 1), DomainError);
}

// ---- linear forms on the known coincidences -----------------------------------

TEST(LinearForms, SpotChecksOnCoincidences) {
  const auto scan = search::multiplicity_scan(11, 1000, 5, 2);
  int checked = 0;
  for (const auto& w : scan.witnesses) {
    const auto& hi = w.reps.front();
    const auto& lo = w.reps.back();
    if (lo.ell == 0) continue;
    const long k = static_cast<long>(hi.k), l = static_cast<long>(hi.ell);
    const long k2 = static_cast<long>(lo.k), l2 = static_cast<long>(lo.ell);
    const auto pl = pow(Real::integer(w.p), l - l2);
    const auto g = abs(bounds::gamma_kl(k, l, w.p).enclosure());
    EXPECT_TRUE(g.certainly_positive());
    EXPECT_TRUE(g.certainly_less((dec("4.2") / pl).enclosure())) << w.c;
    const auto lam = abs(bounds::lambda_kl(k, l, w.p).enclosure());
    EXPECT_TRUE(lam.certainly_less((dec("26.5") / pl).enclosure())) << w.c;
    const auto gp = abs(bounds::gamma_prime_kl(k, l, k2, l2, w.p).enclosure());
    EXPECT_TRUE(gp.certainly_positive());
    const auto rhs = dec("6.2") / pow(Real([](mpfr_prec_t p) { return constants::alpha(p); }), k + k2);
    EXPECT_TRUE(gp.certainly_less(rhs.enclosure())) << w.c;
    ++checked;
  }
  EXPECT_EQ(checked, 3);
}

TEST(LinearForms, GammaIsExpLambdaMinusOne) {
  for (long k = 3; k < 60; k += 7) {
    const auto g = bounds::gamma_kl(k, 2, Nat(7));
    const auto viaL = exp(bounds::lambda_kl(k, 2, Nat(7))) - num(1);
    EXPECT_TRUE(g.enclosure().overlaps(viaL.enclosure()));
  }
}

// ---- fixed points ---------------------------------------------------------------

TEST(FixedPoint, LinearLogExample) {
  // x < 100 log x: largest root of x = 100 log x is ~647.28
  const auto fp = bounds::solve_fixed_point(
      [](const Interval& y, mpfr_prec_t p) { return log(Interval::from_long(100, p) * y); }, 2.0, 20.0);
  EXPECT_NEAR(fp.x_upper.midpoint(), 647.2775, 1e-3);
  EXPECT_LT(fp.y_hi - fp.y_lo, 1e-12);
  // oracle: x - 100 log x changes sign at the bound
  const double x = fp.x_upper.midpoint();
  EXPECT_GT(x - 100 * std::log(x), -1e-6);
  EXPECT_THROW(bounds::solve_fixed_point(
                   [](const Interval& y, mpfr_prec_t p) { return log(Interval::from_long(100, p) * y); }, 10.0,
                   20.0),
               DomainError);
}

// ---- precision -----------------------------------------------------------------

TEST(Precision, DoublingStaysInsideRadius) {
  std::vector<Real> xs{bounds::matveev_constant(3, 2), bounds::gl_lemma_bound(2, 7.9e24 * 2.59),
                       height(QuadraticNumber(-5, 2, 7)), bounds::gamma_prime_kl(12, 2, 9, 1, Nat(11))};
  bounds::TwoLogSpec s;
  s.D = 2;
  s.log_A1 = dec("0.5");
  s.log_A2 = bounds::log_of(5) / num(2);
  s.b1 = 77;
  s.b2 = 5;
  xs.push_back(bounds::lmn_two_log_bound(s).bound);
  for (const auto& x : xs) {
    const auto fine = x.refined(2 * x.precision());
    EXPECT_LE(std::fabs(fine.midpoint() - x.midpoint()), x.radius() + fine.radius() + 1e-300);
    EXPECT_TRUE(x.enclosure().contains(fine.enclosure()) || x.enclosure().overlaps(fine.enclosure()));
    EXPECT_LE(fine.radius(), x.radius());
  }
}

// ---- audits ----------------------------------------------------------------------

TEST(Audit, K1ChainAtFive) {
  const auto a = audit::audit_k1_chain(5);
  // step-local recomputations, frozen from an independent double evaluation
  const double C = matveev_oracle(3, 2);
  EXPECT_NEAR(a.at("Gamma coefficient").computed.midpoint(), C * kLogAlpha * 2 * std::log(5.0), 1e3);
  EXPECT_TRUE(a.at("Gamma coefficient").pass);
  EXPECT_TRUE(a.at("(max) coefficient").pass);
  EXPECT_TRUE(a.at("h(alpha3) coefficient").pass);
  EXPECT_NEAR(a.at("h(alpha3) coefficient").computed.midpoint(),
              2.28e12 + (0.5 * std::log(5.0) + 2 * std::log(2.0)) / std::log(5.0), 1e-2);
  EXPECT_TRUE(a.at("A3 coefficient").pass);
  EXPECT_TRUE(a.at("k bound (i)").pass);
  EXPECT_TRUE(a.at("k bound (i) for k > 1e10").pass);

  const auto& gp = a.at("Gamma' coefficient");
  EXPECT_TRUE(gp.flagged());
  EXPECT_NEAR(gp.computed.midpoint(), C * kLogAlpha * 2 * 4.6e12, 1e14);
  EXPECT_NEAR(gp.computed.midpoint() * std::log(5.0) / 6.91e24, 1, 2e-4);
  EXPECT_TRUE(a.at("Gamma coefficient with 1.4*10^6 prefactor").flagged());

  // 4.74e29 is below 5e29 but more than 1% off.
  const auto& k2 = a.at("k bound (ii)");
  EXPECT_EQ(k2.status, "loose");
  const double lll5 = std::log(std::log(5.0));
  EXPECT_NEAR(k2.computed.midpoint() / (16 * 7.9e24 * std::pow(1 + std::log(7.9e24) / (2 * lll5), 2)), 1, 1e-12);
  EXPECT_FALSE(a.unflagged_pass());
}

TEST(Audit, K1ChainAtTenToFourteen) {
  const auto a = audit::audit_k1_chain(power(Nat(10), 14));
  const auto& e = a.at("k bound at p");
  EXPECT_TRUE(e.pass);
  const double L = 14 * std::log(10.0);
  EXPECT_NEAR(e.computed.midpoint() / (5e29 * L * L * std::pow(std::log(L), 2)), 1, 1e-12);
  EXPECT_THROW(audit::audit_k1_chain(3), DomainError);
  // the (1 + log k)^2 factor at k = 1000
  EXPECT_NEAR(std::pow(1 + std::log(1000.0), 2), 62.53, 0.01);
}

TEST(Audit, AbsoluteChain) {
  const auto a = audit::audit_absolute_chain();
  EXPECT_NEAR(a.at("p closure").computed.midpoint() / 4.5928e34, 1, 1e-4);
  EXPECT_TRUE(a.at("p closure").computed.enclosure().certainly_less(Interval::from_decimal("5e34")));
  EXPECT_TRUE(a.at("log p small branch").pass);
  EXPECT_NEAR(a.at("log p small branch").computed.midpoint(), 5093.15, 0.01);
  const auto& lmn = a.at("two-log constant");
  EXPECT_TRUE(lmn.flagged());
  EXPECT_NEAR(lmn.theorem_faithful->midpoint(), 24.34 * 16 * 0.5 * std::log(5.0) / 2, 1e-9);
  EXPECT_NEAR(a.at("log p large branch").computed.midpoint() / 4.00026e5, 1, 1e-5);
  EXPECT_EQ(a.at("log p large branch").status, "loose");
  EXPECT_EQ(a.at("k1 closure").status, "loose");
  EXPECT_TRUE(a.at("k1 closure").computed.enclosure().certainly_less(Interval::from_decimal("1.5e43")));
  EXPECT_TRUE(a.at("p^l3").pass);  // an exact tie
  EXPECT_TRUE(a.at("201 / log alpha").pass);
  EXPECT_TRUE(a.at("203 / log alpha").pass);
  EXPECT_NEAR(a.at("203 / log alpha").computed.midpoint(), 203 / kLogAlpha, 1e-9);
  EXPECT_NEAR(a.at("log(332 k1 l1)").computed.midpoint(), std::log(332 * 2.3e41 * 1.5e43), 1e-9);
}

TEST(Audit, FixedPointsSatisfyTheirInequalities) {
  const auto a = audit::audit_absolute_chain();
  // Independent double evaluation: G(x) <= x at the returned bound.
  const double p31 = a.at("p closure").computed.midpoint();
  const double lp = std::log(p31);
  EXPECT_LE(3e31 * lp * std::pow(std::log(lp), 2), p31 * (1 + 1e-9));
  const double x = a.at("log p small branch").computed.midpoint();
  EXPECT_LE(5000 + std::log(1.5e31 * x * x * std::pow(std::log(x), 2)), x + 1e-9);
  const double y = a.at("log p large branch").computed.midpoint();
  const double tail = std::log(y * y * std::pow(std::log(y), 2));
  EXPECT_LE(40 * std::pow(std::log(1e30) + tail, 2) + std::log(1.5e31) + tail, y * (1 + 1e-12));
}

TEST(Audit, JsonShape) {
  const auto j = audit::to_json(audit::audit_k1_chain(5));
  ASSERT_TRUE(j["entries"].is_array());
  for (const auto& e : j["entries"]) {
    EXPECT_TRUE(e["label"].is_string());
    EXPECT_TRUE(e["computed"].is_string());
    EXPECT_TRUE(e["rel_dev"].is_number());
    EXPECT_TRUE(e["pass"].is_boolean());
    EXPECT_TRUE(e["paper"].is_string() || e["paper"].is_null());
  }
  EXPECT_EQ(j["entries"][1]["paper"], "1.51e12");
  EXPECT_EQ(j["entries"][1]["computed"], "1.5020917e+12");
}

}  // namespace
}  // namespace pillai
