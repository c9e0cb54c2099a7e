#ifndef PILLAI_HEIGHT_HPP
#define PILLAI_HEIGHT_HPP

// Logarithmic heights in Q(sqrt 5).

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pillai/certified_real.hpp"
#include "pillai/errors.hpp"
#include "pillai/nat.hpp"

namespace pillai {

/// (a + b sqrt5) / q with gcd(a, b, q) = 1 and q > 0.
class QuadraticNumber {
 public:
  QuadraticNumber() : a_(0), b_(0), q_(1) {}
  QuadraticNumber(Int a, Int b = 0, Int q = 1) : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
    normalize();
  }
  QuadraticNumber(long a) : QuadraticNumber(Int(a)) {}

  static QuadraticNumber sqrt5() { return {0, 1, 1}; }
  static QuadraticNumber alpha() { return {1, 1, 2}; }
  static QuadraticNumber beta() { return {1, -1, 2}; }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& q() const { return q_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  QuadraticNumber conjugate() const { return {a_, -b_, q_}; }

  /// Enclosure of the real value; `conjugate_embedding` picks the
  /// other real embedding (sqrt5 -> -sqrt5).
  Interval value(mpfr_prec_t prec, bool conjugate_embedding = false) const {
    auto s = sqrt(Interval::from_long(5, prec)) * Interval::from_int(b_, prec);
    auto num = conjugate_embedding ? Interval::from_int(a_, prec) - s : Interval::from_int(a_, prec) + s;
    return num / Interval::from_int(q_, prec);
  }

  /// Coefficients (leading first) of the minimal primitive polynomial
  /// with positive leading coefficient.
  std::vector<Int> minimal_polynomial() const {
    std::vector<Int> c;
    if (b_ == 0) {
      c = {q_, -a_};
    } else {
      // (x - g)(x - g') = x^2 - (2a/q) x + (a^2 - 5b^2)/q^2, times q^2.
      c = {q_ * q_, -2 * a_ * q_, a_ * a_ - 5 * b_ * b_};
    }
    Int g = 0;
    for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    for (auto& v : c) v /= g;
    return c;
  }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ * y.q_ + y.a_ * x.q_, x.b_ * y.q_ + y.b_ * x.q_, x.q_ * y.q_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x) { return {-x.a_, -x.b_, x.q_}; }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) { return x + (-y); }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.a_ * y.a_ + 5 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.q_ * y.q_};
  }
  QuadraticNumber inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    // q / (a + b sqrt5) = q (a - b sqrt5) / (a^2 - 5 b^2)
    return {q_ * a_, -q_ * b_, a_ * a_ - 5 * b_ * b_};
  }
  friend QuadraticNumber operator/(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x * y.inverse();
  }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.q_ == y.q_;
  }

  std::string to_string() const {
    return "(" + to_decimal(a_) + (b_ < 0 ? " - " : " + ") + to_decimal(abs(b_)) + "*sqrt5)/" +
           to_decimal(q_);
  }

 private:
  void normalize() {
    if (q_ == 0) throw DomainError("zero denominator");
    if (q_ < 0) {
      a_ = -a_;
      b_ = -b_;
      q_ = -q_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q_.get_mpz_t());
    if (g > 1) {
      a_ /= g;
      b_ /= g;
      q_ /= g;
    }
  }

  Int a_;
  Int b_;
  Int q_;
};

inline QuadraticNumber pow(const QuadraticNumber& x, long s) {
  if (s < 0) return pow(x.inverse(), -s);
  QuadraticNumber result = 1;
  QuadraticNumber base = x;
  for (unsigned long e = static_cast<unsigned long>(s); e; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

/// h(g) = (1/d)(log a0 + sum log max(|g_i|, 1)), from the minimal polynomial.
inline CertifiedReal height(const QuadraticNumber& g) {
  if (g.is_zero()) throw DomainError("height of zero is undefined here");
  return CertifiedReal([g](mpfr_prec_t prec) {
    const auto poly = g.minimal_polynomial();
    const auto one = Interval::from_long(1, prec);
    if (poly.size() == 2) {
      // a0 x - a1: h = log max(|a1|, a0)
      return log(Interval::from_int(std::max(Int(abs(poly[1])), poly[0]), prec));
    }
    auto sum = log(Interval::from_int(poly[0], prec));
    sum = sum + log(max(abs(g.value(prec, false)), one));
    sum = sum + log(max(abs(g.value(prec, true)), one));
    return sum / Interval::from_long(2, prec);
  });
}

/// Expression trees for upper bounds on heights via
///   h(x +- y) <= h(x) + h(y) + log 2,  h(x y^{+-1}) <= h(x) + h(y),
///   h(x^s) = |s| h(x).
class HeightExpr {
 public:
  enum class Kind { kExact, kSymbolic, kSum, kProduct, kQuotient, kPower };

  static HeightExpr exact(const QuadraticNumber& g, std::string name = {}) {
    HeightExpr e(Kind::kExact);
    e.node_->value = g;
    e.node_->name = name.empty() ? g.to_string() : std::move(name);
    return e;
  }
  /// A leaf known only through an upper bound on its height.
  static HeightExpr symbolic(std::string name, CertifiedReal height_bound) {
    HeightExpr e(Kind::kSymbolic);
    e.node_->name = std::move(name);
    e.node_->bound = std::move(height_bound);
    return e;
  }
  friend HeightExpr operator+(const HeightExpr& x, const HeightExpr& y) { return binary(Kind::kSum, x, y, "+"); }
  friend HeightExpr operator-(const HeightExpr& x, const HeightExpr& y) { return binary(Kind::kSum, x, y, "-"); }
  friend HeightExpr operator*(const HeightExpr& x, const HeightExpr& y) {
    return binary(Kind::kProduct, x, y, "*");
  }
  friend HeightExpr operator/(const HeightExpr& x, const HeightExpr& y) {
    return binary(Kind::kQuotient, x, y, "/");
  }
  friend HeightExpr pow(const HeightExpr& x, long s) {
    HeightExpr e(Kind::kPower);
    e.node_->children = {x};
    e.node_->exponent = s;
    e.node_->name = "(" + x.name() + ")^" + std::to_string(s);
    return e;
  }

  const std::string& name() const { return node_->name; }
  Kind kind() const { return node_->kind; }

  struct Bound {
    CertifiedReal value;
    std::vector<std::string> trace;  // one line per rule application, leaves first
  };

  Bound bound() const {
    std::vector<std::string> trace;
    auto v = eval(trace);
    return {std::move(v), std::move(trace)};
  }

  /// The exact value when every leaf is exact.
  std::optional<QuadraticNumber> exact_value() const {
    const auto& n = *node_;
    switch (n.kind) {
      case Kind::kExact:
        return n.value;
      case Kind::kSymbolic:
        return std::nullopt;
      case Kind::kPower: {
        auto x = n.children[0].exact_value();
        if (!x) return std::nullopt;
        return pillai::pow(*x, n.exponent);
      }
      default: {
        auto x = n.children[0].exact_value();
        auto y = n.children[1].exact_value();
        if (!x || !y) return std::nullopt;
        if (n.kind == Kind::kSum) return n.op == "+" ? *x + *y : *x - *y;
        if (n.kind == Kind::kProduct) return *x * *y;
        return *x / *y;
      }
    }
  }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::string op;
    QuadraticNumber value;
    std::optional<CertifiedReal> bound;
    std::vector<HeightExpr> children;
    long exponent = 1;
  };

  explicit HeightExpr(Kind k) : node_(std::make_shared<Node>()) { node_->kind = k; }

  static HeightExpr binary(Kind k, const HeightExpr& x, const HeightExpr& y, const char* op) {
    HeightExpr e(k);
    e.node_->children = {x, y};
    e.node_->op = op;
    e.node_->name = "(" + x.name() + " " + op + " " + y.name() + ")";
    return e;
  }

  CertifiedReal eval(std::vector<std::string>& trace) const {
    const auto& n = *node_;
    auto note = [&](const std::string& rule, const CertifiedReal& v) {
      trace.push_back(rule + ": h" + n.name + " <= " + v.enclosure().upper_string(8));
    };
    switch (n.kind) {
      case Kind::kExact: {
        auto v = height(n.value);
        note("exact", v);
        return v;
      }
      case Kind::kSymbolic:
        note("given", *n.bound);
        return *n.bound;
      case Kind::kPower: {
        auto v = n.children[0].eval(trace) * CertifiedReal::constant(std::labs(n.exponent));
        note("power", v);
        return v;
      }
      case Kind::kSum: {
        auto v = n.children[0].eval(trace) + n.children[1].eval(trace) +
                 CertifiedReal([](mpfr_prec_t p) { return constants::log_of(2, p); });
        note("sum", v);
        return v;
      }
      default: {
        auto v = n.children[0].eval(trace) + n.children[1].eval(trace);
        note(n.kind == Kind::kProduct ? "product" : "quotient", v);
        return v;
      }
    }
  }

  std::shared_ptr<Node> node_;
};

}  // namespace pillai

#endif  // PILLAI_HEIGHT_HPP
