#pragma once

/**
 * @file quadratic.hpp
 * @brief Exact arithmetic in the real quadratic fields Q(√R).
 *
 * A value is stored as the canonical triple (p, q, d) meaning (p + q√R)/d,
 * with d > 0 and gcd(p, q, d) = 1. Two values are equal exactly when their
 * canonical triples are equal, so equality never needs arithmetic.
 *
 * Ordering, floor and fractional part are exact. The sign of p + q√R is
 * decided by comparing p² with R·q², and floor uses an integer square root
 * of R·q². Nothing here ever touches floating point; `approx()` is the only
 * decimal rendering and its output is prefixed with '~'.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "beatty_lab/errors.hpp"

namespace beatty_lab {

using BigInt = mpz_class;

namespace detail {

constexpr bool is_perfect_square(unsigned v) {
  for (unsigned r = 0; r * r <= v; ++r) {
    if (r * r == v) return true;
  }
  return false;
}

inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

inline BigInt isqrt(const BigInt& v) {
  BigInt out;
  mpz_sqrt(out.get_mpz_t(), v.get_mpz_t());
  return out;
}

inline int sgn(const BigInt& v) { return ::sgn(v); }

}  // namespace detail

template <unsigned Radicand>
class Quadratic {
  static_assert(Radicand > 1 && !detail::is_perfect_square(Radicand),
                "radicand must be a positive non-square");

 public:
  static constexpr unsigned radicand = Radicand;

  Quadratic() : p_(0), q_(0), d_(1) {}
  Quadratic(long value) : p_(value), q_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
  Quadratic(const BigInt& value) : p_(value), q_(0), d_(1) {}  // NOLINT(google-explicit-constructor)

  /// (p + q√R)/d in canonical form. Throws InvalidDenominator when d = 0.
  static Quadratic make(BigInt p, BigInt q, BigInt d) {
    if (d == 0) throw InvalidDenominator();
    Quadratic out;
    out.p_ = std::move(p);
    out.q_ = std::move(q);
    out.d_ = std::move(d);
    out.normalize();
    return out;
  }

  static Quadratic make(long p, long q, long d) { return make(BigInt(p), BigInt(q), BigInt(d)); }

  /// √R itself.
  static Quadratic root() { return make(0, 1, 1); }

  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  bool is_integer() const { return q_ == 0 && d_ == 1; }
  bool is_zero() const { return p_ == 0 && q_ == 0; }

  /// -1, 0 or +1.
  int sign() const {
    const int sp = detail::sgn(p_);
    const int sq = detail::sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // Opposite signs: the larger of p² and R·q² wins. They are never equal
    // because R is not a square.
    const BigInt pp = p_ * p_;
    const BigInt rqq = BigInt(Radicand) * q_ * q_;
    return pp > rqq ? sp : sq;
  }

  Quadratic conjugate() const {
    Quadratic out = *this;
    out.q_ = -out.q_;
    return out;
  }

  /// Greatest integer not exceeding the value.
  BigInt floor() const {
    // q√R = t + f with t = ⌊q√R⌋ and 0 ≤ f < 1, and ⌊(p + t + f)/d⌋ = ⌊(p + t)/d⌋.
    BigInt t = detail::isqrt(BigInt(Radicand) * q_ * q_);
    if (q_ < 0) t = -t - 1;
    return detail::floor_div(p_ + t, d_);
  }

  /// x − ⌊x⌋, in [0, 1); strictly inside (0, 1) whenever q ≠ 0.
  Quadratic frac() const { return *this - Quadratic(floor()); }

  Quadratic operator-() const {
    Quadratic out = *this;
    out.p_ = -out.p_;
    out.q_ = -out.q_;
    return out;
  }

  friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
    if (x.d_ == y.d_) return make(x.p_ + y.p_, x.q_ + y.q_, x.d_);
    return make(x.p_ * y.d_ + y.p_ * x.d_, x.q_ * y.d_ + y.q_ * x.d_, x.d_ * y.d_);
  }

  friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
    if (x.d_ == y.d_) return make(x.p_ - y.p_, x.q_ - y.q_, x.d_);
    return make(x.p_ * y.d_ - y.p_ * x.d_, x.q_ * y.d_ - y.q_ * x.d_, x.d_ * y.d_);
  }

  friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
    return make(x.p_ * y.p_ + BigInt(Radicand) * x.q_ * y.q_, x.p_ * y.q_ + x.q_ * y.p_,
                x.d_ * y.d_);
  }

  /// Throws DomainError on division by zero.
  friend Quadratic operator/(const Quadratic& x, const Quadratic& y) {
    if (y.is_zero()) throw DomainError("quadratic number: division by zero");
    // 1/y = d·(p − q√R)/(p² − R·q²)
    const BigInt norm = y.p_ * y.p_ - BigInt(Radicand) * y.q_ * y.q_;
    const Quadratic inv = make(y.d_ * y.p_, -y.d_ * y.q_, norm);
    return x * inv;
  }

  Quadratic& operator+=(const Quadratic& y) { return *this = *this + y; }
  Quadratic& operator-=(const Quadratic& y) { return *this = *this - y; }
  Quadratic& operator*=(const Quadratic& y) { return *this = *this * y; }
  Quadratic& operator/=(const Quadratic& y) { return *this = *this / y; }

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.p_ == y.p_ && x.q_ == y.q_ && x.d_ == y.d_;
  }

  friend std::strong_ordering operator<=>(const Quadratic& x, const Quadratic& y) {
    if (x == y) return std::strong_ordering::equal;
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

  /// "(p + q√R)/d" with the trivial parts dropped, e.g. "(1 + √5)/2", "-3", "2√2".
  std::string to_string() const {
    std::string body;
    if (q_ == 0) {
      body = p_.get_str();
    } else {
      std::string root = "√" + std::to_string(Radicand);
      auto coeff = [&](const BigInt& c) {
        if (c == 1) return root;
        if (c == -1) return "-" + root;
        return c.get_str() + root;
      };
      if (p_ == 0) {
        body = coeff(q_);
      } else {
        const BigInt aq = abs(q_);
        body = p_.get_str() + (q_ < 0 ? " - " : " + ") + coeff(aq);
        if (d_ != 1) body = "(" + body + ")";
      }
    }
    if (d_ != 1) body += "/" + d_.get_str();
    return body;
  }

  /// Decimal rendering truncated toward zero at `digits` places, prefixed '~'.
  /// For display only; never feed it back into a computation.
  std::string approx(unsigned digits = 12) const {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    const bool negative = sign() < 0;
    const Quadratic magnitude = negative ? -*this : *this;
    const BigInt scaled = (magnitude * Quadratic(scale)).floor();
    const BigInt int_part = detail::floor_div(scaled, scale);
    const std::string frac_digits = BigInt(scaled - int_part * scale).get_str();
    std::string out = negative ? "~-" : "~";
    out += int_part.get_str();
    if (digits > 0) out += "." + std::string(digits - frac_digits.size(), '0') + frac_digits;
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Quadratic& x) {
    return os << x.to_string();
  }

 private:
  void normalize() {
    if (d_ < 0) {
      p_ = -p_;
      q_ = -q_;
      d_ = -d_;
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), p_.get_mpz_t(), q_.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d_.get_mpz_t());
    if (g != 1) {
      mpz_divexact(p_.get_mpz_t(), p_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(q_.get_mpz_t(), q_.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(d_.get_mpz_t(), d_.get_mpz_t(), g.get_mpz_t());
    }
  }

  BigInt p_;
  BigInt q_;
  BigInt d_;
};

/// Elements of Q(√5); all golden-ratio arithmetic lives here.
using QuadraticReal = Quadratic<5>;
/// Elements of Q(√2), used for ⌊k√2⌋-type generators.
using QuadraticSqrt2 = Quadratic<2>;

}  // namespace beatty_lab
