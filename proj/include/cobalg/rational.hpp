#ifndef COBALG_RATIONAL_HPP
#define COBALG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "cobalg/error.hpp"

namespace cobalg {

/* Exact rational number over arbitrary-precision integers.
 *
 * Canonical form is maintained on every construction and operation:
 * denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.  Values are
 * immutable in spirit; all operations return fresh values, so instances
 * can be shared freely between threads.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: integers embed implicitly

  // Normalizes sign and reduces; d == 0 raises ZeroDivide.
  Rational(long n, long d) {
    if (d == 0) throw ZeroDivide();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw ZeroDivide();
    v_ = mpq_class(n, d);
    v_.canonicalize();
  }

  // Text form "p/q" with q omitted when q = 1.  Parsing accepts an optional
  // leading sign and the whitespace-free form only.
  static Rational parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw ZeroDivide();
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  // Division as an explicit error value: nullopt instead of a throw.
  static std::optional<Rational> checked_div(const Rational& a, const Rational& b) {
    if (b.is_zero()) return std::nullopt;
    return a / b;
  }

  Rational reciprocal() const {
    if (is_zero()) throw ZeroDivide();
    return Rational(mpq_class(1) / v_);
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

// Hooks used by the generic series printer.
inline bool coeff_is_zero(const Rational& r) { return r.is_zero(); }
inline bool coeff_is_one(const Rational& r) { return r.is_one(); }
inline std::string coeff_standalone(const Rational& r) { return r.str(); }
inline std::string coeff_prefix(const Rational& r) {
  return r.sign() < 0 ? "(" + r.str() + ")" : r.str();
}
inline std::optional<Rational> coeff_unit_inverse(const Rational& r) {
  if (r.is_zero()) return std::nullopt;
  return r.reciprocal();
}

}  // namespace cobalg

#endif
