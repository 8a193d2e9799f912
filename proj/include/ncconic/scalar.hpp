#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "ncconic/error.hpp"

namespace ncconic {

// Q when d == 0, otherwise Q(sqrt d) with d squarefree and d != 1.
struct FieldSpec {
  long d = 0;

  static FieldSpec rationals() { return {0}; }
  static FieldSpec quadratic(long d);
  bool is_rational() const { return d == 0; }
  std::string name() const;
  bool operator==(const FieldSpec&) const = default;
};

// a + b*sqrt(d). Rationals (d == 0) embed into every quadratic field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT
  Scalar(const mpq_class& a) : a_(a) {}  // NOLINT
  Scalar(const mpq_class& a, const mpq_class& b, long d);

  static Scalar sqrt_of(long d);  // sqrt(d) in Q(sqrt d)
  static Scalar from_string(const std::string& s);  // rational "p/q"

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  long d() const { return d_; }
  FieldSpec field() const { return {d_}; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;
  Scalar conj() const;
  mpq_class norm() const;  // a^2 - d b^2

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar pow(unsigned e) const;
  // Printable and re-parseable; sqrt(-1) prints as i.
  std::string str() const;
  // True when the string form needs parentheses as a coefficient.
  bool compound() const { return sgn(a_) != 0 && sgn(b_) != 0; }
  // Numerical value under the embedding sqrt(d) -> +sqrt(|d|) (times i when d < 0).
  double real_approx() const;
  double imag_approx() const;

 private:
  void join(const Scalar& o);
  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Canonical scalar of the field: converts a rational into field f.
Scalar in_field(const Scalar& s, FieldSpec f);

}  // namespace ncconic
