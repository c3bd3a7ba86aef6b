#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace flagpos {

using Rational = mpq_class;

// a + b*sqrt(2) with a, b rational. Immutable in spirit; value semantics.
class Quad {
 public:
  Quad() : a_(0), b_(0) {}
  Quad(int v) : a_(v), b_(0) {}
  Quad(long v) : a_(v), b_(0) {}
  Quad(const Rational& a) : a_(a), b_(0) { a_.canonicalize(); }
  Quad(const Rational& a, const Rational& b) : a_(a), b_(b) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Quad sqrt2() { return Quad(Rational(0), Rational(1)); }
  static Quad frac(long p, long q);

  const Rational& rat() const { return a_; }
  const Rational& irr() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  int sign() const;

  Quad conj() const { return Quad(a_, -b_); }
  // a^2 - 2 b^2
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }
  Quad inverse() const;
  Quad abs() const { return sign() < 0 ? -*this : *this; }
  double to_double() const;

  Quad operator-() const { return Quad(-a_, -b_); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);
  Quad& operator/=(const Quad& o);

  friend Quad operator+(Quad x, const Quad& y) { return x += y; }
  friend Quad operator-(Quad x, const Quad& y) { return x -= y; }
  friend Quad operator*(Quad x, const Quad& y) { return x *= y; }
  friend Quad operator/(Quad x, const Quad& y) { return x /= y; }

  friend bool operator==(const Quad& x, const Quad& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
  friend bool operator<(const Quad& x, const Quad& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Quad& x, const Quad& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Quad& x, const Quad& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Quad& x, const Quad& y) { return (x - y).sign() >= 0; }

 private:
  Rational a_;
  Rational b_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Quad quad_arith(ArithOp op, const Quad& x, const Quad& y);
int quad_sign(const Quad& x);

// Literal grammar: rat | rat (+|-) urat "r2" | (-)? urat "r2"
std::string render(const Quad& x);
Quad parse_scalar(std::string_view text);
Rational parse_rational(std::string_view text);

}  // namespace flagpos
