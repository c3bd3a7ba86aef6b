#include "flagpos/scalar.hpp"

#include <cctype>

#include "flagpos/error.hpp"

namespace flagpos {

Quad Quad::frac(long p, long q) {
  if (q == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Quad(r);
}

int Quad::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: the larger of a^2 and 2 b^2 wins
  int c = cmp(Rational(a_ * a_), Rational(2 * b_ * b_));
  return c > 0 ? sa : sb;
}

Quad Quad::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(sqrt2)");
  Rational n = norm();
  return Quad(Rational(a_ / n), Rational(-b_ / n));
}

double Quad::to_double() const {
  static const double r2 = 1.4142135623730950488;
  return a_.get_d() + b_.get_d() * r2;
}

Quad& Quad::operator+=(const Quad& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    return *this;
  }
  Rational a = a_ * o.a_ + 2 * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  return *this;
}

Quad& Quad::operator/=(const Quad& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in Q(sqrt2)");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

Quad quad_arith(ArithOp op, const Quad& x, const Quad& y) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic op");
}

int quad_sign(const Quad& x) { return x.sign(); }

std::string render(const Quad& x) {
  if (x.is_rational()) return x.rat().get_str();
  Rational b = x.irr();
  if (sgn(x.rat()) == 0) return b.get_str() + "r2";
  std::string out = x.rat().get_str();
  out += sgn(b) > 0 ? "+" : "-";
  out += Rational(abs(b)).get_str() + "r2";
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_unsigned(std::string_view s, std::string_view whole) {
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::Parse, "malformed scalar literal '" + std::string(whole) + "'");
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(whole) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_signed(std::string_view s, std::string_view whole) {
  if (!s.empty() && s[0] == '-') return -parse_unsigned(s.substr(1), whole);
  return parse_unsigned(s, whole);
}

}  // namespace

Rational parse_rational(std::string_view text) { return parse_signed(text, text); }

Quad parse_scalar(std::string_view text) {
  if (text.size() > 2 && text.substr(text.size() - 2) == "r2") {
    std::string_view body = text.substr(0, text.size() - 2);
    auto pos = body.find_last_of("+-");
    if (pos != std::string_view::npos && pos > 0) {
      Rational a = parse_signed(body.substr(0, pos), text);
      Rational b = parse_unsigned(body.substr(pos + 1), text);
      return Quad(a, body[pos] == '-' ? Rational(-b) : b);
    }
    return Quad(Rational(0), parse_signed(body, text));
  }
  return Quad(parse_signed(text, text));
}

}  // namespace flagpos
