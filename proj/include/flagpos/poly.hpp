#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagpos/scalar.hpp"

namespace flagpos {

// Multivariate polynomial over Q(sqrt2) in parameters p0, p1, ...
// Exponent vectors carry no trailing zeros, so the constant term has key {}.
class Poly {
 public:
  using Exponents = std::vector<int>;

  Poly() = default;
  Poly(int c) : Poly(Quad(c)) {}
  Poly(const Quad& c) {
    if (!c.is_zero()) terms_[{}] = c;
  }
  static Poly var(int idx);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  Quad constant() const;  // constant term
  int degree_in(int idx) const;
  const std::map<Exponents, Quad>& terms() const { return terms_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly substitute(int idx, const Poly& value) const;
  Quad evaluate(const std::vector<Quad>& point) const;
  std::string str() const;

 private:
  void add_term(Exponents e, const Quad& c);
  std::map<Exponents, Quad> terms_;
};

}  // namespace flagpos
