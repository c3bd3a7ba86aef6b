#include "flagpos/poly.hpp"

#include "flagpos/error.hpp"

namespace flagpos {

Poly Poly::var(int idx) {
  Poly p;
  Exponents e(static_cast<std::size_t>(idx) + 1, 0);
  e.back() = 1;
  p.terms_[e] = Quad(1);
  return p;
}

Quad Poly::constant() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Quad(0) : it->second;
}

int Poly::degree_in(int idx) const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    if (static_cast<std::size_t>(idx) < e.size()) d = std::max(d, e[static_cast<std::size_t>(idx)]);
  return d;
}

void Poly::add_term(Exponents e, const Quad& c) {
  if (c.is_zero()) return;
  while (!e.empty() && e.back() == 0) e.pop_back();
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  Poly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(std::max(e1.size(), e2.size()), 0);
      for (std::size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
      for (std::size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
      out.add_term(std::move(e), c1 * c2);
    }
  terms_.swap(out.terms_);
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::substitute(int idx, const Poly& value) const {
  Poly out;
  auto i = static_cast<std::size_t>(idx);
  for (const auto& [e, c] : terms_) {
    int d = i < e.size() ? e[i] : 0;
    Exponents rest = e;
    if (i < rest.size()) rest[i] = 0;
    Poly term;
    term.add_term(rest, c);
    for (int k = 0; k < d; ++k) term *= value;
    out += term;
  }
  return out;
}

Quad Poly::evaluate(const std::vector<Quad>& point) const {
  Quad acc(0);
  for (const auto& [e, c] : terms_) {
    Quad t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw Error(ErrorCode::Dimension, "evaluation point too short");
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    }
    acc += t;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + render(c) + ")";
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      s += "*p" + std::to_string(i);
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
  }
  return s;
}

}  // namespace flagpos
