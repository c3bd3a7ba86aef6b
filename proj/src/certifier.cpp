#include "flagpos/certifier.hpp"

#include <algorithm>
#include <cstdint>

namespace flagpos {

PolyMatrix to_poly(const Matrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Poly(m(i, j));
  return p;
}

std::string verdict_name(Verdict v) { return v == Verdict::ProvenNoExtension ? "ProvenNoExtension" : "Unknown"; }

namespace {

using Hist = std::vector<std::uint64_t>;

int hist_count(const Hist& h) {
  int c = 0;
  for (auto w : h) c += __builtin_popcountll(w);
  return c;
}

Hist hist_union(const Hist& a, const Hist& b) {
  Hist h(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) h[i] = a[i] | b[i];
  return h;
}

struct Row {
  std::vector<Quad> a;
  Quad b;
  Hist h;
};

// structural order, only for sorting and dedupe
bool quad_less(const Quad& x, const Quad& y) {
  int c = cmp(x.rat(), y.rat());
  if (c != 0) return c < 0;
  return cmp(x.irr(), y.irr()) < 0;
}

bool vec_less(const std::vector<Quad>& x, const std::vector<Quad>& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == y[i]) continue;
    return quad_less(x[i], y[i]);
  }
  return false;
}

void normalize(Row& r) {
  for (const auto& x : r.a) {
    if (x.is_zero()) continue;
    Quad s = x.abs().inverse();
    for (auto& y : r.a) y *= s;
    r.b *= s;
    return;
  }
}

void dedupe(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.a != y.a) return vec_less(x.a, y.a);
    if (x.b != y.b) return quad_less(x.b, y.b);
    return hist_count(x.h) < hist_count(y.h);
  });
  rows.erase(std::unique(rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.a == y.a && x.b == y.b; }),
             rows.end());
}

bool all_zero(const std::vector<Quad>& v) {
  return std::all_of(v.begin(), v.end(), [](const Quad& q) { return q.is_zero(); });
}

// Drops rows with a = 0; false if one of them reads 0 >= b with b > 0.
bool drop_constant_rows(std::vector<Row>& rows) {
  std::vector<Row> keep;
  for (auto& r : rows) {
    if (all_zero(r.a)) {
      if (r.b.sign() > 0) return false;
      continue;
    }
    keep.push_back(std::move(r));
  }
  rows.swap(keep);
  return true;
}

}  // namespace

std::optional<std::vector<Quad>> fm_feasible(const std::vector<LinearIneq>& system, std::size_t dim, std::size_t cap,
                                             bool* capped) {
  if (capped) *capped = false;
  std::size_t words = system.size() / 64 + 1;
  std::vector<Row> cur;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system[i].a.size() != dim) throw Error(ErrorCode::Dimension, "inequality has wrong length");
    Row r{system[i].a, system[i].b, Hist(words, 0)};
    r.h[i / 64] |= std::uint64_t(1) << (i % 64);
    normalize(r);
    cur.push_back(std::move(r));
  }
  std::vector<std::vector<Row>> levels;
  std::vector<std::size_t> order;
  std::vector<bool> alive(dim, true);
  for (std::size_t step = 0; step < dim; ++step) {
    if (!drop_constant_rows(cur)) return std::nullopt;
    dedupe(cur);
    std::size_t best = dim;
    long best_cost = 0;
    for (std::size_t x = 0; x < dim; ++x) {
      if (!alive[x]) continue;
      long pos = 0, neg = 0;
      for (const auto& r : cur) {
        int s = r.a[x].sign();
        if (s > 0) ++pos;
        if (s < 0) ++neg;
      }
      long cost = pos * neg - pos - neg;
      if (best == dim || cost < best_cost) {
        best = x;
        best_cost = cost;
      }
    }
    std::size_t x = best;
    levels.push_back(cur);
    order.push_back(x);
    alive[x] = false;
    std::vector<Row> next, pos, neg;
    for (auto& r : cur) {
      int s = r.a[x].sign();
      if (s == 0)
        next.push_back(r);
      else if (s > 0)
        pos.push_back(r);
      else
        neg.push_back(r);
    }
    int limit = static_cast<int>(step) + 2;
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Hist h = hist_union(p.h, q.h);
        if (hist_count(h) > limit) continue;  // Chernikov: redundant
        Quad cp = -q.a[x];
        Quad cq = p.a[x];
        Row r{std::vector<Quad>(dim), p.b * cp + q.b * cq, std::move(h)};
        for (std::size_t j = 0; j < dim; ++j) r.a[j] = p.a[j] * cp + q.a[j] * cq;
        r.a[x] = Quad(0);
        normalize(r);
        next.push_back(std::move(r));
        if (next.size() > cap) {
          if (capped) *capped = true;
          return std::nullopt;
        }
      }
    cur.swap(next);
  }
  if (!drop_constant_rows(cur)) return std::nullopt;
  std::vector<Quad> val(dim, Quad(0));
  for (std::size_t L = levels.size(); L-- > 0;) {
    std::size_t x = order[L];
    std::optional<Quad> lo, hi;
    for (const auto& r : levels[L]) {
      const Quad& ax = r.a[x];
      if (ax.is_zero()) continue;
      Quad rest = r.b;
      for (std::size_t j = 0; j < dim; ++j)
        if (j != x) rest -= r.a[j] * val[j];
      Quad bound = rest / ax;
      if (ax.sign() > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi)
      val[x] = (*lo + *hi) * Quad::frac(1, 2);
    else if (lo)
      val[x] = *lo + Quad(1);
    else if (hi)
      val[x] = *hi - Quad(1);
  }
  return val;
}

namespace {

Quad dot(const std::vector<Quad>& a, const std::vector<Quad>& y) {
  Quad s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !y[i].is_zero()) s += a[i] * y[i];
  return s;
}

std::vector<Quad> negated(std::vector<Quad> v) {
  for (auto& x : v) x = -x;
  return v;
}

std::vector<Quad> normalized(std::vector<Quad> v) {
  Row r{std::move(v), Quad(0), {}};
  normalize(r);
  return r.a;
}

class Engine {
 public:
  Engine(const ExtensionProblem& p, const CertOptions& opt) : p_(p), opt_(opt) {
    N_ = p.ambient();
    if (p.base.cols() != static_cast<std::size_t>(N_)) throw Error(ErrorCode::Dimension, "base rows do not match form");
    P_ = Matrix::identity(static_cast<std::size_t>(N_));
    reduce_base();
    for (const auto& c : p.extra_equalities) {
      if (c.size() != static_cast<std::size_t>(N_)) throw Error(ErrorCode::Dimension, "extra equality has wrong length");
      add_eq_v(c, "given equality");
    }
    if (p.container.rows() > 0) {
      if (p.container.cols() != static_cast<std::size_t>(N_)) throw Error(ErrorCode::Dimension, "container has wrong width");
      Matrix ns = nullspace(p.container);
      for (std::size_t j = 0; j < ns.cols(); ++j) add_eq_v(ns.col(j), "container");
    }
    build_forms();
    quad_ = p.form.symmetric();
  }

  CertResult run() {
    while (P_.cols() > 0) {
      if (linear_equalities()) continue;
      std::vector<std::vector<Quad>> ineqs = constant_inequalities();
      if (opposite_pairs(ineqs)) continue;
      if (fm_implied(ineqs)) continue;
      if (quad_ && quadratic_rule(ineqs)) continue;
      break;
    }
    CertResult res;
    res.param = P_;
    res.pivots_complete = pivots_complete_;
    if (quad_) res.quadratic = P_.transpose() * p_.form.gram * P_;
    bool proven = P_.cols() == 0;
    if (!proven && !pivots_complete_ && base_constant()) {
      Matrix b = constant_base();
      proven = rank(b.vconcat(P_.transpose())) == rank(b);
      if (proven) trace_.push_back("remaining directions lie in the base span");
    }
    res.verdict = proven ? Verdict::ProvenNoExtension : Verdict::Unknown;
    trace_.push_back(proven ? "unknown vector forced into the base span"
                            : std::to_string(P_.cols()) + " free direction(s) remain");
    res.trace = trace_;
    return res;
  }

 private:
  void reduce_base() {
    base_ = p_.base;
    std::vector<bool> used(static_cast<std::size_t>(N_), false);
    for (std::size_t i = 0; i < base_.rows(); ++i) {
      std::size_t piv = static_cast<std::size_t>(N_);
      for (std::size_t j = 0; j < static_cast<std::size_t>(N_); ++j)
        if (!used[j] && base_(i, j).is_constant() && !base_(i, j).is_zero()) {
          piv = j;
          break;
        }
      if (piv == static_cast<std::size_t>(N_)) {
        pivots_complete_ = false;
        trace_.push_back("row " + std::to_string(i + 1) + " has no constant pivot");
        continue;
      }
      used[piv] = true;
      Poly inv(base_(i, piv).constant().inverse());
      for (std::size_t k = 0; k < base_.rows(); ++k) {
        if (k == i || base_(k, piv).is_zero()) continue;
        Poly f = base_(k, piv) * inv;
        for (std::size_t j = 0; j < static_cast<std::size_t>(N_); ++j) base_(k, j) -= f * base_(i, j);
      }
      std::vector<Quad> e(static_cast<std::size_t>(N_), Quad(0));
      e[piv] = Quad(1);
      add_eq_v(e, "");
      trace_.push_back("WLOG v_" + std::to_string(piv + 1) + " = 0 (pivot of row " + std::to_string(i + 1) + ")");
    }
  }

  bool base_constant() const {
    for (std::size_t i = 0; i < base_.rows(); ++i)
      for (std::size_t j = 0; j < base_.cols(); ++j)
        if (!base_(i, j).is_constant()) return false;
    return true;
  }

  Matrix constant_base() const {
    Matrix b(base_.rows(), base_.cols());
    for (std::size_t i = 0; i < base_.rows(); ++i)
      for (std::size_t j = 0; j < base_.cols(); ++j) b(i, j) = base_(i, j).constant();
    return b;
  }

  void build_forms() {
    std::size_t n = static_cast<std::size_t>(N_);
    std::size_t r = base_.rows();
    const Matrix& g = p_.form.gram;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<Poly> c(n);
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!g(k, j).is_zero() && !base_(i, k).is_zero()) c[j] += base_(i, k) * Poly(g(k, j));
      eq_forms_.push_back(std::move(c));
    }
    auto table = minors_by_mask(base_.transpose());
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r + 1) continue;
      std::vector<Poly> c(n);
      bool nonzero = false;
      std::size_t pos = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!(mask >> j & 1)) continue;
        const Poly& m = table[mask ^ (std::size_t(1) << j)];
        c[j] = (r + pos) % 2 == 0 ? m : -m;
        nonzero = nonzero || !m.is_zero();
        ++pos;
      }
      if (nonzero) ineq_forms_.push_back(std::move(c));
    }
  }

  std::vector<Poly> to_y_poly(const std::vector<Poly>& c) const {
    std::vector<Poly> y(P_.cols());
    for (std::size_t t = 0; t < P_.cols(); ++t)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero() && !P_(j, t).is_zero()) y[t] += c[j] * Poly(P_(j, t));
    return y;
  }

  static std::optional<std::vector<Quad>> as_constant(const std::vector<Poly>& y) {
    std::vector<Quad> out;
    for (const auto& p : y) {
      if (!p.is_constant()) return std::nullopt;
      out.push_back(p.constant());
    }
    return out;
  }

  void add_eq_y(const std::vector<Quad>& row) {
    Matrix m(1, row.size());
    for (std::size_t t = 0; t < row.size(); ++t) m(0, t) = row[t];
    P_ = P_ * nullspace(m);
  }

  bool add_eq_v(const std::vector<Quad>& c, const std::string& why) {
    std::vector<Quad> y(P_.cols(), Quad(0));
    for (std::size_t t = 0; t < P_.cols(); ++t)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (!c[j].is_zero()) y[t] += c[j] * P_(j, t);
    if (all_zero(y)) return false;
    add_eq_y(y);
    if (!why.empty()) trace_.push_back(why + " (" + std::to_string(P_.cols()) + " free)");
    return true;
  }

  bool linear_equalities() {
    for (std::size_t i = 0; i < eq_forms_.size(); ++i) {
      auto y = as_constant(to_y_poly(eq_forms_[i]));
      if (!y || all_zero(*y)) continue;
      add_eq_y(*y);
      trace_.push_back("isotropy with base row " + std::to_string(i + 1) + " (" + std::to_string(P_.cols()) + " free)");
      return true;
    }
    return false;
  }

  std::vector<std::vector<Quad>> constant_inequalities() {
    std::vector<std::vector<Quad>> out;
    for (const auto& f : ineq_forms_) {
      auto y = as_constant(to_y_poly(f));
      if (!y || all_zero(*y)) continue;
      out.push_back(normalized(std::move(*y)));
    }
    std::sort(out.begin(), out.end(), vec_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool opposite_pairs(const std::vector<std::vector<Quad>>& ineqs) {
    for (const auto& a : ineqs) {
      auto neg = negated(a);
      if (std::binary_search(ineqs.begin(), ineqs.end(), neg, vec_less)) {
        add_eq_y(a);
        trace_.push_back("a form and its negation are both >= 0 (" + std::to_string(P_.cols()) + " free)");
        return true;
      }
    }
    return false;
  }

  std::vector<LinearIneq> homogeneous(const std::vector<std::vector<Quad>>& ineqs) const {
    std::vector<LinearIneq> sys;
    for (const auto& a : ineqs) sys.push_back({a, Quad(0)});
    return sys;
  }

  // nullopt = capped
  std::optional<std::optional<std::vector<Quad>>> feasible_with(const std::vector<std::vector<Quad>>& ineqs,
                                                                 const std::vector<Quad>& a) {
    auto sys = homogeneous(ineqs);
    sys.push_back({a, Quad(1)});
    bool capped = false;
    auto w = fm_feasible(sys, P_.cols(), opt_.fm_cap, &capped);
    if (capped) return std::nullopt;
    return w;
  }

  bool fm_implied(const std::vector<std::vector<Quad>>& ineqs) {
    std::vector<bool> strict(ineqs.size(), false);
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      if (strict[i]) continue;
      auto res = feasible_with(ineqs, ineqs[i]);
      if (!res) {
        if (!cap_noted_) trace_.push_back("elimination cap reached; some forms left untested");
        cap_noted_ = true;
        continue;
      }
      if (!*res) {
        add_eq_y(ineqs[i]);
        trace_.push_back("elimination shows a form is implied zero (" + std::to_string(P_.cols()) + " free)");
        return true;
      }
      for (std::size_t j = 0; j < ineqs.size(); ++j)
        if (dot(ineqs[j], **res).sign() > 0) strict[j] = true;
    }
    return false;
  }

  bool quadratic_rule(const std::vector<std::vector<Quad>>& ineqs) {
    std::size_t d = P_.cols();
    Matrix q = P_.transpose() * p_.form.gram * P_;
    if (q.is_zero()) return false;
    // sign of each free coordinate forced by the cone, if any
    std::vector<int> sigma(d, 0);
    for (std::size_t t = 0; t < d; ++t) {
      std::vector<Quad> e(d, Quad(0));
      e[t] = Quad(1);
      auto up = feasible_with(ineqs, e);
      auto down = feasible_with(ineqs, negated(e));
      bool can_pos = !up || *up;
      bool can_neg = !down || *down;
      if (!can_pos && !can_neg) {
        add_eq_y(e);
        trace_.push_back("coordinate has no admissible sign (" + std::to_string(P_.cols()) + " free)");
        return true;
      }
      if (!can_neg) sigma[t] = 1;
      if (!can_pos) sigma[t] = -1;
    }
    int common = 0;
    for (std::size_t s = 0; s < d; ++s)
      for (std::size_t t = s; t < d; ++t) {
        int c = q(s, t).sign();
        if (c == 0) continue;
        int term = s == t ? c : c * sigma[s] * sigma[t];
        if (term == 0) return false;  // sign of this term is not forced
        if (common != 0 && term != common) return false;
        common = term;
      }
    // every term has the same forced sign, so each vanishes
    std::vector<std::vector<Quad>> zeros;
    for (std::size_t t = 0; t < d; ++t)
      if (!q(t, t).is_zero()) {
        std::vector<Quad> e(d, Quad(0));
        e[t] = Quad(1);
        zeros.push_back(e);
      }
    if (zeros.empty()) return false;
    Matrix m = Matrix::from_rows(zeros);
    P_ = P_ * nullspace(m);
    trace_.push_back("self-isotropy is a sum of same-sign terms (" + std::to_string(P_.cols()) + " free)");
    return true;
  }

  const ExtensionProblem& p_;
  CertOptions opt_;
  int N_ = 0;
  Matrix P_;
  PolyMatrix base_;
  std::vector<std::vector<Poly>> eq_forms_;
  std::vector<std::vector<Poly>> ineq_forms_;
  bool quad_ = false;
  bool pivots_complete_ = true;
  bool cap_noted_ = false;
  std::vector<std::string> trace_;
};

ExtensionProblem next_step(const ExtensionProblem& p, const std::vector<Poly>& v) {
  ExtensionProblem q;
  q.name = p.name + "+1";
  q.form = p.form;
  PolyMatrix row(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) row(0, j) = v[j];
  q.base = p.base.rows() == 0 ? row : p.base.vconcat(row);
  return q;
}

Poly quadratic_value(const std::vector<Poly>& v, const Matrix& g) {
  Poly s;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!g(i, j).is_zero() && !v[i].is_zero() && !v[j].is_zero()) s += v[i] * Poly(g(i, j)) * v[j];
  return s;
}

// Solve q = 0 for one parameter that enters linearly with constant coefficient.
bool solve_linear_parameter(std::vector<Poly>& v, const Matrix& g, int nvars, std::string* note) {
  Poly q = quadratic_value(v, g);
  if (q.is_zero()) return true;
  for (int idx = 0; idx < nvars; ++idx) {
    if (q.degree_in(idx) != 1) continue;
    Poly coef, rest;
    for (const auto& [e, c] : q.terms()) {
      Poly term(c);
      bool has = static_cast<std::size_t>(idx) < e.size() && e[static_cast<std::size_t>(idx)] == 1;
      for (std::size_t k = 0; k < e.size(); ++k)
        for (int m = 0; m < e[k]; ++m)
          if (!(has && static_cast<int>(k) == idx)) term *= Poly::var(static_cast<int>(k));
      if (has)
        coef += term;
      else
        rest += term;
    }
    if (!coef.is_constant() || coef.is_zero()) continue;
    Poly value = rest * Poly(-coef.constant().inverse());
    for (auto& x : v) x = x.substitute(idx, value);
    if (!quadratic_value(v, g).is_zero()) return false;
    if (note) *note = "solved self-isotropy for parameter p" + std::to_string(idx);
    return true;
  }
  return false;
}

}  // namespace

CertResult no_extension_certificate(const ExtensionProblem& p, const CertOptions& opt) {
  // isotropy is only demanded up to half the ambient dimension; past that the engine's constraints are wrong
  if (2 * p.target_rank() > p.ambient()) {
    CertResult r;
    r.trace.push_back("target rank " + std::to_string(p.target_rank()) + " is beyond the isotropic range; no claim");
    return r;
  }
  return Engine(p, opt).run();
}

CertResult certify_with_hint(const ExtensionProblem& p, const ProofHint& hint, const CertOptions& opt) {
  CertResult first = no_extension_certificate(p, opt);
  if (first.verdict == Verdict::ProvenNoExtension) {
    first.trace.push_back("case split not needed");
    return first;
  }
  CertResult out = first;
  out.verdict = Verdict::Unknown;
  auto fail = [&](const std::string& why) {
    out.trace.push_back("case split: " + why);
    return out;
  };
  int n = p.ambient();
  int c = hint.split_coordinate - 1;
  if (c < 0 || c >= n) return fail("split coordinate out of range");
  const Matrix& P = first.param;
  const Matrix& g = p.form.gram;
  bool sym = p.form.symmetric();

  // branch: coordinate c of the new vector is zero
  {
    ExtensionProblem z = p;
    std::vector<Quad> e(static_cast<std::size_t>(n), Quad(0));
    e[static_cast<std::size_t>(c)] = Quad(1);
    z.extra_equalities.push_back(e);
    CertResult r = no_extension_certificate(z, opt);
    if (r.verdict == Verdict::ProvenNoExtension) {
      out.trace.push_back("branch v_" + std::to_string(c + 1) + " = 0: no first vector");
    } else if (r.param.cols() == 1) {
      std::vector<Poly> v;
      for (int j = 0; j < n; ++j) v.push_back(Poly(r.param(static_cast<std::size_t>(j), 0)));
      CertResult s = no_extension_certificate(next_step(p, v), opt);
      if (s.verdict != Verdict::ProvenNoExtension) return fail("branch v_c = 0 pins the first vector but the next step is not certified");
      out.trace.push_back("branch v_" + std::to_string(c + 1) + " = 0: first vector pinned, next step certified");
    } else {
      return fail("branch v_c = 0 leaves " + std::to_string(r.param.cols()) + " free directions");
    }
  }

  // branch: coordinate c is 1 after scaling
  std::vector<std::size_t> nz;
  for (std::size_t t = 0; t < P.cols(); ++t)
    if (!P(static_cast<std::size_t>(c), t).is_zero()) nz.push_back(t);
  if (nz.empty()) {
    out.trace.push_back("branch v_" + std::to_string(c + 1) + " = 1: impossible, coordinate forced to 0");
  } else {
    if (nz.size() != 1) return fail("split coordinate is not a single free parameter");
    std::size_t s = nz[0];
    Quad alpha_inv = P(static_cast<std::size_t>(c), s).inverse();
    std::vector<Poly> v(static_cast<std::size_t>(n));
    int nvars = 0;
    for (std::size_t t = 0; t < P.cols(); ++t) {
      Poly coeff = t == s ? Poly(alpha_inv) : Poly::var(nvars++);
      for (int j = 0; j < n; ++j)
        if (!P(static_cast<std::size_t>(j), t).is_zero()) v[static_cast<std::size_t>(j)] += coeff * Poly(P(static_cast<std::size_t>(j), t));
    }
    if (sym) {
      std::string note;
      if (!solve_linear_parameter(v, g, nvars, &note)) return fail("self-isotropy not solvable in the v_c = 1 branch");
      if (!note.empty()) out.trace.push_back("branch v_" + std::to_string(c + 1) + " = 1: " + note);
    }
    CertResult r = no_extension_certificate(next_step(p, v), opt);
    if (r.verdict != Verdict::ProvenNoExtension) return fail("branch v_c = 1: next step not certified");
    out.trace.push_back("branch v_" + std::to_string(c + 1) + " = 1: next step certified");
  }
  out.verdict = Verdict::ProvenNoExtension;
  out.trace.push_back("both branches closed");
  return out;
}

}  // namespace flagpos
