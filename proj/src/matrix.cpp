#include "flagpos/matrix.hpp"

#include <algorithm>
#include <map>

namespace flagpos {

Matrix diag(const std::vector<Quad>& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Quad det(const Matrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::Dimension, "determinant of non-square matrix");
  std::size_t n = input.rows();
  if (n == 0) return Quad(1);
  Matrix m = input;
  Quad prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Quad(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Quad(0);
    }
    prev = m(k, k);
  }
  Quad d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Matrix rref(const Matrix& input, std::vector<std::size_t>* pivots) {
  Matrix m = input;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Quad inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Quad f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return m;
}

std::size_t rank(const Matrix& m) {
  std::vector<std::size_t> piv;
  rref(m, &piv);
  return piv.size();
}

Matrix nullspace(const Matrix& m) {
  std::vector<std::size_t> piv;
  Matrix r = rref(m, &piv);
  std::size_t n = m.cols();
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_piv[j]) free.push_back(j);
  Matrix out(n, free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    out(free[f], f) = Quad(1);
    for (std::size_t i = 0; i < piv.size(); ++i) out(piv[i], f) = -r(i, free[f]);
  }
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Dimension, "inverse of non-square matrix");
  std::size_t n = m.rows();
  Matrix aug = m.hconcat(Matrix::identity(n));
  std::vector<std::size_t> piv;
  Matrix r = rref(aug, &piv);
  if (piv.size() < n || piv[n - 1] != n - 1) throw Error(ErrorCode::DivisionByZero, "singular matrix");
  return r.block(0, n, n, n);
}

bool same_column_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) return false;
  std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(a.hconcat(b));
}

bool is_antisymmetric(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

bool is_symmetric(const Matrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

unsigned long long subset_mask(const std::vector<int>& s) {
  unsigned long long m = 0;
  for (int x : s) m |= 1ULL << (x - 1);
  return m;
}

const Quad& PluckerVector::at(const std::vector<int>& s) const {
  auto it = std::lower_bound(subsets.begin(), subsets.end(), s);
  if (it == subsets.end() || *it != s) throw Error(ErrorCode::InvalidArgument, "subset not in Plucker index");
  return coords[static_cast<std::size_t>(it - subsets.begin())];
}

bool PluckerVector::all_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Quad& q) { return q.is_zero(); });
}

int PluckerVector::leading_sign() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return c.sign();
  return 0;
}

PluckerVector plucker_vector(const Matrix& m) {
  if (m.cols() > m.rows()) throw Error(ErrorCode::Dimension, "Plucker vector needs k <= N");
  PluckerVector p;
  p.n = static_cast<int>(m.rows());
  p.k = static_cast<int>(m.cols());
  auto table = minors_by_mask(m);
  p.subsets = k_subsets(p.n, p.k);
  p.coords.reserve(p.subsets.size());
  for (const auto& s : p.subsets) p.coords.push_back(table[subset_mask(s)]);
  return p;
}

PluckerVector plucker_normalized(const PluckerVector& p) {
  PluckerVector q = p;
  for (const auto& c : p.coords) {
    if (c.is_zero()) continue;
    Quad inv = c.inverse();
    for (auto& x : q.coords) x *= inv;
    break;
  }
  return q;
}

bool plucker_projectively_equal(const PluckerVector& p, const PluckerVector& q, bool up_to_sign) {
  if (p.n != q.n || p.k != q.k) return false;
  std::size_t lead = p.coords.size();
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (!p.coords[i].is_zero()) {
      lead = i;
      break;
    }
  if (lead == p.coords.size()) return q.all_zero();
  Quad lambda = q.coords[lead] / p.coords[lead];
  if (lambda.is_zero()) return false;
  if (!up_to_sign && lambda.sign() < 0) return false;
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (q.coords[i] != lambda * p.coords[i]) return false;
  return true;
}

PluckerVector plucker_perp_reindex(const PluckerVector& p) {
  PluckerVector r;
  r.n = p.n;
  r.k = p.n - p.k;
  r.subsets = k_subsets(r.n, r.k);
  r.coords.assign(r.subsets.size(), Quad(0));
  std::map<unsigned long long, std::size_t> index;
  for (std::size_t i = 0; i < r.subsets.size(); ++i) index[subset_mask(r.subsets[i])] = i;
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    std::vector<bool> in(p.n + 1, false);
    for (int x : p.subsets[i]) in[x] = true;
    unsigned long long mask = 0;
    for (int j = 1; j <= p.n; ++j)
      if (!in[j]) mask |= 1ULL << (p.n - j);  // element N+1-j
    r.coords[index.at(mask)] = p.coords[i];
  }
  return r;
}

namespace {

Quad pf_rec(const Matrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return Quad(1);
  std::size_t first = idx[0];
  Quad acc(0);
  for (std::size_t t = 1; t < idx.size(); ++t) {
    const Quad& a = m(first, idx[t]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t s = 1; s < idx.size(); ++s)
      if (s != t) rest.push_back(idx[s]);
    Quad sub = pf_rec(m, rest);
    if (t % 2 == 1)
      acc += a * sub;
    else
      acc -= a * sub;
  }
  return acc;
}

}  // namespace

Quad pfaffian(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::Dimension, "Pfaffian of non-square matrix");
  if (m.rows() % 2 != 0) throw Error(ErrorCode::Dimension, "Pfaffian of odd-size matrix");
  if (!is_antisymmetric(m)) throw Error(ErrorCode::Domain, "Pfaffian of non-antisymmetric matrix");
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return pf_rec(m, idx);
}

BilinearForm form_typeC(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "type C form needs n >= 1");
  int N = 2 * n;
  BilinearForm f{FormKind::TypeC_E, n, Matrix(N, N)};
  for (int i = 1; i <= N; ++i) f.gram(i - 1, N - i) = Quad(i % 2 == 1 ? 1 : -1);
  return f;
}

BilinearForm form_typeB(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "type B form needs n >= 1");
  int N = 2 * n + 1;
  BilinearForm f{FormKind::TypeB_Eprime, n, Matrix(N, N)};
  for (int r = 1; r <= N; ++r) f.gram(r - 1, N - r) = Quad(r % 2 == 0 ? 1 : -1);
  return f;
}

BilinearForm form_typeD(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "type D form needs n >= 2");
  int N = 2 * n;
  BilinearForm f{FormKind::TypeD_E, n, Matrix(N, N)};
  for (int i = 1; i <= N; ++i) {
    int j = N + 1 - i;
    int e = i <= n ? i : j;
    f.gram(i - 1, j - 1) = Quad(e % 2 == 0 ? 1 : -1);
  }
  return f;
}

BilinearForm form_custom(const Matrix& gram) {
  if (gram.rows() != gram.cols()) throw Error(ErrorCode::Dimension, "Gram matrix must be square");
  return BilinearForm{FormKind::Custom, 0, gram};
}

bool is_isotropic(const Matrix& m, const BilinearForm& form) {
  if (m.rows() != form.dim()) throw Error(ErrorCode::Dimension, "isotropy: dimension mismatch");
  return (m.transpose() * form.gram * m).is_zero();
}

Matrix perp(const Matrix& m, const BilinearForm& form) {
  if (m.rows() != form.dim()) throw Error(ErrorCode::Dimension, "perp: dimension mismatch");
  return nullspace(m.transpose() * form.gram.transpose());
}

void Flag::validate() const {
  int prev = 0;
  for (int k : ranks) {
    if (k <= prev || k >= ambient) throw Error(ErrorCode::InvalidArgument, "flag ranks must increase within [1, N-1]");
    prev = k;
  }
  if (!ranks.empty()) {
    if (basis.rows() != static_cast<std::size_t>(ambient) || basis.cols() < static_cast<std::size_t>(ranks.back()))
      throw Error(ErrorCode::Dimension, "flag basis has wrong shape");
    for (int k : ranks)
      if (rank(subspace(k)) != static_cast<std::size_t>(k))
        throw Error(ErrorCode::Domain, "leading columns of flag basis are not independent");
  }
}

Flag make_flag(const Matrix& basis, const std::vector<int>& ranks) {
  Flag f;
  f.ambient = static_cast<int>(basis.rows());
  f.ranks = ranks;
  std::sort(f.ranks.begin(), f.ranks.end());
  f.basis = f.ranks.empty() ? Matrix(basis.rows(), 0) : basis.leading_columns(f.ranks.back());
  f.validate();
  return f;
}

namespace {

Matrix intersect_one(const Matrix& b, int a, int bb) {
  std::vector<std::size_t> outside;
  std::vector<std::size_t> inside;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    int r = static_cast<int>(i) + 1;
    if (r < a || r > bb)
      outside.push_back(i);
    else
      inside.push_back(i);
  }
  Matrix c = outside.empty() ? Matrix::identity(b.cols()) : nullspace(b.select_rows(outside));
  return (b * c).select_rows(inside);
}

}  // namespace

std::vector<int> interval_intersection_dims(const Flag& f, int a, int b) {
  if (a < 1 || b > f.ambient || a > b) throw Error(ErrorCode::InvalidArgument, "empty or invalid interval");
  std::vector<int> dims;
  for (int k : f.ranks) dims.push_back(static_cast<int>(rank(intersect_one(f.subspace(k), a, b))));
  return dims;
}

Flag intersect_with_interval(const Flag& f, int a, int b) {
  if (a < 1 || b > f.ambient || a > b) throw Error(ErrorCode::InvalidArgument, "empty or invalid interval");
  int m = b - a + 1;
  Matrix acc(m, 0);
  std::vector<int> ranks;
  for (int k : f.ranks) {
    Matrix v = intersect_one(f.subspace(k), a, b);
    for (std::size_t j = 0; j < v.cols(); ++j) {
      Matrix cand = acc.hconcat(v.block(0, j, m, 1));
      if (rank(cand) > acc.cols()) acc = cand;
    }
    int d = static_cast<int>(acc.cols());
    if (d > 0 && d < m && (ranks.empty() || ranks.back() != d)) ranks.push_back(d);
  }
  Flag out;
  out.ambient = m;
  out.ranks = ranks;
  out.basis = ranks.empty() ? Matrix(m, 0) : acc.leading_columns(ranks.back());
  return out;
}

}  // namespace flagpos
