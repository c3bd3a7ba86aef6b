#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "flagpos/error.hpp"
#include "flagpos/scalar.hpp"

namespace flagpos {

// Dense row-major matrix over a commutative ring T (Quad or Poly).
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Mat from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.c_) throw Error(ErrorCode::Dimension, "ragged row list");
      for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  T& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(e_.begin() + i * c_, e_.begin() + (i + 1) * c_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Mat transpose() const {
    Mat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > r_ || c0 + nc > c_) throw Error(ErrorCode::Dimension, "block out of range");
    Mat b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Mat leading_columns(std::size_t k) const { return block(0, 0, r_, k); }

  Mat select_rows(const std::vector<std::size_t>& idx) const {
    Mat s(idx.size(), c_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < c_; ++j) s(i, j) = (*this)(idx[i], j);
    return s;
  }

  Mat select_cols(const std::vector<std::size_t>& idx) const {
    Mat s(r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
    return s;
  }

  Mat hconcat(const Mat& o) const {
    if (o.r_ != r_) throw Error(ErrorCode::Dimension, "hconcat row mismatch");
    Mat m(r_, c_ + o.c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < o.c_; ++j) m(i, c_ + j) = o(i, j);
    }
    return m;
  }

  Mat vconcat(const Mat& o) const {
    if (o.c_ != c_ && r_ != 0) throw Error(ErrorCode::Dimension, "vconcat column mismatch");
    Mat m(r_ + o.r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < o.r_; ++i)
      for (std::size_t j = 0; j < o.c_; ++j) m(r_ + i, j) = o(i, j);
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw Error(ErrorCode::Dimension, "matrix product shape mismatch");
    Mat p(r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < o.c_; ++j)
          if (!(o(k, j) == T(0))) p(i, j) += a * o(k, j);
      }
    return p;
  }

  Mat operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorCode::Dimension, "matrix sum shape mismatch");
    Mat s = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] += o.e_[i];
    return s;
  }

  Mat operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw Error(ErrorCode::Dimension, "matrix difference shape mismatch");
    Mat s = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] -= o.e_[i];
    return s;
  }

  Mat scaled(const T& s) const {
    Mat m = *this;
    for (auto& x : m.e_) x *= s;
    return m;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!(x == T(0))) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_; }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<T> e_;
};

using Matrix = Mat<Quad>;

Matrix diag(const std::vector<Quad>& d);

// Field routines over Q(sqrt2).
Quad det(const Matrix& m);  // fraction-free Bareiss
std::size_t rank(const Matrix& m);
// Reduced row echelon form; pivots are the pivot column indices.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
// Basis of {v : m v = 0} as columns.
Matrix nullspace(const Matrix& m);
Matrix inverse(const Matrix& m);
bool same_column_span(const Matrix& a, const Matrix& b);
bool is_antisymmetric(const Matrix& m);
bool is_symmetric(const Matrix& m);

// Maximal minors of an N x k matrix indexed by row bitmask, via column-incremental
// Laplace expansion. Entry [mask] holds the minor on rows of mask when popcount(mask) == k.
template <class T>
std::vector<T> minors_by_mask(const Mat<T>& m) {
  std::size_t n = m.rows();
  std::size_t k = m.cols();
  if (n > 24) throw Error(ErrorCode::Dimension, "ambient dimension too large for subset table");
  std::size_t full = std::size_t(1) << n;
  std::vector<T> cur(full, T(0));
  cur[0] = T(1);
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<T> next(full, T(0));
    for (std::size_t mask = 1; mask < full; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) != j + 1) continue;
      T acc(0);
      std::size_t pos = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (!(mask >> r & 1)) continue;
        const T& entry = m(r, j);
        const T& sub = cur[mask ^ (std::size_t(1) << r)];
        if (!(entry == T(0)) && !(sub == T(0))) {
          if ((pos + j) % 2 == 0)
            acc += entry * sub;
          else
            acc -= entry * sub;
        }
        ++pos;
      }
      next[mask] = acc;
    }
    cur.swap(next);
  }
  return cur;
}

std::vector<std::vector<int>> k_subsets(int n, int k);  // 1-based, lexicographic
unsigned long long subset_mask(const std::vector<int>& s);

struct PluckerVector {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> subsets;  // lexicographic, 1-based
  std::vector<Quad> coords;

  const Quad& at(const std::vector<int>& s) const;
  bool all_zero() const;
  // Sign of the first nonzero coordinate (0 if all zero).
  int leading_sign() const;
};

PluckerVector plucker_vector(const Matrix& m);
PluckerVector plucker_normalized(const PluckerVector& p);
bool plucker_projectively_equal(const PluckerVector& p, const PluckerVector& q, bool up_to_sign);
// Reindex S -> {N+1-j : j not in S}.
PluckerVector plucker_perp_reindex(const PluckerVector& p);

Quad pfaffian(const Matrix& m);

enum class FormKind { TypeC_E, TypeB_Eprime, TypeD_E, Custom };

struct BilinearForm {
  FormKind kind = FormKind::Custom;
  int n = 0;
  Matrix gram;

  bool symmetric() const { return is_symmetric(gram); }
  std::size_t dim() const { return gram.rows(); }
};

BilinearForm form_typeC(int n);
BilinearForm form_typeB(int n);
BilinearForm form_typeD(int n);
BilinearForm form_custom(const Matrix& gram);

bool is_isotropic(const Matrix& m, const BilinearForm& form);
Matrix perp(const Matrix& m, const BilinearForm& form);

struct Flag {
  int ambient = 0;
  std::vector<int> ranks;
  Matrix basis;  // ambient x max(ranks)

  Matrix subspace(int k) const { return basis.leading_columns(static_cast<std::size_t>(k)); }
  void validate() const;
};

Flag make_flag(const Matrix& basis, const std::vector<int>& ranks);
// Intersect each L_k with span(e_a..e_b) (1-based, inclusive); result lives in dimension b-a+1.
Flag intersect_with_interval(const Flag& f, int a, int b);
// The intersection dimensions per input rank, in input order.
std::vector<int> interval_intersection_dims(const Flag& f, int a, int b);

}  // namespace flagpos
