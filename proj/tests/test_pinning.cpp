#include <random>

#include "doctest.h"
#include "flagpos/pinning.hpp"

using namespace flagpos;

namespace {

Quad random_param(std::mt19937_64& rng) {
  long p = static_cast<long>(rng() % 19) - 9;
  if (p == 0) p = 1;
  return Quad(Rational(p, static_cast<long>(rng() % 7) + 1));
}

// membership written out: M^t E M = E and det M = 1
bool preserves_form(const Matrix& m, const GroupDescriptor& g) {
  if (det(m) != Quad(1)) return false;
  if (!g.form) return true;
  return m.transpose() * g.form->gram * m == g.form->gram;
}

bool upper_triangular(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

std::vector<GroupDescriptor> all_descriptors() {
  std::vector<GroupDescriptor> out;
  for (int n = 1; n <= 4; ++n) out.push_back(make_descriptor(SystemType::A, n));
  for (int n = 2; n <= 4; ++n) {
    out.push_back(make_descriptor(SystemType::C, n));
    out.push_back(make_descriptor(SystemType::B, n));
  }
  out.push_back(make_descriptor(SystemType::D, 4));
  return out;
}

const Quad r2 = Quad::sqrt2();

}  // namespace

TEST_CASE("ambient dimensions") {
  CHECK(make_descriptor(SystemType::A, 3).N == 4);
  CHECK(make_descriptor(SystemType::C, 3).N == 6);
  CHECK(make_descriptor(SystemType::B, 3).N == 7);
  CHECK(make_descriptor(SystemType::D, 4).N == 8);
  CHECK(folded_descriptor(make_descriptor(SystemType::C, 3)).N == 6);
  CHECK(folded_descriptor(make_descriptor(SystemType::B, 3)).N == 7);
}

TEST_CASE("generator displays") {
  Quad m = Quad(Rational(5, 3));
  Matrix y = generator(make_descriptor(SystemType::A, 4), GenKind::Y, 2, m);
  Matrix want = Matrix::identity(5);
  want(2, 1) = m;
  CHECK(y == want);

  GroupDescriptor b2 = make_descriptor(SystemType::B, 2);
  Matrix x = generator(b2, GenKind::X, 2, m);
  Matrix blk = Matrix::from_rows({{Quad(1), r2 * m, m * m}, {Quad(0), Quad(1), r2 * m}, {Quad(0), Quad(0), Quad(1)}});
  CHECK(x.block(1, 1, 3, 3) == blk);
  Matrix rest = x;
  for (std::size_t i = 1; i < 4; ++i)
    for (std::size_t j = 1; j < 4; ++j) rest(i, j) = i == j ? Quad(1) : Quad(0);
  CHECK(rest == Matrix::identity(5));

  GroupDescriptor c2 = make_descriptor(SystemType::C, 2), a3 = make_descriptor(SystemType::A, 3);
  CHECK(generator(c2, GenKind::Sdot, 1) == generator(a3, GenKind::Sdot, 1) * generator(a3, GenKind::Sdot, 3));
}

TEST_CASE("every generator is a group member") {
  std::mt19937_64 rng(31);
  for (const auto& g : all_descriptors()) {
    CAPTURE(g.name());
    CHECK(group_membership(Matrix::identity(static_cast<std::size_t>(g.N)), g));
    for (int i = 1; i <= g.n; ++i) {
      for (int t = 0; t < 20; ++t) {
        Quad p = random_param(rng);
        for (GenKind k : {GenKind::X, GenKind::Y, GenKind::Chi}) {
          Matrix m = generator(g, k, i, p);
          CHECK(group_membership(m, g));
          CHECK(preserves_form(m, g));
        }
      }
      Matrix s = generator(g, GenKind::Sdot, i);
      CHECK(group_membership(s, g));
      CHECK(preserves_form(s, g));
    }
  }
  Matrix d = diag({Quad(2), Quad(1), Quad(1), Quad(1)});
  CHECK_FALSE(group_membership(d, make_descriptor(SystemType::C, 2)));
}

TEST_CASE("one-parameter laws and torus multiplicativity") {
  std::mt19937_64 rng(32);
  for (const auto& g : all_descriptors())
    for (int i = 1; i <= g.n; ++i)
      for (int t = 0; t < 5; ++t) {
        Quad a = random_param(rng), b = random_param(rng);
        for (GenKind k : {GenKind::X, GenKind::Y})
          CHECK(generator(g, k, i, a) * generator(g, k, i, b) == generator(g, k, i, a + b));
        CHECK(generator(g, GenKind::Chi, i, a) * generator(g, GenKind::Chi, i, b) == generator(g, GenKind::Chi, i, a * b));
        CHECK(generator(g, GenKind::X, i, Quad(0)) == Matrix::identity(static_cast<std::size_t>(g.N)));
      }
}

TEST_CASE("sdot is phi of the rotation") {
  for (const auto& g : all_descriptors())
    for (int i = 1; i <= g.n; ++i) {
      if (g.type == SystemType::B && i == g.n) {
        CHECK_THROWS(phi(g, i, Quad(0), Quad(-1), Quad(1), Quad(0)));
        continue;
      }
      CHECK(generator(g, GenKind::Sdot, i) == phi(g, i, Quad(0), Quad(-1), Quad(1), Quad(0)));
      Quad m(3);
      CHECK(generator(g, GenKind::X, i, m) == phi(g, i, Quad(1), m, Quad(0), Quad(1)));
      CHECK(generator(g, GenKind::Y, i, m) == phi(g, i, Quad(1), Quad(0), m, Quad(1)));
    }
}

TEST_CASE("explicit identities relating to the standard pinning") {
  GroupDescriptor c3 = make_descriptor(SystemType::C, 3), a5 = make_descriptor(SystemType::A, 5);
  for (int v : {1, 2, 3}) {
    Quad m(v);
    CHECK(generator(c3, GenKind::Y, 1, m) == generator(a5, GenKind::Y, 1, m) * generator(a5, GenKind::Y, 5, m));
  }
  GroupDescriptor b2 = make_descriptor(SystemType::B, 2), a4 = make_descriptor(SystemType::A, 4);
  for (const char* lit : {"1", "1/2", "-3", "7/5"}) {
    Quad m = parse_scalar(lit);
    CAPTURE(lit);
    CHECK(generator(b2, GenKind::Y, 2, m) ==
          generator(a4, GenKind::Y, 2, m / r2) * generator(a4, GenKind::Y, 3, r2 * m) * generator(a4, GenKind::Y, 2, m / r2));
    CHECK(generator(b2, GenKind::X, 2, m) ==
          generator(a4, GenKind::X, 2, m / r2) * generator(a4, GenKind::X, 3, r2 * m) * generator(a4, GenKind::X, 2, m / r2));
    CHECK(generator(b2, GenKind::Chi, 2, m) ==
          generator(a4, GenKind::Chi, 2, m * m) * generator(a4, GenKind::Chi, 3, m * m));
  }
  CHECK(generator(b2, GenKind::Sdot, 2) ==
        generator(a4, GenKind::Sdot, 2) * generator(a4, GenKind::Sdot, 3) * generator(a4, GenKind::Sdot, 2));
}

TEST_CASE("three-factor identity for x sdot inverse") {
  GroupDescriptor b2 = make_descriptor(SystemType::B, 2), a4 = make_descriptor(SystemType::A, 4);
  auto xs = [](const GroupDescriptor& g, int i, const Quad& m) {
    return generator(g, GenKind::X, i, m) * inverse(generator(g, GenKind::Sdot, i));
  };
  for (const char* lit : {"1", "1/2", "-3"}) {
    Quad m = parse_scalar(lit);
    CHECK(xs(b2, 2, m) == xs(a4, 2, r2 * m) * xs(a4, 3, -(m * m)) * xs(a4, 2, r2 * m));
    CHECK(generator(b2, GenKind::XSdotInv, 2, m) == xs(b2, 2, m));
  }
  GroupDescriptor c3 = make_descriptor(SystemType::C, 3), a5 = make_descriptor(SystemType::A, 5);
  Quad m(Rational(-7, 2));
  Matrix f1 = xs(a5, 1, m), f5 = xs(a5, 5, m);
  CHECK(xs(c3, 1, m) == f1 * f5);
  CHECK(f1 * f5 == f5 * f1);
}

TEST_CASE("compatibility and factorization checks pass everywhere") {
  for (int n = 2; n <= 4; ++n)
    for (SystemType t : {SystemType::C, SystemType::B}) {
      GroupDescriptor g = make_descriptor(t, n);
      for (int i = 1; i <= n; ++i) {
        CAPTURE(g.name());
        CAPTURE(i);
        CHECK(verify_compatibility(g, i));
        CHECK(verify_ddagger2(g, i));
        CHECK_FALSE(compatibility_checks(g, i).empty());
      }
    }
  for (const char* lit : {"1", "1/2", "-3", "7/5"}) {
    bool found = false;
    for (const auto& p : certification_points()) found = found || p == parse_scalar(lit);
    CHECK(found);
  }
}

TEST_CASE("fold identity tables") {
  GroupDescriptor b3 = make_descriptor(SystemType::B, 3);
  FoldIdentity id = fold_identity(b3, GenKind::Y, 3);
  CHECK(id.target_letters == std::vector<int>{3, 4, 3});
  std::mt19937_64 rng(33);
  for (int t = 0; t < 5; ++t) {
    Quad m = random_param(rng);
    CHECK(fold_identity_rhs(id, m) == generator(b3, GenKind::Y, 3, m));
  }
  FoldIdentity c = fold_identity(make_descriptor(SystemType::C, 3), GenKind::X, 2);
  CHECK(c.target_letters == std::vector<int>{2, 4});
}

TEST_CASE("word products") {
  GroupDescriptor a2 = make_descriptor(SystemType::A, 2);
  CHECK(word_product(a2, {}, {}, {}) == Matrix::identity(3));
  Quad a(2), b(Rational(1, 3)), c(-5);
  Matrix y = y_word(a2, {1, 2, 1}, {a, b, c});
  Matrix want = Matrix::identity(3);
  want(1, 0) = a + c;
  want(2, 1) = b;
  want(2, 0) = b * c;
  CHECK(y == want);
  CHECK(word_product(a2, {1, 2}, {GenKind::X, GenKind::Chi}, {a, b}) ==
        generator(a2, GenKind::X, 1, a) * generator(a2, GenKind::Chi, 2, b));
  CHECK_THROWS(word_product(a2, {1, 2}, {GenKind::X}, {a, b}));
}

TEST_CASE("upper Borel products stay upper triangular") {
  std::mt19937_64 rng(34);
  for (const auto& g : all_descriptors()) {
    Matrix m = Matrix::identity(static_cast<std::size_t>(g.N));
    for (int t = 0; t < 10; ++t) {
      int i = static_cast<int>(rng() % static_cast<std::size_t>(g.n)) + 1;
      GenKind k = rng() % 2 ? GenKind::X : GenKind::Chi;
      m = m * generator(g, k, i, random_param(rng));
    }
    CHECK(upper_triangular(m));
    CHECK(upper_triangular(generator(g, GenKind::Y, 1, Quad(2)).transpose()));
  }
}
