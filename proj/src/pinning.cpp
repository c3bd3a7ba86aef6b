#include "flagpos/pinning.hpp"

namespace flagpos {

GroupDescriptor make_descriptor(SystemType type, int n) {
  GroupDescriptor g;
  g.type = type;
  g.n = n;
  switch (type) {
    case SystemType::A:
      if (n < 1) throw Error(ErrorCode::InvalidArgument, "A(n) needs n >= 1");
      g.N = n + 1;
      break;
    case SystemType::C:
      if (n < 1) throw Error(ErrorCode::InvalidArgument, "C(n) needs n >= 1");
      g.N = 2 * n;
      g.form = form_typeC(n);
      break;
    case SystemType::B:
      if (n < 1) throw Error(ErrorCode::InvalidArgument, "B(n) needs n >= 1");
      g.N = 2 * n + 1;
      g.form = form_typeB(n);
      break;
    case SystemType::D:
      if (n < 2) throw Error(ErrorCode::InvalidArgument, "D(n) needs n >= 2");
      g.N = 2 * n;
      g.form = form_typeD(n);
      break;
  }
  return g;
}

GroupDescriptor folded_descriptor(const GroupDescriptor& g) {
  if (g.type == SystemType::C) return make_descriptor(SystemType::A, 2 * g.n - 1);
  if (g.type == SystemType::B) return make_descriptor(SystemType::A, 2 * g.n);
  throw Error(ErrorCode::InvalidArgument, "only B and C fold into type A");
}

std::string gen_name(GenKind k) {
  switch (k) {
    case GenKind::X: return "x";
    case GenKind::Y: return "y";
    case GenKind::Chi: return "chi";
    case GenKind::Sdot: return "sdot";
    case GenKind::XSdotInv: return "x_sdot_inv";
  }
  return "?";
}

namespace {

void put_block(Matrix& m, int r, int s, const Quad& a, const Quad& b, const Quad& c, const Quad& d) {
  m(r - 1, r - 1) = a;
  m(r - 1, s - 1) = b;
  m(s - 1, r - 1) = c;
  m(s - 1, s - 1) = d;
}

void check_index(const GroupDescriptor& g, int i) {
  if (i < 1 || i > g.n) throw Error(ErrorCode::InvalidArgument, "generator index " + std::to_string(i) + " invalid for " + g.name());
}

Matrix b_long(const GroupDescriptor& g, GenKind kind, const Quad& m) {
  int n = g.n;
  Matrix x = Matrix::identity(g.N);
  Quad r2m = Quad::sqrt2() * m;
  Quad msq = m * m;
  int p = n - 1;  // zero-based row of index n
  if (kind == GenKind::X) {
    x(p, p + 1) = r2m;
    x(p, p + 2) = msq;
    x(p + 1, p + 2) = r2m;
  } else {
    x(p + 1, p) = r2m;
    x(p + 2, p) = msq;
    x(p + 2, p + 1) = r2m;
  }
  return x;
}

}  // namespace

Matrix phi(const GroupDescriptor& g, int i, const Quad& a, const Quad& b, const Quad& c, const Quad& d) {
  check_index(g, i);
  int n = g.n;
  Matrix m = Matrix::identity(g.N);
  switch (g.type) {
    case SystemType::A:
      put_block(m, i, i + 1, a, b, c, d);
      break;
    case SystemType::C:
      put_block(m, i, i + 1, a, b, c, d);
      if (i < n) put_block(m, 2 * n - i, 2 * n - i + 1, a, b, c, d);
      break;
    case SystemType::B:
      if (i == n) throw Error(ErrorCode::InvalidArgument, "type B index n has no 2x2 block map");
      put_block(m, i, i + 1, a, b, c, d);
      put_block(m, 2 * n - i + 1, 2 * n - i + 2, a, b, c, d);
      break;
    case SystemType::D:
      if (i < n) {
        put_block(m, i, i + 1, a, b, c, d);
        put_block(m, 2 * n - i, 2 * n - i + 1, a, b, c, d);
      } else {
        put_block(m, n - 1, n + 1, a, b, c, d);
        put_block(m, n, n + 2, a, b, c, d);
      }
      break;
  }
  return m;
}

Matrix generator(const GroupDescriptor& g, GenKind kind, int i, const Quad& param) {
  check_index(g, i);
  bool b_special = g.type == SystemType::B && i == g.n;
  switch (kind) {
    case GenKind::X:
      return b_special ? b_long(g, kind, param) : phi(g, i, 1, param, 0, 1);
    case GenKind::Y:
      return b_special ? b_long(g, kind, param) : phi(g, i, 1, 0, param, 1);
    case GenKind::Chi: {
      if (param.is_zero()) throw Error(ErrorCode::InvalidArgument, "torus parameter must be nonzero");
      if (!b_special) return phi(g, i, param, 0, 0, param.inverse());
      Matrix m = Matrix::identity(g.N);
      Quad t2 = param * param;
      m(i - 1, i - 1) = t2;
      m(i + 1, i + 1) = t2.inverse();
      return m;
    }
    case GenKind::Sdot:
      if (!b_special) return phi(g, i, 0, -1, 1, 0);
      return b_long(g, GenKind::X, -1) * b_long(g, GenKind::Y, 1) * b_long(g, GenKind::X, -1);
    case GenKind::XSdotInv:
      return generator(g, GenKind::X, i, param) * inverse(generator(g, GenKind::Sdot, i));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

bool group_membership(const Matrix& m, const GroupDescriptor& g) {
  if (m.rows() != static_cast<std::size_t>(g.N) || m.cols() != static_cast<std::size_t>(g.N))
    throw Error(ErrorCode::Dimension, "membership: matrix is not of ambient size");
  if (!g.form) return !det(m).is_zero();
  const Matrix& e = g.form->gram;
  return m.transpose() * e * m == e && det(m) == Quad(1);
}

Quad ScalarMap::apply(const Quad& m) const {
  switch (kind) {
    case Kind::Identity: return m;
    case Kind::Scale: return c * m;
    case Kind::Square: return m * m;
    case Kind::SquareNeg: return -(m * m);
  }
  return m;
}

std::string ScalarMap::name() const {
  switch (kind) {
    case Kind::Identity: return "m";
    case Kind::Scale: return render(c) + "*m";
    case Kind::Square: return "m^2";
    case Kind::SquareNeg: return "-m^2";
  }
  return "?";
}

FoldIdentity fold_identity(const GroupDescriptor& g, GenKind kind, int i) {
  if (g.type != SystemType::B && g.type != SystemType::C)
    throw Error(ErrorCode::InvalidArgument, "fold identities exist for B and C only");
  check_index(g, i);
  FoldIdentity id;
  id.type = g.type;
  id.n = g.n;
  id.index = i;
  id.kind = kind;
  id.target_letters = psi(g.system(), i);
  bool b_long_index = g.type == SystemType::B && i == g.n;
  if (!b_long_index) {
    id.maps.assign(id.target_letters.size(), ScalarMap::identity());
    return id;
  }
  Quad r2 = Quad::sqrt2();
  switch (kind) {
    case GenKind::X:
    case GenKind::Y:
      id.maps = {ScalarMap::scale(r2.inverse()), ScalarMap::scale(r2), ScalarMap::scale(r2.inverse())};
      break;
    case GenKind::Chi:
      id.target_letters = {g.n, g.n + 1};
      id.maps = {ScalarMap::square(), ScalarMap::square()};
      break;
    case GenKind::Sdot:
      id.maps.assign(3, ScalarMap::identity());
      break;
    case GenKind::XSdotInv:
      id.maps = {ScalarMap::scale(r2), ScalarMap::square_neg(), ScalarMap::scale(r2)};
      break;
  }
  return id;
}

Matrix fold_identity_rhs(const FoldIdentity& id, const Quad& m) {
  GroupDescriptor a = folded_descriptor(make_descriptor(id.type, id.n));
  Matrix out = Matrix::identity(a.N);
  for (std::size_t j = 0; j < id.target_letters.size(); ++j) {
    Quad p = id.kind == GenKind::Sdot ? Quad(0) : id.maps[j].apply(m);
    out = out * generator(a, id.kind, id.target_letters[j], p);
  }
  return out;
}

const std::vector<Quad>& certification_points() {
  static const std::vector<Quad> pts = {Quad(1), Quad(2), Quad(3), Quad::frac(1, 2), Quad(-3), Quad::frac(7, 5)};
  return pts;
}

std::vector<IdentityCheck> compatibility_checks(const GroupDescriptor& g, int i) {
  std::vector<IdentityCheck> out;
  for (GenKind k : {GenKind::Y, GenKind::X, GenKind::Chi}) {
    FoldIdentity id = fold_identity(g, k, i);
    for (const Quad& m : certification_points()) {
      bool ok = generator(g, k, i, m) == fold_identity_rhs(id, m);
      out.push_back({gen_name(k) + "_" + std::to_string(i) + "(" + render(m) + ")", ok});
    }
  }
  FoldIdentity s = fold_identity(g, GenKind::Sdot, i);
  out.push_back({"sdot_" + std::to_string(i), generator(g, GenKind::Sdot, i) == fold_identity_rhs(s, Quad(0))});
  return out;
}

bool verify_compatibility(const GroupDescriptor& g, int i) {
  for (const auto& c : compatibility_checks(g, i))
    if (!c.passed) return false;
  return true;
}

std::vector<IdentityCheck> ddagger2_checks(const GroupDescriptor& g, int i) {
  std::vector<IdentityCheck> out;
  FoldIdentity id = fold_identity(g, GenKind::XSdotInv, i);
  GroupDescriptor a = folded_descriptor(g);
  for (const Quad& m : certification_points()) {
    bool ok = generator(g, GenKind::XSdotInv, i, m) == fold_identity_rhs(id, m);
    out.push_back({"x_sdot_inv_" + std::to_string(i) + "(" + render(m) + ")", ok});
    if (id.target_letters.size() == 2) {
      Matrix p = generator(a, GenKind::XSdotInv, id.target_letters[0], id.maps[0].apply(m));
      Matrix q = generator(a, GenKind::XSdotInv, id.target_letters[1], id.maps[1].apply(m));
      out.push_back({"commute_" + std::to_string(i) + "(" + render(m) + ")", p * q == q * p});
    }
  }
  return out;
}

bool verify_ddagger2(const GroupDescriptor& g, int i) {
  for (const auto& c : ddagger2_checks(g, i))
    if (!c.passed) return false;
  return true;
}

Matrix word_product(const GroupDescriptor& g, const std::vector<int>& letters, const std::vector<GenKind>& kinds,
                    const std::vector<Quad>& params) {
  if (letters.size() != kinds.size() || letters.size() != params.size())
    throw Error(ErrorCode::Dimension, "word product: length mismatch");
  Matrix out = Matrix::identity(g.N);
  for (std::size_t k = 0; k < letters.size(); ++k) out = out * generator(g, kinds[k], letters[k], params[k]);
  return out;
}

Matrix y_word(const GroupDescriptor& g, const std::vector<int>& letters, const std::vector<Quad>& params) {
  return word_product(g, letters, std::vector<GenKind>(letters.size(), GenKind::Y), params);
}

}  // namespace flagpos
