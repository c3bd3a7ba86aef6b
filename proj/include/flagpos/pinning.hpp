#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagpos/matrix.hpp"
#include "flagpos/weyl.hpp"

namespace flagpos {

struct GroupDescriptor {
  SystemType type = SystemType::A;
  int n = 1;
  int N = 2;  // ambient dimension
  std::optional<BilinearForm> form;

  RootSystem system() const { return RootSystem{type, n}; }
  std::string name() const { return system().name(); }
};

// A(n) acts on R^{n+1}; C(n), D(n) on R^{2n}; B(n) on R^{2n+1}.
GroupDescriptor make_descriptor(SystemType type, int n);
// The type A group that C(n) / B(n) embed into.
GroupDescriptor folded_descriptor(const GroupDescriptor& g);

enum class GenKind { X, Y, Chi, Sdot, XSdotInv };
std::string gen_name(GenKind k);

Matrix generator(const GroupDescriptor& g, GenKind kind, int i, const Quad& param = Quad(0));
// phi_i applied to a 2x2 matrix [[a, b], [c, d]] (not available for B at i = n).
Matrix phi(const GroupDescriptor& g, int i, const Quad& a, const Quad& b, const Quad& c, const Quad& d);
bool group_membership(const Matrix& m, const GroupDescriptor& g);

struct ScalarMap {
  enum class Kind { Identity, Scale, Square, SquareNeg };
  Kind kind = Kind::Identity;
  Quad c = Quad(1);

  Quad apply(const Quad& m) const;
  std::string name() const;
  static ScalarMap identity() { return {}; }
  static ScalarMap scale(const Quad& c) { return {Kind::Scale, c}; }
  static ScalarMap square() { return {Kind::Square, Quad(1)}; }
  static ScalarMap square_neg() { return {Kind::SquareNeg, Quad(1)}; }
};

// g^Phi_i(m) = prod_j g^A_{target_j}(f_j(m)); for Sdot the maps are ignored.
// Kind XSdotInv encodes x_i(m) sdot_i^{-1}.
struct FoldIdentity {
  SystemType type = SystemType::C;
  int n = 0;
  int index = 0;
  GenKind kind = GenKind::Y;
  std::vector<int> target_letters;
  std::vector<ScalarMap> maps;
};

FoldIdentity fold_identity(const GroupDescriptor& g, GenKind kind, int i);
Matrix fold_identity_rhs(const FoldIdentity& id, const Quad& m);

struct IdentityCheck {
  std::string name;
  bool passed = false;
};

std::vector<IdentityCheck> compatibility_checks(const GroupDescriptor& g, int i);
bool verify_compatibility(const GroupDescriptor& g, int i);
std::vector<IdentityCheck> ddagger2_checks(const GroupDescriptor& g, int i);
bool verify_ddagger2(const GroupDescriptor& g, int i);

const std::vector<Quad>& certification_points();

Matrix word_product(const GroupDescriptor& g, const std::vector<int>& letters, const std::vector<GenKind>& kinds,
                    const std::vector<Quad>& params);
Matrix y_word(const GroupDescriptor& g, const std::vector<int>& letters, const std::vector<Quad>& params);

}  // namespace flagpos
