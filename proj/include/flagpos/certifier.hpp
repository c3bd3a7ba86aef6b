#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flagpos/matrix.hpp"
#include "flagpos/poly.hpp"

namespace flagpos {

using PolyMatrix = Mat<Poly>;
PolyMatrix to_poly(const Matrix& m);

// Does the row span of `base` extend by one vector v to a subspace whose Plücker
// vector is nonnegative (up to a global sign) and which stays isotropic?
struct ExtensionProblem {
  std::string name;
  BilinearForm form;
  PolyMatrix base;   // r x N, rows span the current subspace
  Matrix container;  // rows span a subspace that must contain v; 0 rows means no constraint
  std::vector<std::vector<Quad>> extra_equalities;  // each row c imposes c.v = 0

  int ambient() const { return static_cast<int>(form.dim()); }
  int target_rank() const { return static_cast<int>(base.rows()) + 1; }
};

enum class Verdict { ProvenNoExtension, Unknown };
std::string verdict_name(Verdict v);

struct CertOptions {
  std::size_t fm_cap = 20000;  // max inequalities alive during one elimination
};

struct CertResult {
  Verdict verdict = Verdict::Unknown;
  std::vector<std::string> trace;
  // Final state: v = param * y over the surviving directions.
  Matrix param;
  Matrix quadratic;  // param^t G param, when the form is symmetric
  bool pivots_complete = true;
};

CertResult no_extension_certificate(const ExtensionProblem& p, const CertOptions& opt = {});

// Scripted two-branch case split on one coordinate of the first new vector
// (1-based): that coordinate is either 0 or, after scaling, 1. Each branch
// pins the first vector and then certifies the next extension.
struct ProofHint {
  int split_coordinate = 0;
  std::string note;
};

CertResult certify_with_hint(const ExtensionProblem& p, const ProofHint& hint, const CertOptions& opt = {});

// Feasibility of {a.y >= b} by exact Fourier-Motzkin elimination with Chernikov
// pruning. Returns a witness point, or nullopt when infeasible. Sets *capped and
// returns nullopt when the inequality count exceeds cap.
struct LinearIneq {
  std::vector<Quad> a;
  Quad b;
};
std::optional<std::vector<Quad>> fm_feasible(const std::vector<LinearIneq>& system, std::size_t dim, std::size_t cap,
                                             bool* capped);

}  // namespace flagpos
