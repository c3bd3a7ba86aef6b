#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagpos/certifier.hpp"
#include "flagpos/pinning.hpp"
#include "flagpos/report.hpp"

namespace flagpos {

struct Expected {
  bool nonneg_member = true;
  bool extendable = false;
};

// A flag at ranks K given by the leading rows of `matrix` (rows are vectors).
struct Construction {
  std::string name;
  GroupDescriptor descriptor;
  std::vector<int> ranks;
  Matrix matrix;
  Expected expected;
  std::string family;  // case_i, case_ii, case_iii
  int g = 0;           // largest index of [n] missing from K
  int f = 0;           // largest element of K below g
  int ell = 0;         // n - f - 2 in case (ii)
  std::optional<ProofHint> proof_hints;

  Flag flag() const;
};

// g = max([n] \ K), f = max{i in K : i < g}. Throws InvalidArgument when K = {k..n}.
std::pair<int, int> gap_indices(int n, const std::vector<int>& K);
std::string construction_name(SystemType t, int n, const std::vector<int>& K, const std::string& family);

Construction build_counterexample(SystemType type, int n, const std::vector<int>& K);
// C at n = 2, 3, 4 and B at n = 3, 4, every K that is not {k..n}.
std::vector<Construction> catalog();
std::optional<Construction> find_construction(const std::string& name);

Report verify_construction(const Construction& c);

// The one-step problem the certifier sees for case (i) / (iii).
ExtensionProblem extension_problem(const Construction& c);

struct PipelineResult {
  Verdict verdict = Verdict::Unknown;
  std::string route;  // direct, interval, hint
  bool used_hint = false;
  std::vector<std::string> trace;
};
PipelineResult certify_construction(const Construction& c, const CertOptions& opt = {});

struct IntervalReduction {
  int a = 0, b = 0;
  std::vector<int> k_flag_dims;  // intersection dims of the K-flag ranks
  std::vector<int> reduced_ranks;  // ranks of the full row flag after intersecting
  bool gram_matches = false;       // restricted form is +- the small-case form
  ExtensionProblem small;
  bool applicable = false;
};
IntervalReduction interval_reduction(const Construction& c);
Report reduce_by_interval_then_certify(const Construction& c, const CertOptions& opt = {});

// Small-case problems used by the falsification cross-check.
struct SmallCase {
  std::string name;
  Construction construction;
  int steps = 1;  // vectors adjoined per candidate
};
std::vector<SmallCase> small_cases();
// Random candidates satisfying the linear isotropy pairings; returns how many
// satisfy every constraint (a sound certificate implies 0).
struct FalsificationResult {
  int candidates = 0;
  int satisfying = 0;
  int rank_increasing = 0;
};
FalsificationResult falsify(const SmallCase& sc, int candidates, std::uint64_t seed);

// B(2) doubling construction: rows (1, b, c, d, bd - c^2/2) and (0, 1, 2x, 2x^2, 2bx^2 + d - 2cx).
Matrix extend_B2(const Quad& b, const Quad& c, const Quad& d, const Quad& x);
struct B2Result {
  bool ok = false;
  int doublings = 0;
  Quad x;
  Matrix matrix;
};
B2Result extend_B2_search(const Quad& b, const Quad& c, const Quad& d, int max_doublings = 64);

struct PfaffianPoint {
  std::vector<Quad> t;
  Matrix G;      // generator product
  Matrix X;      // 8 x 4, top block identity
  Matrix E0B;    // 4 x 4 antisymmetric
  std::vector<std::vector<int>> subsets;  // even subsets of [4]
  std::vector<Quad> pfaffians;            // normalized Pf_I
  std::vector<Quad> minors;               // Delta on rows ([4] \ I) u Ibar
  bool lusztig_nonneg = false;
};
PfaffianPoint typeD_pfaffian_point(const std::vector<Quad>& t);
Matrix typeD_display_matrix(const std::vector<Quad>& t);
std::vector<int> typeD_canonical_signs();
// Pf_I^2 = lambda * Delta_I for one common lambda; returns lambda if so.
std::optional<Quad> pfaffian_minor_scalar(const PfaffianPoint& p);
Json pfaffian_point_json(const PfaffianPoint& p);

}  // namespace flagpos
