#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "flagpos/matrix.hpp"
#include "flagpos/pinning.hpp"
#include "flagpos/report.hpp"
#include "flagpos/weyl.hpp"

namespace flagpos {

// Rationals p/q with p, q in [1, 100], drawn from a seeded mt19937_64.
// Plain modulo keeps the stream identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t raw() { return rng_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  Quad positive();
  Quad nonzero();  // random sign

 private:
  std::mt19937_64 rng_;
};

// Per-sample seed, so sample i depends only on (seed, i).
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

Json descriptor_json(const GroupDescriptor& g);
Json matrix_json(const Matrix& m);
Json ranks_json(const std::vector<int>& k);

std::vector<int> extended_ranks(const GroupDescriptor& g, const std::vector<int>& K);
Flag flag_from_group_element(const Matrix& M, const GroupDescriptor& g, const std::vector<int>& K, bool extended);
Flag complete_flag(const Matrix& M);
bool same_flag(const Flag& a, const Flag& b);

// Why a flag fails positivity; nullopt when it passes.
struct PositivityFailure {
  int rank = 0;
  std::string reason;  // "sign", "zero", "isotropy", "all-zero"
  std::vector<int> subset;
  Quad value;
  Json to_json() const;
};
std::optional<PositivityFailure> positivity_failure(const Flag& F, const GroupDescriptor& g, bool strict);
bool is_plucker_positive_flag(const Flag& F, const GroupDescriptor& g, bool strict);

// A(n): (1..n)(1..n-1)...(1); B/C: appendix_w0_word.
Word default_w0_word(const GroupDescriptor& g);

struct PositiveSample {
  GroupDescriptor descriptor;
  std::vector<int> ranks;
  Word word;
  std::vector<Quad> params;
  Matrix matrix;
  Flag flag;
  std::uint64_t seed = 0;
};
PositiveSample lusztig_positive_sample(const GroupDescriptor& g, const std::vector<int>& K, std::uint64_t seed,
                                       const Word* word = nullptr);
PositiveSample positive_sample_with_params(const GroupDescriptor& g, const std::vector<int>& K, const Word& word,
                                           const std::vector<Quad>& params);

struct MRPoint {
  Subexpression subexpr;
  std::vector<Quad> m_params;  // indexed by J-minus positions, in order
  std::vector<Quad> t_params;  // indexed by J-circ positions, in order
  Matrix matrix;
  Flag flag;  // complete flag
};
MRPoint marsh_rietsch_point(const Subexpression& s, const std::vector<Quad>& m, const std::vector<Quad>& t,
                            const GroupDescriptor& g);
// Random parameters of the right shape: m signed, t positive.
MRPoint random_mr_point(const Subexpression& s, const GroupDescriptor& g, Sampler& rng);

struct FoldCellResult {
  bool passed = true;
  std::string detail;
};
FoldCellResult fold_cell_containment(const GroupDescriptor& g, const Subexpression& s, int samples, std::uint64_t seed);
bool fold_cell_containment_check(const GroupDescriptor& g, const Subexpression& s, int samples, std::uint64_t seed);

Report theorem_forward_report(const GroupDescriptor& g, const std::vector<int>& K, int samples, std::uint64_t seed);

Matrix boundary_curve_matrix(const GroupDescriptor& g, const Quad& t);
Flag boundary_curve_sample(const GroupDescriptor& g, const Flag& F, const Quad& t);

Matrix random_group_element(const GroupDescriptor& g, Sampler& rng, int factors = 12);

// L_{N-i} = L_i^perp and matching Plücker vectors under S -> reversed complement.
struct DualityResult {
  bool perp_ok = true;
  bool plucker_ok = true;
  int sign = 0;  // the common ratio P(L_{N-i}) / P(L_i)^perp, +1 or -1 (0 if none)
  std::string detail;
};
DualityResult extended_duality(const Matrix& M, const GroupDescriptor& g);

}  // namespace flagpos
