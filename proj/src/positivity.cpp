#include "flagpos/positivity.hpp"

#include <algorithm>

namespace flagpos {

Quad Sampler::positive() {
  long p = static_cast<long>(rng_() % 100) + 1;
  long q = static_cast<long>(rng_() % 100) + 1;
  return Quad::frac(p, q);
}

Quad Sampler::nonzero() {
  Quad v = positive();
  return (rng_() & 1) ? -v : v;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Json descriptor_json(const GroupDescriptor& g) {
  Json j;
  j["system"] = g.name();
  j["n"] = g.n;
  j["ambient"] = g.N;
  return j;
}

Json matrix_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json e = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(render(m(i, k)));
    e.push_back(std::move(r));
  }
  j["entries"] = std::move(e);
  return j;
}

Json ranks_json(const std::vector<int>& k) { return Json(k); }

std::vector<int> extended_ranks(const GroupDescriptor& g, const std::vector<int>& K) {
  std::vector<int> out;
  for (int k : K) {
    if (k < 1 || k >= g.N) throw Error(ErrorCode::InvalidArgument, "rank out of range");
    out.push_back(k);
    if (g.form) out.push_back(g.N - k);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Flag flag_from_group_element(const Matrix& M, const GroupDescriptor& g, const std::vector<int>& K, bool extended) {
  if (!group_membership(M, g)) throw Error(ErrorCode::Domain, "matrix is not in " + g.name());
  std::vector<int> ranks = extended ? extended_ranks(g, K) : K;
  std::sort(ranks.begin(), ranks.end());
  Flag f = make_flag(M, ranks);
  if (extended && g.form) {
    for (int k : K) {
      if (!same_column_span(perp(f.subspace(k), *g.form), f.subspace(g.N - k)))
        throw Error(ErrorCode::Domain, "mirror rank is not the perp");
    }
  }
  return f;
}

Flag complete_flag(const Matrix& M) {
  std::vector<int> ranks;
  for (std::size_t k = 1; k < M.rows(); ++k) ranks.push_back(static_cast<int>(k));
  return make_flag(M, ranks);
}

bool same_flag(const Flag& a, const Flag& b) {
  if (a.ambient != b.ambient || a.ranks != b.ranks) return false;
  for (int k : a.ranks)
    if (!same_column_span(a.subspace(k), b.subspace(k))) return false;
  return true;
}

Json PositivityFailure::to_json() const {
  Json j;
  j["rank"] = rank;
  j["reason"] = reason;
  if (!subset.empty()) {
    j["subset"] = subset;
    j["value"] = render(value);
  }
  return j;
}

std::optional<PositivityFailure> positivity_failure(const Flag& F, const GroupDescriptor& g, bool strict) {
  for (int k : F.ranks) {
    Matrix sub = F.subspace(k);
    if (g.form && k <= g.n && !is_isotropic(sub, *g.form)) return PositivityFailure{k, "isotropy", {}, Quad(0)};
    PluckerVector p = plucker_vector(sub);
    int s = p.leading_sign();
    if (s == 0) return PositivityFailure{k, "all-zero", {}, Quad(0)};
    for (std::size_t i = 0; i < p.coords.size(); ++i) {
      int c = p.coords[i].sign() * s;
      if (c < 0) return PositivityFailure{k, "sign", p.subsets[i], p.coords[i]};
      if (c == 0 && strict) return PositivityFailure{k, "zero", p.subsets[i], p.coords[i]};
    }
  }
  return std::nullopt;
}

bool is_plucker_positive_flag(const Flag& F, const GroupDescriptor& g, bool strict) {
  return !positivity_failure(F, g, strict).has_value();
}

Word default_w0_word(const GroupDescriptor& g) {
  if (g.type == SystemType::A) {
    Word w{g.system(), {}};
    for (int i = g.n; i >= 1; --i)
      for (int j = 1; j <= i; ++j) w.letters.push_back(j);
    return w;
  }
  if (g.type == SystemType::D) throw Error(ErrorCode::InvalidArgument, "no default longest word for type D");
  return appendix_w0_word(g.system());
}

PositiveSample positive_sample_with_params(const GroupDescriptor& g, const std::vector<int>& K, const Word& word,
                                           const std::vector<Quad>& params) {
  if (params.size() != word.size()) throw Error(ErrorCode::Dimension, "parameter count does not match word");
  for (const auto& p : params)
    if (p.sign() <= 0) throw Error(ErrorCode::Domain, "positive sample needs positive parameters");
  PositiveSample s;
  s.descriptor = g;
  s.ranks = K;
  std::sort(s.ranks.begin(), s.ranks.end());
  s.word = word;
  s.params = params;
  s.matrix = y_word(g, word.letters, params);
  s.flag = make_flag(s.matrix, s.ranks);
  return s;
}

PositiveSample lusztig_positive_sample(const GroupDescriptor& g, const std::vector<int>& K, std::uint64_t seed,
                                       const Word* word) {
  if (g.type == SystemType::D) throw Error(ErrorCode::InvalidArgument, "positive sampling covers A, B, C");
  Word w = word ? *word : default_w0_word(g);
  Sampler rng(seed);
  std::vector<Quad> params;
  for (std::size_t i = 0; i < w.size(); ++i) params.push_back(rng.positive());
  PositiveSample s = positive_sample_with_params(g, K, w, params);
  s.seed = seed;
  return s;
}

MRPoint marsh_rietsch_point(const Subexpression& s, const std::vector<Quad>& m, const std::vector<Quad>& t,
                            const GroupDescriptor& g) {
  if (m.size() != s.positions(Cls::Minus).size() || t.size() != s.positions(Cls::Circ).size())
    throw Error(ErrorCode::Dimension, "parameter counts do not match the subexpression");
  for (const auto& x : t)
    if (x.is_zero()) throw Error(ErrorCode::InvalidArgument, "t parameters must be nonzero");
  std::vector<GenKind> kinds;
  std::vector<Quad> params;
  std::size_t im = 0, it = 0;
  for (std::size_t k = 0; k < s.base.size(); ++k) {
    switch (s.cls[k]) {
      case Cls::Minus:
        kinds.push_back(GenKind::XSdotInv);
        params.push_back(m[im++]);
        break;
      case Cls::Circ:
        kinds.push_back(GenKind::Y);
        params.push_back(t[it++]);
        break;
      case Cls::Plus:
        kinds.push_back(GenKind::Sdot);
        params.push_back(Quad(0));
        break;
    }
  }
  MRPoint p;
  p.subexpr = s;
  p.m_params = m;
  p.t_params = t;
  p.matrix = word_product(g, s.base.letters, kinds, params);
  p.flag = complete_flag(p.matrix);
  return p;
}

MRPoint random_mr_point(const Subexpression& s, const GroupDescriptor& g, Sampler& rng) {
  std::vector<Quad> m, t;
  for (std::size_t k = 0; k < s.positions(Cls::Minus).size(); ++k) m.push_back(rng.nonzero());
  for (std::size_t k = 0; k < s.positions(Cls::Circ).size(); ++k) t.push_back(rng.positive());
  return marsh_rietsch_point(s, m, t, g);
}

namespace {
const char* cls_name(Cls c) {
  switch (c) {
    case Cls::Plus: return "+";
    case Cls::Circ: return "o";
    case Cls::Minus: return "-";
  }
  return "?";
}
}  // namespace

FoldCellResult fold_cell_containment(const GroupDescriptor& g, const Subexpression& s, int samples, std::uint64_t seed) {
  GroupDescriptor a = folded_descriptor(g);
  Subexpression fs = fold_subexpression(s);
  FoldCellResult res;
  // classification must agree blockwise
  std::size_t pos = 0;
  for (std::size_t k = 0; k < s.base.size(); ++k) {
    std::size_t len = psi(g.system(), s.base.letters[k]).size();
    for (std::size_t j = 0; j < len; ++j)
      if (fs.cls[pos + j] != s.cls[k]) {
        res.passed = false;
        res.detail = "letter " + std::to_string(k + 1) + " is " + cls_name(s.cls[k]) + " but folded position " +
                     std::to_string(pos + j + 1) + " is " + cls_name(fs.cls[pos + j]);
        return res;
      }
    pos += len;
  }
  for (int i = 0; i < samples; ++i) {
    Sampler rng(sample_seed(seed, static_cast<std::uint64_t>(i)));
    MRPoint p = random_mr_point(s, g, rng);
    std::vector<Quad> ma, ta;
    std::size_t im = 0, it = 0;
    for (std::size_t k = 0; k < s.base.size(); ++k) {
      int letter = s.base.letters[k];
      if (s.cls[k] == Cls::Circ) {
        for (const auto& f : fold_identity(g, GenKind::Y, letter).maps) ta.push_back(f.apply(p.t_params[it]));
        ++it;
      } else if (s.cls[k] == Cls::Minus) {
        for (const auto& f : fold_identity(g, GenKind::XSdotInv, letter).maps) ma.push_back(f.apply(p.m_params[im]));
        ++im;
      }
    }
    MRPoint q = marsh_rietsch_point(fs, ma, ta, a);
    if (!same_flag(p.flag, q.flag)) {
      res.passed = false;
      res.detail = "sample " + std::to_string(i) + ": flags differ";
      return res;
    }
  }
  return res;
}

bool fold_cell_containment_check(const GroupDescriptor& g, const Subexpression& s, int samples, std::uint64_t seed) {
  return fold_cell_containment(g, s, samples, seed).passed;
}

Report theorem_forward_report(const GroupDescriptor& g, const std::vector<int>& K, int samples, std::uint64_t seed) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be >= 1");
  for (int k : K)
    if (k < 1 || k > g.n) throw Error(ErrorCode::InvalidArgument, "K must lie in [n]");
  Report r;
  r.command = "theorem";
  r.descriptor = descriptor_json(g);
  r.descriptor["K"] = K;
  r.seed = seed;
  r.samples = samples;
  for (int i = 0; i < samples; ++i) {
    std::uint64_t ss = sample_seed(seed, static_cast<std::uint64_t>(i));
    PositiveSample s = lusztig_positive_sample(g, K, ss);
    auto fail = positivity_failure(s.flag, g, true);
    Json w = nullptr;
    if (fail) {
      w = fail->to_json();
      w["sample_seed"] = ss;
    }
    r.add("sample-" + std::to_string(i), !fail, w);
  }
  return r;
}

Matrix boundary_curve_matrix(const GroupDescriptor& g, const Quad& t) {
  if (t.sign() <= 0) throw Error(ErrorCode::Domain, "curve parameter must be positive");
  Word w = default_w0_word(g);
  std::size_t l = w.size();
  std::vector<Quad> ts(l, t), ones(l, Quad(1));
  Matrix y = word_product(g, w.letters, std::vector<GenKind>(l, GenKind::Y), ts);
  Matrix chi = word_product(g, w.letters, std::vector<GenKind>(l, GenKind::Chi), ones);
  Matrix x = word_product(g, w.letters, std::vector<GenKind>(l, GenKind::X), ts);
  return y * chi * x;
}

Flag boundary_curve_sample(const GroupDescriptor& g, const Flag& F, const Quad& t) {
  if (F.ambient != g.N) throw Error(ErrorCode::Dimension, "flag ambient does not match group");
  return make_flag(boundary_curve_matrix(g, t) * F.basis, F.ranks);
}

Matrix random_group_element(const GroupDescriptor& g, Sampler& rng, int factors) {
  Matrix out = Matrix::identity(g.N);
  for (int f = 0; f < factors; ++f) {
    int i = static_cast<int>(rng.below(static_cast<std::size_t>(g.n))) + 1;
    GenKind k = static_cast<GenKind>(rng.below(4));
    out = out * generator(g, k, i, rng.nonzero());
  }
  return out;
}

DualityResult extended_duality(const Matrix& M, const GroupDescriptor& g) {
  if (!g.form) throw Error(ErrorCode::InvalidArgument, "duality needs a form");
  DualityResult r;
  for (int i = 1; i < g.N; ++i) {
    Matrix li = M.leading_columns(static_cast<std::size_t>(i));
    Matrix lc = M.leading_columns(static_cast<std::size_t>(g.N - i));
    if (!same_column_span(perp(li, *g.form), lc)) {
      r.perp_ok = false;
      r.detail = "L_" + std::to_string(g.N - i) + " is not the perp of L_" + std::to_string(i);
      return r;
    }
    PluckerVector p = plucker_perp_reindex(plucker_vector(li));
    PluckerVector q = plucker_vector(lc);
    // ratio must be one and the same sign for every coordinate and every i
    for (std::size_t s = 0; s < p.coords.size(); ++s) {
      int sg = 0;
      if (p.coords[s].is_zero() && q.coords[s].is_zero()) continue;
      if (q.coords[s] == p.coords[s])
        sg = 1;
      else if (q.coords[s] == -p.coords[s])
        sg = -1;
      if (sg == 0 || (r.sign != 0 && sg != r.sign)) {
        r.plucker_ok = false;
        r.detail = "rank " + std::to_string(i) + " subset coordinate " + std::to_string(s) + " breaks the common sign";
        return r;
      }
      r.sign = sg;
    }
  }
  return r;
}

}  // namespace flagpos
