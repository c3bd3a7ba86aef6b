#include "flagpos/counterexamples.hpp"

#include <algorithm>

#include "flagpos/positivity.hpp"

namespace flagpos {

namespace {

using Rows = std::vector<std::vector<Quad>>;

std::vector<Quad> unit(int N, int j) {
  std::vector<Quad> v(static_cast<std::size_t>(N), Quad(0));
  v[static_cast<std::size_t>(j - 1)] = Quad(1);
  return v;
}

// entries placed at 1-based columns starting at `start`
std::vector<Quad> placed(int N, int start, const std::vector<Quad>& local) {
  std::vector<Quad> v(static_cast<std::size_t>(N), Quad(0));
  for (std::size_t i = 0; i < local.size(); ++i) v[static_cast<std::size_t>(start - 1) + i] = local[i];
  return v;
}

Quad sign_pow(int e) { return e % 2 == 0 ? Quad(1) : Quad(-1); }

// span of e1 + e_{2m} in dimension 2m
std::vector<Quad> small_c(int m) {
  std::vector<Quad> v(static_cast<std::size_t>(2 * m), Quad(0));
  v.front() = Quad(1);
  v.back() = Quad(1);
  return v;
}

// the type B small-case line in dimension 2m+1
std::vector<Quad> small_b(int m) {
  std::vector<Quad> v(static_cast<std::size_t>(2 * m + 1), Quad(0));
  if (m % 2 == 1) {
    v[0] = Quad(1);
    v[static_cast<std::size_t>(m)] = Quad::sqrt2();
    v[static_cast<std::size_t>(2 * m)] = Quad(1);
  } else {
    v[1] = Quad(1);
    v[static_cast<std::size_t>(m)] = Quad::sqrt2();
    v[static_cast<std::size_t>(2 * m - 1)] = Quad(1);
  }
  return v;
}

const Rows& corner_rows() {
  static const Rows a = {{1, 2, 2, 2, 2, 1, 0}, {0, 1, 2, 2, 2, 2, 1}};
  return a;
}

// case (iii) rows in the first n columns, N total columns
Rows case_iii_rows(int n, int f, int N) {
  Rows rows;
  for (int r = 1; r <= f - 1; ++r) rows.push_back(unit(N, 4 + r));
  Quad s = sign_pow(f - 1);
  rows.push_back(placed(N, 1, {s, 0, 0, s}));
  rows.push_back(placed(N, 1, {0, s, 0, 0}));
  rows.push_back(placed(N, 1, {0, 0, s, 0}));
  for (int r = 1; r <= n - f - 3; ++r) rows.push_back(unit(N, f + 3 + r));
  rows.push_back(placed(N, 4, {sign_pow(n - f - 3)}));
  return rows;
}

std::string k_label(const std::vector<int>& K) {
  std::string s = "K";
  for (std::size_t i = 0; i < K.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(K[i]);
  }
  return s;
}

Matrix rows_matrix(const Rows& rows) { return Matrix::from_rows(rows); }

}  // namespace

Flag Construction::flag() const { return make_flag(matrix.transpose(), ranks); }

std::pair<int, int> gap_indices(int n, const std::vector<int>& K) {
  std::vector<bool> in(static_cast<std::size_t>(n) + 1, false);
  for (int k : K) {
    if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "K must lie in [n]");
    in[static_cast<std::size_t>(k)] = true;
  }
  int g = 0;
  for (int i = n; i >= 1; --i)
    if (!in[static_cast<std::size_t>(i)]) {
      g = i;
      break;
    }
  int f = 0;
  for (int i = g - 1; i >= 1; --i)
    if (in[static_cast<std::size_t>(i)]) {
      f = i;
      break;
    }
  if (g == 0 || f == 0)
    throw Error(ErrorCode::InvalidArgument, "K is of the form {k..n}; no counterexample exists");
  return {g, f};
}

std::string construction_name(SystemType t, int n, const std::vector<int>& K, const std::string& family) {
  std::string sys = t == SystemType::C ? "C" : t == SystemType::B ? "B" : "?";
  return sys + "." + family + ".n" + std::to_string(n) + "." + k_label(K);
}

Construction build_counterexample(SystemType type, int n, const std::vector<int>& Kin) {
  if (type != SystemType::C && type != SystemType::B)
    throw Error(ErrorCode::InvalidArgument, "counterexamples are built for C and B");
  if (type == SystemType::B && n < 3) throw Error(ErrorCode::InvalidArgument, "B(2) has no counterexample");
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  std::vector<int> K = Kin;
  std::sort(K.begin(), K.end());
  K.erase(std::unique(K.begin(), K.end()), K.end());
  auto [g, f] = gap_indices(n, K);

  Construction c;
  c.descriptor = make_descriptor(type, n);
  c.ranks = K;
  c.g = g;
  c.f = f;
  int N = c.descriptor.N;
  Rows rows;
  if (g == n) {
    c.family = "case_i";
    if (type == SystemType::C) {
      for (int r = 1; r <= f - 1; ++r) rows.push_back(unit(N, r));
      rows.push_back(placed(N, f, small_c(n - f + 1)));
    } else if (f == n - 1) {
      for (int r = 1; r <= f - 2; ++r) rows.push_back(unit(N, r));
      for (const auto& a : corner_rows()) rows.push_back(placed(N, f - 1, a));
    } else {
      int m = n - f + 1;
      for (int r = 1; r <= f - 1; ++r) rows.push_back(unit(N, r));
      rows.push_back(placed(N, f, small_b(m)));
      if (m % 2 == 0) c.proof_hints = ProofHint{f, "split on the first coordinate of the small-case block"};
    }
  } else if (g == n - 1) {
    c.family = "case_ii";
    c.ell = n - f - 2;
    for (int r = 1; r <= f - 1; ++r) rows.push_back(unit(N, r));
    if (type == SystemType::C)
      rows.push_back(placed(N, n - 2, {1, 0, 0, 0, 0, 1}));
    else
      rows.push_back(placed(N, n - 2, {1, 0, 0, Quad::sqrt2(), 0, 0, 1}));
    for (int r = 0; r < c.ell; ++r) {
      auto v = unit(N, f + r);
      v[static_cast<std::size_t>(f + r - 1)] = sign_pow(c.ell);
      rows.push_back(v);
    }
    rows.push_back(unit(N, n - 1));
    rows.push_back(unit(N, n));
  } else {
    c.family = "case_iii";
    rows = case_iii_rows(n, f, N);
  }
  c.matrix = rows_matrix(rows);
  c.name = construction_name(type, n, K, c.family);
  return c;
}

std::vector<Construction> catalog() {
  std::vector<Construction> out;
  auto add_all = [&](SystemType t, int n) {
    std::vector<std::vector<int>> ks;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> K;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) K.push_back(i + 1);
      ks.push_back(K);
    }
    std::sort(ks.begin(), ks.end());
    for (const auto& K : ks) {
      bool consecutive = true;
      for (std::size_t i = 0; i < K.size(); ++i)
        if (K[K.size() - 1 - i] != n - static_cast<int>(i)) consecutive = false;
      if (consecutive) continue;
      out.push_back(build_counterexample(t, n, K));
    }
  };
  for (int n = 2; n <= 4; ++n) add_all(SystemType::C, n);
  for (int n = 3; n <= 4; ++n) add_all(SystemType::B, n);
  return out;
}

std::optional<Construction> find_construction(const std::string& name) {
  for (auto& c : catalog())
    if (c.name == name) return c;
  return std::nullopt;
}

Report verify_construction(const Construction& c) {
  Report r;
  r.command = "counterexample";
  r.descriptor = descriptor_json(c.descriptor);
  r.descriptor["K"] = c.ranks;
  r.descriptor["construction"] = c.name;
  Matrix cols = c.matrix.transpose();
  if (static_cast<int>(c.matrix.rows()) < c.ranks.back()) throw Error(ErrorCode::Dimension, "construction has too few rows");
  r.add("rows independent", rank(c.matrix) == c.matrix.rows(), Json("row rank " + std::to_string(rank(c.matrix))));
  for (int k : c.ranks) {
    Matrix sub = cols.leading_columns(static_cast<std::size_t>(k));
    bool iso = is_isotropic(sub, *c.descriptor.form);
    r.add("rank " + std::to_string(k) + " isotropic", iso, Json("nonzero pairing"));
    PluckerVector p = plucker_vector(sub);
    int s = p.leading_sign();
    Json w = nullptr;
    bool ok = s != 0;
    if (!ok) w = Json("all Plucker coordinates vanish");
    for (std::size_t i = 0; ok && i < p.coords.size(); ++i)
      if (p.coords[i].sign() * s < 0) {
        ok = false;
        w = Json{{"subset", p.subsets[i]}, {"value", render(p.coords[i])}, {"leading_sign", s}};
      }
    r.add("rank " + std::to_string(k) + " Plucker nonnegative", ok, w);
  }
  return r;
}

ExtensionProblem extension_problem(const Construction& c) {
  ExtensionProblem p;
  p.name = c.name;
  p.form = *c.descriptor.form;
  std::size_t r = c.family == "case_i" ? c.matrix.rows() : static_cast<std::size_t>(c.f);
  p.base = to_poly(c.matrix.block(0, 0, r, c.matrix.cols()));
  if (c.family == "case_iii")
    p.container = c.matrix.block(0, 0, static_cast<std::size_t>(c.g + 1), c.matrix.cols());
  else if (c.family == "case_ii")
    p.container = c.matrix;
  return p;
}

IntervalReduction interval_reduction(const Construction& c) {
  IntervalReduction red;
  int n = c.descriptor.n;
  bool isb = c.descriptor.type == SystemType::B;
  red.a = n - 2;
  red.b = isb ? n + 4 : n + 3;
  if (c.family != "case_ii" || red.a < 1 || red.b > c.descriptor.N) return red;
  Flag kf = c.flag();
  red.k_flag_dims = interval_intersection_dims(kf, red.a, red.b);
  std::vector<int> all;
  for (int k = 1; k <= static_cast<int>(c.matrix.rows()); ++k) all.push_back(k);
  Flag full = make_flag(c.matrix.transpose(), all);
  red.reduced_ranks = intersect_with_interval(full, red.a, red.b).ranks;
  int m = red.b - red.a + 1;
  Matrix restricted = c.descriptor.form->gram.block(static_cast<std::size_t>(red.a - 1), static_cast<std::size_t>(red.a - 1),
                                                    static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  BilinearForm small = isb ? form_typeB(3) : form_typeC(3);
  red.gram_matches = restricted == small.gram || restricted == small.gram.scaled(Quad(-1));
  Flag kr = intersect_with_interval(kf, red.a, red.b);
  if (kr.ranks.empty() || kr.ranks.front() != 1) return red;
  red.applicable = true;
  red.small.name = c.name + ".interval";
  red.small.form = small;
  red.small.base = to_poly(kr.subspace(1).transpose());
  return red;
}

Report reduce_by_interval_then_certify(const Construction& c, const CertOptions& opt) {
  Report r;
  r.command = "interval-reduction";
  r.descriptor = descriptor_json(c.descriptor);
  r.descriptor["construction"] = c.name;
  IntervalReduction red = interval_reduction(c);
  r.descriptor["interval"] = {red.a, red.b};
  if (!red.applicable) {
    r.add("interval applicable", false, Json("interval misses the flag or construction is not case (ii)"));
    return r;
  }
  r.add("interval applicable", true);
  std::vector<int> want = {1, 2, 3};
  r.add("intersected row flag has ranks [3]", red.reduced_ranks == want, Json(red.reduced_ranks));
  r.add("restricted form is the small-case form up to sign", red.gram_matches, Json("gram mismatch"));
  Matrix line = Matrix::from_rows({c.descriptor.type == SystemType::B ? small_b(3) : small_c(3)});
  Matrix got(1, line.cols());
  for (std::size_t j = 0; j < got.cols(); ++j) got(0, j) = red.small.base(0, j).constant();
  bool same_line = same_column_span(line.transpose(), got.transpose());
  r.add("intersected line is the small-case line", same_line, matrix_json(got));
  CertResult cert = no_extension_certificate(red.small, opt);
  Json w = cert.trace;
  r.add("small case certified", cert.verdict == Verdict::ProvenNoExtension, w);
  return r;
}

PipelineResult certify_construction(const Construction& c, const CertOptions& opt) {
  PipelineResult out;
  if (c.family == "case_ii") {
    out.route = "interval";
    Report r = reduce_by_interval_then_certify(c, opt);
    out.verdict = r.passed() ? Verdict::ProvenNoExtension : Verdict::Unknown;
    for (const auto& ch : r.checks) out.trace.push_back((ch.passed ? "ok: " : "failed: ") + ch.name);
    return out;
  }
  ExtensionProblem p = extension_problem(c);
  CertResult res = no_extension_certificate(p, opt);
  out.route = "direct";
  out.verdict = res.verdict;
  out.trace = res.trace;
  if (res.verdict == Verdict::Unknown && c.proof_hints) {
    CertResult h = certify_with_hint(p, *c.proof_hints, opt);
    out.route = "hint";
    out.used_hint = true;
    out.verdict = h.verdict;
    out.trace = h.trace;
  }
  return out;
}

std::vector<SmallCase> small_cases() {
  return {
      {"C.small.n2", build_counterexample(SystemType::C, 2, {1}), 1},
      {"C.small.n3", build_counterexample(SystemType::C, 3, {1}), 1},
      {"B.small_odd.n3", build_counterexample(SystemType::B, 3, {1}), 1},
      {"B.corner.n3", build_counterexample(SystemType::B, 3, {1, 2}), 1},
      {"B.small_even.n4", build_counterexample(SystemType::B, 4, {1}), 2},
  };
}

namespace {

bool nonneg_up_to_sign(const Matrix& cols) {
  PluckerVector p = plucker_vector(cols);
  int s = p.leading_sign();
  if (s == 0) return false;
  for (const auto& x : p.coords)
    if (x.sign() * s < 0) return false;
  return true;
}

// candidate vector: either in the isotropy pairing kernel or a sparse random vector
std::vector<Quad> candidate(const Matrix& base, const BilinearForm& form, Sampler& rng) {
  std::size_t N = form.dim();
  std::vector<Quad> v(N, Quad(0));
  if (rng.below(2) == 0) {
    Matrix ker = nullspace(base * form.gram);
    for (std::size_t t = 0; t < ker.cols(); ++t) {
      long c = static_cast<long>(rng.below(5)) - 2;
      if (c == 0) continue;
      for (std::size_t j = 0; j < N; ++j) v[j] += Quad(c) * ker(j, t);
    }
  } else {
    for (std::size_t j = 0; j < N; ++j) {
      std::size_t r = rng.below(6);
      v[j] = r == 0 ? Quad(1) : r == 1 ? Quad(-1) : r == 2 ? Quad::sqrt2() : Quad(0);
    }
  }
  return v;
}

bool admissible(const Matrix& base, const std::vector<Quad>& v, const BilinearForm& form, bool* rank_up) {
  Matrix ext = base.vconcat(Matrix::from_rows({v}));
  *rank_up = rank(ext) == base.rows() + 1;
  if (!*rank_up) return false;
  Matrix cols = ext.transpose();
  return is_isotropic(cols, form) && nonneg_up_to_sign(cols);
}

}  // namespace

FalsificationResult falsify(const SmallCase& sc, int candidates, std::uint64_t seed) {
  FalsificationResult res;
  const Construction& c = sc.construction;
  const BilinearForm& form = *c.descriptor.form;
  Sampler rng(seed);
  for (int i = 0; i < candidates; ++i) {
    ++res.candidates;
    Matrix base = c.matrix;
    bool all = true;
    bool up_all = true;
    for (int s = 0; s < sc.steps && all; ++s) {
      auto v = candidate(base, form, rng);
      bool up = false;
      all = admissible(base, v, form, &up);
      up_all = up_all && up;
      base = base.vconcat(Matrix::from_rows({v}));
    }
    if (up_all) ++res.rank_increasing;
    if (all) ++res.satisfying;
  }
  return res;
}

Matrix extend_B2(const Quad& b, const Quad& c, const Quad& d, const Quad& x) {
  Quad half = Quad::frac(1, 2);
  return Matrix::from_rows({{Quad(1), b, c, d, b * d - c * c * half},
                            {Quad(0), Quad(1), Quad(2) * x, Quad(2) * x * x, Quad(2) * b * x * x + d - Quad(2) * c * x}});
}

B2Result extend_B2_search(const Quad& b, const Quad& c, const Quad& d, int max_doublings) {
  GroupDescriptor g = make_descriptor(SystemType::B, 2);
  // the line (1, b, c, d, bd - c^2/2) itself has to be a positive point
  if (b.sign() <= 0 || c.sign() <= 0 || d.sign() <= 0 || (b * d - c * c / Quad(2)).sign() <= 0)
    throw Error(ErrorCode::Domain, "starting line is not strictly positive");
  B2Result res;
  Quad x(1);
  for (int k = 0; k <= max_doublings; ++k) {
    Matrix m = extend_B2(b, c, d, x);
    if (is_plucker_positive_flag(make_flag(m.transpose(), {1, 2}), g, true)) {
      res.ok = true;
      res.doublings = k;
      res.x = x;
      res.matrix = m;
      return res;
    }
    x *= Quad(2);
  }
  res.doublings = max_doublings;
  res.x = x;
  return res;
}

Matrix typeD_display_matrix(const std::vector<Quad>& t) {
  if (t.size() != 6) throw Error(ErrorCode::InvalidArgument, "type D point needs six parameters");
  const Quad &t1 = t[0], &t2 = t[1], &t3 = t[2], &t4 = t[3], &t5 = t[4], &t6 = t[5];
  Matrix x(8, 4);
  for (std::size_t i = 0; i < 4; ++i) x(i, i) = Quad(1);
  Quad p26 = t2 * t3 * t4 * t5 * t6;
  Quad p36 = t3 * t4 * t5 * t6;
  Quad p46 = t4 * t5 * t6;
  Quad q356 = t3 * t5 * t6;
  Quad s = (t2 + t5) * t6;
  Quad u = t1 + t6;
  Rows lower = {{p46, -s, u, 0}, {p36, -q356, 0, u}, {p26, 0, -q356, s}, {0, p26, -p36, p46}};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) x(4 + i, j) = lower[i][j];
  return x;
}

namespace {

int perm_sign_of_split(const std::vector<int>& I, const std::vector<int>& J) {
  int inv = 0;
  for (int i : I)
    for (int j : J)
      if (i > j) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

PfaffianPoint typeD_pfaffian_point(const std::vector<Quad>& t) {
  if (t.size() != 6) throw Error(ErrorCode::InvalidArgument, "type D point needs six parameters");
  const int n = 4;
  GroupDescriptor d = make_descriptor(SystemType::D, n);
  PfaffianPoint p;
  p.t = t;
  p.G = y_word(d, {4, 2, 3, 1, 2, 4}, t);
  Matrix top = p.G.block(0, 0, n, n);
  p.X = p.G.leading_columns(n) * inverse(top);
  Matrix B = p.X.block(n, 0, n, n);
  Matrix E0(n, n);
  for (int i = 1; i <= n; ++i) E0(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(n - i)) = sign_pow(n + 1 - i);
  p.E0B = E0.transpose() * B;
  p.subsets = {{}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {1, 2, 3, 4}};
  for (const auto& I : p.subsets) {
    std::vector<int> J;
    for (int j = 1; j <= n; ++j)
      if (std::find(I.begin(), I.end(), j) == I.end()) J.push_back(j);
    std::vector<std::size_t> idx;
    for (int i : I) idx.push_back(static_cast<std::size_t>(i - 1));
    Matrix sub = p.E0B.select_rows(idx).select_cols(idx);
    p.pfaffians.push_back(Quad(perm_sign_of_split(I, J)) * pfaffian(sub));
    std::vector<std::size_t> rows;
    for (int j : J) rows.push_back(static_cast<std::size_t>(j - 1));
    for (int i : I) rows.push_back(static_cast<std::size_t>(2 * n + 1 - i - 1));
    std::sort(rows.begin(), rows.end());
    p.minors.push_back(det(p.X.select_rows(rows)));
  }
  p.lusztig_nonneg = std::all_of(t.begin(), t.end(), [](const Quad& x) { return x.sign() >= 0; });
  return p;
}

std::vector<int> typeD_canonical_signs() {
  static const std::vector<int> signs = [] {
    PfaffianPoint p = typeD_pfaffian_point(std::vector<Quad>(6, Quad(1)));
    std::vector<int> s;
    for (const auto& x : p.pfaffians) s.push_back(x.sign());
    return s;
  }();
  return signs;
}

std::optional<Quad> pfaffian_minor_scalar(const PfaffianPoint& p) {
  std::optional<Quad> lambda;
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    Quad sq = p.pfaffians[i] * p.pfaffians[i];
    if (p.minors[i].is_zero()) {
      if (!sq.is_zero()) return std::nullopt;
      continue;
    }
    Quad l = sq / p.minors[i];
    if (lambda && *lambda != l) return std::nullopt;
    lambda = l;
  }
  return lambda;
}

Json pfaffian_point_json(const PfaffianPoint& p) {
  Json j;
  Json ts = Json::array();
  for (const auto& x : p.t) ts.push_back(render(x));
  j["t"] = ts;
  j["X"] = matrix_json(p.X);
  j["E0B"] = matrix_json(p.E0B);
  Json pf = Json::array();
  auto signs = typeD_canonical_signs();
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    Json e;
    e["I"] = p.subsets[i];
    e["pfaffian"] = render(p.pfaffians[i]);
    e["canonical_sign"] = signs[i];
    e["canonical_coordinate"] = render(Quad(signs[i]) * p.pfaffians[i]);
    e["minor"] = render(p.minors[i]);
    pf.push_back(std::move(e));
  }
  j["pfaffians"] = pf;
  j["lusztig_nonneg"] = p.lusztig_nonneg;
  return j;
}

}  // namespace flagpos
