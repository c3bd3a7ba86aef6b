#include "flagpos/suites.hpp"

#include <algorithm>
#include <map>

namespace flagpos {

SystemType parse_system(const std::string& s) {
  if (s == "A") return SystemType::A;
  if (s == "B") return SystemType::B;
  if (s == "C") return SystemType::C;
  if (s == "D") return SystemType::D;
  throw Error(ErrorCode::InvalidArgument, "unknown system '" + s + "' (expected A, B, C or D)");
}

Matrix matrix_from_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw Error(ErrorCode::Parse, "matrix JSON needs rows, cols and entries");
  if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned() || !j["entries"].is_array())
    throw Error(ErrorCode::Parse, "matrix JSON has fields of the wrong type");
  std::size_t r = j["rows"].get<std::size_t>();
  std::size_t c = j["cols"].get<std::size_t>();
  const Json& e = j["entries"];
  if (e.size() != r) throw Error(ErrorCode::Parse, "entries has the wrong number of rows");
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!e[i].is_array() || e[i].size() != c) throw Error(ErrorCode::Parse, "entries row " + std::to_string(i) + " has the wrong length");
    for (std::size_t k = 0; k < c; ++k) {
      const Json& x = e[i][k];
      if (x.is_string())
        m(i, k) = parse_scalar(x.get<std::string>());
      else if (x.is_number_integer())
        m(i, k) = Quad(x.get<long>());
      else
        throw Error(ErrorCode::Parse, "matrix entries must be scalar literals");
    }
  }
  return m;
}

Report verify_pinning_report(const GroupDescriptor& g) {
  Report r;
  r.command = "verify-pinning";
  r.descriptor = descriptor_json(g);
  const auto& pts = certification_points();
  for (int i = 1; i <= g.n; ++i) {
    std::string si = std::to_string(i);
    for (GenKind k : {GenKind::X, GenKind::Y, GenKind::Chi}) {
      for (const Quad& m : pts)
        r.add("member " + gen_name(k) + "_" + si + "(" + render(m) + ")", group_membership(generator(g, k, i, m), g));
    }
    r.add("member sdot_" + si, group_membership(generator(g, GenKind::Sdot, i), g));
    Quad a = Quad::frac(1, 2), b = Quad(-3);
    for (GenKind k : {GenKind::X, GenKind::Y})
      r.add(gen_name(k) + "_" + si + " one-parameter law",
            generator(g, k, i, a) * generator(g, k, i, b) == generator(g, k, i, a + b));
    r.add("chi_" + si + " multiplicative", generator(g, GenKind::Chi, i, a) * generator(g, GenKind::Chi, i, b) ==
                                               generator(g, GenKind::Chi, i, a * b));
    if (!(g.type == SystemType::B && i == g.n))
      r.add("sdot_" + si + " is phi of the rotation", generator(g, GenKind::Sdot, i) == phi(g, i, 0, -1, 1, 0));
    if (g.type == SystemType::B || g.type == SystemType::C) {
      for (const auto& c : compatibility_checks(g, i)) r.add("fold identity " + c.name, c.passed);
      for (const auto& c : ddagger2_checks(g, i)) r.add("factorization " + c.name, c.passed);
    }
  }
  return r;
}

Report fold_report(const Word& w) {
  Report r;
  r.command = "fold";
  GroupDescriptor g = make_descriptor(w.sys.type, w.sys.n);
  r.descriptor = descriptor_json(g);
  Word psi = fold_word(w);
  RootSystem a = folded_system(w.sys);
  bool in_red = is_reduced(w);
  bool out_red = is_reduced(psi);
  WeylElement e = word_to_element(w);
  bool is_w0 = e == longest_element(w.sys);
  bool psi_w0 = word_to_element(psi) == longest_element(a);
  r.add("fold realizes the embedded element", word_to_element(psi) == embed(e, w.sys));
  r.add("reducedness preserved", !in_red || out_red, Json("input reduced but image is not"));
  if (in_red && is_w0) r.add("longest word folds to the type A longest word", psi_w0);
  r.result = {{"word", word_string(w)},           {"psi", word_string(psi)},
              {"input_reduced", in_red},          {"psi_reduced", out_red},
              {"psi_length", psi.size()},         {"input_is_w0", is_w0},
              {"psi_is_w0", psi_w0}};
  return r;
}

Report counterexample_report(const Construction& c) {
  Report r = verify_construction(c);
  PipelineResult p = certify_construction(c);
  bool want = !c.expected.extendable;
  r.add("certifier verdict matches expectation", (p.verdict == Verdict::ProvenNoExtension) == want, Json(p.trace));
  r.result = {{"name", c.name},
              {"family", c.family},
              {"g", c.g},
              {"f", c.f},
              {"matrix", matrix_json(c.matrix)},
              {"verdict", verdict_name(p.verdict)},
              {"route", p.route},
              {"used_hint", p.used_hint},
              {"trace", p.trace}};
  return r;
}

Report catalog_report() {
  Report r;
  r.command = "catalog";
  Json list = Json::array();
  for (const auto& c : catalog()) {
    Report v = verify_construction(c);
    PipelineResult p = certify_construction(c);
    r.add(c.name + " verified", v.passed(), Json("isotropy or nonnegativity failed"));
    r.add(c.name + " certified", p.verdict == Verdict::ProvenNoExtension, Json(p.trace));
    list.push_back({{"name", c.name}, {"family", c.family}, {"verdict", verdict_name(p.verdict)}, {"route", p.route},
                    {"used_hint", p.used_hint}});
  }
  r.result = {{"constructions", list}};
  return r;
}

Report pfaffian_demo_report(const std::vector<Quad>& t) {
  Report r;
  r.command = "pfaffian-demo";
  r.descriptor = descriptor_json(make_descriptor(SystemType::D, 4));
  PfaffianPoint p = typeD_pfaffian_point(t);
  r.add("generator product equals the closed-form matrix", p.X == typeD_display_matrix(t));
  r.add("E0B antisymmetric", is_antisymmetric(p.E0B));
  auto lambda = pfaffian_minor_scalar(p);
  r.add("squared Pfaffians match minors up to one scalar", lambda.has_value());
  auto signs = typeD_canonical_signs();
  bool all_pos = true;
  for (std::size_t i = 0; i < p.pfaffians.size(); ++i)
    if ((Quad(signs[i]) * p.pfaffians[i]).sign() <= 0) all_pos = false;
  r.result = pfaffian_point_json(p);
  r.result["scalar"] = lambda ? Json(render(*lambda)) : Json(nullptr);
  r.result["all_canonical_positive"] = all_pos;
  return r;
}

Report plucker_report(const Matrix& m, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > m.cols() || static_cast<std::size_t>(k) > m.rows())
    throw Error(ErrorCode::InvalidArgument, "k must be between 1 and the number of columns");
  Report r;
  r.command = "plucker";
  r.descriptor = {{"rows", m.rows()}, {"cols", m.cols()}, {"k", k}};
  Matrix sub = m.leading_columns(static_cast<std::size_t>(k));
  r.add("leading columns have full rank", rank(sub) == static_cast<std::size_t>(k));
  PluckerVector p = plucker_vector(sub);
  Json coords = Json::array();
  for (std::size_t i = 0; i < p.coords.size(); ++i) coords.push_back({{"subset", p.subsets[i]}, {"value", render(p.coords[i])}});
  int s = p.leading_sign();
  bool nonneg = s != 0, pos = s != 0;
  for (const auto& c : p.coords) {
    if (c.sign() * s < 0) nonneg = false;
    if (c.sign() * s <= 0) pos = false;
  }
  r.result = {{"coords", coords}, {"nonnegative", nonneg}, {"positive", pos}};
  return r;
}

namespace {

std::string mask_string(const std::vector<bool>& m) {
  std::string s;
  for (bool b : m) s += b ? '1' : '0';
  return s;
}

}  // namespace

Report weyl_distinguished_report(const RootSystem& sys, bool exhaustive, std::uint64_t seed) {
  if (sys.type != SystemType::B && sys.type != SystemType::C)
    throw Error(ErrorCode::InvalidArgument, "the distinguished suite covers B and C");
  Report r;
  r.command = "weyl distinguished";
  r.descriptor = descriptor_json(make_descriptor(sys.type, sys.n));
  r.descriptor["exhaustive"] = exhaustive;
  r.seed = seed;
  std::vector<WeylElement> elems = all_elements(sys);
  std::vector<WeylElement> targets;
  std::size_t words_per_element = exhaustive ? 100000 : 4;
  if (exhaustive) {
    targets = elems;
  } else {
    targets.push_back(longest_element(sys));
    Sampler rng(seed);
    for (int i = 0; i < 5; ++i) targets.push_back(elems[rng.below(elems.size())]);
  }
  std::size_t cases = 0;
  for (const auto& v : targets) {
    auto words = reduced_words(v, sys);
    if (words.size() > words_per_element) words.resize(words_per_element);
    for (const auto& w : words) {
      std::string tag = "v=" + one_line(v) + " word=" + word_string(w);
      std::size_t l = w.size();
      std::map<WeylElement, std::vector<std::vector<bool>>> reduced_dist;
      std::string fold_bad;
      for (std::size_t m = 0; m < (std::size_t(1) << l); ++m) {
        std::vector<bool> mask(l);
        for (std::size_t k = 0; k < l; ++k) mask[k] = m >> k & 1;
        Subexpression s = make_subexpression(w, mask);
        if (!check_distinguished(s)) continue;
        if (fold_bad.empty() && !check_distinguished(fold_subexpression(s))) fold_bad = mask_string(mask);
        WeylElement u = subexpression_element(s);
        if (static_cast<int>(std::count(mask.begin(), mask.end(), true)) == length(u)) reduced_dist[u].push_back(mask);
      }
      r.add(tag + " folds distinguished to distinguished", fold_bad.empty(), Json{{"mask", fold_bad}});
      std::string uniq_bad;
      for (const auto& u : elems) {
        bool below = bruhat_leq(u, v);
        std::size_t cnt = reduced_dist.count(u) ? reduced_dist[u].size() : 0;
        if (cnt != (below ? 1u : 0u)) {
          uniq_bad = one_line(u) + " has " + std::to_string(cnt);
          break;
        }
        if (below) {
          Subexpression g = distinguished_subexpression(u, w, Direction::Rightmost);
          if (g.mask != reduced_dist[u][0]) {
            uniq_bad = one_line(u) + " greedy mask differs";
            break;
          }
        }
      }
      r.add(tag + " unique reduced distinguished subexpression", uniq_bad.empty(), Json(uniq_bad));
      ++cases;
    }
  }
  Json entries = Json::array();
  for (int k = 1; k <= sys.n; ++k) {
    SameFirstEntries sf = same_first_entries(sys, k);
    r.add("same first entries k=" + std::to_string(k), sf.equal,
          Json{{"phi", sf.phi_entries}, {"a", sf.a_entries}});
    KeepSmall ks = keep_small_transpositions(sys, k);
    r.add("small letters kept as a subsequence k=" + std::to_string(k), ks.subsequence,
          Json{{"phi_word", word_string(ks.phi_word)}, {"small", word_string(ks.small)}});
    entries.push_back({{"k", k}, {"phi_word", word_string(ks.phi_word)}, {"folded", word_string(ks.folded)},
                       {"small", word_string(ks.small)}, {"kept_positionally", ks.positional}});
  }
  r.samples = static_cast<int>(cases);
  r.result = {{"word_cases", cases}, {"keep_small", entries}};
  return r;
}

}  // namespace flagpos
