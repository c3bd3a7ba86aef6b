// One line per acceptance criterion. Exit status is nonzero if any line fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flagpos/counterexamples.hpp"
#include "flagpos/pinning.hpp"
#include "flagpos/positivity.hpp"
#include "flagpos/weyl.hpp"

using namespace flagpos;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.note = why;
  o.ok = false;
}

std::vector<int> range1(int n) {
  std::vector<int> v;
  for (int k = 1; k <= n; ++k) v.push_back(k);
  return v;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : "-") + std::to_string(x);
  return s;
}

// every maximal minor of the column span has the same strict sign
bool strictly_positive(const Matrix& cols) {
  std::vector<Quad> minors = minors_by_mask(cols);
  int sign = 0;
  for (const auto& s : k_subsets(static_cast<int>(cols.rows()), static_cast<int>(cols.cols()))) {
    int c = minors[subset_mask(s)].sign();
    if (c == 0 || (sign != 0 && c != sign)) return false;
    sign = c;
  }
  return true;
}

bool isotropic(const Matrix& cols, const BilinearForm& form) {
  return (cols.transpose() * form.gram * cols).is_zero();
}

// ---- 1
Outcome pinning_validity() {
  Outcome o;
  std::vector<GroupDescriptor> groups;
  for (int n = 2; n <= 4; ++n) {
    groups.push_back(make_descriptor(SystemType::C, n));
    groups.push_back(make_descriptor(SystemType::B, n));
  }
  groups.push_back(make_descriptor(SystemType::D, 4));
  Sampler rng(101);
  int count = 0;
  for (const auto& g : groups) {
    const Matrix& E = g.form->gram;
    auto member = [&](const Matrix& m) { return det(m) == Quad(1) && m.transpose() * E * m == E; };
    for (int i = 1; i <= g.n; ++i) {
      for (GenKind k : {GenKind::X, GenKind::Y, GenKind::Chi})
        for (int t = 0; t < 20; ++t) {
          ++count;
          if (!member(generator(g, k, i, rng.nonzero())))
            fail(o, g.name() + " " + gen_name(k) + "_" + std::to_string(i));
        }
      ++count;
      if (!member(generator(g, GenKind::Sdot, i))) fail(o, g.name() + " sdot_" + std::to_string(i));
    }
  }
  if (o.ok) o.note = std::to_string(count) + " generators";
  return o;
}

// ---- 2
Outcome compatibility() {
  Outcome o;
  std::set<std::string> want = {"1", "1/2", "-3", "7/5"};
  std::set<std::string> have;
  for (const auto& p : certification_points()) have.insert(render(p));
  for (const auto& w : want)
    if (!have.count(w)) fail(o, "missing parameter " + w);
  int count = 0;
  for (SystemType t : {SystemType::C, SystemType::B})
    for (int n = 2; n <= 4; ++n) {
      GroupDescriptor g = make_descriptor(t, n);
      for (int i = 1; i <= n; ++i)
        for (const auto& c : compatibility_checks(g, i)) {
          ++count;
          if (!c.passed) fail(o, g.name() + " " + c.name);
        }
    }
  // the square-root-of-two identities written out for B(2)
  GroupDescriptor b2 = make_descriptor(SystemType::B, 2), a4 = make_descriptor(SystemType::A, 4);
  const Quad r2 = Quad::sqrt2();
  for (const Quad& m : {Quad(1), Quad(Rational(1, 2)), Quad(-3), Quad(Rational(7, 5))}) {
    count += 2;
    if (generator(b2, GenKind::X, 2, m) !=
        generator(a4, GenKind::X, 2, m / r2) * generator(a4, GenKind::X, 3, r2 * m) * generator(a4, GenKind::X, 2, m / r2))
      fail(o, "B(2) x_2 at " + render(m));
    if (generator(b2, GenKind::Y, 2, m) !=
        generator(a4, GenKind::Y, 2, m / r2) * generator(a4, GenKind::Y, 3, r2 * m) * generator(a4, GenKind::Y, 2, m / r2))
      fail(o, "B(2) y_2 at " + render(m));
  }
  if (o.ok) o.note = std::to_string(count) + " identities";
  return o;
}

// ---- 3
int brute_force_word_count(const RootSystem& sys, const WeylElement& w, int len) {
  int found = 0;
  std::vector<int> l(static_cast<std::size_t>(len), 1);
  while (true) {
    if (word_to_element(Word{sys, l}) == w) ++found;
    int p = len - 1;
    while (p >= 0 && l[static_cast<std::size_t>(p)] == sys.n) l[static_cast<std::size_t>(p--)] = 1;
    if (p < 0) break;
    ++l[static_cast<std::size_t>(p)];
  }
  return found;
}

Outcome longest_word_folding() {
  Outcome o;
  std::string note;
  for (SystemType t : {SystemType::C, SystemType::B})
    for (int n = 2; n <= 3; ++n) {
      RootSystem sys{t, n};
      std::size_t want = t == SystemType::C ? static_cast<std::size_t>(n * (2 * n - 1))
                                            : static_cast<std::size_t>(n * (2 * n + 1));
      WeylElement w0 = longest_element(sys);
      WeylElement a0 = longest_element(folded_system(sys));
      auto words = reduced_words(w0, sys);
      for (const auto& w : words) {
        Word f = fold_word(w);
        if (f.size() != want || !is_reduced(f) || word_to_element(f) != a0) fail(o, sys.name() + " " + word_string(w));
      }
      if (n == 2) {
        if (words.size() != 2) fail(o, sys.name() + " word count " + std::to_string(words.size()));
        if (brute_force_word_count(sys, w0, n * n) != 2) fail(o, sys.name() + " brute force count");
      }
      note += sys.name() + ":" + std::to_string(words.size()) + " words->" + std::to_string(want) + " ";
    }
  if (o.ok) o.note = note;
  return o;
}

// ---- 4
Outcome forward_direction() {
  Outcome o;
  int count = 0;
  for (SystemType t : {SystemType::C, SystemType::B})
    for (int n = 2; n <= 3; ++n) {
      GroupDescriptor g = make_descriptor(t, n);
      std::set<std::vector<int>> Ks = {{n}, {n - 1, n}, range1(n)};
      for (const auto& K : Ks)
        for (std::uint64_t s = 0; s < 100; ++s) {
          ++count;
          PositiveSample p = lusztig_positive_sample(g, K, sample_seed(42, s));
          if (p.flag.ranks != K) fail(o, g.name() + " ranks");
          for (int k : K) {
            Matrix sub = p.flag.subspace(k);
            if (!strictly_positive(sub) || !isotropic(sub, *g.form))
              fail(o, g.name() + " K=" + join(K) + " sample " + std::to_string(s) + " rank " + std::to_string(k));
          }
        }
    }
  if (o.ok) o.note = std::to_string(count) + " samples";
  return o;
}

// ---- 5
Outcome counterexample_suite(double* seconds) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  auto cat = catalog();
  std::vector<std::string> hinted;
  std::map<std::string, bool> no_hint_needed = {
      {"C.case_i.n2.K1", false}, {"C.case_i.n3.K1", false}, {"B.case_i.n3.K1", false}, {"B.case_i.n3.K1-2", false}};
  for (const auto& c : cat) {
    if (!verify_construction(c).passed()) fail(o, c.name + " verify");
    PipelineResult r = certify_construction(c);
    if (r.verdict != Verdict::ProvenNoExtension) fail(o, c.name + " not certified");
    if (r.used_hint) hinted.push_back(c.name);
    auto it = no_hint_needed.find(c.name);
    if (it != no_hint_needed.end()) it->second = !r.used_hint && r.verdict == Verdict::ProvenNoExtension;
  }
  for (const auto& [name, ok] : no_hint_needed)
    if (!ok) fail(o, name + " needed a hint or is missing");
  *seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (*seconds >= 60) fail(o, "over 60 s");
  if (o.ok) {
    o.note = std::to_string(cat.size()) + " constructions, hinted:";
    for (const auto& h : hinted) o.note += " " + h;
    if (hinted.empty()) o.note += " none";
  }
  return o;
}

// ---- 6
Outcome falsification() {
  Outcome o;
  auto cases = small_cases();
  if (cases.empty()) fail(o, "no small cases");
  std::uint64_t seed = 600;
  for (const auto& sc : cases) {
    FalsificationResult f = falsify(sc, 10000, seed++);
    if (f.candidates != 10000) fail(o, sc.name + " ran " + std::to_string(f.candidates));
    if (f.satisfying != 0) fail(o, sc.name + " has " + std::to_string(f.satisfying) + " satisfying");
  }
  if (o.ok) o.note = std::to_string(cases.size()) + " problems x 10000 candidates";
  return o;
}

// ---- 7
Outcome b2_doubling() {
  Outcome o;
  std::mt19937_64 rng(700);
  BilinearForm form = form_typeB(2);
  int done = 0, max_doublings = 0;
  while (done < 20) {
    auto pos = [&] { return Quad(Rational(static_cast<long>(rng() % 20) + 1, static_cast<long>(rng() % 5) + 1)); };
    Quad b = pos(), c = pos(), d = pos();
    // the starting line itself must be positive
    if ((b * d - c * c / Quad(2)).sign() <= 0) continue;
    ++done;
    B2Result r = extend_B2_search(b, c, d);
    max_doublings = std::max(max_doublings, r.doublings);
    std::string tag = "(" + render(b) + "," + render(c) + "," + render(d) + ")";
    if (!r.ok || r.doublings > 64) {
      fail(o, tag + " not found");
      continue;
    }
    Matrix cols = r.matrix.transpose();
    for (std::size_t k : {1u, 2u}) {
      Matrix sub = cols.leading_columns(k);
      if (!strictly_positive(sub) || !isotropic(sub, form)) fail(o, tag + " rank " + std::to_string(k));
    }
  }
  if (o.ok) o.note = "20 starts, max doublings " + std::to_string(max_doublings);
  return o;
}

// ---- 8
std::vector<Quad> canonical(const PfaffianPoint& p) {
  std::vector<Quad> out;
  auto signs = typeD_canonical_signs();
  for (std::size_t i = 0; i < p.pfaffians.size(); ++i) out.push_back(Quad(signs[i]) * p.pfaffians[i]);
  return out;
}

std::vector<Quad> random_t(std::mt19937_64& rng) {
  std::vector<Quad> v;
  for (int i = 0; i < 6; ++i) {
    long a = static_cast<long>(rng() % 21) - 10;
    v.push_back(Quad(Rational(a == 0 ? 1 : a, static_cast<long>(rng() % 6) + 1)));
  }
  return v;
}

Outcome typeD_display() {
  Outcome o;
  std::mt19937_64 rng(801);
  for (int k = 0; k < 20; ++k) {
    auto t = random_t(rng);
    if (typeD_pfaffian_point(t).X != typeD_display_matrix(t)) fail(o, "point " + std::to_string(k));
  }
  if (o.ok) o.note = "20 points";
  return o;
}

Outcome typeD_pfaffian_squares() {
  Outcome o;
  std::mt19937_64 rng(802);
  for (int k = 0; k < 20; ++k) {
    PfaffianPoint p = typeD_pfaffian_point(random_t(rng));
    if (p.subsets.size() != 8) fail(o, "expected 8 even subsets");
    // find the scalar from the first nonzero minor and test every subset against it
    std::optional<Quad> lambda;
    for (std::size_t i = 0; i < p.minors.size() && !lambda; ++i)
      if (!p.minors[i].is_zero()) lambda = p.pfaffians[i] * p.pfaffians[i] / p.minors[i];
    if (!lambda || lambda->is_zero()) {
      fail(o, "no scalar at point " + std::to_string(k));
      continue;
    }
    for (std::size_t i = 0; i < p.minors.size(); ++i)
      if (p.pfaffians[i] * p.pfaffians[i] != *lambda * p.minors[i]) fail(o, "subset " + join(p.subsets[i]));
    if (!pfaffian_minor_scalar(p) || *pfaffian_minor_scalar(p) != *lambda) fail(o, "library scalar disagrees");
  }
  if (o.ok) o.note = "20 points x 8 subsets";
  return o;
}

Outcome typeD_sign_pattern() {
  Outcome o;
  Quad tenth(Rational(-1, 10));
  PfaffianPoint p = typeD_pfaffian_point({1, 1, 1, 1, tenth, tenth});
  auto c = canonical(p);
  std::string values;
  int positive = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    values += " " + (p.subsets[i].empty() ? std::string("{}") : join(p.subsets[i])) + "=" + render(c[i]);
    if (c[i].sign() > 0) ++positive;
  }
  if (positive != 8) fail(o, std::to_string(positive) + "/8 canonical coordinates positive:" + values);
  if (p.lusztig_nonneg) fail(o, "parameters reported nonnegative");
  if (o.ok) o.note = "all 8 positive, lusztig_nonneg=false";
  return o;
}

Outcome typeD_all_ones() {
  Outcome o;
  PfaffianPoint p = typeD_pfaffian_point(std::vector<Quad>(6, Quad(1)));
  if (p.subsets.front() != std::vector<int>{} || p.pfaffians.front() != Quad(1)) fail(o, "Pf_{} = " + render(p.pfaffians.front()));
  if (p.subsets.back() != std::vector<int>{1, 2, 3, 4} || p.pfaffians.back() != Quad(1))
    fail(o, "Pf_1234 = " + render(p.pfaffians.back()));
  if (o.ok) o.note = "Pf_{} = Pf_1234 = 1";
  return o;
}

// ---- 9
std::vector<bool> mask_of(std::size_t len, std::size_t bits) {
  std::vector<bool> m(len);
  for (std::size_t k = 0; k < len; ++k) m[k] = bits >> k & 1;
  return m;
}

int kept(const std::vector<bool>& m) {
  int c = 0;
  for (bool b : m) c += b;
  return c;
}

// every distinguished mask folds to a distinguished mask; each u <= v has one reduced distinguished mask
void check_word(const RootSystem& sys, const Word& w, const std::vector<WeylElement>& all, Outcome& o, int& words) {
  ++words;
  WeylElement v = word_to_element(w);
  std::map<WeylElement, int> count;
  for (std::size_t m = 0; m < (std::size_t(1) << w.size()); ++m) {
    Subexpression s = make_subexpression(w, mask_of(w.size(), m));
    if (!check_distinguished(s)) continue;
    if (!check_distinguished(fold_subexpression(s))) fail(o, sys.name() + " fold of " + word_string(w));
    WeylElement e = subexpression_element(s);
    if (kept(s.mask) == length(e)) ++count[e];
  }
  for (const auto& u : all)
    if (count[u] != (bruhat_leq(u, v) ? 1 : 0)) fail(o, sys.name() + " uniqueness at " + one_line(u) + " in " + word_string(w));
}

Outcome signed_combinatorics() {
  Outcome o;
  int words = 0;
  for (SystemType t : {SystemType::C, SystemType::B}) {
    RootSystem two{t, 2};
    auto all2 = all_elements(two);
    if (all2.size() != 8) fail(o, "Signed(2) has " + std::to_string(all2.size()) + " elements");
    for (const auto& v : all2)
      for (const auto& w : reduced_words(v, two)) check_word(two, w, all2, o, words);

    RootSystem three{t, 3};
    auto all3 = all_elements(three);
    std::mt19937_64 rng(900 + static_cast<int>(t));
    std::vector<WeylElement> spot = {longest_element(three)};
    for (int k = 0; k < 10; ++k) spot.push_back(all3[rng() % all3.size()]);
    for (const auto& v : spot) {
      auto rw = reduced_words(v, three);
      for (int k = 0; k < 2 && !rw.empty(); ++k) check_word(three, rw[rng() % rw.size()], all3, o, words);
    }
    for (int k = 1; k <= 3; ++k)
      if (!same_first_entries(three, k).equal) fail(o, three.name() + " same first entries k=" + std::to_string(k));
  }
  if (o.ok) o.note = std::to_string(words) + " words";
  return o;
}

// ---- 10
Outcome duality() {
  Outcome o;
  int count = 0;
  for (SystemType t : {SystemType::C, SystemType::B})
    for (int n = 2; n <= 3; ++n) {
      GroupDescriptor g = make_descriptor(t, n);
      Sampler rng(1000 + static_cast<std::uint64_t>(n) + (t == SystemType::B ? 10 : 0));
      for (int k = 0; k < 50; ++k) {
        ++count;
        Matrix M = random_group_element(g, rng);
        DualityResult d = extended_duality(M, g);
        if (!d.perp_ok || !d.plucker_ok || (d.sign != 1 && d.sign != -1)) fail(o, g.name() + " element " + std::to_string(k));
        for (int i = 1; i < g.N; ++i)
          if (!same_column_span(perp(M.leading_columns(static_cast<std::size_t>(i)), *g.form),
                                M.leading_columns(static_cast<std::size_t>(g.N - i))))
            fail(o, g.name() + " perp at " + std::to_string(i));
      }
    }
  if (o.ok) o.note = std::to_string(count) + " elements";
  return o;
}

// ---- 11
Outcome deodhar_consistency() {
  Outcome o;
  int subs = 0;
  for (SystemType t : {SystemType::C, SystemType::B}) {
    GroupDescriptor g = make_descriptor(t, 2);
    Word w0 = appendix_w0_word(g.system());
    for (const auto& s : all_distinguished(w0)) {
      ++subs;
      FoldCellResult r = fold_cell_containment(g, s, 3, 1100 + static_cast<std::uint64_t>(subs));
      if (!r.passed) fail(o, g.name() + " " + r.detail);
    }
    Subexpression none = make_subexpression(w0, std::vector<bool>(w0.size(), false));
    Sampler rng(1150 + static_cast<std::uint64_t>(t == SystemType::B));
    for (int k = 0; k < 100; ++k) {
      std::vector<Quad> p, q;
      for (std::size_t i = 0; i < w0.size(); ++i) p.push_back(rng.positive());
      for (std::size_t i = 0; i < w0.size(); ++i) q.push_back(rng.positive());
      if (p == q) continue;
      if (same_flag(marsh_rietsch_point(none, {}, p, g).flag, marsh_rietsch_point(none, {}, q, g).flag))
        fail(o, g.name() + " pair " + std::to_string(k) + " collides");
    }
  }
  if (o.ok) o.note = std::to_string(subs) + " subexpressions, 200 pairs";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto run = [&](const std::string& id, const std::string& title, const std::function<Outcome()>& f,
                 double limit = 0) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit > 0 && secs >= limit && o.ok) {
      o.ok = false;
      o.note = "over " + std::to_string(static_cast<int>(limit)) + " s";
    }
    if (!o.ok) ++failed;
    std::printf("%s %-4s %s (%.2f s): %s\n", o.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs, o.note.c_str());
    std::fflush(stdout);
  };

  run("1", "pinning validity", pinning_validity, 5);
  run("2", "compatibility identities", compatibility);
  run("3", "longest word folding", longest_word_folding);
  run("4", "forward direction", forward_direction);
  double cat_secs = 0;
  run("5", "counterexample suite", [&] { return counterexample_suite(&cat_secs); });
  run("6", "falsification cross-check", falsification);
  run("7", "B(2) extension by doubling", b2_doubling);
  run("8a", "type D displayed matrix", typeD_display);
  run("8b", "type D Pfaffian squares", typeD_pfaffian_squares);
  run("8c", "type D positive coordinates with a negative parameter", typeD_sign_pattern);
  run("8d", "type D all-ones Pfaffians", typeD_all_ones);
  run("9", "signed permutation combinatorics", signed_combinatorics);
  run("10", "flag duality", duality);
  run("11", "cell parametrization consistency", deodhar_consistency);

  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
