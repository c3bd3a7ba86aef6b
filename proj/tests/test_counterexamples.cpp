#include <random>

#include "doctest.h"
#include "flagpos/counterexamples.hpp"
#include "flagpos/positivity.hpp"

using namespace flagpos;

namespace {

const Quad r2 = Quad::sqrt2();

std::vector<Quad> row(std::initializer_list<Quad> v) { return std::vector<Quad>(v); }

// nonnegativity by a full scan of maximal minors at every rank of the row flag
bool nonneg_oracle(const Construction& c) {
  for (int k : c.ranks) {
    Matrix sub = c.matrix.block(0, 0, static_cast<std::size_t>(k), c.matrix.cols()).transpose();
    std::vector<Quad> minors = minors_by_mask(sub);
    int sign = 0;
    for (const auto& s : k_subsets(static_cast<int>(c.matrix.cols()), k)) {
      int x = minors[subset_mask(s)].sign();
      if (x == 0) continue;
      if (sign == 0) sign = x;
      if (x != sign) return false;
    }
    if (sign == 0) return false;
    if (!(sub.transpose() * c.descriptor.form->gram * sub).is_zero()) return false;
  }
  return true;
}

ExtensionProblem coordinate_line(SystemType t, int n) {
  GroupDescriptor g = make_descriptor(t, n);
  ExtensionProblem p;
  p.name = "coordinate line";
  p.form = *g.form;
  Matrix e(1, static_cast<std::size_t>(g.N));
  e(0, 0) = Quad(1);
  p.base = to_poly(e);
  return p;
}

}  // namespace

TEST_CASE("construction matrices") {
  Construction c = build_counterexample(SystemType::C, 2, {1});
  CHECK(c.matrix == Matrix::from_rows({row({1, 0, 0, 1})}));
  CHECK(c.family == "case_i");
  Construction b = build_counterexample(SystemType::B, 3, {1});
  CHECK(b.matrix.row(0) == row({1, 0, 0, r2, 0, 0, 1}));
  Construction corner = build_counterexample(SystemType::B, 3, {1, 2});
  CHECK(corner.matrix == Matrix::from_rows({row({1, 2, 2, 2, 2, 1, 0}), row({0, 1, 2, 2, 2, 2, 1})}));
  Construction c4 = build_counterexample(SystemType::C, 4, {1, 2, 4});
  CHECK(c4.family == "case_ii");
  CHECK(c4.g == 3);
  CHECK(c4.f == 2);
  CHECK(c4.ell == 0);
  CHECK(c4.name == "C.case_ii.n4.K1-2-4");
  CHECK(nonneg_oracle(c4));
  CHECK(gap_indices(4, {1, 3, 4}) == std::pair<int, int>{2, 1});
  CHECK_THROWS_AS(build_counterexample(SystemType::C, 3, {2, 3}), Error);
}

TEST_CASE("catalog entries verify against an independent minor scan") {
  auto cat = catalog();
  CHECK(cat.size() == 31);
  for (const auto& c : cat) {
    CAPTURE(c.name);
    CHECK(nonneg_oracle(c));
    CHECK(verify_construction(c).passed());
    CHECK(c.expected.nonneg_member);
    CHECK_FALSE(c.expected.extendable);
    CHECK(find_construction(c.name).has_value());
  }
  CHECK_FALSE(find_construction("C.case_i.n9.K1").has_value());
}

TEST_CASE("a flipped sign is caught with a witness") {
  Construction c = build_counterexample(SystemType::B, 3, {1, 2});
  c.matrix(0, 2) = Quad(-2);
  Report r = verify_construction(c);
  CHECK_FALSE(r.passed());
  bool witnessed = false;
  for (const auto& ch : r.checks)
    if (!ch.passed && ch.name.find("nonnegative") != std::string::npos) witnessed = !ch.witness.is_null();
  CHECK(witnessed);
}

TEST_CASE("certifier on the small cases") {
  CertResult c2 = no_extension_certificate(extension_problem(build_counterexample(SystemType::C, 2, {1})));
  CHECK(c2.verdict == Verdict::ProvenNoExtension);
  CHECK_FALSE(c2.trace.empty());
  Construction corner = build_counterexample(SystemType::B, 3, {1, 2});
  CHECK(no_extension_certificate(extension_problem(corner)).verdict == Verdict::ProvenNoExtension);
  CHECK(no_extension_certificate(extension_problem(build_counterexample(SystemType::B, 3, {1}))).verdict ==
        Verdict::ProvenNoExtension);
  CHECK(no_extension_certificate(extension_problem(build_counterexample(SystemType::C, 3, {1}))).verdict ==
        Verdict::ProvenNoExtension);
}

TEST_CASE("certifier does not claim extendable flags") {
  for (SystemType t : {SystemType::C, SystemType::B})
    for (int n : {2, 3}) {
      ExtensionProblem p = coordinate_line(t, n);
      CHECK(no_extension_certificate(p).verdict == Verdict::Unknown);
      CHECK(certify_with_hint(p, ProofHint{1, "split"}).verdict == Verdict::Unknown);
      CHECK(certify_with_hint(p, ProofHint{2, "split"}).verdict == Verdict::Unknown);
    }
}

TEST_CASE("Fourier-Motzkin feasibility") {
  bool capped = false;
  // x >= 1, y >= 1, -x - y >= -3: feasible
  std::vector<LinearIneq> ok = {{{Quad(1), Quad(0)}, Quad(1)}, {{Quad(0), Quad(1)}, Quad(1)}, {{Quad(-1), Quad(-1)}, Quad(-3)}};
  auto w = fm_feasible(ok, 2, 1000, &capped);
  REQUIRE(w.has_value());
  for (const auto& q : ok) CHECK((*w)[0] * q.a[0] + (*w)[1] * q.a[1] >= q.b);
  // x >= 2, -x >= -1: infeasible
  std::vector<LinearIneq> bad = {{{Quad(1)}, Quad(2)}, {{Quad(-1)}, Quad(-1)}};
  CHECK_FALSE(fm_feasible(bad, 1, 1000, &capped).has_value());
  CHECK_FALSE(capped);
}

TEST_CASE("interval reduction") {
  for (SystemType t : {SystemType::C, SystemType::B}) {
    Construction c = build_counterexample(t, 4, {1, 2, 4});
    IntervalReduction red = interval_reduction(c);
    CHECK(red.applicable);
    CHECK(red.gram_matches);
    CHECK(red.reduced_ranks == std::vector<int>{1, 2, 3});
    CHECK(reduce_by_interval_then_certify(c).passed());
  }
  Construction c = build_counterexample(SystemType::C, 4, {1, 2, 4});
  Flag f = intersect_with_interval(make_flag(c.matrix.transpose(), {1, 2, 3, 4}), 2, 7);
  CHECK(f.ambient == 6);
  CHECK(f.ranks == std::vector<int>{1, 2, 3});
  Construction first = build_counterexample(SystemType::C, 4, {1});
  CHECK_FALSE(interval_reduction(first).applicable);
  CHECK_FALSE(reduce_by_interval_then_certify(first).passed());
}

TEST_CASE("pipeline routes and hints") {
  for (const auto& c : catalog()) {
    PipelineResult p = certify_construction(c);
    CAPTURE(c.name);
    CHECK(p.verdict == Verdict::ProvenNoExtension);
    if (c.family == "case_ii") CHECK(p.route == "interval");
    CHECK(p.used_hint == c.proof_hints.has_value());
  }
  for (const char* name : {"C.case_i.n2.K1", "C.case_i.n3.K1", "B.case_i.n3.K1", "B.case_i.n3.K1-2"}) {
    auto c = find_construction(name);
    REQUIRE(c.has_value());
    CHECK_FALSE(c->proof_hints.has_value());
    CHECK_FALSE(certify_construction(*c).used_hint);
  }
}

TEST_CASE("falsification finds no extension") {
  auto cases = small_cases();
  CHECK(cases.size() == 5);
  for (const auto& sc : cases) {
    FalsificationResult f = falsify(sc, 1000, 5);
    CAPTURE(sc.name);
    CHECK(f.candidates == 1000);
    CHECK(f.satisfying == 0);
  }
}

TEST_CASE("B2 extension by doubling") {
  std::mt19937_64 rng(71);
  BilinearForm form = form_typeB(2);
  for (int t = 0; t < 20; ++t) {
    auto pos = [&] { return Quad(Rational(static_cast<long>(rng() % 20) + 1, static_cast<long>(rng() % 5) + 1)); };
    Quad b = pos(), c = pos(), d = pos();
    if ((b * d - c * c / Quad(2)).sign() <= 0) {
      CHECK_THROWS_AS(extend_B2_search(b, c, d), Error);
      --t;
      continue;
    }
    B2Result r = extend_B2_search(b, c, d);
    REQUIRE(r.ok);
    CHECK(r.doublings <= 64);
    Matrix m = r.matrix;
    CHECK(m.row(0) == row({1, b, c, d, b * d - c * c / Quad(2)}));
    CHECK((m * form.gram * m.transpose()).is_zero());
    for (std::size_t k : {1u, 2u}) {
      for (const auto& q : plucker_vector(m.block(0, 0, k, 5).transpose()).coords) CHECK(q.sign() > 0);
    }
  }
}

TEST_CASE("type D Pfaffian point at all ones") {
  std::vector<Quad> ones(6, Quad(1));
  PfaffianPoint p = typeD_pfaffian_point(ones);
  CHECK(is_antisymmetric(p.E0B));
  REQUIRE(p.pfaffians.size() == 8);
  CHECK(p.pfaffians.front() == Quad(1));
  CHECK(p.pfaffians.back() == Quad(1));
  std::vector<Quad> absval;
  for (const auto& x : p.pfaffians) absval.push_back(x.abs());
  CHECK(absval == std::vector<Quad>{1, 1, 1, 1, 1, 2, 2, 1});
  CHECK(p.minors == std::vector<Quad>{1, 1, 1, 1, 1, 4, 4, 1});
  auto lambda = pfaffian_minor_scalar(p);
  REQUIRE(lambda.has_value());
  CHECK(*lambda == Quad(1));
  CHECK(p.X == typeD_display_matrix(ones));
  CHECK(p.lusztig_nonneg);
  // the canonical signs make the all-ones point positive
  auto signs = typeD_canonical_signs();
  for (std::size_t i = 0; i < 8; ++i) CHECK((Quad(signs[i]) * p.pfaffians[i]).sign() > 0);
  // Pf of the full E0B is the product of the parameters
  CHECK(pfaffian(p.E0B) == Quad(1));
}

TEST_CASE("type D display and Pfaffian relation on random points") {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 20; ++t) {
    std::vector<Quad> v;
    for (int i = 0; i < 6; ++i) {
      long a = static_cast<long>(rng() % 21) - 10;
      v.push_back(Quad(Rational(a == 0 ? 1 : a, static_cast<long>(rng() % 6) + 1)));
    }
    PfaffianPoint p = typeD_pfaffian_point(v);
    CHECK(p.X == typeD_display_matrix(v));
    CHECK(is_antisymmetric(p.E0B));
    CHECK(pfaffian_minor_scalar(p).has_value());
    Quad prod(1);
    for (const auto& x : v) prod *= x;
    CHECK(p.pfaffians.back().abs() == prod.abs());
  }
  std::vector<Quad> z = {1, 1, 0, 1, 1, 1};
  CHECK(typeD_pfaffian_point(z).pfaffians.back() == Quad(0));
}

TEST_CASE("type D sign pattern with negative parameters") {
  auto canonical = [](const PfaffianPoint& p) {
    std::vector<Quad> out;
    auto signs = typeD_canonical_signs();
    for (std::size_t i = 0; i < 8; ++i) out.push_back(Quad(signs[i]) * p.pfaffians[i]);
    return out;
  };
  Quad tenth(Rational(-1, 10));
  PfaffianPoint p = typeD_pfaffian_point({1, 1, 1, 1, tenth, tenth});
  CHECK_FALSE(p.lusztig_nonneg);
  std::vector<Quad> c = canonical(p);
  // I = {2,4} comes out negative here: (t2 + t5) t6 < 0
  CHECK(c[5] == Quad(Rational(-9, 100)));
  int positive = 0;
  for (const auto& x : c) positive += x.sign() > 0;
  CHECK(positive == 7);
  // with |t5| > t2 and |t6| < t1 all eight are positive
  PfaffianPoint q = typeD_pfaffian_point({1, 1, 1, 1, Quad(-2), tenth});
  CHECK_FALSE(q.lusztig_nonneg);
  for (const auto& x : canonical(q)) CHECK(x.sign() > 0);
}
