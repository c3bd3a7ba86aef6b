// flagpos command line: thin wrapper over the C interface.
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "flagpos.h"

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kBadFile = 3 };

struct Common {
  std::string format = "json";
  std::string output;
};

struct Config {
  std::string system;
  int n = 0;
  std::vector<int> K;
  std::uint64_t seed = 42;
  int samples = 100;
  std::string word;
  std::string matrix_path;
  int k = 0;
  std::string t = "1,1,1,1,-1/10,-1/10";
  bool exhaustive = false;
};

int status_exit(flagpos_status s) {
  switch (s) {
    case FLAGPOS_OK: return kOk;
    case FLAGPOS_INVALID_ARGUMENT:
    case FLAGPOS_DIMENSION:
    case FLAGPOS_DOMAIN: return kUsage;
    case FLAGPOS_PARSE: return kBadFile;
    default: return kCheckFailed;
  }
}

int fail(flagpos_status s) {
  std::cerr << "flagpos: " << flagpos_status_name(s) << ": " << flagpos_last_error() << "\n";
  return status_exit(s);
}

char system_letter(const std::string& s) { return s.size() == 1 ? s[0] : '?'; }

bool validate_K(const Config& c) {
  for (int k : c.K)
    if (k < 1 || k > c.n) {
      std::cerr << "flagpos: K entry " << k << " is outside 1.." << c.n << "\n";
      return false;
    }
  return true;
}

int emit(flagpos_report* r, const Common& common) {
  char* text = nullptr;
  flagpos_status s = flagpos_report_render(r, common.format.c_str(), &text);
  if (s != FLAGPOS_OK) {
    flagpos_report_free(r);
    return fail(s);
  }
  int code = flagpos_report_passed(r) ? kOk : kCheckFailed;
  if (common.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(common.output, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "flagpos: cannot write " << common.output << "\n";
      code = kBadFile;
    }
  }
  flagpos_string_free(text);
  flagpos_report_free(r);
  return code;
}

int run_plucker(const Config& c, const Common& common) {
  std::ifstream in(c.matrix_path, std::ios::binary);
  if (!in) {
    std::cerr << "flagpos: cannot read " << c.matrix_path << "\n";
    return kBadFile;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  flagpos_matrix* m = nullptr;
  flagpos_status s = flagpos_matrix_from_json(buf.str().c_str(), &m);
  if (s != FLAGPOS_OK) {
    std::cerr << "flagpos: malformed matrix file: " << flagpos_last_error() << "\n";
    return kBadFile;
  }
  flagpos_report* r = nullptr;
  s = flagpos_run_plucker(m, c.k, &r);
  flagpos_matrix_free(m);
  if (s != FLAGPOS_OK) return fail(s);
  return emit(r, common);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of total positivity for partial flag varieties of types A, B, C and D"};
  app.require_subcommand(1);
  Common common;
  Config cfg;
  if (const char* env = std::getenv("FLAGPOS_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "flagpos: FLAGPOS_SEED must be a non-negative integer\n";
      return kUsage;
    }
  }

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--output", common.output, "write the report here instead of stdout");
  };
  auto add_system = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--system", cfg.system, "root system")->required()->check(CLI::IsMember(allowed));
    sub->add_option("--n", cfg.n, "rank")->required()->check(CLI::Range(1, 12));
  };

  auto* pin = app.add_subcommand("verify-pinning", "generator membership, fold identities and factorizations");
  add_system(pin, {"A", "B", "C", "D"});
  add_common(pin);

  auto* fold = app.add_subcommand("fold", "fold a type B/C word into type A");
  add_system(fold, {"B", "C"});
  fold->add_option("--word", cfg.word, "comma-separated letters")->required();
  add_common(fold);

  auto* thm = app.add_subcommand("theorem", "sampled forward direction: Lusztig positive implies Plucker positive");
  add_system(thm, {"A", "B", "C"});
  thm->add_option("--K", cfg.K, "ranks")->required()->delimiter(',');
  thm->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
  thm->add_option("--seed", cfg.seed, "seed (default 42 or FLAGPOS_SEED)");
  add_common(thm);

  auto* cex = app.add_subcommand("counterexample", "build, verify and certify a counterexample flag");
  add_system(cex, {"B", "C"});
  cex->add_option("--K", cfg.K, "ranks")->required()->delimiter(',');
  add_common(cex);

  auto* cat = app.add_subcommand("catalog", "verify and certify every catalog construction");
  add_common(cat);

  auto* plk = app.add_subcommand("plucker", "Plucker vector of the span of the leading k columns");
  plk->add_option("--matrix", cfg.matrix_path, "matrix JSON file")->required();
  plk->add_option("--k", cfg.k, "subspace dimension")->required()->check(CLI::PositiveNumber);
  add_common(plk);

  auto* pf = app.add_subcommand("pfaffian-demo", "type D(4) Pfaffian point");
  pf->add_option("--t", cfg.t, "six comma-separated scalars");
  add_common(pf);

  auto* weyl = app.add_subcommand("weyl", "Weyl group suites");
  weyl->require_subcommand(1);
  auto* dist = weyl->add_subcommand("distinguished", "distinguished subexpression properties");
  add_system(dist, {"B", "C"});
  dist->add_flag("--exhaustive", cfg.exhaustive, "every element and every reduced word");
  dist->add_option("--seed", cfg.seed, "seed for the spot set");
  add_common(dist);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  char sys = system_letter(cfg.system);
  flagpos_report* r = nullptr;
  flagpos_status s = FLAGPOS_OK;
  if (*pin) {
    s = flagpos_run_verify_pinning(sys, cfg.n, &r);
  } else if (*fold) {
    s = flagpos_run_fold(sys, cfg.n, cfg.word.c_str(), &r);
  } else if (*thm) {
    if (!validate_K(cfg)) return kUsage;
    s = flagpos_run_theorem(sys, cfg.n, cfg.K.data(), cfg.K.size(), cfg.samples, cfg.seed, &r);
  } else if (*cex) {
    if (!validate_K(cfg)) return kUsage;
    s = flagpos_run_counterexample(sys, cfg.n, cfg.K.data(), cfg.K.size(), &r);
  } else if (*cat) {
    s = flagpos_run_catalog(&r);
  } else if (*plk) {
    return run_plucker(cfg, common);
  } else if (*pf) {
    s = flagpos_run_pfaffian_demo(cfg.t.c_str(), &r);
  } else if (*dist) {
    s = flagpos_run_weyl_distinguished(sys, cfg.n, cfg.exhaustive ? 1 : 0, cfg.seed, &r);
  }
  if (s != FLAGPOS_OK) return fail(s);
  return emit(r, common);
}
