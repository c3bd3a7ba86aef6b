#include <cstring>
#include <new>
#include <string>

#include "flagpos.h"
#include "flagpos/suites.hpp"

using namespace flagpos;

struct flagpos_scalar {
  Quad v;
};
struct flagpos_matrix {
  Matrix m;
};
struct flagpos_report {
  Report r;
};

namespace {

thread_local std::string g_last_error;

flagpos_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return FLAGPOS_INVALID_ARGUMENT;
    case ErrorCode::Parse: return FLAGPOS_PARSE;
    case ErrorCode::DivisionByZero: return FLAGPOS_DIVISION_BY_ZERO;
    case ErrorCode::Dimension: return FLAGPOS_DIMENSION;
    case ErrorCode::Domain: return FLAGPOS_DOMAIN;
    case ErrorCode::CapExceeded: return FLAGPOS_CAP_EXCEEDED;
  }
  return FLAGPOS_INTERNAL;
}

template <class F>
flagpos_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return FLAGPOS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return FLAGPOS_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FLAGPOS_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> ranks(const int* K, size_t k_len) {
  if (k_len > 0) require(K, "K");
  return std::vector<int>(K, K + k_len);
}

GroupDescriptor descriptor(char system, int n) { return make_descriptor(parse_system(std::string(1, system)), n); }

void emit(flagpos_report** out, Report r) {
  require(out, "out");
  *out = new flagpos_report{std::move(r)};
}

}  // namespace

extern "C" {

const char* flagpos_last_error(void) { return g_last_error.c_str(); }

const char* flagpos_status_name(flagpos_status s) {
  switch (s) {
    case FLAGPOS_OK: return "ok";
    case FLAGPOS_INVALID_ARGUMENT: return "invalid argument";
    case FLAGPOS_PARSE: return "parse error";
    case FLAGPOS_DIVISION_BY_ZERO: return "division by zero";
    case FLAGPOS_DIMENSION: return "dimension mismatch";
    case FLAGPOS_DOMAIN: return "domain error";
    case FLAGPOS_CAP_EXCEEDED: return "cap exceeded";
    case FLAGPOS_INTERNAL: return "internal error";
  }
  return "unknown";
}

void flagpos_string_free(char* s) { delete[] s; }

flagpos_status flagpos_scalar_parse(const char* text, flagpos_scalar** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new flagpos_scalar{parse_scalar(text)};
  });
}

flagpos_status flagpos_scalar_arith(flagpos_arith_op op, const flagpos_scalar* x, const flagpos_scalar* y,
                                    flagpos_scalar** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    if (op < FLAGPOS_ADD || op > FLAGPOS_DIV) throw Error(ErrorCode::InvalidArgument, "unknown arithmetic op");
    *out = new flagpos_scalar{quad_arith(static_cast<ArithOp>(op), x->v, y->v)};
  });
}

flagpos_status flagpos_scalar_sign(const flagpos_scalar* x, int* out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = quad_sign(x->v);
  });
}

flagpos_status flagpos_scalar_render(const flagpos_scalar* x, char** out) {
  return guarded([&] {
    require(x, "x");
    require(out, "out");
    *out = dup_string(render(x->v));
  });
}

void flagpos_scalar_free(flagpos_scalar* x) { delete x; }

flagpos_status flagpos_matrix_from_json(const char* json, flagpos_matrix** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = new flagpos_matrix{matrix_from_json(json)};
  });
}

flagpos_status flagpos_matrix_shape(const flagpos_matrix* m, size_t* rows, size_t* cols) {
  return guarded([&] {
    require(m, "matrix");
    require(rows, "rows");
    require(cols, "cols");
    *rows = m->m.rows();
    *cols = m->m.cols();
  });
}

flagpos_status flagpos_matrix_get(const flagpos_matrix* m, size_t i, size_t j, flagpos_scalar** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    if (i >= m->m.rows() || j >= m->m.cols()) throw Error(ErrorCode::Dimension, "index out of range");
    *out = new flagpos_scalar{m->m(i, j)};
  });
}

flagpos_status flagpos_pfaffian(const flagpos_matrix* m, flagpos_scalar** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = new flagpos_scalar{pfaffian(m->m)};
  });
}

void flagpos_matrix_free(flagpos_matrix* m) { delete m; }

flagpos_status flagpos_run_verify_pinning(char system, int n, flagpos_report** out) {
  return guarded([&] { emit(out, verify_pinning_report(descriptor(system, n))); });
}

flagpos_status flagpos_run_fold(char system, int n, const char* word, flagpos_report** out) {
  return guarded([&] {
    require(word, "word");
    RootSystem sys{parse_system(std::string(1, system)), n};
    if (sys.type != SystemType::B && sys.type != SystemType::C)
      throw Error(ErrorCode::InvalidArgument, "fold needs system B or C");
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
    Word w{sys, parse_int_list(word)};
    for (int l : w.letters)
      if (l < 1 || l > n) throw Error(ErrorCode::InvalidArgument, "letter " + std::to_string(l) + " out of range");
    emit(out, fold_report(w));
  });
}

flagpos_status flagpos_run_theorem(char system, int n, const int* K, size_t k_len, int samples, uint64_t seed,
                                   flagpos_report** out) {
  return guarded([&] { emit(out, theorem_forward_report(descriptor(system, n), ranks(K, k_len), samples, seed)); });
}

flagpos_status flagpos_run_counterexample(char system, int n, const int* K, size_t k_len, flagpos_report** out) {
  return guarded([&] {
    emit(out, counterexample_report(build_counterexample(parse_system(std::string(1, system)), n, ranks(K, k_len))));
  });
}

flagpos_status flagpos_run_catalog(flagpos_report** out) {
  return guarded([&] { emit(out, catalog_report()); });
}

flagpos_status flagpos_run_plucker(const flagpos_matrix* m, int k, flagpos_report** out) {
  return guarded([&] {
    require(m, "matrix");
    emit(out, plucker_report(m->m, k));
  });
}

flagpos_status flagpos_run_pfaffian_demo(const char* t_list, flagpos_report** out) {
  return guarded([&] {
    require(t_list, "t");
    std::vector<Quad> t;
    std::string s(t_list);
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      t.push_back(parse_scalar(s.substr(start, comma - start)));
      start = comma + 1;
    }
    if (t.size() != 6) throw Error(ErrorCode::InvalidArgument, "--t needs six comma-separated scalars");
    emit(out, pfaffian_demo_report(t));
  });
}

flagpos_status flagpos_run_weyl_distinguished(char system, int n, int exhaustive, uint64_t seed, flagpos_report** out) {
  return guarded([&] {
    if (n < 1 || n > 4) throw Error(ErrorCode::InvalidArgument, "n must be between 1 and 4");
    RootSystem sys{parse_system(std::string(1, system)), n};
    emit(out, weyl_distinguished_report(sys, exhaustive != 0, seed));
  });
}

flagpos_status flagpos_report_render(const flagpos_report* r, const char* format, char** out) {
  return guarded([&] {
    require(r, "report");
    require(format, "format");
    require(out, "out");
    *out = dup_string(r->r.render(format));
  });
}

int flagpos_report_passed(const flagpos_report* r) { return r && r->r.passed() ? 1 : 0; }
size_t flagpos_report_check_count(const flagpos_report* r) { return r ? r->r.checks.size() : 0; }
size_t flagpos_report_failure_count(const flagpos_report* r) { return r ? r->r.failures() : 0; }
void flagpos_report_free(flagpos_report* r) { delete r; }

}  // extern "C"
