#include "flagpos/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "flagpos/error.hpp"

namespace flagpos {

std::string RootSystem::name() const {
  const char* t = type == SystemType::A ? "A" : type == SystemType::B ? "B" : type == SystemType::C ? "C" : "D";
  return std::string(t) + "(" + std::to_string(n) + ")";
}

std::vector<int> Subexpression::positions(Cls c) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < cls.size(); ++k)
    if (cls[k] == c) out.push_back(static_cast<int>(k) + 1);
  return out;
}

WeylKind kind_of(const RootSystem& sys) {
  switch (sys.type) {
    case SystemType::A: return WeylKind::TypeA;
    case SystemType::B:
    case SystemType::C: return WeylKind::Signed;
    default: throw Error(ErrorCode::InvalidArgument, "no Weyl group model for type D");
  }
}

namespace {

int degree_of(const RootSystem& sys) { return kind_of(sys) == WeylKind::TypeA ? sys.n + 1 : 2 * sys.n; }

RootSystem system_of(const WeylElement& w) {
  if (w.kind == WeylKind::TypeA) return RootSystem{SystemType::A, w.degree() - 1};
  return RootSystem{SystemType::C, w.n};
}

void check_letter(const RootSystem& sys, int i) {
  if (i < 1 || i > sys.n) throw Error(ErrorCode::InvalidArgument, "letter " + std::to_string(i) + " invalid for " + sys.name());
}

void swap_positions(std::vector<int>& p, int a, int b) { std::swap(p[a - 1], p[b - 1]); }

void swap_values(std::vector<int>& p, int a, int b) {
  for (int& x : p) {
    if (x == a)
      x = b;
    else if (x == b)
      x = a;
  }
}

template <class F>
void apply_simple(const RootSystem& sys, int i, F&& swap) {
  check_letter(sys, i);
  if (kind_of(sys) == WeylKind::TypeA) {
    swap(i, i + 1);
    return;
  }
  int n = sys.n;
  if (i < n) {
    swap(i, i + 1);
    swap(2 * n - i, 2 * n + 1 - i);
  } else {
    swap(n, n + 1);
  }
}

}  // namespace

WeylElement identity_element(const RootSystem& sys) {
  WeylElement w;
  w.kind = kind_of(sys);
  int d = degree_of(sys);
  w.n = w.kind == WeylKind::TypeA ? d : sys.n;
  w.perm.resize(d);
  for (int j = 0; j < d; ++j) w.perm[j] = j + 1;
  return w;
}

WeylElement make_element(const RootSystem& sys, const std::vector<int>& perm) {
  WeylElement w = identity_element(sys);
  if (static_cast<int>(perm.size()) != w.degree()) throw Error(ErrorCode::InvalidArgument, "permutation has wrong degree");
  std::vector<bool> seen(perm.size() + 1, false);
  for (int x : perm) {
    if (x < 1 || x > w.degree() || seen[x]) throw Error(ErrorCode::InvalidArgument, "not a permutation");
    seen[x] = true;
  }
  if (w.kind == WeylKind::Signed) {
    int N = w.degree();
    for (int j = 1; j <= N; ++j)
      if (perm[N - j] != N + 1 - perm[j - 1]) throw Error(ErrorCode::InvalidArgument, "signed permutation must commute with bar");
  }
  w.perm = perm;
  return w;
}

WeylElement simple_reflection(const RootSystem& sys, int i) {
  WeylElement w = identity_element(sys);
  apply_simple(sys, i, [&](int a, int b) { swap_positions(w.perm, a, b); });
  return w;
}

WeylElement compose(const WeylElement& u, const WeylElement& v) {
  if (u.kind != v.kind || u.perm.size() != v.perm.size()) throw Error(ErrorCode::InvalidArgument, "Weyl kind mismatch");
  WeylElement w = v;
  for (auto& x : w.perm) x = u(x);
  return w;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement r = w;
  for (int j = 1; j <= w.degree(); ++j) r.perm[w(j) - 1] = j;
  return r;
}

WeylElement times_simple(const WeylElement& w, const RootSystem& sys, int i) {
  WeylElement r = w;
  apply_simple(sys, i, [&](int a, int b) { swap_positions(r.perm, a, b); });
  return r;
}

WeylElement simple_times(const RootSystem& sys, int i, const WeylElement& w) {
  WeylElement r = w;
  apply_simple(sys, i, [&](int a, int b) { swap_values(r.perm, a, b); });
  return r;
}

WeylElement longest_element(const RootSystem& sys) {
  WeylElement w = identity_element(sys);
  std::reverse(w.perm.begin(), w.perm.end());
  return w;
}

WeylElement word_to_element(const Word& w) {
  WeylElement e = identity_element(w.sys);
  for (int i : w.letters) e = times_simple(e, w.sys, i);
  return e;
}

int length(const WeylElement& w) {
  int d = w.degree();
  int count = 0;
  if (w.kind == WeylKind::TypeA) {
    for (int i = 1; i <= d; ++i)
      for (int j = i + 1; j <= d; ++j)
        if (w(j) < w(i)) ++count;
    return count;
  }
  int n = w.n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++count;
  // pairs (i, kbar) with i <= k
  for (int i = 1; i <= n; ++i)
    for (int k = i; k <= n; ++k)
      if (w(2 * n + 1 - k) < w(i)) ++count;
  return count;
}

bool is_reduced(const Word& w) {
  return static_cast<int>(w.letters.size()) == length(word_to_element(w));
}

std::vector<int> right_descents(const WeylElement& w, const RootSystem& sys) {
  std::vector<int> out;
  int l = length(w);
  for (int i = 1; i <= sys.n; ++i)
    if (length(times_simple(w, sys, i)) < l) out.push_back(i);
  return out;
}

Word reduced_word(const WeylElement& w, const RootSystem& sys) {
  Word out{sys, {}};
  WeylElement x = w;
  while (length(x) > 0) {
    int i = right_descents(x, sys).front();
    out.letters.push_back(i);
    x = times_simple(x, sys, i);
  }
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

std::vector<Word> reduced_words(const WeylElement& w, const RootSystem& sys, std::size_t cap) {
  std::map<std::vector<int>, std::vector<std::vector<int>>> memo;
  std::function<const std::vector<std::vector<int>>&(const WeylElement&)> rec =
      [&](const WeylElement& x) -> const std::vector<std::vector<int>>& {
    auto it = memo.find(x.perm);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> out;
    if (length(x) == 0) {
      out.push_back({});
    } else {
      for (int i : right_descents(x, sys)) {
        const auto& sub = rec(times_simple(x, sys, i));
        for (const auto& s : sub) {
          if (out.size() >= cap) throw Error(ErrorCode::CapExceeded, "reduced word enumeration exceeded cap");
          auto t = s;
          t.push_back(i);
          out.push_back(std::move(t));
        }
      }
    }
    return memo.emplace(x.perm, std::move(out)).first->second;
  };
  std::vector<Word> words;
  for (const auto& l : rec(w)) words.push_back(Word{sys, l});
  std::sort(words.begin(), words.end(), [](const Word& a, const Word& b) { return a.letters < b.letters; });
  return words;
}

std::vector<WeylElement> all_elements(const RootSystem& sys) {
  std::set<WeylElement> seen;
  std::deque<WeylElement> queue{identity_element(sys)};
  seen.insert(queue.front());
  while (!queue.empty()) {
    WeylElement x = queue.front();
    queue.pop_front();
    for (int i = 1; i <= sys.n; ++i) {
      WeylElement y = times_simple(x, sys, i);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return std::vector<WeylElement>(seen.begin(), seen.end());
}

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  if (u.kind != v.kind || u.perm.size() != v.perm.size()) throw Error(ErrorCode::InvalidArgument, "Bruhat comparison across kinds");
  RootSystem sys = system_of(v);
  Word rv = reduced_word(v, sys);
  WeylElement x = u;
  for (auto it = rv.letters.rbegin(); it != rv.letters.rend(); ++it) {
    WeylElement y = times_simple(x, sys, *it);
    if (length(y) < length(x)) x = y;
  }
  return length(x) == 0;
}

bool bruhat_leq_exhaustive(const WeylElement& u, const WeylElement& v, const RootSystem& sys) {
  Word rv = reduced_word(v, sys);
  std::size_t l = rv.letters.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << l); ++mask) {
    WeylElement x = identity_element(sys);
    for (std::size_t k = 0; k < l; ++k)
      if (mask >> k & 1) x = times_simple(x, sys, rv.letters[k]);
    if (x == u) return true;
  }
  return false;
}

RootSystem folded_system(const RootSystem& sys) {
  if (sys.type == SystemType::C) return RootSystem{SystemType::A, 2 * sys.n - 1};
  if (sys.type == SystemType::B) return RootSystem{SystemType::A, 2 * sys.n};
  throw Error(ErrorCode::InvalidArgument, "folding is defined for B and C only");
}

std::vector<int> psi(const RootSystem& sys, int i) {
  check_letter(sys, i);
  int n = sys.n;
  if (sys.type == SystemType::C) return i < n ? std::vector<int>{i, 2 * n - i} : std::vector<int>{n};
  if (sys.type == SystemType::B) return i < n ? std::vector<int>{i, 2 * n + 1 - i} : std::vector<int>{n, n + 1, n};
  throw Error(ErrorCode::InvalidArgument, "folding is defined for B and C only");
}

Word fold_word(const Word& w) {
  Word out{folded_system(w.sys), {}};
  for (int i : w.letters)
    for (int j : psi(w.sys, i)) out.letters.push_back(j);
  return out;
}

Subexpression fold_subexpression(const Subexpression& s) {
  Word base = fold_word(s.base);
  std::vector<bool> mask;
  for (std::size_t k = 0; k < s.base.letters.size(); ++k)
    for (std::size_t t = 0; t < psi(s.base.sys, s.base.letters[k]).size(); ++t) mask.push_back(s.mask[k]);
  return make_subexpression(base, mask);
}

Word fold_leq_n(const Word& w) {
  Word out{folded_system(w.sys), {}};
  for (int i : w.letters) out.letters.push_back(psi(w.sys, i).front());
  return out;
}

WeylElement embed(const WeylElement& w, const RootSystem& sys) {
  if (w.kind != WeylKind::Signed) throw Error(ErrorCode::InvalidArgument, "embed expects a signed permutation");
  RootSystem a = folded_system(sys);
  WeylElement out = identity_element(a);
  int n = w.n;
  if (sys.type == SystemType::C) {
    out.perm = w.perm;
    return out;
  }
  auto lift = [n](int x) { return x <= n ? x : x + 1; };
  for (int j = 1; j <= 2 * n; ++j) out.perm[lift(j) - 1] = lift(w(j));
  return out;
}

std::vector<Cls> classify(const Word& base, const std::vector<bool>& mask) {
  if (mask.size() != base.letters.size()) throw Error(ErrorCode::Dimension, "mask length differs from word length");
  std::vector<Cls> out;
  WeylElement u = identity_element(base.sys);
  int lu = 0;
  for (std::size_t k = 0; k < mask.size(); ++k) {
    if (!mask[k]) {
      out.push_back(Cls::Circ);
      continue;
    }
    u = times_simple(u, base.sys, base.letters[k]);
    int l = length(u);
    out.push_back(l > lu ? Cls::Plus : Cls::Minus);
    lu = l;
  }
  return out;
}

Subexpression make_subexpression(const Word& base, const std::vector<bool>& mask) {
  return Subexpression{base, mask, classify(base, mask)};
}

WeylElement subexpression_element(const Subexpression& s) {
  WeylElement u = identity_element(s.base.sys);
  for (std::size_t k = 0; k < s.mask.size(); ++k)
    if (s.mask[k]) u = times_simple(u, s.base.sys, s.base.letters[k]);
  return u;
}

Subexpression distinguished_subexpression(const WeylElement& u, const Word& v, Direction dir) {
  if (!is_reduced(v)) throw Error(ErrorCode::Domain, "base word is not reduced");
  if (!bruhat_leq(u, word_to_element(v))) throw Error(ErrorCode::Domain, "u is not below v in Bruhat order");
  std::size_t l = v.letters.size();
  std::vector<bool> mask(l, false);
  WeylElement x = u;
  if (dir == Direction::Rightmost) {
    for (std::size_t k = l; k-- > 0;) {
      WeylElement y = times_simple(x, v.sys, v.letters[k]);
      if (length(y) < length(x)) {
        mask[k] = true;
        x = y;
      }
    }
  } else {
    for (std::size_t k = 0; k < l; ++k) {
      WeylElement y = simple_times(v.sys, v.letters[k], x);
      if (length(y) < length(x)) {
        mask[k] = true;
        x = y;
      }
    }
  }
  if (length(x) != 0) throw Error(ErrorCode::Domain, "greedy subexpression did not terminate at the identity");
  return make_subexpression(v, mask);
}

bool check_distinguished(const Subexpression& s) {
  WeylElement prev = identity_element(s.base.sys);
  for (std::size_t k = 0; k < s.mask.size(); ++k) {
    WeylElement moved = times_simple(prev, s.base.sys, s.base.letters[k]);
    WeylElement cur = s.mask[k] ? moved : prev;
    if (!bruhat_leq(cur, moved)) return false;
    prev = cur;
  }
  return true;
}

bool check_reverse_distinguished(const Subexpression& s) {
  WeylElement next = identity_element(s.base.sys);
  for (std::size_t k = s.mask.size(); k-- > 0;) {
    WeylElement moved = simple_times(s.base.sys, s.base.letters[k], next);
    WeylElement cur = s.mask[k] ? moved : next;
    if (!bruhat_leq(cur, moved)) return false;
    next = cur;
  }
  return true;
}

std::vector<Subexpression> all_distinguished(const Word& base) {
  std::vector<Subexpression> out;
  std::size_t l = base.letters.size();
  if (l > 20) throw Error(ErrorCode::CapExceeded, "word too long for exhaustive mask enumeration");
  for (std::size_t m = 0; m < (std::size_t(1) << l); ++m) {
    std::vector<bool> mask(l);
    for (std::size_t k = 0; k < l; ++k) mask[k] = m >> k & 1;
    Subexpression s = make_subexpression(base, mask);
    if (check_distinguished(s)) out.push_back(std::move(s));
  }
  return out;
}

WeylElement minimal_coset_rep(const WeylElement& w, const RootSystem& sys, const std::vector<int>& J) {
  WeylElement x = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i : J) {
      WeylElement y = times_simple(x, sys, i);
      if (length(y) < length(x)) {
        x = y;
        changed = true;
      }
    }
  }
  return x;
}

Word appendix_w0_word(const RootSystem& sys) {
  if (sys.type != SystemType::B && sys.type != SystemType::C)
    throw Error(ErrorCode::InvalidArgument, "w0 expression is defined for B and C");
  int n = sys.n;
  Word w{sys, {n}};
  for (int j = n - 1; j >= 1; --j) {
    for (int i = j; i <= n - 1; ++i) w.letters.push_back(i);
    w.letters.push_back(n);
  }
  for (int j = 1; j <= n - 1; ++j)
    for (int i = j; i >= 1; --i) w.letters.push_back(i);
  return w;
}

std::string one_line(const WeylElement& w) {
  std::ostringstream os;
  int shown = w.kind == WeylKind::TypeA ? w.degree() : w.n;
  for (int j = 1; j <= shown; ++j) {
    if (j > 1) os << ',';
    int v = w(j);
    if (w.kind == WeylKind::Signed && v > w.n)
      os << (2 * w.n + 1 - v) << 'b';
    else
      os << v;
  }
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw Error(ErrorCode::Parse, "empty entry in list '" + text + "'");
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "not an integer: '" + item + "'");
    }
    if (used != item.size()) throw Error(ErrorCode::Parse, "not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

WeylElement parse_one_line(const RootSystem& sys, const std::string& text) {
  WeylElement w = identity_element(sys);
  std::stringstream ss(text);
  std::string item;
  std::vector<int> vals;
  while (std::getline(ss, item, ',')) {
    bool bar = !item.empty() && item.back() == 'b';
    if (bar) item.pop_back();
    auto v = parse_int_list(item);
    if (v.size() != 1) throw Error(ErrorCode::Parse, "bad one-line entry");
    if (bar && w.kind != WeylKind::Signed) throw Error(ErrorCode::Parse, "barred value in type A element");
    vals.push_back(bar ? 2 * sys.n + 1 - v[0] : v[0]);
  }
  if (w.kind == WeylKind::TypeA) return make_element(sys, vals);
  if (static_cast<int>(vals.size()) != sys.n) throw Error(ErrorCode::Parse, "signed element needs n entries");
  std::vector<int> perm(2 * sys.n);
  for (int j = 1; j <= sys.n; ++j) {
    perm[j - 1] = vals[j - 1];
    perm[2 * sys.n - j] = 2 * sys.n + 1 - vals[j - 1];
  }
  return make_element(sys, perm);
}

std::string word_string(const Word& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.letters.size(); ++k) {
    if (k) os << ',';
    os << w.letters[k];
  }
  return os.str();
}

namespace {

std::vector<int> complement_J(int k) {
  std::vector<int> J;
  for (int i = 1; i < k; ++i) J.push_back(i);
  return J;
}

std::vector<int> a_parabolic(const RootSystem& a, int k, int n) {
  std::vector<int> J;
  for (int i = 1; i <= a.n; ++i)
    if (i < k || i > n) J.push_back(i);
  return J;
}

}  // namespace

SameFirstEntries same_first_entries(const RootSystem& sys, int k) {
  int n = sys.n;
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "k must lie in [n]");
  RootSystem a = folded_system(sys);
  WeylElement phi = embed(minimal_coset_rep(longest_element(sys), sys, complement_J(k)), sys);
  WeylElement arep = minimal_coset_rep(longest_element(a), a, a_parabolic(a, k, n));
  SameFirstEntries out;
  int N = a.n + 1;
  out.in_barred_block = true;
  for (int i = 1; i <= n; ++i) {
    out.phi_entries.push_back(phi(i));
    out.a_entries.push_back(arep(i));
    if (phi(i) <= N - n) out.in_barred_block = false;
  }
  out.equal = out.phi_entries == out.a_entries;
  return out;
}

KeepSmall keep_small_transpositions(const RootSystem& sys, int k) {
  int n = sys.n;
  RootSystem a = folded_system(sys);
  Word w0 = appendix_w0_word(sys);
  WeylElement u = minimal_coset_rep(longest_element(sys), sys, complement_J(k));
  Subexpression phi_sub = distinguished_subexpression(u, w0, Direction::Leftmost);
  KeepSmall out;
  out.phi_word = Word{sys, {}};
  for (std::size_t t = 0; t < w0.letters.size(); ++t)
    if (phi_sub.mask[t]) out.phi_word.letters.push_back(w0.letters[t]);
  out.folded = fold_word(out.phi_word);
  out.small = fold_leq_n(out.phi_word);
  WeylElement target = minimal_coset_rep(longest_element(a), a, a_parabolic(a, k, n));
  out.a_sub = distinguished_subexpression(target, out.folded, Direction::Leftmost);

  out.positional = true;
  std::size_t offset = 0;
  for (int i : out.phi_word.letters) {
    if (!out.a_sub.mask[offset]) out.positional = false;
    offset += psi(sys, i).size();
  }
  std::size_t p = 0;
  for (std::size_t t = 0; t < out.folded.letters.size() && p < out.small.letters.size(); ++t)
    if (out.a_sub.mask[t] && out.folded.letters[t] == out.small.letters[p]) ++p;
  out.subsequence = p == out.small.letters.size();
  return out;
}

}  // namespace flagpos
