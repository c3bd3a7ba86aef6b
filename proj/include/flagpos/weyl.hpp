#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace flagpos {

enum class SystemType { A, B, C, D };

// A(n): letters 1..n acting on [n+1]. B(n), C(n): letters 1..n, signed permutations of [n, nbar].
struct RootSystem {
  SystemType type = SystemType::A;
  int n = 1;

  int rank() const { return n; }
  std::string name() const;
  friend bool operator==(const RootSystem& a, const RootSystem& b) { return a.type == b.type && a.n == b.n; }
};

enum class WeylKind { TypeA, Signed };

// Permutation stored in one-line form on positions 1..N. For Signed(n), N = 2n and
// position/value j > n stands for the barred symbol of 2n+1-j, so bar(j) = 2n+1-j.
struct WeylElement {
  WeylKind kind = WeylKind::TypeA;
  int n = 0;
  std::vector<int> perm;

  int degree() const { return static_cast<int>(perm.size()); }
  int operator()(int j) const { return perm[static_cast<std::size_t>(j - 1)]; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.kind == b.kind && a.perm == b.perm; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.perm < b.perm; }
};

struct Word {
  RootSystem sys;
  std::vector<int> letters;

  std::size_t size() const { return letters.size(); }
};

enum class Cls { Plus, Circ, Minus };

struct Subexpression {
  Word base;
  std::vector<bool> mask;  // true = letter kept
  std::vector<Cls> cls;

  std::vector<int> positions(Cls c) const;
};

WeylKind kind_of(const RootSystem& sys);
WeylElement identity_element(const RootSystem& sys);
WeylElement make_element(const RootSystem& sys, const std::vector<int>& perm);
WeylElement simple_reflection(const RootSystem& sys, int i);
WeylElement compose(const WeylElement& u, const WeylElement& v);  // u o v
WeylElement inverse(const WeylElement& w);
WeylElement times_simple(const WeylElement& w, const RootSystem& sys, int i);  // w s_i
WeylElement simple_times(const RootSystem& sys, int i, const WeylElement& w);  // s_i w
WeylElement longest_element(const RootSystem& sys);

// s_{i1} o s_{i2} o ... o s_{il}; ws e_j = e_{w(j)} for the permutation matrix.
WeylElement word_to_element(const Word& w);
int length(const WeylElement& w);
bool is_reduced(const Word& w);
std::vector<int> right_descents(const WeylElement& w, const RootSystem& sys);
Word reduced_word(const WeylElement& w, const RootSystem& sys);
std::vector<Word> reduced_words(const WeylElement& w, const RootSystem& sys, std::size_t cap = 100000);
std::vector<WeylElement> all_elements(const RootSystem& sys);

bool bruhat_leq(const WeylElement& u, const WeylElement& v);
bool bruhat_leq_exhaustive(const WeylElement& u, const WeylElement& v, const RootSystem& sys);

// Folding into type A: C(n) -> A(2n-1), B(n) -> A(2n).
RootSystem folded_system(const RootSystem& sys);
std::vector<int> psi(const RootSystem& sys, int i);
Word fold_word(const Word& w);
Subexpression fold_subexpression(const Subexpression& s);
Word fold_leq_n(const Word& w);
// Signed element as a permutation of [2n] (C) or [2n+1] with fixed center (B).
WeylElement embed(const WeylElement& w, const RootSystem& sys);

std::vector<Cls> classify(const Word& base, const std::vector<bool>& mask);
Subexpression make_subexpression(const Word& base, const std::vector<bool>& mask);
WeylElement subexpression_element(const Subexpression& s);

enum class Direction { Rightmost, Leftmost };
Subexpression distinguished_subexpression(const WeylElement& u, const Word& v, Direction dir);
bool check_distinguished(const Subexpression& s);
bool check_reverse_distinguished(const Subexpression& s);
// Every mask over the base word that is distinguished (any target element).
std::vector<Subexpression> all_distinguished(const Word& base);

WeylElement minimal_coset_rep(const WeylElement& w, const RootSystem& sys, const std::vector<int>& J);
Word appendix_w0_word(const RootSystem& sys);

std::string one_line(const WeylElement& w);
WeylElement parse_one_line(const RootSystem& sys, const std::string& text);
std::string word_string(const Word& w);
std::vector<int> parse_int_list(const std::string& text);

struct SameFirstEntries {
  std::vector<int> phi_entries;  // (w0^J)^Phi(i), i in [n], ambient labels
  std::vector<int> a_entries;    // (w0^{J'})^A(i)
  bool equal = false;
  bool in_barred_block = false;
};
SameFirstEntries same_first_entries(const RootSystem& sys, int k);

struct KeepSmall {
  Word phi_word;           // reduced reverse distinguished expression of (w0^J)^Phi
  Word folded;             // psi of it
  Subexpression a_sub;     // reduced reverse distinguished subexpression for (w0^{J'})^A
  Word small;              // psi_{<=n} of phi_word
  bool positional = false;   // every first-component position is kept
  bool subsequence = false;  // small is a subsequence of the kept letters
};
KeepSmall keep_small_transpositions(const RootSystem& sys, int k);

}  // namespace flagpos
