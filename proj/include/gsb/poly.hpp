#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsb/bracketing.hpp"
#include "gsb/words.hpp"

namespace gsb {

// Exact rational coefficients; all arithmetic is exact, zero tests are exact.
using Coeff = boost::multiprecision::cpp_rational;

struct DegLexGreater {
  bool operator()(const Word& a, const Word& b) const {
    return compare_deglex(a, b) == std::strong_ordering::greater;
  }
};

// Element of the free associative algebra over the rationals: a finite map
// word -> coefficient with no zero entries, iterated in decreasing deg-lex
// order (so the first term is the leading term).
class AssocPoly {
 public:
  using TermMap = std::map<Word, Coeff, DegLexGreater>;

  explicit AssocPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  static AssocPoly from_word(const Word& w);

  const Alphabet& alphabet() const { return alphabet_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Coeff coeff(const Word& w) const;

  void add_term(const Word& w, const Coeff& c);       // += c w
  void add_scaled(const AssocPoly& g, const Coeff& c);  // += c g

  AssocPoly& operator+=(const AssocPoly& g);
  AssocPoly& operator-=(const AssocPoly& g);
  AssocPoly& operator*=(const Coeff& c);

  friend AssocPoly operator+(AssocPoly f, const AssocPoly& g);
  friend AssocPoly operator-(AssocPoly f, const AssocPoly& g);
  friend AssocPoly operator-(AssocPoly f);
  friend AssocPoly operator*(const Coeff& c, AssocPoly f);
  friend AssocPoly operator*(const AssocPoly& f, const AssocPoly& g);

  friend bool operator==(const AssocPoly& f, const AssocPoly& g) {
    return f.alphabet_ == g.alphabet_ && f.terms_ == g.terms_;
  }

 private:
  Alphabet alphabet_;
  TermMap terms_;
};

// Deg-lex maximal support word and its coefficient; rejects zero.
std::pair<Word, Coeff> leading(const AssocPoly& f);

bool is_monic(const AssocPoly& f);
AssocPoly monic(const AssocPoly& f);

// a f b for context words a, b.
AssocPoly context_product(const Word& a, const AssocPoly& f, const Word& b);

// Recursive commutator expansion (xy) = xy - yx into the associative algebra.
AssocPoly expand(const NonassocWord& t);

// Rewrites an arbitrary bracketing as a linear combination of NLSWs of the
// same degree, by antisymmetry and the Jacobi rearrangement
// ((v1 v2) w) = ((v1 w) v2) + (v1 (v2 w)) applied when the word of v2
// exceeds the word of w.  Terms come back in decreasing deg-lex order.
std::vector<std::pair<Coeff, NlswTree>> rewrite_to_nlsw(const NonassocWord& t);

// NLSW-basis decomposition of a Lie element; nullopt when f is not a Lie
// polynomial (detected by a non-ALSW leading word during descent).
std::optional<std::vector<std::pair<Coeff, NlswTree>>> lie_decompose(
    const AssocPoly& f);

// An AssocPoly certified to lie in the free Lie algebra, carrying its
// NLSW-basis decomposition (decreasing deg-lex order of the tree words).
class LiePoly {
 public:
  explicit LiePoly(const AssocPoly& f);  // rejects non-Lie input
  explicit LiePoly(const NlswTree& t);
  static LiePoly zero(Alphabet alphabet);
  static std::optional<LiePoly> try_from(const AssocPoly& f);

  const AssocPoly& assoc() const { return f_; }
  const Alphabet& alphabet() const { return f_.alphabet(); }
  const std::vector<std::pair<Coeff, NlswTree>>& decomposition() const {
    return dec_;
  }
  bool is_zero() const { return f_.is_zero(); }

  friend LiePoly operator+(const LiePoly& f, const LiePoly& g);
  friend LiePoly operator-(const LiePoly& f, const LiePoly& g);
  friend LiePoly operator*(const Coeff& c, const LiePoly& f);

  friend bool operator==(const LiePoly& f, const LiePoly& g) {
    return f.f_ == g.f_;
  }

 private:
  struct Checked {};
  LiePoly(AssocPoly f, std::vector<std::pair<Coeff, NlswTree>> dec, Checked);

  AssocPoly f_;
  std::vector<std::pair<Coeff, NlswTree>> dec_;
};

LiePoly monic(const LiePoly& f);

// fg - gf.
LiePoly lie_bracket(const LiePoly& f, const LiePoly& g);

// Expansion of a slotted bracketing with the slot replaced by s.
AssocPoly expand_special(const SlotTree& t, const AssocPoly& s);

// Normal s-word [a s b]: substitute the monic Lie polynomial s into the slot
// of the special bracketing of a·leading(s)·b.  The leading word is
// a·leading(s)·b; every other term has a strictly smaller context.
LiePoly normal_s_word(const LiePoly& s, const Word& a, const Word& b);

}  // namespace gsb
