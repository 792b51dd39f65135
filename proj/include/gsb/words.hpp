#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gsb {

// Finite totally ordered set of generator letters.  Rank = position in the
// declaration order; higher rank = greater letter.  Cheap to copy.
class Alphabet {
 public:
  // Letter names must be distinct identifiers ([A-Za-z][A-Za-z0-9_]*).
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const { return letters_->size(); }
  const std::string& name(int rank) const;
  std::optional<int> rank(std::string_view name) const;
  const std::vector<std::string>& letters() const { return *letters_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.letters_ == b.letters_ || *a.letters_ == *b.letters_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> letters_;
};

// Element of the free monoid over an Alphabet, stored as letter ranks.
// The empty word is valid; operations that need letters reject it.
class Word {
 public:
  Word(Alphabet alphabet, std::vector<int> ranks);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return ranks_.size(); }
  bool empty() const { return ranks_.empty(); }
  int operator[](std::size_t i) const { return ranks_[i]; }
  const std::vector<int>& ranks() const { return ranks_; }

  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix(std::size_t pos) const { return sub(pos, size() - pos); }

  // Concatenated letter names; "1" for the empty word.
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);  // concatenation

  friend bool operator==(const Word& a, const Word& b) {
    return a.ranks_ == b.ranks_ && a.alphabet_ == b.alphabet_;
  }

 private:
  Alphabet alphabet_;
  std::vector<int> ranks_;
};

int fir(const Word& u);         // first letter
int min_letter(const Word& u);  // least letter occurring in u

// Word order of the combinatorial layer: at the first difference the greater
// letter wins, and a proper prefix is greater than its extension.
std::strong_ordering compare_shirshov_lex(const Word& u, const Word& v);

// Monomial order for polynomials: shorter words are smaller, equal lengths
// compare letterwise.
std::strong_ordering compare_deglex(const Word& u, const Word& v);

// Lyndon-Shirshov recognition: u strictly greater than every proper
// nonempty suffix.  is_alsw_via_elimination is an independent
// implementation (iterated elimination down to a single derived letter)
// kept as a cross-check.
bool is_alsw(const Word& u);
bool is_alsw_via_elimination(const Word& u);

// Unique factorization u = u1 u2 ... uk into nondecreasing ALSW factors.
std::vector<Word> lyndon_factorize(const Word& u);

// For an ALSW u with |u| >= 2: the split u = v w where w is the longest
// proper suffix that is an ALSW; v is again an ALSW.
std::pair<Word, Word> longest_alsw_proper_suffix(const Word& u);

// Derived letter x_i^j: base letter with j trailing copies of the minimal
// letter absorbed.  Greater base wins; for equal bases the letter with the
// *smaller* tail is the greater one.
struct EliminationLetter {
  int base = 0;
  int tail = 0;

  friend bool operator==(const EliminationLetter&,
                         const EliminationLetter&) = default;
  friend std::strong_ordering operator<=>(const EliminationLetter& a,
                                          const EliminationLetter& b) {
    if (a.base != b.base) return a.base <=> b.base;
    return b.tail <=> a.tail;
  }
};

// One round of Shirshov elimination.  The one-argument form absorbs the
// minimal letter of u; the two-argument form absorbs a caller-chosen letter
// beta (for rewriting a subword relative to an enclosing word).
std::vector<EliminationLetter> eliminate(const Word& u);
std::vector<EliminationLetter> eliminate(const Word& u, int beta);

// All ALSWs of length <= max_len, sorted by compare_deglex.
std::vector<Word> enumerate_alsw(const Alphabet& alphabet, int max_len);

// Starting positions of `factor` inside w; the empty factor occurs at every
// position 0..|w|.
std::vector<std::size_t> factor_occurrences(const Word& w, const Word& factor);

}  // namespace gsb
