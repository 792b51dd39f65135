#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gsb/bracketing.hpp"
#include "gsb/poly.hpp"
#include "gsb/words.hpp"

namespace gsb {

// Input rejection with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t col);
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_, col_;
};

// "x1 < x2 < x3": letter names in increasing order, separated by '<'.
Alphabet parse_alphabet(std::string_view text, std::size_t line = 1);
std::string print_alphabet(const Alphabet& alphabet);

// Whitespace-free concatenation of letter names; "1" is the empty word.
// The segmentation into letters must exist and be unique.
Word parse_word(const Alphabet& alphabet, std::string_view text,
                std::size_t line = 1);

// Fully parenthesized bracket notation with whitespace-separated letters,
// e.g. "[x2 [x2 x1]]"; a bare letter is a leaf.
NonassocWord parse_tree(const Alphabet& alphabet, std::string_view text,
                        std::size_t line = 1);
std::string print_tree(const NonassocWord& t);

// Sum of terms "c", "w", or "c * w" joined by '+'/'-', where c is an
// unsigned integer or fraction and w is a word or a bracketed tree (trees
// are expanded).  Canonical printing lists terms in decreasing deg-lex
// order with positive printed coefficients after the sign.
AssocPoly parse_poly(const Alphabet& alphabet, std::string_view text,
                     std::size_t line = 1);
std::string print_poly(const AssocPoly& f);

// Canonical form of the basis decomposition: terms "c * [tree]" in
// decreasing deg-lex order of the tree words.
std::string print_lie_poly(const LiePoly& f);

enum class Mode { assoc, lie };

// A parsed presentation file: header lines "alphabet:", optional "mode:"
// (default assoc) and "degree_bound:", then one relation per line; '#'
// starts a comment.
struct Presentation {
  Alphabet alphabet;
  Mode mode = Mode::assoc;
  std::vector<AssocPoly> relations;
  std::optional<std::size_t> degree_bound;
};

Presentation parse_presentation(std::istream& in);

// Relations as Lie elements; throws std::invalid_argument naming the first
// relation that is not a Lie element.
std::vector<LiePoly> lie_relations(const Presentation& p);

}  // namespace gsb
