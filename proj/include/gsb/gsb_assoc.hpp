#pragma once

#include <cstdint>
#include <vector>

#include "gsb/poly.hpp"
#include "gsb/words.hpp"

namespace gsb {

enum class GsbStatus { complete, truncated };

// A composition left unprocessed because its overlap word exceeds the
// degree bound; (i, j) index the relation pair.
struct PendingComposition {
  std::size_t i = 0, j = 0;
  Word w;
};

struct GsbStateAssoc {
  std::vector<AssocPoly> relations;
  std::vector<PendingComposition> pending;
  std::size_t degree_bound = 0;
  GsbStatus status = GsbStatus::complete;
};

// All compositions of the ordered pair (f, g): inclusions (leading word of g
// occurring inside the leading word of f; the trivial full inclusion of a
// relation in itself is skipped) followed by proper intersection overlaps (a
// suffix of leading(f) equal to a prefix of leading(g)).
std::vector<std::pair<Word, AssocPoly>> compositions_assoc(const AssocPoly& f,
                                                           const AssocPoly& g);

// Full tail reduction: repeatedly rewrites the largest reducible support
// word using the first matching relation at its leftmost occurrence; the
// result has no support word containing any leading word of S.
AssocPoly reduce_assoc(const AssocPoly& h, const std::vector<AssocPoly>& S);

// Same normal form, computed with a seeded random choice of support word,
// relation, and occurrence at every step (confluence check for completed
// bases).
AssocPoly reduce_assoc_randomized(const AssocPoly& h,
                                  const std::vector<AssocPoly>& S,
                                  std::uint64_t seed);

// Tail-reduces every relation against the others until stable; relations
// whose leading word becomes reducible are replaced by their remainders.
// The result is monic, has pairwise irreducible relations, and is sorted by
// increasing deg-lex leading word.
std::vector<AssocPoly> interreduce_assoc(std::vector<AssocPoly> S);

// Degree-bounded completion: processes compositions in increasing deg-lex
// order of the overlap word (ties by relation insertion order); each nonzero
// reduced composition is added monic and the scan restarts.  Compositions
// whose overlap word exceeds the bound are recorded in `pending`, and the
// status is `truncated` whenever any were skipped.
GsbStateAssoc complete_assoc(std::vector<AssocPoly> S, std::size_t degree_bound);

// True iff every composition of S reduces to zero.  With jobs > 1 the
// candidate reductions run on that many threads.
bool is_gsb_assoc(const std::vector<AssocPoly>& S, unsigned jobs = 1);

// All words of length <= max_len (including the empty word) containing no
// leading word of S as a factor, in increasing deg-lex order.
std::vector<Word> red_words(const Alphabet& alphabet,
                            const std::vector<AssocPoly>& S,
                            std::size_t max_len);

}  // namespace gsb
