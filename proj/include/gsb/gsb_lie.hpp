#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gsb/bracketing.hpp"
#include "gsb/gsb_assoc.hpp"
#include "gsb/poly.hpp"
#include "gsb/words.hpp"

namespace gsb {

struct GsbStateLie {
  std::vector<LiePoly> relations;
  std::vector<PendingComposition> pending;
  std::size_t degree_bound = 0;
  GsbStatus status = GsbStatus::complete;
};

// Record of one run of lie_reduce: h = normal_form + sum of the used
// normal s-words, exactly.
struct LieReduction {
  struct Used {
    Coeff c;            // coefficient of the subtracted normal s-word
    std::size_t rel;    // index into S
    Word a, b;          // context: the leading word was a * leading(S[rel]) * b
  };
  // Basis terms of the normal form, in strictly decreasing deg-lex order of
  // their words.
  std::vector<std::pair<Coeff, NlswTree>> irreducible;
  std::vector<Used> used;
  LiePoly normal_form;
};

// All compositions of the ordered pair (f, g): inclusions (leading word of g
// inside the leading word of f; the trivial full inclusion of a relation in
// itself is skipped), then proper intersection overlaps.  Every overlap word
// is an ALSW.
std::vector<std::pair<Word, LiePoly>> compositions_lie(const LiePoly& f,
                                                       const LiePoly& g);

// Rewrites h against S: while the leading word contains some leading word of
// S (first relation in list order, leftmost occurrence), subtract the
// matching normal s-word; otherwise move the leading term to the normal
// form.  The leading word strictly decreases, and the returned record
// reassembles h exactly.
LieReduction lie_reduce(const LiePoly& h, const std::vector<LiePoly>& S);

// Analogue of interreduce_assoc: pairwise-irreducible monic relations,
// sorted by increasing deg-lex leading word.
std::vector<LiePoly> interreduce_lie(std::vector<LiePoly> S);

// Degree-bounded completion, same loop shape as complete_assoc with Lie
// compositions and reduction.
GsbStateLie complete_lie(std::vector<LiePoly> S, std::size_t degree_bound);

// True iff every Lie composition of S reduces to an empty normal form.  With
// jobs > 1 the candidate reductions run on that many threads.
bool is_gsb_lie(const std::vector<LiePoly>& S, unsigned jobs = 1);

// bracket_std of every ALSW of length <= max_deg containing no leading word
// of S as a factor; a linear basis of the presented algebra in those degrees
// when S is complete.
std::vector<NlswTree> red_nlsw(const Alphabet& alphabet,
                               const std::vector<LiePoly>& S,
                               std::size_t max_deg);

struct CrosscheckResult {
  bool lie = false;
  bool assoc = false;
  bool agree() const { return lie == assoc; }
};

// Runs the Lie-side and associative-side basis checks on the same relation
// set; the two answers coincide for every valid input.
CrosscheckResult crosscheck_lie_assoc(const std::vector<LiePoly>& S,
                                      unsigned jobs = 1);

}  // namespace gsb
