#pragma once

#include <memory>
#include <vector>

#include "gsb/words.hpp"

namespace gsb {

// Binary bracketing tree over letters; the underlying associative word is
// the in-order leaf sequence.  Immutable, cheap to copy (shared structure).
class NonassocWord {
 public:
  static NonassocWord leaf(const Alphabet& alphabet, int rank);
  static NonassocWord node(const NonassocWord& l, const NonassocWord& r);

  bool is_leaf() const;
  int letter() const;  // leaf only
  NonassocWord left() const;
  NonassocWord right() const;

  const Word& word() const;
  const Alphabet& alphabet() const { return word().alphabet(); }
  std::size_t leaf_count() const { return word().size(); }

  friend bool operator==(const NonassocWord& a, const NonassocWord& b);

 private:
  struct Node;
  explicit NonassocWord(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

// True iff t is a nonassociative Lyndon-Shirshov word: the underlying word
// is an ALSW, both children are NLSWs, and for t = ((v1 v2) w) the word of
// v2 is <= the word of w.
bool is_nlsw(const NonassocWord& t);

// A NonassocWord validated as an NLSW.  There is exactly one NLSW per ALSW.
class NlswTree {
 public:
  explicit NlswTree(const NonassocWord& t);  // rejects non-NLSW trees

  const NonassocWord& tree() const { return t_; }
  operator const NonassocWord&() const { return t_; }
  const Word& word() const { return t_.word(); }

  friend bool operator==(const NlswTree& a, const NlswTree& b) {
    return a.t_ == b.t_;
  }

 private:
  NonassocWord t_;
};

// The unique NLSW bracketing of an ALSW, built top-down by splitting at the
// longest ALSW proper suffix.
NlswTree bracket_std(const Word& u);

// The same tree built bottom-up by repeatedly joining the currently minimal
// subtree to its predecessor (elimination realized on trees).
NlswTree bracket_down_up(const Word& u);

// Bracketing tree in which one leaf is a slot standing for a whole subterm.
class SlotTree {
 public:
  enum class Kind { letter, slot, node };

  static SlotTree letter(const Alphabet& alphabet, int rank);
  static SlotTree slot(const Alphabet& alphabet);
  static SlotTree node(const SlotTree& l, const SlotTree& r);

  Kind kind() const;
  int letter_rank() const;  // letter only
  SlotTree left() const;
  SlotTree right() const;
  const Alphabet& alphabet() const;

 private:
  struct Node;
  explicit SlotTree(std::shared_ptr<const Node> p) : p_(std::move(p)) {}
  std::shared_ptr<const Node> p_;
};

// Bracketing of an ALSW u = a v b adapted to a fixed occurrence of the ALSW
// subword v: in the standard bracketing of u, the minimal subtree whose leaf
// span starts at the occurrence and covers v has word v c; that subtree is
// replaced by the left-normed bracketing [[[slot][c1]]...[ck]] where
// c = c1...ck is the nondecreasing ALSW factorization, leaving b = c d.
class SpecialBracketing {
 public:
  const Word& u() const { return u_; }
  const Word& a() const { return a_; }
  const Word& v() const { return v_; }
  const Word& c() const { return c_; }
  const Word& d() const { return d_; }
  const std::vector<Word>& factors() const { return factors_; }
  const SlotTree& slot_tree() const { return tree_; }

  // The slot instantiated with the standard bracketing of v.
  NonassocWord with_bracketed_slot() const;

 private:
  friend SpecialBracketing special_bracket(const Word& u, const Word& a,
                                           const Word& v, const Word& b);
  SpecialBracketing(Word u, Word a, Word v, Word c, Word d,
                    std::vector<Word> factors, SlotTree tree);

  Word u_, a_, v_, c_, d_;
  std::vector<Word> factors_;
  SlotTree tree_;
};

SpecialBracketing special_bracket(const Word& u, const Word& a, const Word& v,
                                  const Word& b);

}  // namespace gsb
