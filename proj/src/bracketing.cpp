#include "gsb/bracketing.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsb {

struct NonassocWord::Node {
  Word word;
  std::shared_ptr<const NonassocWord::Node> left, right;
};

NonassocWord NonassocWord::leaf(const Alphabet& alphabet, int rank) {
  return NonassocWord(std::make_shared<const Node>(
      Node{Word(alphabet, {rank}), nullptr, nullptr}));
}

NonassocWord NonassocWord::node(const NonassocWord& l, const NonassocWord& r) {
  return NonassocWord(std::make_shared<const Node>(
      Node{l.word() * r.word(), l.p_, r.p_}));
}

bool NonassocWord::is_leaf() const { return p_->left == nullptr; }

int NonassocWord::letter() const {
  if (!is_leaf()) throw std::invalid_argument("letter: not a leaf");
  return p_->word[0];
}

NonassocWord NonassocWord::left() const {
  if (is_leaf()) throw std::invalid_argument("left: leaf has no children");
  return NonassocWord(p_->left);
}

NonassocWord NonassocWord::right() const {
  if (is_leaf()) throw std::invalid_argument("right: leaf has no children");
  return NonassocWord(p_->right);
}

const Word& NonassocWord::word() const { return p_->word; }

bool operator==(const NonassocWord& a, const NonassocWord& b) {
  if (a.p_ == b.p_) return true;
  if (!(a.word() == b.word())) return false;
  if (a.is_leaf() || b.is_leaf()) return a.is_leaf() && b.is_leaf();
  return a.left() == b.left() && a.right() == b.right();
}

bool is_nlsw(const NonassocWord& t) {
  if (t.is_leaf()) return true;
  if (!is_alsw(t.word())) return false;
  NonassocWord l = t.left(), r = t.right();
  if (!is_nlsw(l) || !is_nlsw(r)) return false;
  if (!l.is_leaf() &&
      compare_shirshov_lex(l.right().word(), r.word()) ==
          std::strong_ordering::greater)
    return false;
  return true;
}

NlswTree::NlswTree(const NonassocWord& t) : t_(t) {
  if (!is_nlsw(t)) throw std::invalid_argument("NlswTree: not an NLSW");
}

namespace {

NonassocWord bracket_std_rec(const Word& u) {
  if (u.size() == 1) return NonassocWord::leaf(u.alphabet(), u[0]);
  auto [v, w] = longest_alsw_proper_suffix(u);
  return NonassocWord::node(bracket_std_rec(v), bracket_std_rec(w));
}

}  // namespace

NlswTree bracket_std(const Word& u) {
  if (u.empty() || !is_alsw(u))
    throw std::invalid_argument("bracket_std: not an ALSW");
  return NlswTree(bracket_std_rec(u));
}

NlswTree bracket_down_up(const Word& u) {
  if (u.empty() || !is_alsw(u))
    throw std::invalid_argument("bracket_down_up: not an ALSW");
  std::vector<NonassocWord> seq;
  for (std::size_t i = 0; i < u.size(); ++i)
    seq.push_back(NonassocWord::leaf(u.alphabet(), u[i]));
  while (seq.size() > 1) {
    // find the minimal subtree word, then join each non-minimal subtree with
    // an immediately following minimal one, in a single left-to-right pass
    Word m = seq[0].word();
    for (std::size_t i = 1; i < seq.size(); ++i)
      if (compare_shirshov_lex(seq[i].word(), m) == std::strong_ordering::less)
        m = seq[i].word();
    std::vector<NonassocWord> next;
    bool joined = false;
    std::size_t i = 0;
    while (i < seq.size()) {
      if (i + 1 < seq.size() && !(seq[i].word() == m) &&
          seq[i + 1].word() == m) {
        next.push_back(NonassocWord::node(seq[i], seq[i + 1]));
        i += 2;
        joined = true;
      } else {
        next.push_back(seq[i]);
        i += 1;
      }
    }
    if (!joined) throw std::logic_error("bracket_down_up: no progress");
    seq = std::move(next);
  }
  return NlswTree(seq[0]);
}

struct SlotTree::Node {
  Alphabet alphabet;
  Kind kind;
  int rank;  // letter only
  std::shared_ptr<const SlotTree::Node> left, right;
};

SlotTree SlotTree::letter(const Alphabet& alphabet, int rank) {
  if (rank < 0 || static_cast<std::size_t>(rank) >= alphabet.size())
    throw std::invalid_argument("SlotTree: letter rank out of range");
  return SlotTree(std::make_shared<const Node>(
      Node{alphabet, Kind::letter, rank, nullptr, nullptr}));
}

SlotTree SlotTree::slot(const Alphabet& alphabet) {
  return SlotTree(std::make_shared<const Node>(
      Node{alphabet, Kind::slot, -1, nullptr, nullptr}));
}

SlotTree SlotTree::node(const SlotTree& l, const SlotTree& r) {
  if (!(l.alphabet() == r.alphabet()))
    throw std::invalid_argument("alphabet mismatch");
  return SlotTree(
      std::make_shared<const Node>(Node{l.alphabet(), Kind::node, -1, l.p_, r.p_}));
}

SlotTree::Kind SlotTree::kind() const { return p_->kind; }

int SlotTree::letter_rank() const {
  if (p_->kind != Kind::letter)
    throw std::invalid_argument("letter_rank: not a letter");
  return p_->rank;
}

SlotTree SlotTree::left() const {
  if (p_->kind != Kind::node) throw std::invalid_argument("left: not a node");
  return SlotTree(p_->left);
}

SlotTree SlotTree::right() const {
  if (p_->kind != Kind::node) throw std::invalid_argument("right: not a node");
  return SlotTree(p_->right);
}

const Alphabet& SlotTree::alphabet() const { return p_->alphabet; }

SpecialBracketing::SpecialBracketing(Word u, Word a, Word v, Word c, Word d,
                                     std::vector<Word> factors, SlotTree tree)
    : u_(std::move(u)),
      a_(std::move(a)),
      v_(std::move(v)),
      c_(std::move(c)),
      d_(std::move(d)),
      factors_(std::move(factors)),
      tree_(std::move(tree)) {}

namespace {

SlotTree tree_to_slot(const NonassocWord& t) {
  if (t.is_leaf()) return SlotTree::letter(t.alphabet(), t.letter());
  return SlotTree::node(tree_to_slot(t.left()), tree_to_slot(t.right()));
}

NonassocWord slot_to_tree(const SlotTree& t, const NonassocWord& fill) {
  switch (t.kind()) {
    case SlotTree::Kind::slot:
      return fill;
    case SlotTree::Kind::letter:
      return NonassocWord::leaf(t.alphabet(), t.letter_rank());
    default:
      return NonassocWord::node(slot_to_tree(t.left(), fill),
                                slot_to_tree(t.right(), fill));
  }
}

struct Located {
  SlotTree tree;
  bool found;
  Word span;  // word of the replaced subtree (= v c)
};

// Replace the minimal subtree whose leaf span starts at `start` and has
// length >= vlen.  Such subtrees form a chain along left children, so
// descending left-first finds the minimal one.
Located locate(const NonassocWord& t, std::size_t pos, std::size_t start,
               std::size_t vlen, const SlotTree& replacement) {
  if (pos == start && t.leaf_count() >= vlen) {
    if (!t.is_leaf()) {
      Located l = locate(t.left(), pos, start, vlen, replacement);
      if (l.found)
        return {SlotTree::node(l.tree, tree_to_slot(t.right())), true, l.span};
    }
    return {replacement, true, t.word()};
  }
  if (t.is_leaf()) return {tree_to_slot(t), false, t.word()};
  Located l = locate(t.left(), pos, start, vlen, replacement);
  if (l.found)
    return {SlotTree::node(l.tree, tree_to_slot(t.right())), true, l.span};
  Located r =
      locate(t.right(), pos + t.left().leaf_count(), start, vlen, replacement);
  return {SlotTree::node(tree_to_slot(t.left()), r.tree), r.found, r.span};
}

}  // namespace

NonassocWord SpecialBracketing::with_bracketed_slot() const {
  return slot_to_tree(tree_, bracket_std(v_).tree());
}

SpecialBracketing special_bracket(const Word& u, const Word& a, const Word& v,
                                  const Word& b) {
  if (!(a * v * b == u))
    throw std::invalid_argument("special_bracket: u != a v b");
  if (!is_alsw(u)) throw std::invalid_argument("special_bracket: u not an ALSW");
  if (v.empty() || !is_alsw(v))
    throw std::invalid_argument("special_bracket: v not an ALSW");

  NonassocWord std_tree = bracket_std(u).tree();

  // First pass with a bare-slot replacement to learn the span word v c.
  Located pass1 =
      locate(std_tree, 0, a.size(), v.size(), SlotTree::slot(u.alphabet()));
  if (!pass1.found)
    throw std::logic_error("special_bracket: no covering subtree");
  Word c = pass1.span.suffix(v.size());
  Word d = b.suffix(c.size());

  std::vector<Word> factors;
  if (!c.empty()) factors = lyndon_factorize(c);

  SlotTree replacement = SlotTree::slot(u.alphabet());
  for (const Word& ci : factors)
    replacement =
        SlotTree::node(replacement, tree_to_slot(bracket_std(ci).tree()));

  Located pass2 = locate(std_tree, 0, a.size(), v.size(), replacement);
  return SpecialBracketing(u, a, v, c, d, std::move(factors), pass2.tree);
}

}  // namespace gsb
