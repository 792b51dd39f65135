#include "gsb/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsb {

AssocPoly AssocPoly::from_word(const Word& w) {
  AssocPoly f(w.alphabet());
  f.add_term(w, 1);
  return f;
}

Coeff AssocPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Coeff(0) : it->second;
}

void AssocPoly::add_term(const Word& w, const Coeff& c) {
  if (!(w.alphabet() == alphabet_))
    throw std::invalid_argument("alphabet mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void AssocPoly::add_scaled(const AssocPoly& g, const Coeff& c) {
  if (!(g.alphabet_ == alphabet_))
    throw std::invalid_argument("alphabet mismatch");
  if (c == 0) return;
  for (const auto& [w, a] : g.terms_) add_term(w, c * a);
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& g) {
  add_scaled(g, 1);
  return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& g) {
  add_scaled(g, -1);
  return *this;
}

AssocPoly& AssocPoly::operator*=(const Coeff& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, a] : terms_) a *= c;
  return *this;
}

AssocPoly operator+(AssocPoly f, const AssocPoly& g) {
  f += g;
  return f;
}

AssocPoly operator-(AssocPoly f, const AssocPoly& g) {
  f -= g;
  return f;
}

AssocPoly operator-(AssocPoly f) {
  f *= -1;
  return f;
}

AssocPoly operator*(const Coeff& c, AssocPoly f) {
  f *= c;
  return f;
}

AssocPoly operator*(const AssocPoly& f, const AssocPoly& g) {
  if (!(f.alphabet() == g.alphabet()))
    throw std::invalid_argument("alphabet mismatch");
  AssocPoly r(f.alphabet());
  for (const auto& [w1, a] : f.terms())
    for (const auto& [w2, b] : g.terms()) r.add_term(w1 * w2, a * b);
  return r;
}

std::pair<Word, Coeff> leading(const AssocPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("leading: zero polynomial");
  const auto& [w, c] = *f.terms().begin();
  return {w, c};
}

bool is_monic(const AssocPoly& f) {
  return !f.is_zero() && leading(f).second == 1;
}

AssocPoly monic(const AssocPoly& f) {
  auto [w, c] = leading(f);
  return (Coeff(1) / c) * f;
}

AssocPoly context_product(const Word& a, const AssocPoly& f, const Word& b) {
  AssocPoly r(f.alphabet());
  for (const auto& [w, c] : f.terms()) r.add_term(a * w * b, c);
  return r;
}

AssocPoly expand(const NonassocWord& t) {
  if (t.is_leaf()) return AssocPoly::from_word(t.word());
  AssocPoly l = expand(t.left()), r = expand(t.right());
  return l * r - r * l;
}

namespace {

using Terms = std::vector<std::pair<Coeff, NonassocWord>>;

// Emits the NLSW terms of ([v][w]) for NLSW trees v, w.  If condition (iii)
// fails at the root the Jacobi identity trades the offending pair for two
// smaller ones; the recursion bottoms out by induction on the lesser word.
void pair_terms(const Coeff& c, const NonassocWord& v, const NonassocWord& w,
                Terms& out) {
  std::strong_ordering cmp = compare_shirshov_lex(v.word(), w.word());
  if (cmp == std::strong_ordering::equal) return;
  if (cmp == std::strong_ordering::less) {
    pair_terms(-c, w, v, out);
    return;
  }
  if (v.is_leaf() || compare_shirshov_lex(v.right().word(), w.word()) !=
                         std::strong_ordering::greater) {
    out.emplace_back(c, NonassocWord::node(v, w));
    return;
  }
  // ((v1 v2) w) = ((v1 w) v2) + (v1 (v2 w)) with v2 > w
  Terms t1;
  pair_terms(Coeff(1), v.left(), w, t1);
  for (const auto& [a, t] : t1) pair_terms(c * a, t, v.right(), out);
  Terms t2;
  pair_terms(Coeff(1), v.right(), w, t2);
  for (const auto& [a, t] : t2) pair_terms(c * a, v.left(), t, out);
}

std::vector<std::pair<Coeff, NlswTree>> collect_terms(const Terms& raw) {
  std::map<Word, std::pair<Coeff, NonassocWord>, DegLexGreater> m;
  for (const auto& [c, t] : raw) {
    auto it = m.find(t.word());
    if (it == m.end())
      m.emplace(t.word(), std::make_pair(c, t));
    else
      it->second.first += c;
  }
  std::vector<std::pair<Coeff, NlswTree>> out;
  for (const auto& [w, ct] : m)
    if (ct.first != 0) out.emplace_back(ct.first, NlswTree(ct.second));
  return out;
}

Terms rewrite_raw(const NonassocWord& t) {
  if (t.is_leaf()) return {{Coeff(1), t}};
  Terms l = rewrite_raw(t.left());
  Terms r = rewrite_raw(t.right());
  Terms out;
  for (const auto& [a, lt] : l)
    for (const auto& [b, rt] : r) pair_terms(a * b, lt, rt, out);
  return out;
}

}  // namespace

std::vector<std::pair<Coeff, NlswTree>> rewrite_to_nlsw(const NonassocWord& t) {
  if (t.is_leaf()) return {{Coeff(1), NlswTree(t)}};
  return collect_terms(rewrite_raw(t));
}

std::optional<std::vector<std::pair<Coeff, NlswTree>>> lie_decompose(
    const AssocPoly& f) {
  AssocPoly rest = f;
  std::vector<std::pair<Coeff, NlswTree>> out;
  while (!rest.is_zero()) {
    auto [w, c] = leading(rest);
    if (!is_alsw(w)) return std::nullopt;
    NlswTree t = bracket_std(w);
    out.emplace_back(c, t);
    rest.add_scaled(expand(t), -c);
  }
  return out;
}

LiePoly::LiePoly(AssocPoly f, std::vector<std::pair<Coeff, NlswTree>> dec,
                 Checked)
    : f_(std::move(f)), dec_(std::move(dec)) {}

LiePoly::LiePoly(const AssocPoly& f) : f_(f) {
  auto dec = lie_decompose(f);
  if (!dec) throw std::invalid_argument("LiePoly: not a Lie polynomial");
  dec_ = std::move(*dec);
}

LiePoly::LiePoly(const NlswTree& t) : f_(expand(t)) {
  dec_.emplace_back(Coeff(1), t);
}

LiePoly LiePoly::zero(Alphabet alphabet) {
  return LiePoly(AssocPoly(std::move(alphabet)), {}, Checked{});
}

std::optional<LiePoly> LiePoly::try_from(const AssocPoly& f) {
  auto dec = lie_decompose(f);
  if (!dec) return std::nullopt;
  return LiePoly(f, std::move(*dec), Checked{});
}

namespace {

// Merge two decompositions sorted by decreasing deg-lex tree word.
std::vector<std::pair<Coeff, NlswTree>> merge_dec(
    const std::vector<std::pair<Coeff, NlswTree>>& a, const Coeff& ca,
    const std::vector<std::pair<Coeff, NlswTree>>& b, const Coeff& cb) {
  std::vector<std::pair<Coeff, NlswTree>> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() &&
                          compare_deglex(a[i].second.word(),
                                         b[j].second.word()) ==
                              std::strong_ordering::greater)) {
      Coeff c = ca * a[i].first;
      if (c != 0) out.emplace_back(c, a[i].second);
      ++i;
    } else if (i == a.size() ||
               compare_deglex(a[i].second.word(), b[j].second.word()) ==
                   std::strong_ordering::less) {
      Coeff c = cb * b[j].first;
      if (c != 0) out.emplace_back(c, b[j].second);
      ++j;
    } else {
      Coeff c = ca * a[i].first + cb * b[j].first;
      if (c != 0) out.emplace_back(c, a[i].second);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LiePoly operator+(const LiePoly& f, const LiePoly& g) {
  return LiePoly(f.assoc() + g.assoc(),
                 merge_dec(f.dec_, 1, g.dec_, 1), LiePoly::Checked{});
}

LiePoly operator-(const LiePoly& f, const LiePoly& g) {
  return LiePoly(f.assoc() - g.assoc(),
                 merge_dec(f.dec_, 1, g.dec_, -1), LiePoly::Checked{});
}

LiePoly operator*(const Coeff& c, const LiePoly& f) {
  if (c == 0) return LiePoly::zero(f.alphabet());
  std::vector<std::pair<Coeff, NlswTree>> dec;
  dec.reserve(f.dec_.size());
  for (const auto& [a, t] : f.dec_) dec.emplace_back(c * a, t);
  return LiePoly(c * f.assoc(), std::move(dec), LiePoly::Checked{});
}

LiePoly monic(const LiePoly& f) {
  auto [w, c] = leading(f.assoc());
  return (Coeff(1) / c) * f;
}

LiePoly lie_bracket(const LiePoly& f, const LiePoly& g) {
  if (!(f.alphabet() == g.alphabet()))
    throw std::invalid_argument("alphabet mismatch");
  return LiePoly(f.assoc() * g.assoc() - g.assoc() * f.assoc());
}

AssocPoly expand_special(const SlotTree& t, const AssocPoly& s) {
  switch (t.kind()) {
    case SlotTree::Kind::slot:
      return s;
    case SlotTree::Kind::letter:
      return AssocPoly::from_word(Word(t.alphabet(), {t.letter_rank()}));
    default: {
      AssocPoly l = expand_special(t.left(), s);
      AssocPoly r = expand_special(t.right(), s);
      return l * r - r * l;
    }
  }
}

LiePoly normal_s_word(const LiePoly& s, const Word& a, const Word& b) {
  if (!is_monic(s.assoc()))
    throw std::invalid_argument("normal_s_word: s not monic");
  Word sbar = leading(s.assoc()).first;
  Word u = a * sbar * b;
  if (!is_alsw(u))
    throw std::invalid_argument("normal_s_word: context word not an ALSW");
  SpecialBracketing sb = special_bracket(u, a, sbar, b);
  return LiePoly(expand_special(sb.slot_tree(), s.assoc()));
}

}  // namespace gsb
