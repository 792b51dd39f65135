#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "doctest.h"
#include "gsb/poly.hpp"
#include "test_util.hpp"

using namespace gsb;
using tutil::all_rank_words;
using tutil::L;
using tutil::N;
using tutil::P;
using tutil::W;

namespace {

const Alphabet A2({"x1", "x2"});
const Alphabet A3({"x1", "x2", "x3"});

std::vector<NonassocWord> all_trees(const Word& u, std::size_t lo,
                                    std::size_t hi) {
  std::vector<NonassocWord> out;
  if (hi - lo == 1) {
    out.push_back(NonassocWord::leaf(u.alphabet(), u[lo]));
    return out;
  }
  for (std::size_t mid = lo + 1; mid < hi; ++mid)
    for (const NonassocWord& l : all_trees(u, lo, mid))
      for (const NonassocWord& r : all_trees(u, mid, hi))
        out.push_back(NonassocWord::node(l, r));
  return out;
}

std::vector<NonassocWord> all_trees(const Word& u) {
  return all_trees(u, 0, u.size());
}

bool lex_greater(const Word& a, const Word& b) {
  return compare_shirshov_lex(a, b) == std::strong_ordering::greater;
}

bool deglex_less(const Word& a, const Word& b) {
  return compare_deglex(a, b) == std::strong_ordering::less;
}

// (u, a, v, b) with u = a v b, both u and v ALSWs.
struct Instance {
  Word u, a, v, b;
};

std::vector<Instance> all_instances(const Alphabet& A, int q, int maxn) {
  std::vector<Instance> out;
  for (int n = 1; n <= maxn; ++n) {
    for (const auto& ranks : all_rank_words(q, n)) {
      Word u(A, ranks);
      if (!is_alsw(u)) continue;
      for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j <= u.size(); ++j) {
          Word v = u.sub(i, j - i);
          if (is_alsw(v)) out.push_back({u, u.prefix(i), v, u.suffix(j)});
        }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("polynomial term map basics") {
  AssocPoly f(A2);
  CHECK(f.is_zero());
  f.add_term(W(A2, {1, 2}), Coeff(1));
  f.add_term(W(A2, {2, 1}), Coeff(1, 2));
  f.add_term(W(A2, {1, 2}), Coeff(-1));  // cancels
  CHECK(f.term_count() == 1);
  CHECK(f.coeff(W(A2, {2, 1})) == Coeff(1, 2));
  CHECK(f.coeff(W(A2, {1, 2})) == 0);

  AssocPoly g = AssocPoly::from_word(W(A2, {2, 1}));
  CHECK((Coeff(2) * g).coeff(W(A2, {2, 1})) == 2);
  CHECK((f - f).is_zero());
  CHECK(f + f == Coeff(2) * f);

  // iteration is decreasing deg-lex, so begin() is the leading term
  AssocPoly h = P(A2, {{{1}, 1}, {{2, 1}, 3}, {{1, 1}, -1}, {{2}, 5}});
  std::vector<Word> seen;
  for (const auto& [w, c] : h.terms()) seen.push_back(w);
  REQUIRE(seen.size() == 4);
  CHECK(seen[0] == W(A2, {2, 1}));
  CHECK(seen[1] == W(A2, {1, 1}));
  CHECK(seen[2] == W(A2, {2}));
  CHECK(seen[3] == W(A2, {1}));
  CHECK(leading(h) == std::pair(W(A2, {2, 1}), Coeff(3)));
  CHECK_THROWS_AS(leading(AssocPoly(A2)), std::invalid_argument);
  CHECK_THROWS_AS(f.add_term(W(A3, {1}), Coeff(1)), std::invalid_argument);
}

TEST_CASE("product, context product, monic") {
  AssocPoly f = P(A2, {{{2}, 1}, {{1}, -1}});
  AssocPoly g = P(A2, {{{1}, 1}, {{}, 2}});
  AssocPoly fg = P(A2, {{{2, 1}, 1}, {{1, 1}, -1}, {{2}, 2}, {{1}, -2}});
  CHECK(f * g == fg);
  CHECK(context_product(W(A2, {2}), g, W(A2, {1})) ==
        P(A2, {{{2, 1, 1}, 1}, {{2, 1}, 2}}));
  CHECK(context_product(W(A2, {}), f, W(A2, {})) == f);

  AssocPoly h = P(A2, {{{2, 1}, -2}, {{1}, 4}});
  CHECK(!is_monic(h));
  CHECK(monic(h) == P(A2, {{{2, 1}, 1}, {{1}, -2}}));
  CHECK(is_monic(monic(h)));
  CHECK_THROWS_AS(monic(AssocPoly(A2)), std::invalid_argument);
}

TEST_CASE("commutator expansion of fixed trees") {
  CHECK(expand(N(L(A2, 2), L(A2, 1))) ==
        P(A2, {{{2, 1}, 1}, {{1, 2}, -1}}));
  CHECK(expand(N(N(L(A2, 2), L(A2, 1)), L(A2, 1))) ==
        P(A2, {{{2, 1, 1}, 1}, {{1, 2, 1}, -2}, {{1, 1, 2}, 1}}));
  CHECK(expand(L(A2, 1)) == AssocPoly::from_word(W(A2, {1})));
}

TEST_CASE("expansion of the standard bracketing leads with the word itself") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& ranks : all_rank_words(2, n)) {
      Word u(A2, ranks);
      if (!is_alsw(u)) continue;
      auto [lw, lc] = leading(expand(bracket_std(u)));
      REQUIRE(lw == u);
      REQUIRE(lc == 1);
    }
  }
}

TEST_CASE("expansion is homogeneous with the leaf content") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& ranks : all_rank_words(2, n)) {
      Word u(A2, ranks);
      std::vector<int> content(u.ranks().begin(), u.ranks().end());
      std::sort(content.begin(), content.end());
      for (const NonassocWord& t : all_trees(u)) {
        AssocPoly e = expand(t);
        for (const auto& [w, c] : e.terms()) {
          std::vector<int> cw(w.ranks().begin(), w.ranks().end());
          std::sort(cw.begin(), cw.end());
          REQUIRE(cw == content);
        }
      }
    }
  }
}

TEST_CASE("rewriting a mixed bracketing into the NLSW basis") {
  NonassocWord t21 = N(L(A3, 2), L(A3, 1));
  NonassocWord t211 = N(t21, L(A3, 1));
  NonassocWord inp = N(N(N(L(A3, 3), L(A3, 2)), t21), t211);
  auto res = rewrite_to_nlsw(inp);
  REQUIRE(res.size() == 6);
  std::vector<NonassocWord> expect = {
      N(N(N(L(A3, 3), t211), t21), L(A3, 2)),
      N(N(L(A3, 3), N(t21, t211)), L(A3, 2)),
      N(N(L(A3, 3), t21), N(L(A3, 2), t211)),
      N(N(L(A3, 3), t211), N(L(A3, 2), t21)),
      N(L(A3, 3), N(N(L(A3, 2), t211), t21)),
      N(L(A3, 3), N(L(A3, 2), N(t21, t211))),
  };
  for (const auto& [c, tree] : res) {
    CHECK(c == 1);
    bool found = false;
    for (const NonassocWord& e : expect)
      if (tree.tree() == e) found = true;
    CHECK(found);
  }
  // all six are distinct, so coverage follows from the count
  for (std::size_t i = 0; i < res.size(); ++i)
    for (std::size_t j = i + 1; j < res.size(); ++j)
      CHECK(!(res[i].second.tree() == res[j].second.tree()));
}

TEST_CASE("rewriting fixed points and a single antisymmetry flip") {
  NonassocWord t211 = N(N(L(A2, 2), L(A2, 1)), L(A2, 1));
  auto res = rewrite_to_nlsw(t211);
  REQUIRE(res.size() == 1);
  CHECK(res[0].first == 1);
  CHECK(res[0].second.tree() == t211);

  auto flip = rewrite_to_nlsw(N(L(A2, 1), L(A2, 2)));
  REQUIRE(flip.size() == 1);
  CHECK(flip[0].first == -1);
  CHECK(flip[0].second.tree() == N(L(A2, 2), L(A2, 1)));
}

TEST_CASE("rewriting is sound and bounded below on every small tree") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& ranks : all_rank_words(2, n)) {
      Word u(A2, ranks);
      for (const NonassocWord& t : all_trees(u)) {
        auto res = rewrite_to_nlsw(t);
        AssocPoly sum(A2);
        for (const auto& [c, tree] : res) sum.add_scaled(expand(tree.tree()), c);
        REQUIRE(sum == expand(t));
        // decreasing deg-lex order of the underlying words
        for (std::size_t i = 1; i < res.size(); ++i)
          REQUIRE(deglex_less(res[i].second.word(), res[i - 1].second.word()));
        if (!t.is_leaf()) {
          Word wl = t.left().word(), wr = t.right().word();
          const Word& mn = lex_greater(wl, wr) ? wr : wl;
          for (const auto& [c, tree] : res)
            REQUIRE(lex_greater(tree.word(), mn));
        }
      }
    }
  }
}

TEST_CASE("NLSW-basis decomposition of associative polynomials") {
  AssocPoly comm = P(A2, {{{2, 1}, 1}, {{1, 2}, -1}});
  auto dec = lie_decompose(comm);
  REQUIRE(dec.has_value());
  REQUIRE(dec->size() == 1);
  CHECK((*dec)[0].first == 1);
  CHECK((*dec)[0].second.tree() == N(L(A2, 2), L(A2, 1)));

  CHECK(!lie_decompose(P(A2, {{{1, 2}, 1}})).has_value());
  CHECK(!lie_decompose(P(A2, {{{2, 1}, 1}})).has_value());
  auto empty = lie_decompose(AssocPoly(A2));
  REQUIRE(empty.has_value());
  CHECK(empty->empty());
}

TEST_CASE("decomposition agrees with collected rewriting") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& ranks : all_rank_words(2, n)) {
      Word u(A2, ranks);
      for (const NonassocWord& t : all_trees(u)) {
        auto dec = lie_decompose(expand(t));
        REQUIRE(dec.has_value());
        std::map<Word, Coeff, DegLexGreater> collected;
        for (const auto& [c, tree] : rewrite_to_nlsw(t))
          collected[tree.word()] += c;
        std::erase_if(collected, [](const auto& e) { return e.second == 0; });
        REQUIRE(dec->size() == collected.size());
        for (const auto& [c, tree] : *dec) {
          auto it = collected.find(tree.word());
          REQUIRE(it != collected.end());
          REQUIRE(it->second == c);
          REQUIRE(tree.tree() == bracket_std(tree.word()).tree());
        }
      }
    }
  }
}

TEST_CASE("certified Lie polynomials") {
  AssocPoly comm = P(A2, {{{2, 1}, 1}, {{1, 2}, -1}});
  LiePoly f(comm);
  CHECK(f.assoc() == comm);
  CHECK_THROWS_AS(LiePoly(P(A2, {{{1, 2}, 1}})), std::invalid_argument);
  CHECK(!LiePoly::try_from(P(A2, {{{2, 1}, 1}})).has_value());
  REQUIRE(LiePoly::try_from(comm).has_value());

  LiePoly x1(NlswTree(L(A2, 1)));
  LiePoly x2(NlswTree(L(A2, 2)));
  CHECK(lie_bracket(x2, x1) == f);
  CHECK(lie_bracket(x1, x2) == Coeff(-1) * f);
  CHECK((f - f).is_zero());
  CHECK(f - f == LiePoly::zero(A2));
  CHECK((f + f).assoc() == Coeff(2) * comm);

  LiePoly g = Coeff(-3) * f + x1;
  CHECK(monic(g).assoc() == monic(g.assoc()));
  // decomposition terms are strictly decreasing in deg-lex
  REQUIRE(g.decomposition().size() == 2);
  CHECK(g.decomposition()[0].second.word() == W(A2, {2, 1}));
  CHECK(g.decomposition()[0].first == -3);
  CHECK(g.decomposition()[1].second.word() == W(A2, {1}));
}

TEST_CASE("slotted expansion leads with the enclosing word") {
  std::size_t cases = 0;
  for (auto [q, maxn] : {std::pair{2, 9}, std::pair{3, 6}}) {
    const Alphabet& A = q == 2 ? A2 : A3;
    for (const Instance& inst : all_instances(A, q, maxn)) {
      ++cases;
      SpecialBracketing sb =
          special_bracket(inst.u, inst.a, inst.v, inst.b);
      AssocPoly e =
          expand_special(sb.slot_tree(), expand(bracket_std(inst.v)));
      auto [lw, lc] = leading(e);
      REQUIRE(lw == inst.u);
      REQUIRE(lc == 1);
    }
  }
  CHECK(cases > 500);
}

TEST_CASE("slotted expansion preserves letter content") {
  for (const Instance& inst : all_instances(A2, 2, 8)) {
    SpecialBracketing sb = special_bracket(inst.u, inst.a, inst.v, inst.b);
    AssocPoly e = expand_special(sb.slot_tree(), expand(bracket_std(inst.v)));
    std::vector<int> content(inst.u.ranks().begin(), inst.u.ranks().end());
    std::sort(content.begin(), content.end());
    for (const auto& [w, c] : e.terms()) {
      std::vector<int> cw(w.ranks().begin(), w.ranks().end());
      std::sort(cw.begin(), cw.end());
      REQUIRE(cw == content);
    }
  }
}

TEST_CASE("normal s-words on fixed data") {
  LiePoly s(NlswTree(N(L(A2, 2), L(A2, 1))));
  CHECK(normal_s_word(s, W(A2, {}), W(A2, {})) == s);
  CHECK(normal_s_word(s, W(A2, {}), W(A2, {1})).assoc() ==
        P(A2, {{{2, 1, 1}, 1}, {{1, 2, 1}, -2}, {{1, 1, 2}, 1}}));
  LiePoly left = normal_s_word(s, W(A2, {2}), W(A2, {}));
  CHECK(leading(left.assoc()).first == W(A2, {2, 2, 1}));
  CHECK(left.assoc() == expand(N(L(A2, 2), N(L(A2, 2), L(A2, 1)))));

  CHECK_THROWS_AS(normal_s_word(Coeff(2) * s, W(A2, {}), W(A2, {})),
                  std::invalid_argument);  // not monic
  CHECK_THROWS_AS(normal_s_word(s, W(A2, {}), W(A2, {2})),
                  std::invalid_argument);  // x2x1x2 is not an ALSW
}

TEST_CASE("normal s-word = a s b plus strictly smaller terms") {
  std::size_t cases = 0;
  for (const Instance& inst : all_instances(A2, 2, 8)) {
    ++cases;
    LiePoly s(bracket_std(inst.v));
    LiePoly e = normal_s_word(s, inst.a, inst.b);
    auto [lw, lc] = leading(e.assoc());
    REQUIRE(lw == inst.u);
    REQUIRE(lc == 1);
    AssocPoly rest =
        e.assoc() - context_product(inst.a, s.assoc(), inst.b);
    for (const auto& [w, c] : rest.terms()) REQUIRE(deglex_less(w, inst.u));
  }
  CHECK(cases > 400);
}

TEST_CASE("normal s-words with a nonhomogeneous s") {
  LiePoly s(P(A2, {{{2, 1}, 1}, {{1, 2}, -1}, {{1}, -1}}));
  Word sbar = leading(s.assoc()).first;
  REQUIRE(sbar == W(A2, {2, 1}));
  std::vector<std::pair<Word, Word>> contexts = {
      {W(A2, {}), W(A2, {1})},
      {W(A2, {2}), W(A2, {})},
      {W(A2, {2}), W(A2, {1})},
      {W(A2, {2, 2}), W(A2, {1, 1})},
  };
  for (const auto& [a, b] : contexts) {
    Word w0 = a * sbar * b;
    REQUIRE(is_alsw(w0));
    LiePoly e = normal_s_word(s, a, b);
    CHECK(leading(e.assoc()).first == w0);
    AssocPoly rest = e.assoc() - context_product(a, s.assoc(), b);
    for (const auto& [w, c] : rest.terms()) CHECK(deglex_less(w, w0));
  }
}
