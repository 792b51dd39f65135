#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gsb/io.hpp"
#include "test_util.hpp"

using namespace gsb;
using tutil::L;
using tutil::N;
using tutil::P;
using tutil::W;

namespace {

const Alphabet A2({"x1", "x2"});
const Alphabet A3({"x1", "x2", "x3"});

template <class F>
std::pair<std::size_t, std::size_t> error_pos(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.col()};
  }
  FAIL("expected a ParseError");
  return {0, 0};
}

}  // namespace

TEST_CASE("alphabet parsing and printing") {
  Alphabet a = parse_alphabet("x1 < x2 < x3");
  CHECK(a.size() == 3);
  CHECK(a.name(2) == "x3");
  CHECK(print_alphabet(a) == "x1 < x2 < x3");
  CHECK(parse_alphabet("a<b").size() == 2);
  CHECK(print_alphabet(parse_alphabet("a<b")) == "a < b");

  CHECK_THROWS_AS(parse_alphabet("x1 <"), ParseError);
  CHECK_THROWS_AS(parse_alphabet("x1 < x1"), ParseError);  // duplicate
  CHECK_THROWS_AS(parse_alphabet("x1 < 2x"), ParseError);  // bad name
  CHECK_THROWS_AS(parse_alphabet(""), ParseError);
  CHECK(error_pos([] { parse_alphabet("x1 <", 7); }) ==
        std::pair<std::size_t, std::size_t>{7, 5});
}

TEST_CASE("word parsing requires a unique segmentation") {
  CHECK(parse_word(A2, "x2x1x1") == W(A2, {2, 1, 1}));
  CHECK(parse_word(A2, "  x1  ") == W(A2, {1}));
  CHECK(parse_word(A2, "1") == W(A2, {}));
  CHECK(parse_word(A2, "1").str() == "1");

  // non-prefix codes still work when the segmentation is unique
  Alphabet ab({"a", "ab"});
  CHECK(parse_word(ab, "aab").size() == 2);
  CHECK(parse_word(ab, "ab").size() == 1);

  CHECK_THROWS_WITH_AS(
      parse_word(A2, "x3x1"),
      "line 1, col 1: 'x3x1' is not a concatenation of alphabet letters",
      ParseError);
  CHECK_THROWS_AS(parse_word(A2, ""), ParseError);

  Alphabet amb1({"a", "aa"});
  CHECK_THROWS_WITH_AS(parse_word(amb1, "aaa"),
                       "line 1, col 1: ambiguous word 'aaa'", ParseError);
  Alphabet amb2({"x", "xy", "y"});
  CHECK_THROWS_WITH_AS(parse_word(amb2, "xy"),
                       "line 1, col 1: ambiguous word 'xy'", ParseError);
  CHECK(parse_word(amb2, "yx").size() == 2);  // y, x is the only parse

  CHECK(error_pos([] { parse_word(A2, "  x3", 4); }) ==
        std::pair<std::size_t, std::size_t>{4, 3});
}

TEST_CASE("tree parsing and printing") {
  NonassocWord t = parse_tree(A2, "[x2 [x2 x1]]");
  CHECK(t == N(L(A2, 2), N(L(A2, 2), L(A2, 1))));
  CHECK(print_tree(t) == "[x2 [x2 x1]]");
  CHECK(parse_tree(A2, "x1") == L(A2, 1));
  CHECK(print_tree(L(A2, 1)) == "x1");
  CHECK(print_tree(bracket_std(W(A2, {2, 2, 1, 1, 2, 1})).tree()) ==
        "[[x2 [[x2 x1] x1]] [x2 x1]]");

  CHECK_THROWS_AS(parse_tree(A2, "[x2]"), ParseError);
  CHECK_THROWS_AS(parse_tree(A2, "[x2 x1"), ParseError);
  CHECK_THROWS_AS(parse_tree(A2, "[x2 x1] x1"), ParseError);
  CHECK_THROWS_AS(parse_tree(A2, "[x3 x1]"), ParseError);
  CHECK_THROWS_AS(parse_tree(A2, ""), ParseError);
  // tree leaves are single letters, not words
  CHECK_THROWS_AS(parse_tree(A2, "[x2x1 x1]"), ParseError);
}

TEST_CASE("polynomial parsing") {
  CHECK(parse_poly(A2, "x2x1 - x1x2") == P(A2, {{{2, 1}, 1}, {{1, 2}, -1}}));
  CHECK(parse_poly(A2, "[x2 x1] - 1/2 * x1") ==
        P(A2, {{{2, 1}, 1}, {{1, 2}, -1}, {{1}, Coeff(-1, 2)}}));
  CHECK(parse_poly(A2, "2 * 1") == P(A2, {{{}, 2}}));
  CHECK(parse_poly(A2, "2") == P(A2, {{{}, 2}}));
  CHECK(parse_poly(A2, "1/2*x1") == P(A2, {{{1}, Coeff(1, 2)}}));
  CHECK(parse_poly(A2, "10/4 * x1") == P(A2, {{{1}, Coeff(5, 2)}}));
  CHECK(parse_poly(A2, "-x1 + x1").is_zero());
  CHECK(parse_poly(A2, "- x1") == P(A2, {{{1}, -1}}));
  CHECK(parse_poly(A2, "x1x1 - x1") == P(A2, {{{1, 1}, 1}, {{1}, -1}}));
  // the same word may appear twice; coefficients merge
  CHECK(parse_poly(A2, "x1 + 2 * x1") == P(A2, {{{1}, 3}}));

  CHECK_THROWS_AS(parse_poly(A2, "2x1"), ParseError);
  CHECK_THROWS_AS(parse_poly(A2, "x1 x2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_poly(A2, "1/0"),
                       "line 1, col 1: invalid rational '1/0'", ParseError);
  CHECK_THROWS_WITH_AS(parse_poly(A2, "1/ 2"),
                       "line 1, col 3: expected digits after '/'", ParseError);
  CHECK_THROWS_AS(parse_poly(A2, "x1 +"), ParseError);
  CHECK_THROWS_AS(parse_poly(A2, "* x1"), ParseError);
  CHECK_THROWS_AS(parse_poly(A2, "x1 & x2"), ParseError);
  CHECK_THROWS_AS(parse_poly(A2, ""), ParseError);
}

TEST_CASE("canonical polynomial printing") {
  CHECK(print_poly(AssocPoly(A2)) == "0");
  CHECK(print_poly(P(A2, {{{2, 1}, 1}, {{1, 2}, -1}})) == "x2x1 - x1x2");
  CHECK(print_poly(P(A2, {{{1}, -1}})) == "-x1");
  CHECK(print_poly(P(A2, {{{1}, Coeff(-1, 2)}})) == "-1/2 * x1");
  CHECK(print_poly(P(A2, {{{}, 2}})) == "2");
  CHECK(print_poly(P(A2, {{{}, 1}})) == "1");
  CHECK(print_poly(P(A2, {{{}, Coeff(-3, 2)}, {{1}, 1}})) == "x1 - 3/2");
  CHECK(print_poly(P(A2, {{{1}, 2}, {{2}, 1}})) == "x2 + 2 * x1");
  CHECK(print_poly(P(A2, {{{2, 1, 1}, 1}, {{1, 2, 1}, -2}, {{1, 1, 2}, 1}})) ==
        "x2x1x1 - 2 * x1x2x1 + x1x1x2");
}

TEST_CASE("canonical Lie printing follows the basis decomposition") {
  LiePoly comm(bracket_std(W(A2, {2, 1})));
  CHECK(print_lie_poly(comm) == "[x2 x1]");
  CHECK(print_lie_poly(Coeff(-1) * comm) == "-[x2 x1]");
  LiePoly x1(NlswTree(L(A2, 1)));
  CHECK(print_lie_poly(Coeff(3, 2) * comm - x1) == "3/2 * [x2 x1] - x1");
  CHECK(print_lie_poly(LiePoly::zero(A2)) == "0");
}

TEST_CASE("printed polynomials parse back unchanged") {
  std::vector<AssocPoly> fixed = {
      AssocPoly(A2),
      P(A2, {{{}, 1}}),
      P(A2, {{{}, Coeff(-2, 3)}}),
      P(A2, {{{2, 1}, 1}, {{1, 2}, -1}, {{}, 1}}),
      P(A2, {{{1}, Coeff(1, 2)}, {{2}, Coeff(-5, 7)}}),
  };
  for (const AssocPoly& f : fixed) CHECK(parse_poly(A2, print_poly(f)) == f);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> nterms(0, 5), len(0, 4), letter(0, 1),
      num(-6, 6), den(1, 5);
  for (int i = 0; i < 200; ++i) {
    AssocPoly f(A2);
    int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
      std::vector<int> ranks(len(rng));
      for (int& r : ranks) r = letter(rng);
      f.add_term(Word(A2, ranks), Coeff(num(rng), den(rng)));
    }
    CHECK(parse_poly(A2, print_poly(f)) == f);
  }
}

TEST_CASE("printed trees parse back unchanged") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& ranks : tutil::all_rank_words(2, n)) {
      Word u(A2, ranks);
      if (!is_alsw(u)) continue;
      NonassocWord t = bracket_std(u).tree();
      CHECK(parse_tree(A2, print_tree(t)) == t);
    }
  }
}

TEST_CASE("presentation files") {
  std::istringstream in(
      "# free nilpotent example\n"
      "alphabet: x1 < x2   # two generators\n"
      "mode: lie\n"
      "degree_bound: 8\n"
      "\n"
      "[x2 [x2 x1]]\n"
      "[[x2 x1] x1]   # second relation\n");
  Presentation p = parse_presentation(in);
  CHECK(print_alphabet(p.alphabet) == "x1 < x2");
  CHECK(p.mode == Mode::lie);
  REQUIRE(p.degree_bound.has_value());
  CHECK(*p.degree_bound == 8);
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0] == expand(parse_tree(p.alphabet, "[x2 [x2 x1]]")));

  auto lies = lie_relations(p);
  REQUIRE(lies.size() == 2);
  CHECK(lies[1].assoc() == p.relations[1]);
}

TEST_CASE("presentation defaults and failure modes") {
  {
    std::istringstream in("alphabet: a < b\nba - ab\n");
    Presentation p = parse_presentation(in);
    CHECK(p.mode == Mode::assoc);
    CHECK(!p.degree_bound.has_value());
    CHECK(p.relations.size() == 1);
  }
  auto fails = [](const std::string& text) {
    std::istringstream in(text);
    std::pair<std::size_t, std::size_t> pos{0, 0};
    try {
      parse_presentation(in);
    } catch (const ParseError& e) {
      pos = {e.line(), e.col()};
    }
    return pos;
  };
  CHECK(fails("x1x1 - x1\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(fails("") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(fails("# only a comment\n") != std::pair<std::size_t, std::size_t>{0, 0});
  CHECK(fails("alphabet: x1 < x2\nalphabet: x1 < x2\n").first == 2);
  CHECK(fails("alphabet: x1\nmode: assoc\nmode: assoc\n").first == 3);
  CHECK(fails("alphabet: x1\nmode: weird\n").first == 2);
  CHECK(fails("alphabet: x1\ndegree_bound: -3\n").first == 2);
  CHECK(fails("alphabet: x1\ndegree_bound: 3\ndegree_bound: 4\n").first == 3);
  CHECK(fails("alphabet: x1\nbound: 3\n").first == 2);  // unknown header
  CHECK(fails("alphabet: x1\nx1 - x1\n").first == 2);   // zero relation
  CHECK(fails("alphabet: x1\nx2\n").first == 2);        // unknown letter

  {
    std::istringstream in("alphabet: x1 < x2\nx1x2\n");
    Presentation p = parse_presentation(in);
    CHECK_THROWS_WITH_AS(lie_relations(p), "relation 1 is not a Lie element",
                         std::invalid_argument);
  }
}

TEST_CASE("parse errors carry their source position") {
  try {
    parse_poly(A2, "x1 + 1/0", 3);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() == 6);
    CHECK(std::string(e.what()) == "line 3, col 6: invalid rational '1/0'");
  }
}
