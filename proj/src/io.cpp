#include "gsb/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>

namespace gsb {

namespace {

std::string at(const std::string& message, std::size_t line, std::size_t col) {
  std::ostringstream os;
  os << "line " << line << ", col " << col << ": " << message;
  return os.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string rational_str(const Coeff& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t col)
    : std::runtime_error(at(message, line, col)), line_(line), col_(col) {}

Alphabet parse_alphabet(std::string_view text, std::size_t line) {
  std::vector<std::string> names;
  std::size_t pos = 0;
  for (;;) {
    std::size_t cut = text.find('<', pos);
    std::string_view piece = (cut == std::string_view::npos)
                                 ? text.substr(pos)
                                 : text.substr(pos, cut - pos);
    std::string_view name = trim(piece);
    if (name.empty())
      throw ParseError("empty letter name in alphabet", line, pos + 1);
    names.emplace_back(name);
    if (cut == std::string_view::npos) break;
    pos = cut + 1;
  }
  try {
    return Alphabet(std::move(names));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), line, 1);
  }
}

std::string print_alphabet(const Alphabet& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (i) out += " < ";
    out += alphabet.name(static_cast<int>(i));
  }
  return out;
}

namespace {

// Unique segmentation of `text` into letter names; `col` is the 1-based
// column of text's first character, for error reporting.
Word segment_word(const Alphabet& alphabet, std::string_view text,
                  std::size_t line, std::size_t col) {
  if (text == "1") return Word(alphabet, {});
  const std::size_t n = text.size();
  std::vector<int> ways(n + 1, 0);  // parse counts, capped at 2
  std::vector<std::pair<std::size_t, int>> back(n + 1, {0, -1});
  ways[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t r = 0; r < alphabet.size(); ++r) {
      const std::string& name = alphabet.name(static_cast<int>(r));
      if (name.size() > i) continue;
      std::size_t start = i - name.size();
      if (ways[start] == 0 || text.substr(start, name.size()) != name)
        continue;
      ways[i] = std::min(ways[i] + ways[start], 2);
      back[i] = {start, static_cast<int>(r)};
    }
  }
  if (ways[n] == 0)
    throw ParseError("'" + std::string(text) +
                         "' is not a concatenation of alphabet letters",
                     line, col);
  if (ways[n] > 1)
    throw ParseError("ambiguous word '" + std::string(text) + "'", line, col);
  std::vector<int> ranks;
  for (std::size_t i = n; i > 0; i = back[i].first)
    ranks.push_back(back[i].second);
  std::reverse(ranks.begin(), ranks.end());
  return Word(alphabet, std::move(ranks));
}

}  // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text,
                std::size_t line) {
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty word text", line, 1);
  std::size_t col = 1 + static_cast<std::size_t>(body.data() - text.data());
  return segment_word(alphabet, body, line, col);
}

namespace {

struct Token {
  enum Kind { number, name, lbracket, rbracket, star, plus, minus, end };
  Kind kind;
  std::string_view text;
  std::size_t col;  // 1-based
};

std::vector<Token> lex(std::string_view text, std::size_t line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto is_word_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t col = i + 1;
    if (c == '[') {
      out.push_back({Token::lbracket, text.substr(i, 1), col});
      ++i;
    } else if (c == ']') {
      out.push_back({Token::rbracket, text.substr(i, 1), col});
      ++i;
    } else if (c == '*') {
      out.push_back({Token::star, text.substr(i, 1), col});
      ++i;
    } else if (c == '+') {
      out.push_back({Token::plus, text.substr(i, 1), col});
      ++i;
    } else if (c == '-') {
      out.push_back({Token::minus, text.substr(i, 1), col});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j < text.size() && text[j] == '/') {
        std::size_t k = j + 1;
        while (k < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[k])))
          ++k;
        if (k == j + 1)
          throw ParseError("expected digits after '/'", line, j + 2);
        j = k;
      }
      out.push_back({Token::number, text.substr(i, j - i), col});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) ++j;
      out.push_back({Token::name, text.substr(i, j - i), col});
      i = j;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line,
                       col);
    }
  }
  out.push_back({Token::end, {}, text.size() + 1});
  return out;
}

Coeff parse_rational(const Token& t, std::size_t line) {
  try {
    Coeff c{std::string(t.text)};
    return c;
  } catch (const std::exception&) {
    throw ParseError("invalid rational '" + std::string(t.text) + "'", line,
                     t.col);
  }
}

class TreeParser {
 public:
  TreeParser(const Alphabet& alphabet, const std::vector<Token>& toks,
             std::size_t line)
      : alphabet_(alphabet), toks_(toks), line_(line) {}

  // Parses one tree starting at toks_[pos]; advances pos past it.
  NonassocWord parse(std::size_t& pos) {
    const Token& t = toks_[pos];
    if (t.kind == Token::name) {
      auto rank = alphabet_.rank(t.text);
      if (!rank)
        throw ParseError("unknown letter '" + std::string(t.text) + "'",
                         line_, t.col);
      ++pos;
      return NonassocWord::leaf(alphabet_, *rank);
    }
    if (t.kind != Token::lbracket)
      throw ParseError("expected letter or '['", line_, t.col);
    ++pos;
    NonassocWord left = parse(pos);
    NonassocWord right = parse(pos);
    if (toks_[pos].kind != Token::rbracket)
      throw ParseError("expected ']'", line_, toks_[pos].col);
    ++pos;
    return NonassocWord::node(left, right);
  }

 private:
  const Alphabet& alphabet_;
  const std::vector<Token>& toks_;
  std::size_t line_;
};

}  // namespace

NonassocWord parse_tree(const Alphabet& alphabet, std::string_view text,
                        std::size_t line) {
  std::vector<Token> toks = lex(text, line);
  TreeParser parser(alphabet, toks, line);
  std::size_t pos = 0;
  NonassocWord t = parser.parse(pos);
  if (toks[pos].kind != Token::end)
    throw ParseError("trailing input after tree", line, toks[pos].col);
  return t;
}

std::string print_tree(const NonassocWord& t) {
  if (t.is_leaf()) return t.word().alphabet().name(t.letter());
  return "[" + print_tree(t.left()) + " " + print_tree(t.right()) + "]";
}

AssocPoly parse_poly(const Alphabet& alphabet, std::string_view text,
                     std::size_t line) {
  std::vector<Token> toks = lex(text, line);
  TreeParser trees(alphabet, toks, line);
  AssocPoly out(alphabet);
  std::size_t pos = 0;

  auto parse_factor = [&](Coeff scale) {
    const Token& t = toks[pos];
    if (t.kind == Token::name) {
      Word w = segment_word(alphabet, t.text, line, t.col);
      ++pos;
      out.add_term(w, scale);
    } else if (t.kind == Token::number && t.text == "1") {
      ++pos;
      out.add_term(Word(alphabet, {}), scale);
    } else if (t.kind == Token::lbracket) {
      out.add_scaled(expand(trees.parse(pos)), scale);
    } else {
      throw ParseError("expected a word or a bracketed tree", line, t.col);
    }
  };

  bool first = true;
  for (;;) {
    Coeff sign = 1;
    if (toks[pos].kind == Token::plus || toks[pos].kind == Token::minus) {
      if (toks[pos].kind == Token::minus) sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+', '-', or end of polynomial", line,
                       toks[pos].col);
    }
    const Token& t = toks[pos];
    if (t.kind == Token::number) {
      Coeff c = parse_rational(t, line);
      ++pos;
      if (toks[pos].kind == Token::star) {
        ++pos;
        parse_factor(sign * c);
      } else {
        out.add_term(Word(alphabet, {}), sign * c);
      }
    } else {
      parse_factor(sign);
    }
    first = false;
    if (toks[pos].kind == Token::end) break;
  }
  return out;
}

namespace {

// " + " / " - " between terms; a bare leading '-' on a negative first term.
void append_signed(std::string& out, bool first, const Coeff& c,
                   const std::string& body_if_unit, bool unit_allowed) {
  bool neg = c < 0;
  out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
  Coeff mag = neg ? Coeff(-c) : c;
  if (mag == 1 && unit_allowed)
    out += body_if_unit;
  else if (body_if_unit.empty())
    out += rational_str(mag);
  else
    out += rational_str(mag) + " * " + body_if_unit;
}

}  // namespace

std::string print_poly(const AssocPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : f.terms()) {
    append_signed(out, first, c, w.empty() ? std::string() : w.str(),
                  !w.empty());
    first = false;
  }
  return out;
}

std::string print_lie_poly(const LiePoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, t] : f.decomposition()) {
    append_signed(out, first, c, print_tree(t.tree()), true);
    first = false;
  }
  return out;
}

Presentation parse_presentation(std::istream& in) {
  std::optional<Alphabet> alphabet;
  Mode mode = Mode::assoc;
  bool mode_seen = false;
  std::optional<std::size_t> bound;
  std::vector<AssocPoly> relations;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view body(raw);
    if (std::size_t hash = body.find('#'); hash != std::string_view::npos)
      body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    std::size_t colon = body.find(':');
    std::size_t col0 = 1 + static_cast<std::size_t>(body.data() - raw.data());
    if (colon != std::string_view::npos) {
      std::string_view key = trim(body.substr(0, colon));
      std::string_view value = trim(body.substr(colon + 1));
      if (key == "alphabet") {
        if (alphabet) throw ParseError("duplicate alphabet line", line, col0);
        alphabet = parse_alphabet(value, line);
      } else if (key == "mode") {
        if (mode_seen) throw ParseError("duplicate mode line", line, col0);
        mode_seen = true;
        if (value == "lie")
          mode = Mode::lie;
        else if (value == "assoc")
          mode = Mode::assoc;
        else
          throw ParseError("mode must be 'lie' or 'assoc'", line, col0);
      } else if (key == "degree_bound") {
        if (bound) throw ParseError("duplicate degree_bound line", line, col0);
        std::size_t v = 0;
        auto [ptr, ec] =
            std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc{} || ptr != value.data() + value.size())
          throw ParseError("degree_bound must be a nonnegative integer", line,
                           col0);
        bound = v;
      } else {
        throw ParseError("unknown header '" + std::string(key) + "'", line,
                         col0);
      }
      continue;
    }
    if (!alphabet)
      throw ParseError("alphabet must be declared before relations", line,
                       col0);
    AssocPoly f = parse_poly(*alphabet, body, line);
    if (f.is_zero())
      throw ParseError("relation is identically zero", line, col0);
    relations.push_back(std::move(f));
  }
  if (!alphabet)
    throw ParseError("missing alphabet declaration", line ? line : 1, 1);
  return Presentation{std::move(*alphabet), mode, std::move(relations), bound};
}

std::vector<LiePoly> lie_relations(const Presentation& p) {
  std::vector<LiePoly> out;
  out.reserve(p.relations.size());
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    auto lp = LiePoly::try_from(p.relations[i]);
    if (!lp)
      throw std::invalid_argument("relation " + std::to_string(i + 1) +
                                  " is not a Lie element");
    out.push_back(std::move(*lp));
  }
  return out;
}

}  // namespace gsb
