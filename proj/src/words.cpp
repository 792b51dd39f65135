#include "gsb/words.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gsb {

namespace {

bool valid_letter_name(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void require_same_alphabet(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet()))
    throw std::invalid_argument("alphabet mismatch");
}

std::strong_ordering lex_ranks(const std::vector<int>& a,
                               const std::vector<int>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  if (a.size() == b.size()) return std::strong_ordering::equal;
  // proper prefix is greater
  return a.size() < b.size() ? std::strong_ordering::greater
                             : std::strong_ordering::less;
}

bool alsw_ranks(const std::vector<int>& u) {
  // strictly greater than every proper nonempty suffix
  for (std::size_t i = 1; i < u.size(); ++i) {
    std::size_t m = u.size() - i;
    std::strong_ordering c = std::strong_ordering::equal;
    for (std::size_t k = 0; k < m; ++k) {
      if (u[k] != u[i + k]) {
        c = u[k] <=> u[i + k];
        break;
      }
    }
    // equal up to the suffix's length: the suffix is a prefix of u, hence
    // greater than u
    if (c != std::strong_ordering::greater) return false;
  }
  return true;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> letters) {
  if (letters.empty()) throw std::invalid_argument("alphabet: no letters");
  for (const auto& l : letters)
    if (!valid_letter_name(l))
      throw std::invalid_argument("alphabet: bad letter name '" + l + "'");
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (letters[i] == letters[j])
        throw std::invalid_argument("alphabet: duplicate letter '" +
                                    letters[i] + "'");
  letters_ = std::make_shared<const std::vector<std::string>>(std::move(letters));
}

const std::string& Alphabet::name(int rank) const {
  if (rank < 0 || static_cast<std::size_t>(rank) >= letters_->size())
    throw std::invalid_argument("alphabet: rank out of range");
  return (*letters_)[static_cast<std::size_t>(rank)];
}

std::optional<int> Alphabet::rank(std::string_view name) const {
  for (std::size_t i = 0; i < letters_->size(); ++i)
    if ((*letters_)[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

Word::Word(Alphabet alphabet, std::vector<int> ranks)
    : alphabet_(std::move(alphabet)), ranks_(std::move(ranks)) {
  for (int r : ranks_)
    if (r < 0 || static_cast<std::size_t>(r) >= alphabet_.size())
      throw std::invalid_argument("word: letter rank out of range");
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos)
    throw std::invalid_argument("word: subword out of range");
  return Word(alphabet_, std::vector<int>(ranks_.begin() + pos,
                                          ranks_.begin() + pos + len));
}

std::string Word::str() const {
  if (empty()) return "1";
  std::string out;
  for (int r : ranks_) out += alphabet_.name(r);
  return out;
}

Word operator*(const Word& a, const Word& b) {
  require_same_alphabet(a, b);
  std::vector<int> r = a.ranks_;
  r.insert(r.end(), b.ranks_.begin(), b.ranks_.end());
  return Word(a.alphabet_, std::move(r));
}

int fir(const Word& u) {
  if (u.empty()) throw std::invalid_argument("fir: empty word");
  return u[0];
}

int min_letter(const Word& u) {
  if (u.empty()) throw std::invalid_argument("min_letter: empty word");
  return *std::min_element(u.ranks().begin(), u.ranks().end());
}

std::strong_ordering compare_shirshov_lex(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  return lex_ranks(u.ranks(), v.ranks());
}

std::strong_ordering compare_deglex(const Word& u, const Word& v) {
  require_same_alphabet(u, v);
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return std::strong_ordering::equal;
}

bool is_alsw(const Word& u) {
  if (u.empty()) throw std::invalid_argument("is_alsw: empty word");
  return alsw_ranks(u.ranks());
}

namespace {

std::vector<EliminationLetter> eliminate_ranks(const std::vector<int>& u,
                                               int beta) {
  if (u.empty()) throw std::invalid_argument("eliminate: empty word");
  for (int r : u)
    if (r < beta)
      throw std::invalid_argument("eliminate: letter below the chosen minimum");
  if (u.size() == 1) return {{u[0], 0}};
  if (u[0] == beta)
    throw std::invalid_argument("eliminate: word starts with its minimal letter");
  std::vector<EliminationLetter> out;
  std::size_t i = 0;
  while (i < u.size()) {
    int base = u[i++];
    int tail = 0;
    while (i < u.size() && u[i] == beta) {
      ++tail;
      ++i;
    }
    out.push_back({base, tail});
  }
  return out;
}

// Map derived letters to dense ranks compatible with their order.
std::vector<int> rerank(const std::vector<EliminationLetter>& w) {
  std::vector<EliminationLetter> uniq = w;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> out;
  out.reserve(w.size());
  for (const auto& p : w) {
    auto it = std::lower_bound(uniq.begin(), uniq.end(), p);
    out.push_back(static_cast<int>(it - uniq.begin()));
  }
  return out;
}

}  // namespace

std::vector<EliminationLetter> eliminate(const Word& u) {
  if (u.empty()) throw std::invalid_argument("eliminate: empty word");
  return eliminate_ranks(u.ranks(), min_letter(u));
}

std::vector<EliminationLetter> eliminate(const Word& u, int beta) {
  return eliminate_ranks(u.ranks(), beta);
}

bool is_alsw_via_elimination(const Word& u) {
  if (u.empty()) throw std::invalid_argument("is_alsw: empty word");
  std::vector<int> w = u.ranks();
  while (w.size() > 1) {
    int beta = *std::min_element(w.begin(), w.end());
    if (w[0] == beta) return false;
    w = rerank(eliminate_ranks(w, beta));
  }
  return true;
}

std::vector<Word> lyndon_factorize(const Word& u) {
  std::vector<Word> factors;  // the empty word is the empty product
  std::size_t end = u.size();
  while (end > 0) {
    // the last factor is the longest ALSW suffix
    std::vector<int> head(u.ranks().begin(), u.ranks().begin() + end);
    std::size_t i = 0;
    while (!alsw_ranks(std::vector<int>(head.begin() + i, head.end()))) ++i;
    factors.push_back(u.sub(i, end - i));
    end = i;
  }
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::pair<Word, Word> longest_alsw_proper_suffix(const Word& u) {
  if (!is_alsw(u))
    throw std::invalid_argument("longest_alsw_proper_suffix: not an ALSW");
  if (u.size() < 2)
    throw std::invalid_argument("longest_alsw_proper_suffix: single letter");
  for (std::size_t i = 1; i < u.size(); ++i) {
    Word w = u.suffix(i);
    if (is_alsw(w)) return {u.prefix(i), w};
  }
  throw std::logic_error("longest_alsw_proper_suffix: unreachable");
}

std::vector<Word> enumerate_alsw(const Alphabet& alphabet, int max_len) {
  if (max_len < 1) throw std::invalid_argument("enumerate_alsw: max_len < 1");
  int k = static_cast<int>(alphabet.size());
  // Duval generation of classical Lyndon words of length <= max_len over the
  // rank-complemented alphabet; complementing turns "smaller than all
  // rotations" into "greater than all rotations", which is the ALSW property.
  std::vector<Word> out;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    std::vector<int> alsw(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) alsw[i] = k - 1 - w[i];
    out.emplace_back(alphabet, std::move(alsw));
    std::size_t m = w.size();
    while (w.size() < static_cast<std::size_t>(max_len))
      w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return compare_deglex(a, b) == std::strong_ordering::less;
  });
  return out;
}

std::vector<std::size_t> factor_occurrences(const Word& w, const Word& factor) {
  require_same_alphabet(w, factor);
  std::vector<std::size_t> out;
  if (factor.size() > w.size()) return out;
  for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
    bool hit = true;
    for (std::size_t k = 0; k < factor.size(); ++k)
      if (w[i + k] != factor[k]) {
        hit = false;
        break;
      }
    if (hit) out.push_back(i);
  }
  return out;
}

}  // namespace gsb
