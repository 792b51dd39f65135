#include "gsb/gsb_assoc.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>

namespace gsb {

namespace {

void require_monic(const std::vector<AssocPoly>& S, const char* who) {
  for (const AssocPoly& s : S)
    if (!is_monic(s)) throw std::invalid_argument(std::string(who) + ": relations must be monic");
}

bool deglex_less(const Word& a, const Word& b) {
  return compare_deglex(a, b) == std::strong_ordering::less;
}

}  // namespace

std::vector<std::pair<Word, AssocPoly>> compositions_assoc(const AssocPoly& f,
                                                           const AssocPoly& g) {
  if (!is_monic(f) || !is_monic(g))
    throw std::invalid_argument("compositions_assoc: relations must be monic");
  Word fb = leading(f).first;
  Word gb = leading(g).first;
  std::vector<std::pair<Word, AssocPoly>> out;
  // inclusion: fb = a gb b
  for (std::size_t i : factor_occurrences(fb, gb)) {
    Word a = fb.prefix(i);
    Word b = fb.suffix(i + gb.size());
    if (a.empty() && b.empty() && f == g) continue;
    out.emplace_back(fb, f - context_product(a, g, b));
  }
  // intersection: proper overlap, a suffix of fb equals a prefix of gb
  for (std::size_t t = 1; t < std::min(fb.size(), gb.size()); ++t) {
    if (!(fb.suffix(fb.size() - t) == gb.prefix(t))) continue;
    Word b = gb.suffix(t);
    Word a = fb.prefix(fb.size() - t);
    out.emplace_back(fb * b,
                     context_product(Word(fb.alphabet(), {}), f, b) -
                         context_product(a, g, Word(fb.alphabet(), {})));
  }
  return out;
}

namespace {

struct Hit {
  Word w;
  std::size_t rel;
  std::size_t pos;
};

// Largest reducible support word, first relation in list order, leftmost
// occurrence.
std::optional<Hit> find_reduction(const AssocPoly& h,
                                  const std::vector<Word>& leads) {
  for (const auto& [w, c] : h.terms()) {
    for (std::size_t k = 0; k < leads.size(); ++k) {
      auto occ = factor_occurrences(w, leads[k]);
      if (!occ.empty()) return Hit{w, k, occ.front()};
    }
  }
  return std::nullopt;
}

}  // namespace

AssocPoly reduce_assoc(const AssocPoly& h, const std::vector<AssocPoly>& S) {
  require_monic(S, "reduce_assoc");
  std::vector<Word> leads;
  leads.reserve(S.size());
  for (const AssocPoly& s : S) leads.push_back(leading(s).first);
  AssocPoly r = h;
  while (!r.is_zero()) {
    auto hit = find_reduction(r, leads);
    if (!hit) break;
    const Word& w = hit->w;
    Word a = w.prefix(hit->pos);
    Word b = w.suffix(hit->pos + leads[hit->rel].size());
    Coeff c = r.coeff(w);
    r.add_scaled(context_product(a, S[hit->rel], b), -c);
  }
  return r;
}

AssocPoly reduce_assoc_randomized(const AssocPoly& h,
                                  const std::vector<AssocPoly>& S,
                                  std::uint64_t seed) {
  require_monic(S, "reduce_assoc");
  std::mt19937_64 rng(seed);
  std::vector<Word> leads;
  for (const AssocPoly& s : S) leads.push_back(leading(s).first);
  AssocPoly r = h;
  for (;;) {
    // collect every (support word, relation, occurrence) triple and pick one
    struct Choice {
      Word w;
      std::size_t rel, pos;
    };
    std::vector<Choice> choices;
    for (const auto& [w, c] : r.terms())
      for (std::size_t k = 0; k < leads.size(); ++k)
        for (std::size_t p : factor_occurrences(w, leads[k]))
          choices.push_back({w, k, p});
    if (choices.empty()) break;
    const Choice& ch =
        choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
    Word a = ch.w.prefix(ch.pos);
    Word b = ch.w.suffix(ch.pos + leads[ch.rel].size());
    Coeff c = r.coeff(ch.w);
    r.add_scaled(context_product(a, S[ch.rel], b), -c);
  }
  return r;
}

std::vector<AssocPoly> interreduce_assoc(std::vector<AssocPoly> S) {
  std::vector<AssocPoly> T;
  for (const AssocPoly& s : S)
    if (!s.is_zero()) T.push_back(monic(s));
  for (;;) {
    bool again = false;
    for (std::size_t i = 0; i < T.size(); ++i) {
      std::vector<AssocPoly> rest;
      for (std::size_t k = 0; k < T.size(); ++k)
        if (k != i) rest.push_back(T[k]);
      AssocPoly r = reduce_assoc(T[i], rest);
      if (!(r == T[i])) {
        if (!r.is_zero()) rest.push_back(monic(r));
        T = std::move(rest);
        again = true;
        break;
      }
    }
    if (!again) break;
  }
  std::sort(T.begin(), T.end(), [](const AssocPoly& a, const AssocPoly& b) {
    return deglex_less(leading(a).first, leading(b).first);
  });
  return T;
}

namespace {

struct Candidate {
  Word w;
  std::size_t i, j;
  AssocPoly comp;
};

std::vector<Candidate> all_candidates(const std::vector<AssocPoly>& S) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j)
      for (auto& [w, c] : compositions_assoc(S[i], S[j]))
        out.push_back({w, i, j, std::move(c)});
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return deglex_less(a.w, b.w);
                   });
  return out;
}

}  // namespace

GsbStateAssoc complete_assoc(std::vector<AssocPoly> S,
                             std::size_t degree_bound) {
  for (const AssocPoly& s : S)
    if (!s.is_zero() && leading(s).first.size() > degree_bound)
      throw std::invalid_argument(
          "complete_assoc: degree bound below a relation degree");
  std::vector<AssocPoly> T = interreduce_assoc(std::move(S));
  std::vector<PendingComposition> pending;
  for (;;) {
    std::vector<Candidate> cands = all_candidates(T);
    pending.clear();
    for (const Candidate& c : cands)
      if (c.w.size() > degree_bound) pending.push_back({c.i, c.j, c.w});
    bool added = false;
    for (const Candidate& c : cands) {
      if (c.w.size() > degree_bound) continue;
      AssocPoly r = reduce_assoc(c.comp, T);
      if (!r.is_zero()) {
        T.push_back(monic(r));
        T = interreduce_assoc(std::move(T));
        added = true;
        break;
      }
    }
    if (!added) break;
  }
  GsbStateAssoc state;
  state.relations = std::move(T);
  state.status = pending.empty() ? GsbStatus::complete : GsbStatus::truncated;
  state.pending = std::move(pending);
  state.degree_bound = degree_bound;
  return state;
}

bool is_gsb_assoc(const std::vector<AssocPoly>& S, unsigned jobs) {
  require_monic(S, "is_gsb_assoc");
  std::vector<AssocPoly> comps;
  for (const AssocPoly& f : S)
    for (const AssocPoly& g : S)
      for (auto& [w, c] : compositions_assoc(f, g))
        comps.push_back(std::move(c));
  if (jobs <= 1 || comps.size() < 2) {
    for (const AssocPoly& c : comps)
      if (!reduce_assoc(c, S).is_zero()) return false;
    return true;
  }
  std::atomic<bool> ok{true};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      if (!ok.load(std::memory_order_relaxed)) return;
      std::size_t k = next.fetch_add(1);
      if (k >= comps.size()) return;
      if (!reduce_assoc(comps[k], S).is_zero())
        ok.store(false, std::memory_order_relaxed);
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<std::size_t>(jobs, comps.size());
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return ok.load();
}

std::vector<Word> red_words(const Alphabet& alphabet,
                            const std::vector<AssocPoly>& S,
                            std::size_t max_len) {
  require_monic(S, "red_words");
  std::vector<Word> leads;
  for (const AssocPoly& s : S) leads.push_back(leading(s).first);
  std::vector<Word> out;
  std::vector<int> digits;
  for (std::size_t n = 0; n <= max_len; ++n) {
    digits.assign(n, 0);
    for (;;) {
      Word w(alphabet, digits);
      bool reducible = false;
      for (const Word& l : leads)
        if (!factor_occurrences(w, l).empty()) {
          reducible = true;
          break;
        }
      if (!reducible) out.push_back(w);
      // odometer over ranks, most significant first
      std::size_t k = n;
      while (k > 0 && digits[k - 1] == static_cast<int>(alphabet.size()) - 1)
        digits[--k] = 0;
      if (k == 0) break;
      ++digits[k - 1];
    }
  }
  return out;
}

}  // namespace gsb
