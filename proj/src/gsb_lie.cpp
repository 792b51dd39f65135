#include "gsb/gsb_lie.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace gsb {

namespace {

void require_monic(const std::vector<LiePoly>& S, const char* who) {
  for (const LiePoly& s : S)
    if (!is_monic(s.assoc()))
      throw std::invalid_argument(std::string(who) + ": relations must be monic");
}

bool deglex_less(const Word& a, const Word& b) {
  return compare_deglex(a, b) == std::strong_ordering::less;
}

Word lead_word(const LiePoly& f) { return leading(f.assoc()).first; }

}  // namespace

std::vector<std::pair<Word, LiePoly>> compositions_lie(const LiePoly& f,
                                                       const LiePoly& g) {
  if (!is_monic(f.assoc()) || !is_monic(g.assoc()))
    throw std::invalid_argument("compositions_lie: relations must be monic");
  Word fb = lead_word(f);
  Word gb = lead_word(g);
  std::vector<std::pair<Word, LiePoly>> out;
  // inclusion: fb = a gb b
  for (std::size_t i : factor_occurrences(fb, gb)) {
    Word a = fb.prefix(i);
    Word b = fb.suffix(i + gb.size());
    if (a.empty() && b.empty() && f == g) continue;
    out.emplace_back(fb, f - normal_s_word(g, a, b));
  }
  // intersection: w = fb . (tail of gb), proper overlap of length t
  for (std::size_t t = 1; t < std::min(fb.size(), gb.size()); ++t) {
    if (!(fb.suffix(fb.size() - t) == gb.prefix(t))) continue;
    Word b = gb.suffix(t);
    Word a = fb.prefix(fb.size() - t);
    Word empty(fb.alphabet(), {});
    out.emplace_back(fb * b,
                     normal_s_word(f, empty, b) - normal_s_word(g, a, empty));
  }
  return out;
}

LieReduction lie_reduce(const LiePoly& h, const std::vector<LiePoly>& S) {
  require_monic(S, "lie_reduce");
  std::vector<Word> leads;
  leads.reserve(S.size());
  for (const LiePoly& s : S) leads.push_back(lead_word(s));
  AssocPoly rest = h.assoc();
  LieReduction out{{}, {}, LiePoly::zero(h.alphabet())};
  while (!rest.is_zero()) {
    auto [w, c] = leading(rest);
    if (!is_alsw(w))
      throw std::logic_error("lie_reduce: leading word is not an ALSW");
    bool hit = false;
    for (std::size_t k = 0; k < leads.size() && !hit; ++k) {
      auto occ = factor_occurrences(w, leads[k]);
      if (occ.empty()) continue;
      hit = true;
      Word a = w.prefix(occ.front());
      Word b = w.suffix(occ.front() + leads[k].size());
      rest.add_scaled(normal_s_word(S[k], a, b).assoc(), -c);
      out.used.push_back({c, k, std::move(a), std::move(b)});
    }
    if (!hit) {
      NlswTree t = bracket_std(w);
      rest.add_scaled(expand(t), -c);
      out.irreducible.emplace_back(c, t);
      out.normal_form = out.normal_form + c * LiePoly(t);
    }
  }
  return out;
}

std::vector<LiePoly> interreduce_lie(std::vector<LiePoly> S) {
  std::vector<LiePoly> T;
  for (const LiePoly& s : S)
    if (!s.is_zero()) T.push_back(monic(s));
  for (;;) {
    bool again = false;
    for (std::size_t i = 0; i < T.size(); ++i) {
      std::vector<LiePoly> rest;
      for (std::size_t k = 0; k < T.size(); ++k)
        if (k != i) rest.push_back(T[k]);
      LiePoly r = lie_reduce(T[i], rest).normal_form;
      if (!(r == T[i])) {
        if (!r.is_zero()) rest.push_back(monic(r));
        T = std::move(rest);
        again = true;
        break;
      }
    }
    if (!again) break;
  }
  std::sort(T.begin(), T.end(), [](const LiePoly& a, const LiePoly& b) {
    return deglex_less(leading(a.assoc()).first, leading(b.assoc()).first);
  });
  return T;
}

namespace {

struct Candidate {
  Word w;
  std::size_t i, j;
  LiePoly comp;
};

std::vector<Candidate> all_candidates(const std::vector<LiePoly>& S) {
  std::vector<Candidate> out;
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = 0; j < S.size(); ++j)
      for (auto& [w, c] : compositions_lie(S[i], S[j]))
        out.push_back({w, i, j, std::move(c)});
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) {
                     return deglex_less(a.w, b.w);
                   });
  return out;
}

}  // namespace

GsbStateLie complete_lie(std::vector<LiePoly> S, std::size_t degree_bound) {
  for (const LiePoly& s : S)
    if (!s.is_zero() && leading(s.assoc()).first.size() > degree_bound)
      throw std::invalid_argument(
          "complete_lie: degree bound below a relation degree");
  std::vector<LiePoly> T = interreduce_lie(std::move(S));
  std::vector<PendingComposition> pending;
  for (;;) {
    std::vector<Candidate> cands = all_candidates(T);
    pending.clear();
    for (const Candidate& c : cands)
      if (c.w.size() > degree_bound) pending.push_back({c.i, c.j, c.w});
    bool added = false;
    for (const Candidate& c : cands) {
      if (c.w.size() > degree_bound) continue;
      LiePoly r = lie_reduce(c.comp, T).normal_form;
      if (!r.is_zero()) {
        T.push_back(monic(r));
        T = interreduce_lie(std::move(T));
        added = true;
        break;
      }
    }
    if (!added) break;
  }
  GsbStateLie state;
  state.relations = std::move(T);
  state.status = pending.empty() ? GsbStatus::complete : GsbStatus::truncated;
  state.pending = std::move(pending);
  state.degree_bound = degree_bound;
  return state;
}

bool is_gsb_lie(const std::vector<LiePoly>& S, unsigned jobs) {
  require_monic(S, "is_gsb_lie");
  std::vector<LiePoly> comps;
  for (const LiePoly& f : S)
    for (const LiePoly& g : S)
      for (auto& [w, c] : compositions_lie(f, g)) comps.push_back(std::move(c));
  if (jobs <= 1 || comps.size() < 2) {
    for (const LiePoly& c : comps)
      if (!lie_reduce(c, S).normal_form.is_zero()) return false;
    return true;
  }
  std::atomic<bool> ok{true};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      if (!ok.load(std::memory_order_relaxed)) return;
      std::size_t k = next.fetch_add(1);
      if (k >= comps.size()) return;
      if (!lie_reduce(comps[k], S).normal_form.is_zero())
        ok.store(false, std::memory_order_relaxed);
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<std::size_t>(jobs, comps.size());
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return ok.load();
}

std::vector<NlswTree> red_nlsw(const Alphabet& alphabet,
                               const std::vector<LiePoly>& S,
                               std::size_t max_deg) {
  require_monic(S, "red_nlsw");
  std::vector<Word> leads;
  for (const LiePoly& s : S) leads.push_back(lead_word(s));
  std::vector<NlswTree> out;
  for (const Word& u : enumerate_alsw(alphabet, max_deg)) {
    bool reducible = false;
    for (const Word& l : leads)
      if (!factor_occurrences(u, l).empty()) {
        reducible = true;
        break;
      }
    if (!reducible) out.push_back(bracket_std(u));
  }
  return out;
}

CrosscheckResult crosscheck_lie_assoc(const std::vector<LiePoly>& S,
                                      unsigned jobs) {
  std::vector<AssocPoly> A;
  A.reserve(S.size());
  for (const LiePoly& s : S) A.push_back(s.assoc());
  CrosscheckResult r;
  r.lie = is_gsb_lie(S, jobs);
  r.assoc = is_gsb_assoc(A, jobs);
  return r;
}

}  // namespace gsb
