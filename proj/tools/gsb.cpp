// gsb: Lyndon-Shirshov word utilities and Gröbner-Shirshov basis
// computations for free Lie and free associative algebras.
//
// Exit codes: 0 success, 1 mathematical negative (check/crosscheck failed),
// 2 input or usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsb/bracketing.hpp"
#include "gsb/gsb_assoc.hpp"
#include "gsb/gsb_lie.hpp"
#include "gsb/io.hpp"
#include "gsb/poly.hpp"
#include "gsb/words.hpp"

namespace {

using json = nlohmann::ordered_json;

std::string output_format = "text";

bool json_output() { return output_format == "json"; }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

gsb::Presentation load_presentation(const std::string& path) {
  if (path == "-") return gsb::parse_presentation(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return gsb::parse_presentation(in);
}

std::vector<gsb::AssocPoly> monic_assoc(const gsb::Presentation& p) {
  std::vector<gsb::AssocPoly> out;
  out.reserve(p.relations.size());
  for (const gsb::AssocPoly& r : p.relations) out.push_back(gsb::monic(r));
  return out;
}

std::vector<gsb::LiePoly> monic_lie(const gsb::Presentation& p) {
  std::vector<gsb::LiePoly> out;
  for (gsb::LiePoly& r : gsb::lie_relations(p)) out.push_back(gsb::monic(r));
  return out;
}

std::string status_str(gsb::GsbStatus s, std::size_t bound) {
  return s == gsb::GsbStatus::complete
             ? "complete"
             : "truncated degree=" + std::to_string(bound);
}

std::size_t resolve_bound(const gsb::Presentation& p,
                          std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (p.degree_bound) return *p.degree_bound;
  throw std::runtime_error(
      "no degree bound: pass --max-deg or add a degree_bound header");
}

int run_lsw(const std::string& alphabet_str, int max_len, bool with_bracket,
            bool count_only) {
  gsb::Alphabet alphabet = gsb::parse_alphabet(alphabet_str);
  std::vector<gsb::Word> words = gsb::enumerate_alsw(alphabet, max_len);
  std::map<std::size_t, std::vector<gsb::Word>> by_deg;
  for (int d = 1; d <= max_len; ++d) by_deg[d];
  for (const gsb::Word& w : words) by_deg[w.size()].push_back(w);
  if (json_output()) {
    json degrees = json::array();
    for (const auto& [d, ws] : by_deg) {
      json entry{{"degree", d}, {"count", ws.size()}};
      if (!count_only) {
        json names = json::array();
        for (const gsb::Word& w : ws) names.push_back(w.str());
        entry["words"] = names;
        if (with_bracket) {
          json trees = json::array();
          for (const gsb::Word& w : ws)
            trees.push_back(gsb::print_tree(gsb::bracket_std(w)));
          entry["trees"] = trees;
        }
      }
      degrees.push_back(entry);
    }
    emit(json{{"alphabet", alphabet.letters()},
              {"max_len", max_len},
              {"total", words.size()},
              {"degrees", degrees}});
    return 0;
  }
  for (const auto& [d, ws] : by_deg) {
    if (count_only) {
      std::cout << "degree " << d << ": " << ws.size() << "\n";
      continue;
    }
    std::cout << "# degree " << d << ": " << ws.size() << "\n";
    for (const gsb::Word& w : ws) {
      std::cout << w.str();
      if (with_bracket)
        std::cout << "\t" << gsb::print_tree(gsb::bracket_std(w));
      std::cout << "\n";
    }
  }
  return 0;
}

int run_factor(const std::string& alphabet_str, const std::string& word_str) {
  gsb::Alphabet alphabet = gsb::parse_alphabet(alphabet_str);
  gsb::Word w = gsb::parse_word(alphabet, word_str);
  std::vector<gsb::Word> factors = gsb::lyndon_factorize(w);
  if (json_output()) {
    json names = json::array();
    for (const gsb::Word& f : factors) names.push_back(f.str());
    emit(json{{"word", w.str()}, {"factors", names}});
    return 0;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) std::cout << " | ";
    std::cout << factors[i].str();
  }
  std::cout << "\n";
  return 0;
}

int run_bracket(const std::string& alphabet_str, const std::string& word_str,
                const std::string& method) {
  gsb::Alphabet alphabet = gsb::parse_alphabet(alphabet_str);
  gsb::Word w = gsb::parse_word(alphabet, word_str);
  gsb::NlswTree t =
      method == "downup" ? gsb::bracket_down_up(w) : gsb::bracket_std(w);
  if (json_output()) {
    emit(json{{"word", w.str()},
              {"method", method},
              {"tree", gsb::print_tree(t.tree())}});
    return 0;
  }
  std::cout << gsb::print_tree(t.tree()) << "\n";
  return 0;
}

int run_nf(const std::string& pres_path, const std::string& poly_str) {
  gsb::Presentation p = load_presentation(pres_path);
  gsb::AssocPoly h = gsb::parse_poly(p.alphabet, poly_str);
  std::string nf;
  if (p.mode == gsb::Mode::assoc) {
    nf = gsb::print_poly(gsb::reduce_assoc(h, monic_assoc(p)));
  } else {
    auto hl = gsb::LiePoly::try_from(h);
    if (!hl) throw std::runtime_error("input is not a Lie element");
    nf = gsb::print_lie_poly(gsb::lie_reduce(*hl, monic_lie(p)).normal_form);
  }
  if (json_output()) {
    emit(json{{"mode", p.mode == gsb::Mode::lie ? "lie" : "assoc"},
              {"normal_form", nf}});
    return 0;
  }
  std::cout << nf << "\n";
  return 0;
}

json pending_json(const std::vector<gsb::PendingComposition>& pending) {
  json out = json::array();
  for (const gsb::PendingComposition& p : pending)
    out.push_back(json{{"i", p.i}, {"j", p.j}, {"word", p.w.str()}});
  return out;
}

int run_complete(const std::string& pres_path,
                 std::optional<std::size_t> max_deg) {
  gsb::Presentation p = load_presentation(pres_path);
  std::size_t bound = resolve_bound(p, max_deg);
  std::vector<std::string> lines;
  gsb::GsbStatus status;
  json pending;
  if (p.mode == gsb::Mode::assoc) {
    gsb::GsbStateAssoc st = gsb::complete_assoc(p.relations, bound);
    for (const gsb::AssocPoly& r : st.relations)
      lines.push_back(gsb::print_poly(r));
    status = st.status;
    pending = pending_json(st.pending);
  } else {
    gsb::GsbStateLie st = gsb::complete_lie(gsb::lie_relations(p), bound);
    for (const gsb::LiePoly& r : st.relations)
      lines.push_back(gsb::print_lie_poly(r));
    status = st.status;
    pending = pending_json(st.pending);
  }
  if (json_output()) {
    emit(json{{"mode", p.mode == gsb::Mode::lie ? "lie" : "assoc"},
              {"degree_bound", bound},
              {"status",
               status == gsb::GsbStatus::complete ? "complete" : "truncated"},
              {"relations", lines},
              {"pending", pending}});
    return 0;
  }
  for (const std::string& l : lines) std::cout << l << "\n";
  std::cout << status_str(status, bound) << "\n";
  return 0;
}

int run_check(const std::string& pres_path, unsigned jobs) {
  gsb::Presentation p = load_presentation(pres_path);
  bool ok = p.mode == gsb::Mode::assoc
                ? gsb::is_gsb_assoc(monic_assoc(p), jobs)
                : gsb::is_gsb_lie(monic_lie(p), jobs);
  if (json_output())
    emit(json{{"gsb", ok}});
  else
    std::cout << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int run_basis(const std::string& pres_path, std::size_t max_deg) {
  gsb::Presentation p = load_presentation(pres_path);
  if (p.mode == gsb::Mode::assoc) {
    std::vector<gsb::Word> words =
        gsb::red_words(p.alphabet, monic_assoc(p), max_deg);
    std::map<std::size_t, std::vector<std::string>> by_deg;
    for (std::size_t d = 0; d <= max_deg; ++d) by_deg[d];
    for (const gsb::Word& w : words) by_deg[w.size()].push_back(w.str());
    if (json_output()) {
      json degrees = json::array();
      for (const auto& [d, ws] : by_deg)
        degrees.push_back(
            json{{"degree", d}, {"count", ws.size()}, {"words", ws}});
      emit(json{{"mode", "assoc"},
                {"max_len", max_deg},
                {"total", words.size()},
                {"degrees", degrees}});
      return 0;
    }
    for (const auto& [d, ws] : by_deg) {
      std::cout << "# degree " << d << ": " << ws.size() << "\n";
      for (const std::string& s : ws) std::cout << s << "\n";
    }
    return 0;
  }
  std::vector<gsb::NlswTree> trees =
      gsb::red_nlsw(p.alphabet, monic_lie(p), max_deg);
  std::map<std::size_t, std::vector<std::string>> by_deg;
  for (std::size_t d = 1; d <= max_deg; ++d) by_deg[d];
  std::size_t total = 0;
  for (const gsb::NlswTree& t : trees) {
    by_deg[t.word().size()].push_back(gsb::print_tree(t.tree()));
    ++total;
  }
  if (json_output()) {
    json degrees = json::array();
    for (const auto& [d, ts] : by_deg)
      degrees.push_back(
          json{{"degree", d}, {"count", ts.size()}, {"trees", ts}});
    emit(json{{"mode", "lie"},
              {"max_deg", max_deg},
              {"total", total},
              {"degrees", degrees}});
    return 0;
  }
  for (const auto& [d, ts] : by_deg) {
    std::cout << "# degree " << d << ": " << ts.size() << "\n";
    for (const std::string& s : ts) std::cout << s << "\n";
  }
  return 0;
}

int run_crosscheck(const std::string& pres_path, unsigned jobs) {
  gsb::Presentation p = load_presentation(pres_path);
  gsb::CrosscheckResult r = gsb::crosscheck_lie_assoc(monic_lie(p), jobs);
  if (json_output()) {
    emit(json{{"lie", r.lie}, {"assoc", r.assoc}, {"agree", r.agree()}});
  } else {
    std::cout << "lie: " << (r.lie ? "true" : "false") << "\n"
              << "assoc: " << (r.assoc ? "true" : "false") << "\n"
              << "agree: " << (r.agree() ? "true" : "false") << "\n";
  }
  return r.agree() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Lyndon-Shirshov words and Gröbner-Shirshov bases for free Lie and "
      "associative algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", output_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string alphabet_str, word_str, method = "std", pres_path, poly_str;
  int max_len = 0;
  std::optional<std::size_t> max_deg_flag;
  std::size_t basis_deg = 0;
  unsigned jobs = 1;
  bool with_bracket = false, count_only = false;
  int rc = 0;

  CLI::App* lsw = app.add_subcommand(
      "lsw", "Enumerate Lyndon-Shirshov words by degree");
  lsw->add_option("--alphabet", alphabet_str, "e.g. \"x1 < x2\"")->required();
  lsw->add_option("--max-len", max_len, "Largest length")->required();
  lsw->add_flag("--bracket", with_bracket, "Also print standard bracketings");
  lsw->add_flag("--count-only", count_only, "Only per-degree counts");
  lsw->callback(
      [&] { rc = run_lsw(alphabet_str, max_len, with_bracket, count_only); });

  CLI::App* factor =
      app.add_subcommand("factor", "Nonincreasing Lyndon-Shirshov factorization");
  factor->add_option("--alphabet", alphabet_str)->required();
  factor->add_option("word", word_str)->required();
  factor->callback([&] { rc = run_factor(alphabet_str, word_str); });

  CLI::App* bracket = app.add_subcommand(
      "bracket", "Standard bracketing of a Lyndon-Shirshov word");
  bracket->add_option("--alphabet", alphabet_str)->required();
  bracket->add_option("--method", method, "std or downup")
      ->check(CLI::IsMember({"std", "downup"}));
  bracket->add_option("word", word_str)->required();
  bracket->callback([&] { rc = run_bracket(alphabet_str, word_str, method); });

  CLI::App* nf = app.add_subcommand(
      "nf", "Normal form of a polynomial modulo a presentation's relations");
  nf->add_option("presentation", pres_path, "File path or - for stdin")
      ->required();
  nf->add_option("poly", poly_str)->required();
  nf->callback([&] { rc = run_nf(pres_path, poly_str); });

  CLI::App* complete =
      app.add_subcommand("complete", "Degree-bounded completion");
  complete->add_option("presentation", pres_path)->required();
  complete->add_option("--max-deg", max_deg_flag,
                       "Overrides the file's degree_bound");
  complete->callback([&] { rc = run_complete(pres_path, max_deg_flag); });

  CLI::App* check = app.add_subcommand(
      "check", "Is the relation set a Gröbner-Shirshov basis?");
  check->add_option("presentation", pres_path)->required();
  check->add_option("--jobs", jobs, "Worker threads");
  check->callback([&] { rc = run_check(pres_path, jobs); });

  CLI::App* basis = app.add_subcommand(
      "basis", "Irreducible words / trees up to a degree");
  basis->add_option("presentation", pres_path)->required();
  basis->add_option("--max-deg,--max-len", basis_deg, "Largest degree")
      ->required();
  basis->callback([&] { rc = run_basis(pres_path, basis_deg); });

  CLI::App* crosscheck = app.add_subcommand(
      "crosscheck", "Compare the Lie and associative basis checks");
  crosscheck->add_option("presentation", pres_path)->required();
  crosscheck->add_option("--jobs", jobs, "Worker threads");
  crosscheck->callback([&] { rc = run_crosscheck(pres_path, jobs); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
