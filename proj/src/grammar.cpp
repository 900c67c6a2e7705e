#include "smalc/grammar.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "smalc/parse.hpp"

namespace smalc {

const std::vector<FormulaPtr>* Lexicon::find(const std::string& word) const {
  for (const auto& [w, types] : entries)
    if (w == word) return &types;
  return nullptr;
}

namespace {

std::string dirname_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  return path.substr(0, slash);
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Lexicon parse_lexicon_text(const std::string& text, const std::string& base_dir) {
  Lexicon lex;
  lex.target = Formula::atom("s");
  bool have_signature = false;

  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string kw;
    ls >> kw;
    auto fail = [&](const std::string& why) {
      throw ParseError("lexicon line " + std::to_string(lineno) + ": " + why, 0);
    };
    if (kw == "signature") {
      std::string path;
      ls >> path;
      if (path.empty()) fail("expected 'signature <path>'");
      std::string resolved = path[0] == '/' ? path : base_dir + "/" + path;
      SignatureResult sig = load_signature_file(resolved);
      if (!sig.ok()) fail("signature: " + sig.errors.front());
      lex.signature = std::move(*sig.signature);
      have_signature = true;
    } else if (kw == "target") {
      std::string rest;
      std::getline(ls, rest);
      lex.target = parse_formula(strip(rest));
    } else if (kw == "word") {
      std::string token, colon;
      ls >> token >> colon;
      if (token.empty() || colon != ":") fail("expected 'word <token> : <formula>'");
      std::string rest;
      std::getline(ls, rest);
      FormulaPtr type = parse_formula(strip(rest));
      std::vector<std::string> indices;
      collect_bang_indices(type, indices);
      for (const auto& idx : indices)
        if (!lex.signature.find(idx))
          fail("type for '" + token + "' uses index '" + idx + "' outside the signature");
      bool appended = false;
      for (auto& [w, types] : lex.entries)
        if (w == token) {
          types.push_back(type);
          appended = true;
          break;
        }
      if (!appended) lex.entries.emplace_back(token, std::vector<FormulaPtr>{type});
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }
  if (!have_signature) {
    // An absent signature line means no modalities: the empty one.
    SignatureResult sig = validate_signature(SignatureDescription{});
    lex.signature = std::move(*sig.signature);
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open lexicon file: " + path, 0);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_lexicon_text(ss.str(), dirname_of(path));
}

SentenceResult parse_sentence(const std::vector<std::string>& words, const Lexicon& lex, Mode mode,
                              const SearchBudget& budget) {
  std::vector<const std::vector<FormulaPtr>*> choices;
  choices.reserve(words.size());
  for (const auto& w : words) {
    const auto* types = lex.find(w);
    if (!types) throw std::invalid_argument("unknown word: " + w);
    choices.push_back(types);
  }

  SentenceResult out;
  out.result.outcome = ProofOutcome::NotProvedExhausted;
  std::vector<std::size_t> pick(words.size(), 0);
  bool any_budget = false;
  SearchStats total;

  for (;;) {
    Sequent goal;
    goal.succedent = lex.target;
    goal.antecedent.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i)
      goal.antecedent.push_back((*choices[i])[pick[i]]);

    ProofResult r = prove(goal, lex.signature, mode, budget);
    ++out.assignments_tried;
    total.nodes += r.stats.nodes;
    any_budget = any_budget || r.stats.budget_hit;
    if (r.proved()) {
      out.result = std::move(r);
      out.result.stats = total;
      out.assignment = std::move(goal.antecedent);
      return out;
    }

    // Next assignment, last word fastest.
    std::size_t pos = words.size();
    while (pos > 0) {
      --pos;
      if (++pick[pos] < choices[pos]->size()) break;
      pick[pos] = 0;
      if (pos == 0) {
        out.result.outcome =
            any_budget ? ProofOutcome::NotProvedBudget : ProofOutcome::NotProvedExhausted;
        out.result.stats = total;
        out.result.stats.budget_hit = any_budget;
        return out;
      }
    }
    if (words.empty()) {
      out.result.outcome =
          any_budget ? ProofOutcome::NotProvedBudget : ProofOutcome::NotProvedExhausted;
      out.result.stats = total;
      return out;
    }
  }
}

}  // namespace smalc
