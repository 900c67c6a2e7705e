// Command-line front end: proving, derivation checking, model
// evaluation, countermodel search, representation reports, grammar
// parsing and quantale enumeration.
//
// Exit codes: 0 proved / holds / pass, 1 refuted / countermodel found,
// 2 budget exhausted, 3 input error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "smalc/countermodel.hpp"
#include "smalc/enumerate.hpp"
#include "smalc/grammar.hpp"
#include "smalc/parse.hpp"
#include "smalc/prover.hpp"
#include "smalc/representation.hpp"

using namespace smalc;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInputError = 3;

struct CommonOpts {
  std::string sig_path;
  std::string mode_name = "L1";
  SearchBudget budget;
  int max_size = 6;
  int jobs = 1;
  std::string lexicon_path;
};

void add_budget_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--budget-depth", o.budget.max_depth, "Search depth limit");
  cmd->add_option("--budget-contr", o.budget.max_contractions_per_branch,
                  "Contractions per branch");
  cmd->add_option("--budget-nodes", o.budget.max_nodes, "Node / evaluation limit");
}

Mode parse_mode(const std::string& name) {
  auto m = mode_from_string(name);
  if (!m) throw std::invalid_argument("unknown mode '" + name + "' (use L, Lstar or L1)");
  return *m;
}

Signature load_signature_or_throw(const std::string& path) {
  if (path.empty()) throw std::invalid_argument("--sig <file> is required");
  SignatureResult r = load_signature_file(path);
  if (!r.ok()) {
    std::string msg = "signature: ";
    for (const auto& e : r.errors) msg += e + "; ";
    throw std::invalid_argument(msg);
  }
  return std::move(*r.signature);
}

int outcome_exit(const ProofResult& r) {
  switch (r.outcome) {
    case ProofOutcome::Proved: return kExitPass;
    case ProofOutcome::NotProvedExhausted: return kExitRefuted;
    case ProofOutcome::NotProvedBudget: return kExitBudget;
  }
  return kExitInputError;
}

int run_prove(const CommonOpts& o, const std::string& sequent_text) {
  Signature sig = load_signature_or_throw(o.sig_path);
  Sequent goal = parse_sequent(sequent_text);
  ProofResult r = prove(goal, sig, parse_mode(o.mode_name), o.budget);
  std::cout << "# " << outcome_name(r.outcome) << "\n";
  if (r.derivation) std::cout << export_derivation(*r.derivation);
  return outcome_exit(r);
}

int run_check(const CommonOpts& o, const std::string& derivation_path) {
  Signature sig = load_signature_or_throw(o.sig_path);
  Derivation d = load_derivation_file(derivation_path);
  CheckReport report = check_derivation(d, sig, parse_mode(o.mode_name));
  if (report.ok()) {
    std::cout << "# valid: " << print_sequent(d.conclusion) << "\n";
    return kExitPass;
  }
  std::cout << "# invalid\n" << report.to_string();
  return kExitRefuted;
}

int run_model(const CommonOpts& o, const std::string& witness_path,
              const std::string& sequent_text) {
  Signature sig = load_signature_or_throw(o.sig_path);
  Sequent goal = parse_sequent(sequent_text);
  WitnessParse w = load_witness_file(witness_path, sig);
  if (!w.ok()) {
    std::string msg = "witness: ";
    for (const auto& e : w.errors) msg += e + "; ";
    throw std::invalid_argument(msg);
  }
  SubexpInterpretation sigma = witness_sigma(*w.witness, sig);
  Valuation f;
  f.atoms = w.witness->valuation;
  bool ok = holds(*w.witness->quantale, &sigma, f, goal);
  std::cout << (ok ? "# holds\n" : "# refuted\n");
  return ok ? kExitPass : kExitRefuted;
}

int run_countermodel(const CommonOpts& o, const std::string& sequent_text,
                     const std::string& out_path) {
  Signature sig = load_signature_or_throw(o.sig_path);
  Sequent goal = parse_sequent(sequent_text);
  CountermodelSearch r =
      find_countermodel(goal, sig, o.max_size,
                        static_cast<std::uint64_t>(o.budget.max_nodes), o.jobs);
  if (r.witness) {
    std::string witness = print_witness(*r.witness, sig);
    std::cout << "# countermodel found (size " << r.witness->quantale->size() << ", " << r.checks
              << " checks)\n"
              << witness;
    if (!out_path.empty()) {
      std::ofstream out(out_path);
      out << witness;
    }
    return kExitRefuted;
  }
  if (r.budget_exhausted) {
    std::cout << "# budget exhausted after " << r.checks << " checks\n";
    return kExitBudget;
  }
  std::cout << "# no countermodel up to size " << o.max_size << " (" << r.checks << " checks)\n";
  return kExitPass;
}

int run_represent(const std::string& quantale_path) {
  QuantaleResult qr = load_quantale_file(quantale_path);
  if (!qr.ok()) {
    std::string msg = "quantale: ";
    for (const auto& e : qr.errors) msg += e + "; ";
    throw std::invalid_argument(msg);
  }
  const FiniteQuantale& q = *qr.quantale;
  RelationalQuantale rq;
  ReprReport report = build_relational(q, &rq);
  std::cout << representation_table(q, rq);
  for (const auto& c : report.checks) {
    std::cout << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
  }

  bool transports_ok = true;
  int transports = 0;
  for (const auto& i : all_conuclei(q)) {
    ConucleusTransport t = transport_conucleus(q, i);
    ++transports;
    if (!t.ok()) transports_ok = false;
  }
  std::cout << "conucleus transports: " << transports << (transports_ok ? " all pass" : " FAIL")
            << "\n";
  std::cout << report.summary_line(q.size()) << "\n";
  return report.ok() && transports_ok ? kExitPass : kExitRefuted;
}

int run_parse(const CommonOpts& o, const std::vector<std::string>& words) {
  if (o.lexicon_path.empty()) throw std::invalid_argument("--lexicon <file> is required");
  Lexicon lex = load_lexicon_file(o.lexicon_path);
  SentenceResult r = parse_sentence(words, lex, parse_mode(o.mode_name), o.budget);
  std::cout << "# " << outcome_name(r.result.outcome) << " (" << r.assignments_tried
            << " assignments tried)\n";
  if (r.result.proved()) {
    std::cout << "# assignment:";
    for (std::size_t i = 0; i < words.size(); ++i)
      std::cout << ' ' << words[i] << ':' << print_formula(r.assignment[i]);
    std::cout << "\n" << export_derivation(*r.result.derivation);
  }
  return outcome_exit(r.result);
}

int run_enumerate(const CommonOpts& o, bool unital_only, const std::string& out_dir) {
  int count = 0;
  for (int size = 1; size <= o.max_size; ++size) {
    int index = 0;
    for_each_quantale(size, unital_only, [&](const FiniteQuantale& q) {
      std::string text = print_quantale(q);
      if (out_dir.empty()) {
        std::cout << text << "\n";
      } else {
        std::ofstream out(out_dir + "/q" + std::to_string(size) + "_" + std::to_string(index) +
                          ".qnt");
        out << text;
      }
      ++index;
      ++count;
      return true;
    });
  }
  std::cerr << count << " quantales\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prover and algebraic-semantics toolkit for the Lambek calculus with "
               "subexponential modalities"};
  app.require_subcommand(1);
  CommonOpts o;

  std::string sequent_text, derivation_path, witness_path, quantale_path, out_path, out_dir;
  std::vector<std::string> words;
  bool unital_only = false;

  CLI::App* prove_cmd = app.add_subcommand("prove", "Search for a cut-free derivation");
  prove_cmd->add_option("--sig", o.sig_path, "Signature file")->required();
  prove_cmd->add_option("--mode", o.mode_name, "L, Lstar or L1 (default L1)");
  add_budget_flags(prove_cmd, o);
  prove_cmd->add_option("sequent", sequent_text, "Sequent, e.g. \"a, a\\b -> b\"")->required();

  CLI::App* check_cmd = app.add_subcommand("check", "Verify a derivation file");
  check_cmd->add_option("--sig", o.sig_path, "Signature file")->required();
  check_cmd->add_option("--mode", o.mode_name, "L, Lstar or L1 (default L1)");
  check_cmd->add_option("derivation", derivation_path, "Derivation file")->required();

  CLI::App* model_cmd = app.add_subcommand("model", "Evaluate a sequent in a model witness");
  model_cmd->add_option("--sig", o.sig_path, "Signature file")->required();
  model_cmd->add_option("witness", witness_path, "Witness file (quantale+sigma+valuation)")
      ->required();
  model_cmd->add_option("sequent", sequent_text, "Sequent")->required();

  CLI::App* cm_cmd = app.add_subcommand("countermodel", "Search finite models for a refutation");
  cm_cmd->add_option("--sig", o.sig_path, "Signature file")->required();
  cm_cmd->add_option("--max-size", o.max_size, "Largest quantale size to try (default 6)");
  cm_cmd->add_option("--budget-nodes", o.budget.max_nodes, "Evaluation limit");
  cm_cmd->add_option("--jobs", o.jobs, "Worker threads (witness is schedule-independent)");
  cm_cmd->add_option("--out", out_path, "Also write the witness to this file");
  cm_cmd->add_option("sequent", sequent_text, "Sequent")->required();

  CLI::App* rep_cmd = app.add_subcommand("represent", "Verify the relational representation");
  rep_cmd->add_option("--quantale", quantale_path, "Quantale file")->required();

  CLI::App* parse_cmd = app.add_subcommand("parse", "Parse a sentence with a lexicon");
  parse_cmd->add_option("--lexicon", o.lexicon_path, "Lexicon file")->required();
  parse_cmd->add_option("--mode", o.mode_name, "L, Lstar or L1 (default L1)");
  add_budget_flags(parse_cmd, o);
  parse_cmd->add_option("words", words, "Sentence, one token per argument")->required();

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "Stream finite quantales");
  enum_cmd->add_option("--max-size", o.max_size, "Largest size (default 6; 6 is slow)");
  enum_cmd->add_flag("--unital", unital_only, "Only unital quantales");
  enum_cmd->add_option("--out-dir", out_dir, "Write one .qnt file per quantale");

  CLI11_PARSE(app, argc, argv);

  try {
    if (prove_cmd->parsed()) return run_prove(o, sequent_text);
    if (check_cmd->parsed()) return run_check(o, derivation_path);
    if (model_cmd->parsed()) return run_model(o, witness_path, sequent_text);
    if (cm_cmd->parsed()) return run_countermodel(o, sequent_text, out_path);
    if (rep_cmd->parsed()) return run_represent(quantale_path);
    if (parse_cmd->parsed()) return run_parse(o, words);
    if (enum_cmd->parsed()) return run_enumerate(o, unital_only, out_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
