#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "smalc/derivation.hpp"
#include "smalc/semantics.hpp"

namespace smalc {

/// A refuting model: unital quantale, one conucleus table per
/// signature index, and a valuation for the sequent's atoms.
struct Countermodel {
  std::shared_ptr<const FiniteQuantale> quantale;
  std::vector<std::vector<int>> sigma_tables;  // by signature index id
  std::map<std::string, int> valuation;
};

struct CountermodelSearch {
  std::optional<Countermodel> witness;
  std::uint64_t checks = 0;
  bool budget_exhausted = false;
  int largest_size_completed = 0;
};

/// Searches unital quantales of ascending size, for each all
/// contravariant subquantale assignments (lexicographic), for each all
/// valuations (lexicographic over sorted atoms); reports the first
/// triple where the sequent fails. max_checks bounds the number of
/// evaluations. `jobs` parallelizes the scan inside one quantale; the
/// reported witness and budget accounting match the sequential order
/// regardless of the worker count.
CountermodelSearch find_countermodel(const Sequent& seq, const Signature& sig, int max_size,
                                     std::uint64_t max_checks = 50'000'000, int jobs = 1);

/// Witness format: a quantale block, then `sigma <index> = <table>`
/// lines (signature order) and `valuation <atom> = <elem>` lines.
std::string print_witness(const Countermodel& w, const Signature& sig);

struct WitnessParse {
  std::optional<Countermodel> witness;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

WitnessParse parse_witness_text(const std::string& text, const Signature& sig);
WitnessParse load_witness_file(const std::string& path, const Signature& sig);

/// Rebuilds the interpretation from a witness (conucleus tables are
/// re-derived from their open sets and must reproduce, so a witness
/// cannot smuggle in a non-Def-11 sigma). Throws EvalError on
/// mismatch.
SubexpInterpretation witness_sigma(const Countermodel& w, const Signature& sig);

struct SweepModel {
  const FiniteQuantale* quantale = nullptr;
  SubexpInterpretation sigma;
};

/// One model per contravariant subquantale assignment on q.
std::vector<SweepModel> enumerate_models(const FiniteQuantale& q, const Signature& sig);

struct SweepViolation {
  std::size_t derivation_index;
  std::size_t model_index;
  std::map<std::string, int> valuation;
};

struct SweepReport {
  std::uint64_t checks = 0;
  std::vector<SweepViolation> violations;
  std::vector<std::pair<std::size_t, std::string>> rejected;  // invalid corpus entries
  bool ok() const { return violations.empty() && rejected.empty(); }
};

/// Every corpus derivation is checked first (invalid ones are rejected
/// and never evaluated); every valid conclusion is then evaluated in
/// every model under every valuation of its atoms.
SweepReport soundness_sweep(const std::vector<Derivation>& corpus, const Signature& sig, Mode mode,
                            const std::vector<SweepModel>& models);

}  // namespace smalc
