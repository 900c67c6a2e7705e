#pragma once

#include <cstdint>
#include <optional>

#include "smalc/calculus.hpp"

namespace smalc {

/// Termination control for backward search. Contraction makes the
/// calculus undecidable in general, so contractions are capped per
/// branch; depth and node counts bound the rest.
struct SearchBudget {
  int max_depth = 40;
  int max_contractions_per_branch = 3;
  std::int64_t max_nodes = 1'000'000;

  bool valid() const {
    return max_depth > 0 && max_contractions_per_branch > 0 && max_nodes > 0;
  }
};

enum class ProofOutcome { Proved, NotProvedExhausted, NotProvedBudget };

struct SearchStats {
  std::int64_t nodes = 0;
  bool budget_hit = false;
};

/// NotProvedExhausted is reported only when the whole cut-free search
/// space (modulo the repeated-sequent loop check) was explored without
/// hitting any budget limit; otherwise a failed search reports
/// NotProvedBudget.
struct ProofResult {
  ProofOutcome outcome = ProofOutcome::NotProvedBudget;
  std::optional<Derivation> derivation;
  SearchStats stats;

  bool proved() const { return outcome == ProofOutcome::Proved; }
};

const char* outcome_name(ProofOutcome o);

/// Exhaustive cut-free backward search, deterministic for fixed inputs.
/// A Proved result always passes check_derivation. Throws
/// std::invalid_argument on an invalid budget or a goal using indices
/// outside the signature.
ProofResult prove(const Sequent& goal, const Signature& sig, Mode mode, const SearchBudget& budget);

/// Checks the (possibly Cut-using) derivation, then searches for a
/// cut-free proof of its conclusion. Throws std::invalid_argument when
/// the input derivation does not check.
ProofResult replay_without_cut(const Derivation& d, const Signature& sig, Mode mode,
                               const SearchBudget& budget);

}  // namespace smalc
