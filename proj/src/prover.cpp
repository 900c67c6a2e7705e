#include "smalc/prover.hpp"

#include <climits>
#include <stdexcept>
#include <unordered_map>

namespace smalc {

const char* outcome_name(ProofOutcome o) {
  switch (o) {
    case ProofOutcome::Proved: return "Proved";
    case ProofOutcome::NotProvedExhausted: return "NotProvedExhausted";
    case ProofOutcome::NotProvedBudget: return "NotProvedBudget";
  }
  return "?";
}

namespace {

// Height-bounded depth-first backward search. Every recursion level
// consumes one unit of height, so branches that cycle through
// exchange permutations terminate at the height floor; an explicit
// ancestor check is deliberately absent because it would make failures
// context-dependent and unusable for memoization.
//
// Memoization stores only context-free facts:
//  * found proofs;
//  * failure facts "no proof of height <= h using <= r further
//    contractions", where h (resp. r) is INT_MAX when the subtree
//    search saw no height cut (resp. no skipped contraction), meaning
//    the failure holds at any height (resp. contraction budget).
// Facts recorded under a node-budget cut are suppressed. Reuse can
// therefore never hide a proof, and results are deterministic and
// monotone in every budget field: an absolute failure (both bounds
// INT_MAX) is a genuine non-theorem.
struct Searcher {
  const Signature& sig;
  Mode mode;
  const SearchBudget& budget;
  SearchStats stats;

  struct Fact {
    int r;  // remaining-contraction bound (INT_MAX = any)
    int h;  // height bound (INT_MAX = any)
  };

  std::unordered_map<Sequent, Derivation, SequentHash> proved;
  std::unordered_map<Sequent, std::vector<Fact>, SequentHash> refuted;
  int depth = 0;

  struct Outcome {
    const Derivation* proof = nullptr;  // owned by `proved`
    bool node_cut = false;
    bool height_cut = false;
    bool contr_cut = false;

    bool any_cut() const { return node_cut || height_cut || contr_cut; }
  };

  Outcome search(const Sequent& goal, int contractions_used) {
    const int remaining = budget.max_contractions_per_branch - contractions_used;
    const int my_height = budget.max_depth - depth;

    if (auto it = proved.find(goal); it != proved.end()) return {&it->second};
    if (auto it = refuted.find(goal); it != refuted.end()) {
      for (const Fact& f : it->second)
        if (f.r >= remaining && f.h >= my_height)
          return {nullptr, false, f.h != INT_MAX, f.r != INT_MAX};
    }

    if (my_height <= 0) {
      stats.budget_hit = true;
      return {nullptr, false, true, false};
    }
    if (++stats.nodes > budget.max_nodes) {
      stats.budget_hit = true;
      return {nullptr, true, false, false};
    }

    ++depth;
    Outcome acc;
    const Derivation* found = nullptr;

    for (const auto& inst : applicable_rules(goal, sig, mode)) {
      int contr_next = contractions_used;
      if (rule_is_contraction(inst.app.id)) {
        if (contractions_used >= budget.max_contractions_per_branch) {
          stats.budget_hit = true;
          acc.contr_cut = true;
          continue;
        }
        contr_next = contractions_used + 1;
      }
      std::vector<Derivation> sub;
      sub.reserve(inst.premises.size());
      bool all_proved = true;
      for (const auto& premise : inst.premises) {
        Outcome o = search(premise, contr_next);
        acc.node_cut = acc.node_cut || o.node_cut;
        acc.height_cut = acc.height_cut || o.height_cut;
        acc.contr_cut = acc.contr_cut || o.contr_cut;
        if (!o.proof) {
          all_proved = false;
          break;
        }
        sub.push_back(*o.proof);
      }
      if (all_proved) {
        Derivation d{goal, inst.app, std::move(sub)};
        found = &proved.emplace(goal, std::move(d)).first->second;
        break;
      }
    }

    --depth;

    if (found) {
      acc.proof = found;
      return acc;
    }
    if (!acc.node_cut) {
      Fact fact{acc.contr_cut ? remaining : INT_MAX, acc.height_cut ? my_height : INT_MAX};
      std::vector<Fact>& facts = refuted[goal];
      bool dominated = false;
      for (const Fact& f : facts)
        if (f.r >= fact.r && f.h >= fact.h) dominated = true;
      if (!dominated) {
        std::erase_if(facts, [&fact](const Fact& f) { return fact.r >= f.r && fact.h >= f.h; });
        facts.push_back(fact);
      }
    }
    return acc;
  }
};

}  // namespace

ProofResult prove(const Sequent& goal, const Signature& sig, Mode mode,
                  const SearchBudget& budget) {
  if (!budget.valid()) throw std::invalid_argument("search budget fields must be positive");
  for (const auto& idx : sequent_bang_indices(goal))
    if (!sig.find(idx))
      throw std::invalid_argument("goal uses subexponential index '" + idx +
                                  "' outside the signature");

  ProofResult result;
  if (mode == Mode::L && goal.antecedent.empty()) {
    // Empty antecedents are rejected at proof time in mode L.
    result.outcome = ProofOutcome::NotProvedExhausted;
    return result;
  }

  Searcher searcher{sig, mode, budget, {}, {}, {}, 0};
  Searcher::Outcome o = searcher.search(goal, 0);
  result.stats = searcher.stats;
  result.stats.budget_hit = o.any_cut();
  if (o.proof) {
    result.outcome = ProofOutcome::Proved;
    result.derivation = *o.proof;
  } else if (o.any_cut()) {
    result.outcome = ProofOutcome::NotProvedBudget;
  } else {
    result.outcome = ProofOutcome::NotProvedExhausted;
  }
  return result;
}

ProofResult replay_without_cut(const Derivation& d, const Signature& sig, Mode mode,
                               const SearchBudget& budget) {
  CheckReport report = check_derivation(d, sig, mode);
  if (!report.ok())
    throw std::invalid_argument("input derivation does not check:\n" + report.to_string());
  return prove(d.conclusion, sig, mode, budget);
}

}  // namespace smalc
