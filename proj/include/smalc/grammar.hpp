#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smalc/prover.hpp"
#include "smalc/signature.hpp"

namespace smalc {

/// Word-to-types map for parsing-as-derivability. A word may carry
/// several types (lexical ambiguity); the target is the category a
/// full expression must derive.
struct Lexicon {
  Signature signature;
  FormulaPtr target;
  std::vector<std::pair<std::string, std::vector<FormulaPtr>>> entries;

  const std::vector<FormulaPtr>* find(const std::string& word) const;
};

/// Lexicon file: `signature <path>` (resolved relative to the lexicon
/// file), `target <formula>`, `word <token> : <formula>` lines, '#'
/// comments. Duplicate word lines accumulate alternative types.
Lexicon load_lexicon_file(const std::string& path);
Lexicon parse_lexicon_text(const std::string& text, const std::string& base_dir);

struct SentenceResult {
  ProofResult result;
  std::vector<FormulaPtr> assignment;  // types used by the found proof
  std::uint64_t assignments_tried = 0;
};

/// Tries every choice of one type per word, in declaration order, and
/// proves `types -> target`; the first proof wins. A failure is
/// budget-limited if any assignment's search was.
SentenceResult parse_sentence(const std::vector<std::string>& words, const Lexicon& lex, Mode mode,
                              const SearchBudget& budget);

}  // namespace smalc
