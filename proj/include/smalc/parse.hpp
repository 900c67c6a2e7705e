#pragma once

#include <stdexcept>
#include <string>

#include "smalc/formula.hpp"

namespace smalc {

/// Raised on malformed input text; position is a 0-based byte offset.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar (loosest to tightest): disj '|' / conj '&' / division '\' '/'
// (non-associative) / product '*' / '!{s}' / atom, '1', parentheses.
FormulaPtr parse_formula(const std::string& text);

// Comma-separated antecedent, "->", succedent. "-> a" has an empty
// antecedent.
Sequent parse_sequent(const std::string& text);

}  // namespace smalc
