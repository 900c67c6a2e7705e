#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smalc/derivation.hpp"
#include "smalc/formula.hpp"
#include "smalc/signature.hpp"

namespace smalc {

/// L forbids empty antecedents, Lstar allows them, L1 also has the
/// unit constant rules. The modal rules are available in all modes.
enum class Mode { L, Lstar, L1 };

std::optional<Mode> mode_from_string(const std::string& s);
const char* mode_name(Mode m);

struct RuleInstance {
  RuleApp app;
  std::vector<Sequent> premises;
};

/// Complete backward enumeration of cut-free rule instances for the
/// goal: every context split, every principal position, every legal
/// modal instance. Order is fixed (axioms, unary right, unary left,
/// modal structural, two-premise rules; positions and splits
/// left-to-right) so search is deterministic. Cut is never enumerated;
/// no-op exchange instances are skipped.
std::vector<RuleInstance> applicable_rules(const Sequent& goal, const Signature& sig, Mode mode);

struct CheckError {
  std::string path;  // premise indices from the root, e.g. "0.1"
  RuleId rule;
  std::string message;
};

struct CheckReport {
  std::vector<CheckError> errors;
  bool ok() const { return errors.empty(); }
  std::string to_string() const;
};

/// Node-by-node verification that every rule application instantiates
/// its figure and satisfies its side conditions under the signature
/// and mode. Cut nodes are accepted (checking only; search never uses
/// Cut). Stored positional metadata is honored when present, otherwise
/// an instantiation is inferred.
CheckReport check_derivation(const Derivation& d, const Signature& sig, Mode mode);

}  // namespace smalc
