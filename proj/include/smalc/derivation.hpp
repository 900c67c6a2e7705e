#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smalc/formula.hpp"

namespace smalc {

enum class RuleId {
  Ax,
  LDivL,
  LDivR,
  RDivL,
  RDivR,
  ProdL,
  ProdR,
  UnitL,
  UnitR,
  WithL1,
  WithL2,
  WithR,
  PlusL,
  PlusR1,
  PlusR2,
  BangL,
  BangR,
  NContr1,
  NContr2,
  Ex1,
  Ex2,
  WeakBang,
  Cut,
};

const char* rule_name(RuleId id);
std::optional<RuleId> rule_from_name(const std::string& name);
bool rule_is_contraction(RuleId id);

/// One rule application. `index` is the subexponential index for the
/// modal rules; `principal` and `split` are antecedent positions whose
/// meaning depends on the rule. Negative metadata means "unspecified"
/// (the checker then infers an instantiation).
struct RuleApp {
  RuleId id = RuleId::Ax;
  std::string index;
  int principal = -1;
  int split = -1;

  RuleApp() = default;
  RuleApp(RuleId rule, std::string idx = "", int principal_pos = -1, int split_pos = -1)
      : id(rule), index(std::move(idx)), principal(principal_pos), split(split_pos) {}
};

struct Derivation {
  Sequent conclusion;
  RuleApp rule;
  std::vector<Derivation> premises;
};

/// Indented text tree, one node per line: `rule [index] :: sequent`,
/// premises two spaces deeper, in order.
std::string export_derivation(const Derivation& d);
/// Inverse of export_derivation (positional metadata is not encoded;
/// checking re-infers it).
Derivation import_derivation(const std::string& text);
Derivation load_derivation_file(const std::string& path);

}  // namespace smalc
