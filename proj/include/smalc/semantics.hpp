#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "smalc/calculus.hpp"
#include "smalc/formula.hpp"
#include "smalc/quantale.hpp"
#include "smalc/signature.hpp"

namespace smalc {

class EvalError : public std::runtime_error {
public:
  explicit EvalError(const std::string& m) : std::runtime_error(m) {}
};

/// Total assignment of quantale elements to the atoms under evaluation.
struct Valuation {
  std::map<std::string, int> atoms;
};

/// Interpretation of a subexponential signature: each index gets a
/// quantic conucleus derived from a contravariant family of
/// subquantales, filtered by the index's membership in W (unital),
/// E (central) and C (strongly square increasing).
struct SubexpInterpretation {
  const FiniteQuantale* parent = nullptr;
  const Signature* sig = nullptr;
  std::vector<ConucleusMap> conuclei;          // by index id
  std::vector<std::uint32_t> provenance;       // subquantale masks, by index id

  const ConucleusMap* find(const std::string& index) const;
};

/// Builds sigma from subquantale masks (one per signature index, in
/// signature order). Throws std::invalid_argument when the family is
/// not contravariant, a mask is not a subquantale, or the quantale is
/// not unital. The expected structure of the result (contravariance
/// of the conuclei and the W/E/C classification, central on W&C) is
/// verified after construction, not assumed.
SubexpInterpretation build_sigma(const FiniteQuantale& q, const Signature& sig,
                                 const std::vector<std::uint32_t>& subquantales);

/// Structural interpretation of a formula. sigma may be null when the
/// formula has no modalities.
int interpret(const FiniteQuantale& q, const SubexpInterpretation* sigma, const Valuation& f,
              const FormulaPtr& formula);

/// Antecedent product (the unit for an empty antecedent) below the
/// succedent value.
bool holds(const FiniteQuantale& q, const SubexpInterpretation* sigma, const Valuation& f,
           const Sequent& seq);

/// All subquantale masks of q, ascending by bitmask.
std::vector<std::uint32_t> subquantale_masks(const FiniteQuantale& q);

/// All contravariant assignments of subquantales to the signature's
/// indices, in lexicographic order over (index-slot, mask list).
std::vector<std::vector<std::uint32_t>> contravariant_assignments(const FiniteQuantale& q,
                                                                  const Signature& sig);

}  // namespace smalc
