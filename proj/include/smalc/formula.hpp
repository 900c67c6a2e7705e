#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace smalc {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable formula tree for the subexponential Lambek language:
/// atoms, the unit 1, product, the two divisions, the additives and
/// indexed modalities !{s}. Nodes are shared and never mutated, so
/// formulas are cheap to copy and safe to use across threads.
class Formula {
public:
  enum class Kind { Atom, Unit, Product, LDiv, RDiv, With, Plus, Bang };

  Kind kind() const { return kind_; }
  /// Atom name, or the subexponential index of a Bang node.
  const std::string& name() const { return name_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }
  /// Body of a Bang node (alias for left()).
  const FormulaPtr& body() const { return left_; }
  std::size_t hash() const { return hash_; }

  bool equals(const Formula& other) const;

  static FormulaPtr atom(std::string name);
  static FormulaPtr unit();
  static FormulaPtr product(FormulaPtr l, FormulaPtr r);
  static FormulaPtr ldiv(FormulaPtr l, FormulaPtr r);   // l \ r
  static FormulaPtr rdiv(FormulaPtr l, FormulaPtr r);   // l / r
  static FormulaPtr with(FormulaPtr l, FormulaPtr r);   // additive &
  static FormulaPtr plus(FormulaPtr l, FormulaPtr r);   // additive |
  static FormulaPtr bang(std::string index, FormulaPtr body);

private:
  Formula(Kind k, std::string name, FormulaPtr l, FormulaPtr r);

  Kind kind_;
  std::string name_;
  FormulaPtr left_, right_;
  std::size_t hash_;
};

bool operator==(const FormulaPtr& a, const FormulaPtr& b) = delete;

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b);

/// Minimal-parenthesis rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const FormulaPtr& f);

/// Collects atom names (sorted, unique) appearing in the formula.
void collect_atoms(const FormulaPtr& f, std::vector<std::string>& out);
/// Collects subexponential indices (sorted, unique).
void collect_bang_indices(const FormulaPtr& f, std::vector<std::string>& out);

/// A sequent Gamma -> A. Antecedent order is significant.
struct Sequent {
  std::vector<FormulaPtr> antecedent;
  FormulaPtr succedent;

  bool operator==(const Sequent& other) const;
  std::size_t hash() const;
};

std::string print_sequent(const Sequent& s);

std::vector<std::string> sequent_atoms(const Sequent& s);
std::vector<std::string> sequent_bang_indices(const Sequent& s);

struct SequentHash {
  std::size_t operator()(const Sequent& s) const { return s.hash(); }
};

}  // namespace smalc
