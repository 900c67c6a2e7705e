#include "smalc/formula.hpp"

#include <algorithm>
#include <functional>

namespace smalc {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula(Kind k, std::string name, FormulaPtr l, FormulaPtr r)
    : kind_(k), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b9u;
  h = hash_combine(h, std::hash<std::string>{}(name_));
  if (left_) h = hash_combine(h, left_->hash());
  if (right_) h = hash_combine(h, right_->hash());
  hash_ = h;
}

bool Formula::equals(const Formula& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || hash_ != other.hash_ || name_ != other.name_) return false;
  if (static_cast<bool>(left_) != static_cast<bool>(other.left_)) return false;
  if (static_cast<bool>(right_) != static_cast<bool>(other.right_)) return false;
  if (left_ && !left_->equals(*other.left_)) return false;
  if (right_ && !right_->equals(*other.right_)) return false;
  return true;
}

bool formula_eq(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == nullptr || b == nullptr) return a == nullptr && b == nullptr;
  return a->equals(*b);
}

FormulaPtr Formula::atom(std::string name) {
  return FormulaPtr(new Formula(Kind::Atom, std::move(name), nullptr, nullptr));
}
FormulaPtr Formula::unit() {
  return FormulaPtr(new Formula(Kind::Unit, "", nullptr, nullptr));
}
FormulaPtr Formula::product(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::Product, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::ldiv(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::LDiv, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::rdiv(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::RDiv, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::with(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::With, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::plus(FormulaPtr l, FormulaPtr r) {
  return FormulaPtr(new Formula(Kind::Plus, "", std::move(l), std::move(r)));
}
FormulaPtr Formula::bang(std::string index, FormulaPtr body) {
  return FormulaPtr(new Formula(Kind::Bang, std::move(index), std::move(body), nullptr));
}

namespace {

// Binding strength, loosest first: | < & < \,/ < * < !. Children are
// printed with the minimum level their position admits; a node below
// that level gets parenthesized. Product/With/Plus associate to the
// left in the grammar, divisions do not associate at all.
int node_level(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Plus: return 0;
    case Formula::Kind::With: return 1;
    case Formula::Kind::LDiv:
    case Formula::Kind::RDiv: return 2;
    case Formula::Kind::Product: return 3;
    case Formula::Kind::Bang: return 4;
    default: return 9;
  }
}

void print_rec(const FormulaPtr& f, int min_level, std::string& out) {
  const int lvl = node_level(*f);
  const bool parens = lvl < min_level;
  if (parens) out += '(';
  switch (f->kind()) {
    case Formula::Kind::Atom:
      out += f->name();
      break;
    case Formula::Kind::Unit:
      out += '1';
      break;
    case Formula::Kind::Plus:
      print_rec(f->left(), 0, out);
      out += '|';
      print_rec(f->right(), 1, out);
      break;
    case Formula::Kind::With:
      print_rec(f->left(), 1, out);
      out += '&';
      print_rec(f->right(), 2, out);
      break;
    case Formula::Kind::LDiv:
      print_rec(f->left(), 3, out);
      out += '\\';
      print_rec(f->right(), 3, out);
      break;
    case Formula::Kind::RDiv:
      print_rec(f->left(), 3, out);
      out += '/';
      print_rec(f->right(), 3, out);
      break;
    case Formula::Kind::Product:
      print_rec(f->left(), 3, out);
      out += '*';
      print_rec(f->right(), 4, out);
      break;
    case Formula::Kind::Bang:
      out += "!{";
      out += f->name();
      out += '}';
      print_rec(f->body(), 4, out);
      break;
  }
  if (parens) out += ')';
}

void collect_rec(const FormulaPtr& f, std::vector<std::string>& atoms,
                 std::vector<std::string>& indices) {
  switch (f->kind()) {
    case Formula::Kind::Atom:
      atoms.push_back(f->name());
      break;
    case Formula::Kind::Unit:
      break;
    case Formula::Kind::Bang:
      indices.push_back(f->name());
      collect_rec(f->body(), atoms, indices);
      break;
    default:
      collect_rec(f->left(), atoms, indices);
      collect_rec(f->right(), atoms, indices);
      break;
  }
}

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

void collect_atoms(const FormulaPtr& f, std::vector<std::string>& out) {
  std::vector<std::string> indices;
  collect_rec(f, out, indices);
  sort_unique(out);
}

void collect_bang_indices(const FormulaPtr& f, std::vector<std::string>& out) {
  std::vector<std::string> atoms;
  collect_rec(f, atoms, out);
  sort_unique(out);
}

bool Sequent::operator==(const Sequent& other) const {
  if (antecedent.size() != other.antecedent.size()) return false;
  if (!formula_eq(succedent, other.succedent)) return false;
  for (std::size_t i = 0; i < antecedent.size(); ++i)
    if (!formula_eq(antecedent[i], other.antecedent[i])) return false;
  return true;
}

std::size_t Sequent::hash() const {
  std::size_t h = 0x51eaf00dULL;
  for (const auto& f : antecedent) h = hash_combine(h, f->hash());
  h = hash_combine(h, succedent->hash());
  return h;
}

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(s.antecedent[i]);
  }
  if (!s.antecedent.empty()) out += ' ';
  out += "-> ";
  out += print_formula(s.succedent);
  return out;
}

std::vector<std::string> sequent_atoms(const Sequent& s) {
  std::vector<std::string> atoms, indices;
  for (const auto& f : s.antecedent) collect_rec(f, atoms, indices);
  collect_rec(s.succedent, atoms, indices);
  sort_unique(atoms);
  return atoms;
}

std::vector<std::string> sequent_bang_indices(const Sequent& s) {
  std::vector<std::string> atoms, indices;
  for (const auto& f : s.antecedent) collect_rec(f, atoms, indices);
  collect_rec(s.succedent, atoms, indices);
  sort_unique(indices);
  return indices;
}

}  // namespace smalc
