#include "smalc/semantics.hpp"

#include <stdexcept>

namespace smalc {

const ConucleusMap* SubexpInterpretation::find(const std::string& index) const {
  if (!sig) return nullptr;
  auto id = sig->find(index);
  if (!id) return nullptr;
  return &conuclei[static_cast<std::size_t>(*id)];
}

SubexpInterpretation build_sigma(const FiniteQuantale& q, const Signature& sig,
                                 const std::vector<std::uint32_t>& subquantales) {
  if (!q.unit()) throw std::invalid_argument("subexponential interpretation needs a unital quantale");
  const int n = sig.index_count();
  if (subquantales.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("one subquantale per signature index expected");

  // Contravariance of the provenance family: stronger index, smaller
  // subquantale.
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = 0; s2 < n; ++s2)
      if (sig.preceq(s1, s2)) {
        std::uint32_t big = subquantales[static_cast<std::size_t>(s1)];
        std::uint32_t small = subquantales[static_cast<std::size_t>(s2)];
        if ((small & ~big) != 0)
          throw std::invalid_argument("subquantale family is not contravariant at " +
                                      sig.name_of(s1) + " <= " + sig.name_of(s2));
      }

  SubexpInterpretation sigma;
  sigma.parent = &q;
  sigma.sig = &sig;
  sigma.provenance = subquantales;
  sigma.conuclei.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    Subquantale sub = make_subquantale(q, subquantales[static_cast<std::size_t>(s)]);
    ConucleusFilter filter;
    filter.unital = sig.in_weakening(s);
    filter.central = sig.in_exchange(s);
    filter.ssi = sig.in_contraction(s);
    sigma.conuclei.push_back(conucleus_from_subquantale(q, sub, filter));
  }

  // Verify, rather than assume, the interpretation's structure.
  for (int s1 = 0; s1 < n; ++s1)
    for (int s2 = 0; s2 < n; ++s2)
      if (sig.preceq(s1, s2) &&
          !conucleus_leq(sigma.conuclei[static_cast<std::size_t>(s2)],
                         sigma.conuclei[static_cast<std::size_t>(s1)]))
        throw std::logic_error("sigma is not contravariant at " + sig.name_of(s1) + " <= " +
                               sig.name_of(s2));
  for (int s = 0; s < n; ++s) {
    ConucleusClass cls = classify_conucleus(q, sigma.conuclei[static_cast<std::size_t>(s)]);
    if (sig.in_weakening(s) && !cls.is_unital)
      throw std::logic_error("sigma(" + sig.name_of(s) + ") is not unital despite s in W");
    if (sig.in_exchange(s) && !cls.is_central)
      throw std::logic_error("sigma(" + sig.name_of(s) + ") is not central despite s in E");
    if (sig.in_contraction(s) && !cls.is_ssi)
      throw std::logic_error("sigma(" + sig.name_of(s) + ") is not ssi despite s in C");
    if (sig.in_weakening(s) && sig.in_contraction(s) && !cls.is_central)
      throw std::logic_error("sigma(" + sig.name_of(s) + ") is not central despite s in W&C");
  }
  return sigma;
}

int interpret(const FiniteQuantale& q, const SubexpInterpretation* sigma, const Valuation& f,
              const FormulaPtr& formula) {
  switch (formula->kind()) {
    case Formula::Kind::Atom: {
      auto it = f.atoms.find(formula->name());
      if (it == f.atoms.end()) throw EvalError("valuation misses atom '" + formula->name() + "'");
      if (it->second < 0 || it->second >= q.size())
        throw EvalError("valuation value out of range for atom '" + formula->name() + "'");
      return it->second;
    }
    case Formula::Kind::Unit: {
      if (!q.unit()) throw EvalError("the unit constant needs a unital quantale");
      return *q.unit();
    }
    case Formula::Kind::Product:
      return q.mult(interpret(q, sigma, f, formula->left()),
                    interpret(q, sigma, f, formula->right()));
    case Formula::Kind::LDiv:
      return q.residual_left(interpret(q, sigma, f, formula->left()),
                             interpret(q, sigma, f, formula->right()));
    case Formula::Kind::RDiv:
      return q.residual_right(interpret(q, sigma, f, formula->left()),
                              interpret(q, sigma, f, formula->right()));
    case Formula::Kind::With:
      return q.meet(interpret(q, sigma, f, formula->left()),
                    interpret(q, sigma, f, formula->right()));
    case Formula::Kind::Plus:
      return q.join(interpret(q, sigma, f, formula->left()),
                    interpret(q, sigma, f, formula->right()));
    case Formula::Kind::Bang: {
      const ConucleusMap* i = sigma ? sigma->find(formula->name()) : nullptr;
      if (!i) throw EvalError("no interpretation for index '" + formula->name() + "'");
      return i->apply(interpret(q, sigma, f, formula->body()));
    }
  }
  throw EvalError("unreachable formula kind");
}

bool holds(const FiniteQuantale& q, const SubexpInterpretation* sigma, const Valuation& f,
           const Sequent& seq) {
  int acc;
  if (seq.antecedent.empty()) {
    if (!q.unit()) throw EvalError("empty antecedent needs a unital quantale");
    acc = *q.unit();
  } else {
    acc = interpret(q, sigma, f, seq.antecedent[0]);
    for (std::size_t i = 1; i < seq.antecedent.size(); ++i)
      acc = q.mult(acc, interpret(q, sigma, f, seq.antecedent[i]));
  }
  return q.leq(acc, interpret(q, sigma, f, seq.succedent));
}

std::vector<std::uint32_t> subquantale_masks(const FiniteQuantale& q) {
  std::vector<std::uint32_t> out;
  const std::uint32_t all = (q.size() >= 31) ? 0x7fffffffu : ((1u << q.size()) - 1);
  for (std::uint32_t mask = 0; mask <= all; ++mask)
    if (subquantale_errors(q, mask).empty()) out.push_back(mask);
  return out;
}

std::vector<std::vector<std::uint32_t>> contravariant_assignments(const FiniteQuantale& q,
                                                                  const Signature& sig) {
  const int n = sig.index_count();
  std::vector<std::uint32_t> subs = subquantale_masks(q);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);

  auto contravariant = [&]() {
    for (int s1 = 0; s1 < n; ++s1)
      for (int s2 = 0; s2 < n; ++s2) {
        if (!sig.preceq(s1, s2)) continue;
        std::uint32_t big = subs[pick[static_cast<std::size_t>(s1)]];
        std::uint32_t small = subs[pick[static_cast<std::size_t>(s2)]];
        if ((small & ~big) != 0) return false;
      }
    return true;
  };

  if (n == 0) {
    out.push_back({});
    return out;
  }
  for (;;) {
    if (contravariant()) {
      std::vector<std::uint32_t> masks;
      masks.reserve(static_cast<std::size_t>(n));
      for (int s = 0; s < n; ++s) masks.push_back(subs[pick[static_cast<std::size_t>(s)]]);
      out.push_back(std::move(masks));
    }
    // Odometer, first index most significant.
    int pos = n - 1;
    while (pos >= 0) {
      if (++pick[static_cast<std::size_t>(pos)] < subs.size()) break;
      pick[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

}  // namespace smalc
