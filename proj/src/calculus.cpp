#include "smalc/calculus.hpp"

#include <algorithm>

namespace smalc {

std::optional<Mode> mode_from_string(const std::string& s) {
  if (s == "L") return Mode::L;
  if (s == "Lstar") return Mode::Lstar;
  if (s == "L1") return Mode::L1;
  return std::nullopt;
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::L: return "L";
    case Mode::Lstar: return "Lstar";
    case Mode::L1: return "L1";
  }
  return "?";
}

namespace {

using Ante = std::vector<FormulaPtr>;

Ante segment(const Ante& a, std::size_t from, std::size_t to) {
  return Ante(a.begin() + static_cast<long>(from), a.begin() + static_cast<long>(to));
}

Ante erased(const Ante& a, std::size_t p) {
  Ante out = a;
  out.erase(out.begin() + static_cast<long>(p));
  return out;
}

Ante inserted(const Ante& a, std::size_t p, FormulaPtr f) {
  Ante out = a;
  out.insert(out.begin() + static_cast<long>(p), std::move(f));
  return out;
}

Ante replaced(const Ante& a, std::size_t p, std::initializer_list<FormulaPtr> fs) {
  Ante out;
  out.reserve(a.size() + fs.size() - 1);
  out.insert(out.end(), a.begin(), a.begin() + static_cast<long>(p));
  out.insert(out.end(), fs.begin(), fs.end());
  out.insert(out.end(), a.begin() + static_cast<long>(p) + 1, a.end());
  return out;
}

Ante moved(const Ante& a, std::size_t from, std::size_t to) {
  Ante out = a;
  FormulaPtr f = out[from];
  out.erase(out.begin() + static_cast<long>(from));
  out.insert(out.begin() + static_cast<long>(to), std::move(f));
  return out;
}

struct GenOptions {
  bool enforce_side_conditions = true;  // W/C/E membership, promotion order, mode gates
  bool skip_noop_exchange = true;
  bool skip_empty_premises_in_L = true;
  std::optional<RuleId> only_rule;
};

struct Generator {
  const Sequent& goal;
  const Signature& sig;
  Mode mode;
  GenOptions opt;
  std::vector<RuleInstance>& out;

  bool wants(RuleId id) const { return !opt.only_rule || *opt.only_rule == id; }

  bool premise_ok(const Sequent& p) const {
    return !(mode == Mode::L && opt.skip_empty_premises_in_L && p.antecedent.empty());
  }

  void push(RuleId id, std::string index, int principal, int split, std::vector<Sequent> premises) {
    for (const auto& p : premises)
      if (!premise_ok(p)) return;
    out.push_back(RuleInstance{RuleApp{id, std::move(index), principal, split}, std::move(premises)});
  }

  void run() {
    const Ante& ante = goal.antecedent;
    const FormulaPtr& succ = goal.succedent;
    const std::size_t n = ante.size();

    if (wants(RuleId::Ax) && n == 1 && formula_eq(ante[0], succ))
      push(RuleId::Ax, "", -1, -1, {});

    if (wants(RuleId::UnitR) && n == 0 && succ->kind() == Formula::Kind::Unit &&
        (!opt.enforce_side_conditions || mode == Mode::L1))
      push(RuleId::UnitR, "", -1, -1, {});

    // Unary right rules.
    if (wants(RuleId::LDivR) && succ->kind() == Formula::Kind::LDiv) {
      Sequent prem{inserted(ante, 0, succ->left()), succ->right()};
      if (!(opt.enforce_side_conditions && mode == Mode::L && n == 0))
        push(RuleId::LDivR, "", -1, -1, {std::move(prem)});
    }
    if (wants(RuleId::RDivR) && succ->kind() == Formula::Kind::RDiv) {
      Sequent prem{inserted(ante, n, succ->right()), succ->left()};
      if (!(opt.enforce_side_conditions && mode == Mode::L && n == 0))
        push(RuleId::RDivR, "", -1, -1, {std::move(prem)});
    }
    if (wants(RuleId::PlusR1) && succ->kind() == Formula::Kind::Plus)
      push(RuleId::PlusR1, "", -1, -1, {Sequent{ante, succ->left()}});
    if (wants(RuleId::PlusR2) && succ->kind() == Formula::Kind::Plus)
      push(RuleId::PlusR2, "", -1, -1, {Sequent{ante, succ->right()}});
    if (wants(RuleId::BangR) && succ->kind() == Formula::Kind::Bang) {
      bool legal = true;
      if (opt.enforce_side_conditions) {
        auto s = sig.find(succ->name());
        if (!s) legal = false;
        for (const auto& f : ante) {
          if (!legal) break;
          if (f->kind() != Formula::Kind::Bang) {
            legal = false;
            break;
          }
          auto sj = sig.find(f->name());
          legal = sj && sig.preceq(*s, *sj);
        }
      }
      if (legal) push(RuleId::BangR, succ->name(), -1, -1, {Sequent{ante, succ->body()}});
    }

    // Unary left rules.
    for (std::size_t p = 0; p < n; ++p) {
      const FormulaPtr& f = ante[p];
      switch (f->kind()) {
        case Formula::Kind::Unit:
          if (wants(RuleId::UnitL) && (!opt.enforce_side_conditions || mode == Mode::L1))
            push(RuleId::UnitL, "", static_cast<int>(p), -1, {Sequent{erased(ante, p), succ}});
          break;
        case Formula::Kind::Product:
          if (wants(RuleId::ProdL))
            push(RuleId::ProdL, "", static_cast<int>(p), -1,
                 {Sequent{replaced(ante, p, {f->left(), f->right()}), succ}});
          break;
        case Formula::Kind::With:
          if (wants(RuleId::WithL1))
            push(RuleId::WithL1, "", static_cast<int>(p), -1,
                 {Sequent{replaced(ante, p, {f->left()}), succ}});
          if (wants(RuleId::WithL2))
            push(RuleId::WithL2, "", static_cast<int>(p), -1,
                 {Sequent{replaced(ante, p, {f->right()}), succ}});
          break;
        case Formula::Kind::Bang:
          if (wants(RuleId::BangL))
            push(RuleId::BangL, f->name(), static_cast<int>(p), -1,
                 {Sequent{replaced(ante, p, {f->body()}), succ}});
          break;
        default:
          break;
      }
    }

    // Modal structural rules.
    for (std::size_t p = 0; p < n; ++p) {
      const FormulaPtr& f = ante[p];
      if (f->kind() != Formula::Kind::Bang) continue;
      const std::string& idx = f->name();
      auto s = sig.find(idx);
      bool in_w = s && sig.in_weakening(*s);
      bool in_c = s && sig.in_contraction(*s);
      bool in_e = s && sig.in_exchange(*s);
      if (wants(RuleId::WeakBang) && (in_w || !opt.enforce_side_conditions))
        push(RuleId::WeakBang, idx, static_cast<int>(p), -1, {Sequent{erased(ante, p), succ}});
      if (wants(RuleId::Ex1) && (in_e || !opt.enforce_side_conditions)) {
        std::size_t q0 = opt.skip_noop_exchange ? p + 1 : p;
        for (std::size_t q = q0; q < n; ++q)
          push(RuleId::Ex1, idx, static_cast<int>(p), static_cast<int>(q),
               {Sequent{moved(ante, p, q), succ}});
      }
      if (wants(RuleId::Ex2) && (in_e || !opt.enforce_side_conditions)) {
        std::size_t q1 = opt.skip_noop_exchange ? p : p + 1;
        for (std::size_t q = 0; q < q1; ++q)
          push(RuleId::Ex2, idx, static_cast<int>(p), static_cast<int>(q),
               {Sequent{moved(ante, p, q), succ}});
      }
      if (wants(RuleId::NContr1) && (in_c || !opt.enforce_side_conditions)) {
        for (std::size_t q = p + 1; q <= n; ++q)
          push(RuleId::NContr1, idx, static_cast<int>(p), static_cast<int>(q),
               {Sequent{inserted(ante, q, f), succ}});
      }
      if (wants(RuleId::NContr2) && (in_c || !opt.enforce_side_conditions)) {
        for (std::size_t q = 0; q <= p; ++q)
          push(RuleId::NContr2, idx, static_cast<int>(p), static_cast<int>(q),
               {Sequent{inserted(ante, q, f), succ}});
      }
    }

    // Two-premise rules.
    if (wants(RuleId::WithR) && succ->kind() == Formula::Kind::With)
      push(RuleId::WithR, "", -1, -1,
           {Sequent{ante, succ->left()}, Sequent{ante, succ->right()}});
    for (std::size_t p = 0; wants(RuleId::PlusL) && p < n; ++p) {
      const FormulaPtr& f = ante[p];
      if (f->kind() != Formula::Kind::Plus) continue;
      push(RuleId::PlusL, "", static_cast<int>(p), -1,
           {Sequent{replaced(ante, p, {f->left()}), succ},
            Sequent{replaced(ante, p, {f->right()}), succ}});
    }
    if (wants(RuleId::ProdR) && succ->kind() == Formula::Kind::Product) {
      for (std::size_t k = 0; k <= n; ++k)
        push(RuleId::ProdR, "", -1, static_cast<int>(k),
             {Sequent{segment(ante, 0, k), succ->left()},
              Sequent{segment(ante, k, n), succ->right()}});
    }
    for (std::size_t p = 0; p < n; ++p) {
      const FormulaPtr& f = ante[p];
      if (wants(RuleId::LDivL) && f->kind() == Formula::Kind::LDiv) {
        // conclusion = Delta ++ Gamma ++ [A\B] ++ Theta
        for (std::size_t k = 0; k <= p; ++k) {
          Ante gamma = segment(ante, k, p);
          Ante rest = segment(ante, 0, k);
          rest.push_back(f->right());
          Ante theta = segment(ante, p + 1, n);
          rest.insert(rest.end(), theta.begin(), theta.end());
          push(RuleId::LDivL, "", static_cast<int>(p), static_cast<int>(k),
               {Sequent{std::move(gamma), f->left()}, Sequent{std::move(rest), succ}});
        }
      }
      if (wants(RuleId::RDivL) && f->kind() == Formula::Kind::RDiv) {
        // conclusion = Delta ++ [B/A] ++ Gamma ++ Theta
        for (std::size_t k = p + 1; k <= n; ++k) {
          Ante gamma = segment(ante, p + 1, k);
          Ante rest = segment(ante, 0, p);
          rest.push_back(f->left());
          Ante theta = segment(ante, k, n);
          rest.insert(rest.end(), theta.begin(), theta.end());
          push(RuleId::RDivL, "", static_cast<int>(p), static_cast<int>(k),
               {Sequent{std::move(gamma), f->right()}, Sequent{std::move(rest), succ}});
        }
      }
    }
  }
};

}  // namespace

std::vector<RuleInstance> applicable_rules(const Sequent& goal, const Signature& sig, Mode mode) {
  std::vector<RuleInstance> out;
  Generator{goal, sig, mode, GenOptions{}, out}.run();
  return out;
}

namespace {

std::vector<RuleInstance> structural_instances(const Sequent& goal, const Signature& sig, Mode mode,
                                               RuleId rule) {
  std::vector<RuleInstance> out;
  GenOptions opt;
  opt.enforce_side_conditions = false;
  opt.skip_noop_exchange = false;
  opt.skip_empty_premises_in_L = false;
  opt.only_rule = rule;
  Generator{goal, sig, mode, opt, out}.run();
  return out;
}

bool premises_match(const RuleInstance& inst, const std::vector<Derivation>& premises) {
  if (inst.premises.size() != premises.size()) return false;
  for (std::size_t i = 0; i < premises.size(); ++i)
    if (!(inst.premises[i] == premises[i].conclusion)) return false;
  return true;
}

bool metadata_match(const RuleApp& stored, const RuleApp& inst) {
  if (!stored.index.empty() && stored.index != inst.index) return false;
  if (stored.principal >= 0 && stored.principal != inst.principal) return false;
  if (stored.split >= 0 && stored.split != inst.split) return false;
  return true;
}

/// Side conditions for a structurally matched instance; empty on success.
std::optional<std::string> side_condition_error(const RuleInstance& inst, const Sequent& conclusion,
                                                const Signature& sig, Mode mode) {
  const RuleId id = inst.app.id;
  if ((id == RuleId::UnitL || id == RuleId::UnitR) && mode != Mode::L1)
    return std::string("unit rules are only available in mode L1");
  auto need_member = [&](bool ok, const char* set) -> std::optional<std::string> {
    if (ok) return std::nullopt;
    return "index '" + inst.app.index + "' is not in " + set;
  };
  auto sid = inst.app.index.empty() ? std::nullopt : sig.find(inst.app.index);
  switch (id) {
    case RuleId::WeakBang:
      return need_member(sid && sig.in_weakening(*sid), "W (weakening)");
    case RuleId::NContr1:
    case RuleId::NContr2:
      return need_member(sid && sig.in_contraction(*sid), "C (contraction)");
    case RuleId::Ex1:
    case RuleId::Ex2:
      return need_member(sid && sig.in_exchange(*sid), "E (exchange)");
    case RuleId::BangR: {
      if (!sid) return "unknown subexponential index '" + inst.app.index + "'";
      for (const auto& f : conclusion.antecedent) {
        if (f->kind() != Formula::Kind::Bang)
          return std::string("promotion requires every antecedent formula to be a !-formula");
        auto sj = sig.find(f->name());
        if (!sj) return "unknown subexponential index '" + f->name() + "'";
        if (!sig.preceq(*sid, *sj))
          return "promotion side condition: '" + f->name() + "' does not dominate '" +
                 inst.app.index + "'";
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

struct Checker {
  const Signature& sig;
  Mode mode;
  CheckReport& report;

  void error(const std::string& path, RuleId rule, std::string msg) {
    report.errors.push_back(CheckError{path, rule, std::move(msg)});
  }

  void check_cut(const Derivation& d, const std::string& path) {
    if (d.premises.size() != 2) {
      error(path, RuleId::Cut, "cut needs exactly two premises");
      return;
    }
    const Sequent& left = d.premises[0].conclusion;
    const Sequent& right = d.premises[1].conclusion;
    if (!formula_eq(right.succedent, d.conclusion.succedent)) {
      error(path, RuleId::Cut, "cut conclusion succedent differs from right premise");
      return;
    }
    const FormulaPtr& cut_formula = left.succedent;
    for (std::size_t p = 0; p < right.antecedent.size(); ++p) {
      if (!formula_eq(right.antecedent[p], cut_formula)) continue;
      if (d.rule.principal >= 0 && static_cast<std::size_t>(d.rule.principal) != p) continue;
      Ante expect = segment(right.antecedent, 0, p);
      expect.insert(expect.end(), left.antecedent.begin(), left.antecedent.end());
      Ante tail = segment(right.antecedent, p + 1, right.antecedent.size());
      expect.insert(expect.end(), tail.begin(), tail.end());
      if (Sequent{expect, d.conclusion.succedent} == d.conclusion) return;
    }
    error(path, RuleId::Cut, "conclusion is not the cut of the premises");
  }

  void check_node(const Derivation& d, const std::string& path) {
    for (const auto& idx : sequent_bang_indices(d.conclusion))
      if (!sig.find(idx)) error(path, d.rule.id, "unknown subexponential index '" + idx + "'");
    if (mode == Mode::L && d.conclusion.antecedent.empty())
      error(path, d.rule.id, "empty antecedent is not allowed in mode L");

    for (std::size_t i = 0; i < d.premises.size(); ++i)
      check_node(d.premises[i], path + "." + std::to_string(i));

    if (d.rule.id == RuleId::Cut) {
      check_cut(d, path);
      return;
    }

    auto candidates = structural_instances(d.conclusion, sig, mode, d.rule.id);
    const RuleInstance* matched = nullptr;
    for (const auto& inst : candidates) {
      if (!premises_match(inst, d.premises) || !metadata_match(d.rule, inst.app)) continue;
      if (!side_condition_error(inst, d.conclusion, sig, mode)) return;  // fully valid
      if (!matched) matched = &inst;
    }
    if (matched) {
      error(path, d.rule.id, *side_condition_error(*matched, d.conclusion, sig, mode));
    } else {
      error(path, d.rule.id,
            std::string("premises do not instantiate ") + rule_name(d.rule.id) + " at " +
                print_sequent(d.conclusion));
    }
  }
};

}  // namespace

CheckReport check_derivation(const Derivation& d, const Signature& sig, Mode mode) {
  CheckReport report;
  Checker{sig, mode, report}.check_node(d, "0");
  return report;
}

std::string CheckReport::to_string() const {
  std::string out;
  for (const auto& e : errors) {
    out += e.path;
    out += " [";
    out += rule_name(e.rule);
    out += "]: ";
    out += e.message;
    out += '\n';
  }
  return out;
}

}  // namespace smalc
