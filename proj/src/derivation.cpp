#include "smalc/derivation.hpp"

#include <fstream>
#include <sstream>

#include "smalc/parse.hpp"

namespace smalc {

namespace {

struct RuleNameEntry {
  RuleId id;
  const char* name;
};

constexpr RuleNameEntry kRuleNames[] = {
    {RuleId::Ax, "Ax"},           {RuleId::LDivL, "LDivL"},   {RuleId::LDivR, "LDivR"},
    {RuleId::RDivL, "RDivL"},     {RuleId::RDivR, "RDivR"},   {RuleId::ProdL, "ProdL"},
    {RuleId::ProdR, "ProdR"},     {RuleId::UnitL, "UnitL"},   {RuleId::UnitR, "UnitR"},
    {RuleId::WithL1, "WithL1"},   {RuleId::WithL2, "WithL2"}, {RuleId::WithR, "WithR"},
    {RuleId::PlusL, "PlusL"},     {RuleId::PlusR1, "PlusR1"}, {RuleId::PlusR2, "PlusR2"},
    {RuleId::BangL, "BangL"},     {RuleId::BangR, "BangR"},   {RuleId::NContr1, "NContr1"},
    {RuleId::NContr2, "NContr2"}, {RuleId::Ex1, "Ex1"},       {RuleId::Ex2, "Ex2"},
    {RuleId::WeakBang, "WeakBang"}, {RuleId::Cut, "Cut"},
};

}  // namespace

const char* rule_name(RuleId id) {
  for (const auto& e : kRuleNames)
    if (e.id == id) return e.name;
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (const auto& e : kRuleNames)
    if (name == e.name) return e.id;
  return std::nullopt;
}

bool rule_is_contraction(RuleId id) { return id == RuleId::NContr1 || id == RuleId::NContr2; }

namespace {

void export_rec(const Derivation& d, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += rule_name(d.rule.id);
  if (!d.rule.index.empty()) {
    out += " [";
    out += d.rule.index;
    out += ']';
  }
  out += " :: ";
  out += print_sequent(d.conclusion);
  out += '\n';
  for (const auto& p : d.premises) export_rec(p, depth + 1, out);
}

struct Line {
  int depth;
  RuleApp rule;
  Sequent sequent;
};

Line parse_line(const std::string& raw, int lineno) {
  std::size_t indent = 0;
  while (indent < raw.size() && raw[indent] == ' ') ++indent;
  if (indent % 2 != 0)
    throw ParseError("derivation line " + std::to_string(lineno) + ": odd indentation", indent);
  std::string body = raw.substr(indent);
  std::size_t sep = body.find("::");
  if (sep == std::string::npos)
    throw ParseError("derivation line " + std::to_string(lineno) + ": missing '::'", indent);
  std::string head = body.substr(0, sep);
  std::string seq_text = body.substr(sep + 2);

  std::stringstream hs(head);
  std::string rule_tok, idx_tok;
  hs >> rule_tok >> idx_tok;
  Line line;
  line.depth = static_cast<int>(indent / 2);
  auto id = rule_from_name(rule_tok);
  if (!id)
    throw ParseError("derivation line " + std::to_string(lineno) + ": unknown rule '" + rule_tok + "'",
                     indent);
  line.rule.id = *id;
  if (!idx_tok.empty()) {
    if (idx_tok.size() < 3 || idx_tok.front() != '[' || idx_tok.back() != ']')
      throw ParseError("derivation line " + std::to_string(lineno) + ": expected [index]", indent);
    line.rule.index = idx_tok.substr(1, idx_tok.size() - 2);
  }
  line.sequent = parse_sequent(seq_text);
  return line;
}

}  // namespace

std::string export_derivation(const Derivation& d) {
  std::string out;
  export_rec(d, 0, out);
  return out;
}

Derivation import_derivation(const std::string& text) {
  std::vector<Line> lines;
  std::stringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    lines.push_back(parse_line(raw, lineno));
  }
  if (lines.empty()) throw ParseError("empty derivation", 0);
  if (lines[0].depth != 0) throw ParseError("root node must not be indented", 0);

  // Rebuild the tree from the indentation structure.
  std::size_t cursor = 0;
  auto build = [&](auto&& self, int depth) -> Derivation {
    const Line& line = lines[cursor];
    if (line.depth != depth) throw ParseError("inconsistent indentation in derivation", 0);
    ++cursor;
    Derivation d;
    d.conclusion = line.sequent;
    d.rule = line.rule;
    while (cursor < lines.size() && lines[cursor].depth == depth + 1)
      d.premises.push_back(self(self, depth + 1));
    if (cursor < lines.size() && lines[cursor].depth > depth + 1)
      throw ParseError("indentation jumps more than one level", 0);
    return d;
  };
  Derivation root = build(build, 0);
  if (cursor != lines.size()) throw ParseError("multiple roots in derivation", 0);
  return root;
}

Derivation load_derivation_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open derivation file: " + path, 0);
  std::stringstream ss;
  ss << f.rdbuf();
  return import_derivation(ss.str());
}

}  // namespace smalc
