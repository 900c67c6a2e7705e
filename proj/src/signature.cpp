#include "smalc/signature.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace smalc {

std::optional<int> Signature::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Signature::preceq(const std::string& s, const std::string& t) const {
  auto a = find(s), b = find(t);
  return a && b && preceq(*a, *b);
}
bool Signature::in_weakening(const std::string& s) const {
  auto a = find(s);
  return a && in_weakening(*a);
}
bool Signature::in_contraction(const std::string& s) const {
  auto a = find(s);
  return a && in_contraction(*a);
}
bool Signature::in_exchange(const std::string& s) const {
  auto a = find(s);
  return a && in_exchange(*a);
}

SignatureDescription Signature::describe() const {
  SignatureDescription d;
  d.indices = names_;
  const int n = index_count();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t && preceq(s, t)) d.order.emplace_back(names_[s], names_[t]);
  for (int s = 0; s < n; ++s) {
    if (in_weakening(s)) d.weakening.push_back(names_[s]);
    if (in_contraction(s)) d.contraction.push_back(names_[s]);
    if (in_exchange(s)) d.exchange.push_back(names_[s]);
  }
  return d;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

struct SignatureValidator {
  static SignatureResult run(const SignatureDescription& raw) {
    SignatureResult res;
    auto err = [&res](const std::string& m) { res.errors.push_back(m); };

    Signature sig;
    for (const auto& name : raw.indices) {
      if (!valid_identifier(name)) {
        err("invalid index identifier: '" + name + "'");
        continue;
      }
      if (std::find(sig.names_.begin(), sig.names_.end(), name) != sig.names_.end()) {
        err("duplicate index: " + name);
        continue;
      }
      sig.names_.push_back(name);
    }
    const int n = sig.index_count();
    auto id_of = [&](const std::string& name, const char* where) -> std::optional<int> {
      auto id = sig.find(name);
      if (!id) err(std::string("unknown index in ") + where + ": " + name);
      return id;
    };

    sig.preceq_.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) sig.preceq_[static_cast<std::size_t>(i * n + i)] = 1;
    for (const auto& [a, b] : raw.order) {
      auto ia = id_of(a, "order"), ib = id_of(b, "order");
      if (ia && ib) sig.preceq_[static_cast<std::size_t>(*ia * n + *ib)] = 1;
    }
    // Transitive closure; antisymmetry is deliberately not required.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (sig.preceq_[static_cast<std::size_t>(i * n + k)])
          for (int j = 0; j < n; ++j)
            if (sig.preceq_[static_cast<std::size_t>(k * n + j)])
              sig.preceq_[static_cast<std::size_t>(i * n + j)] = 1;

    auto make_set = [&](const std::vector<std::string>& members, const char* label) {
      std::vector<uint8_t> bits(static_cast<std::size_t>(n), 0);
      for (const auto& m : members) {
        if (auto id = id_of(m, label)) bits[static_cast<std::size_t>(*id)] = 1;
      }
      return bits;
    };
    sig.w_ = make_set(raw.weakening, "W");
    sig.c_ = make_set(raw.contraction, "C");
    sig.e_ = make_set(raw.exchange, "E");

    // Upward closure is checked, not repaired.
    auto check_up = [&](const std::vector<uint8_t>& bits, const char* label) {
      for (int s = 0; s < n; ++s) {
        if (!bits[static_cast<std::size_t>(s)]) continue;
        for (int t = 0; t < n; ++t)
          if (sig.preceq(s, t) && !bits[static_cast<std::size_t>(t)])
            err(std::string("not upward-closed: ") + label + " misses " + sig.names_[t] +
                " above " + sig.names_[s]);
      }
    };
    check_up(sig.w_, "W");
    check_up(sig.c_, "C");
    check_up(sig.e_, "E");

    for (int s = 0; s < n; ++s)
      if (sig.w_[static_cast<std::size_t>(s)] && sig.c_[static_cast<std::size_t>(s)] &&
          !sig.e_[static_cast<std::size_t>(s)])
        err("W&C not within E: index " + sig.names_[s]);

    if (res.errors.empty()) res.signature = std::move(sig);
    return res;
  }
};

SignatureResult validate_signature(const SignatureDescription& raw) {
  return SignatureValidator::run(raw);
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = strip(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

SignatureResult parse_signature_text(const std::string& text) {
  SignatureDescription d;
  std::vector<std::string> errors;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;
    std::stringstream ls(line);
    std::string kw;
    ls >> kw;
    auto bad = [&](const std::string& why) {
      errors.push_back("line " + std::to_string(lineno) + ": " + why);
    };
    if (kw == "index") {
      std::string name;
      ls >> name;
      std::string rest;
      if (name.empty() || (ls >> rest)) {
        bad("expected 'index <name>'");
        continue;
      }
      d.indices.push_back(name);
    } else if (kw == "order") {
      std::string a, le, b, rest;
      ls >> a >> le >> b;
      if (a.empty() || le != "<=" || b.empty() || (ls >> rest)) {
        bad("expected 'order <s> <= <t>'");
        continue;
      }
      d.order.emplace_back(a, b);
    } else if (kw == "set") {
      std::string label, eq;
      ls >> label >> eq;
      std::string members;
      std::getline(ls, members);
      if (eq != "=") {
        bad("expected 'set W|C|E = s,t,...'");
        continue;
      }
      auto items = split_commas(members);
      if (label == "W")
        d.weakening.insert(d.weakening.end(), items.begin(), items.end());
      else if (label == "C")
        d.contraction.insert(d.contraction.end(), items.begin(), items.end());
      else if (label == "E")
        d.exchange.insert(d.exchange.end(), items.begin(), items.end());
      else
        bad("unknown set '" + label + "' (expected W, C or E)");
    } else {
      bad("unknown directive '" + kw + "'");
    }
  }
  if (!errors.empty()) return SignatureResult{std::nullopt, std::move(errors)};
  return validate_signature(d);
}

SignatureResult load_signature_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) return SignatureResult{std::nullopt, {"cannot open signature file: " + path}};
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_signature_text(ss.str());
}

std::string print_signature(const Signature& sig) {
  SignatureDescription d = sig.describe();
  std::string out;
  for (const auto& i : d.indices) out += "index " + i + "\n";
  for (const auto& [a, b] : d.order) out += "order " + a + " <= " + b + "\n";
  auto emit_set = [&out](const char* label, const std::vector<std::string>& v) {
    if (v.empty()) return;
    out += std::string("set ") + label + " = ";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += v[i];
    }
    out += '\n';
  };
  emit_set("W", d.weakening);
  emit_set("C", d.contraction);
  emit_set("E", d.exchange);
  return out;
}

}  // namespace smalc
