#pragma once

#include <optional>
#include <string>
#include <vector>

namespace smalc {

/// Raw, unvalidated signature description: indices, declared order
/// pairs, and the three structural-rule subsets.
struct SignatureDescription {
  std::vector<std::string> indices;
  std::vector<std::pair<std::string, std::string>> order;  // s <= t
  std::vector<std::string> weakening;                      // W
  std::vector<std::string> contraction;                    // C
  std::vector<std::string> exchange;                       // E
};

/// Validated subexponential signature: a preorder of indices with
/// upward-closed W, C, E satisfying W & C <= E. The order is the
/// reflexive-transitive closure of the declared pairs; closure is
/// never applied to W/C/E themselves.
class Signature {
public:
  int index_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(const std::string& name) const;
  const std::string& name_of(int id) const { return names_[static_cast<std::size_t>(id)]; }

  /// s precedes t (s is the weaker index).
  bool preceq(int s, int t) const { return preceq_[static_cast<std::size_t>(s * index_count() + t)] != 0; }
  bool in_weakening(int s) const { return w_[static_cast<std::size_t>(s)] != 0; }
  bool in_contraction(int s) const { return c_[static_cast<std::size_t>(s)] != 0; }
  bool in_exchange(int s) const { return e_[static_cast<std::size_t>(s)] != 0; }

  bool preceq(const std::string& s, const std::string& t) const;
  bool in_weakening(const std::string& s) const;
  bool in_contraction(const std::string& s) const;
  bool in_exchange(const std::string& s) const;

  SignatureDescription describe() const;

private:
  friend struct SignatureValidator;
  std::vector<std::string> names_;
  std::vector<uint8_t> preceq_;  // n*n, closed
  std::vector<uint8_t> w_, c_, e_;
};

struct SignatureResult {
  std::optional<Signature> signature;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

SignatureResult validate_signature(const SignatureDescription& raw);

/// Line format: `index s`, `order s <= t`, `set W = s,t`, `set C = ...`,
/// `set E = ...`; '#' starts a comment.
SignatureResult parse_signature_text(const std::string& text);
SignatureResult load_signature_file(const std::string& path);
std::string print_signature(const Signature& sig);

}  // namespace smalc
