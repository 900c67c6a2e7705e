#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace smalc {

struct QuantaleResult;

/// A finite quantale: a finite lattice (all joins exist, including the
/// empty one) with an associative multiplication distributing over
/// joins on both sides, optionally unital. Elements are indices
/// 0..n-1; subsets are bitmasks, so sizes are limited to 31 elements
/// (far beyond what exhaustive checking can visit anyway).
class FiniteQuantale {
public:
  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a * n_ + b)] != 0; }
  int mult(int a, int b) const { return mult_[static_cast<std::size_t>(a * n_ + b)]; }
  int join(int a, int b) const { return join_[static_cast<std::size_t>(a * n_ + b)]; }
  int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a * n_ + b)]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  std::optional<int> unit() const { return unit_; }

  /// Join over a subset given as a bitmask; the empty join is bottom.
  int join_mask(std::uint32_t mask) const;

  /// a \ b = join { c | a*c <= b }
  int residual_left(int a, int b) const;
  /// b / a = join { c | c*a <= b }
  int residual_right(int b, int a) const;

  bool is_central_element(int a) const;
  bool is_ssi_element(int a) const;

  /// Raw tables, exhaustively checked; errors name the violation and a
  /// witness. Derived join/meet tables and bottom/top are computed.
  static QuantaleResult validate(int n, std::vector<std::uint8_t> leq, std::vector<int> mult,
                                 std::optional<int> unit);

  const std::vector<std::uint8_t>& leq_table() const { return leq_; }
  const std::vector<int>& mult_table() const { return mult_; }

private:
  int n_ = 0;
  std::vector<std::uint8_t> leq_;
  std::vector<int> mult_;
  std::vector<int> join_, meet_;
  int bottom_ = 0, top_ = 0;
  std::optional<int> unit_;
  friend struct QuantaleValidator;
};

struct QuantaleResult {
  std::optional<FiniteQuantale> quantale;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty(); }
};

QuantaleResult validate_quantale(int n, std::vector<std::uint8_t> leq, std::vector<int> mult,
                                 std::optional<int> unit);

int residual_left(const FiniteQuantale& q, int a, int b);
int residual_right(const FiniteQuantale& q, int b, int a);

/// A subset closed under multiplication and all joins (bottom, the
/// empty join, included).
struct Subquantale {
  const FiniteQuantale* parent = nullptr;
  std::uint32_t members = 0;

  bool contains(int a) const { return (members >> a) & 1u; }
  std::vector<int> elements() const;
};

std::vector<std::string> subquantale_errors(const FiniteQuantale& q, std::uint32_t members);
/// Throws std::invalid_argument if the subset is not closed.
Subquantale make_subquantale(const FiniteQuantale& q, std::uint32_t members);

/// { a | a*b = b*a for all b }, closure re-checked on construction.
Subquantale centre(const FiniteQuantale& q);
/// Strongly square increasing elements; closure is checked, not
/// assumed.
Subquantale ssi_elements(const FiniteQuantale& q);

/// Quantic conucleus: deflationary, idempotent, monotone, and
/// I a * I b = I(I a * I b). The unit-fixpoint condition I e = e is
/// deliberately not part of validation (constant-bottom must remain a
/// conucleus on unital quantales); it can be queried separately.
struct ConucleusMap {
  const FiniteQuantale* parent = nullptr;
  std::vector<int> table;

  int apply(int a) const { return table[static_cast<std::size_t>(a)]; }
};

std::vector<std::string> conucleus_errors(const FiniteQuantale& q, const std::vector<int>& table);
ConucleusMap make_conucleus(const FiniteQuantale& q, std::vector<int> table);

struct ConucleusFilter {
  bool unital = false;  // keep only q <= e
  bool central = false; // keep only q in Z(Q)
  bool ssi = false;     // keep only strongly square increasing q

  static ConucleusFilter none() { return {}; }
};

/// I a = join { q in S | q <= a and q passes the filter }. The result
/// is verified to satisfy the conucleus axioms. The unital filter
/// requires a unital quantale.
ConucleusMap conucleus_from_subquantale(const FiniteQuantale& q, const Subquantale& s,
                                        ConucleusFilter filter);

/// Fixpoints of I; closure and the unfolding identity
/// I a = join { q in Q_I | q <= a } are both verified.
Subquantale open_elements(const FiniteQuantale& q, const ConucleusMap& i);

/// Pointwise order; throws std::invalid_argument on mismatched parents.
bool conucleus_leq(const ConucleusMap& i1, const ConucleusMap& i2);

struct ConucleusClass {
  bool is_unital = false;
  bool is_central = false;
  bool is_ssi = false;
};

/// Exhaustive classification. unital and ssi together imply central;
/// that implication is asserted on every call.
ConucleusClass classify_conucleus(const FiniteQuantale& q, const ConucleusMap& i);

bool conucleus_preserves_unit(const FiniteQuantale& q, const ConucleusMap& i);

/// Element map between quantales preserving *, all joins (binary plus
/// bottom at finite scale) and the unit when the source is unital.
struct QuantaleHom {
  const FiniteQuantale* src = nullptr;
  const FiniteQuantale* dst = nullptr;
  std::vector<int> map;

  int apply(int a) const { return map[static_cast<std::size_t>(a)]; }
};

std::vector<std::string> homomorphism_errors(const QuantaleHom& f);
/// Also requires the conucleus square f(I1 a) = I2(f a).
std::vector<std::string> homomorphism_errors(const QuantaleHom& f, const ConucleusMap& i1,
                                             const ConucleusMap& i2);

/// File format: `quantale n=<size> unital=<elem|none>`, then n lines
/// of n bits (leq rows), then n lines of n element indices (mult
/// rows).
std::string print_quantale(const FiniteQuantale& q);
QuantaleResult parse_quantale_text(const std::string& text);
/// Consumes one quantale block from a stream (used by witness files
/// that embed a quantale before further sections).
QuantaleResult parse_quantale_stream(std::istream& in);
QuantaleResult load_quantale_file(const std::string& path);

/// Conucleus file: a line `conucleus` then one line of n indices.
std::string print_conucleus(const ConucleusMap& i);

}  // namespace smalc
