#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smalc/quantale.hpp"

namespace smalc {

/// Binary relation over the carrier of a source quantale, stored as an
/// explicit bit matrix so equality and inclusion checks are exact.
struct RelMatrix {
  int n = 0;
  std::vector<std::uint8_t> bits;  // n*n

  static RelMatrix empty(int n) { return RelMatrix{n, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * n, 0)}; }
  bool at(int r, int c) const { return bits[static_cast<std::size_t>(r * n + c)] != 0; }
  void set(int r, int c) { bits[static_cast<std::size_t>(r * n + c)] = 1; }
  bool operator==(const RelMatrix& o) const { return n == o.n && bits == o.bits; }
  bool subset_of(const RelMatrix& o) const;
};

RelMatrix compose(const RelMatrix& r, const RelMatrix& s);
RelMatrix rel_union(const RelMatrix& r, const RelMatrix& s);
bool is_transitive(const RelMatrix& r);

/// hat(a) = { (b,c) | b <= a*c }. Requires a unital source quantale
/// (the hypothesis of the representation construction).
RelMatrix hat(const FiniteQuantale& q, int a);

/// The image family { hat(a) | a in Q } with its ambient transitive
/// relation (the union, which equals hat(top)).
struct RelationalQuantale {
  const FiniteQuantale* source = nullptr;
  std::vector<RelMatrix> hats;  // by source element
  RelMatrix ambient;
};

struct ReprCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReprReport {
  std::vector<ReprCheck> checks;
  bool ok() const;
  /// `REPRESENTATION size=<n> status=pass|fail`
  std::string summary_line(int size) const;
};

/// Builds the hat family and exhaustively verifies: composition
/// matches multiplication; joins of nonempty subsets are preserved in
/// the strong plain-union form (no closure applied) and in the
/// family-internal form (least member containing the union); the hat
/// map is an order embedding and injective; the unit maps to the order
/// relation; the ambient union is transitive and contains every hat.
///
/// The plain-union check is intentionally strict: it fails on some
/// carriers with elements that are not join-prime (smallest
/// counterexamples are 4-element unital quantales over the diamond
/// lattice), while the family-join check holds unconditionally. The
/// report keeps both verdicts apart.
ReprReport build_relational(const FiniteQuantale& q, RelationalQuantale* out = nullptr);

struct ConucleusTransport {
  std::vector<RelMatrix> images;  // transported conucleus applied to hat(a)
  bool transport_equality = false;  // image of hat(a) == hat(I a), for all a
  std::vector<std::string> axiom_errors;  // conucleus axioms on the relation family
  bool ok() const { return transport_equality && axiom_errors.empty(); }
};

/// Transports I along the representation via its open-element
/// subquantale: the image of hat(a) is the union of the hats of open
/// elements whose hat is included in hat(a).
ConucleusTransport transport_conucleus(const FiniteQuantale& q, const ConucleusMap& i);

/// Matrix-level classification of a transported conucleus on the
/// relation family (computed on relations, not lifted from the
/// source).
ConucleusClass classify_transported(const FiniteQuantale& q, const ConucleusTransport& t);

struct HomTransport {
  std::vector<std::string> validation_errors;  // structure + conucleus square
  bool well_defined = false;  // equal hats map to equal hats
  bool commutes = false;      // relation-level conucleus square
  bool ok() const { return validation_errors.empty() && well_defined && commutes; }
};

/// Relation-level image of a validated homomorphism between quantales
/// with conuclei: hat(a) maps to hat(f(a)).
HomTransport transport_homomorphism(const QuantaleHom& f, const ConucleusMap& i1,
                                    const ConucleusMap& i2);

/// Human-readable table: one row per element with its hat matrix and
/// the per-element check verdicts.
std::string representation_table(const FiniteQuantale& q, const RelationalQuantale& rq);

}  // namespace smalc
