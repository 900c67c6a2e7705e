#pragma once

#include <functional>
#include <vector>

#include "smalc/quantale.hpp"

namespace smalc {

/// Exhaustive, isomorphism-free enumeration of finite quantales.
/// A lattice is fixed first; multiplication is then enumerated on
/// join-irreducible pairs (monotone assignments only, which loses
/// nothing), extended to the full carrier by distributivity over the
/// join-irreducible decomposition, and each extension is validated
/// from scratch. Isomorphic duplicates are removed via the lattice's
/// automorphism group. Order is canonical and deterministic.

/// Quantales with exactly `size` elements. `visit` returns false to
/// stop early; the function returns false when stopped.
bool for_each_quantale(int size, bool unital_only,
                       const std::function<bool(const FiniteQuantale&)>& visit);

/// All quantales with at most max_size elements, smaller sizes first.
std::vector<FiniteQuantale> enumerate_quantales(int max_size, bool unital_only);

/// All quantic conuclei on q via the subquantale correspondence
/// (I -> fixpoints, S -> join of S below), ascending by the open-set
/// mask. At finite scale this is exactly the set of conuclei.
std::vector<ConucleusMap> all_conuclei(const FiniteQuantale& q);

}  // namespace smalc
