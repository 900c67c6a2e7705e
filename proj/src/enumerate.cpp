#include "smalc/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "smalc/semantics.hpp"

namespace smalc {

namespace {

// A finite lattice candidate under a linear-extension labeling:
// element 0 is bottom, n-1 is top, and a <= b implies a <= b as ints.
struct Lattice {
  int n = 0;
  std::vector<std::uint8_t> leq;  // n*n
  std::vector<int> join;          // n*n
  std::vector<int> ji;            // join-irreducible elements, ascending
  std::vector<std::uint32_t> ji_below;  // per element: mask of ji's below it
  std::vector<std::vector<int>> automorphisms;

  bool le(int a, int b) const { return leq[static_cast<std::size_t>(a * n + b)] != 0; }
  int jn(int a, int b) const { return join[static_cast<std::size_t>(a * n + b)]; }
};

/// Pairwise least upper bounds; false when some pair has none.
bool compute_joins(Lattice& lat) {
  const int n = lat.n;
  lat.join.assign(static_cast<std::size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int least = -1;
      for (int u = 0; u < n; ++u) {
        if (!lat.le(a, u) || !lat.le(b, u)) continue;
        if (least < 0 || lat.le(u, least)) least = u;
      }
      if (least < 0) return false;
      for (int u = 0; u < n; ++u)
        if (lat.le(a, u) && lat.le(b, u) && !lat.le(least, u)) return false;
      lat.join[static_cast<std::size_t>(a * n + b)] = least;
    }
  return true;
}

void compute_ji(Lattice& lat) {
  const int n = lat.n;
  lat.ji.clear();
  for (int a = 1; a < n; ++a) {
    int below = 0;  // join of everything strictly below a
    for (int b = 0; b < n; ++b)
      if (b != a && lat.le(b, a)) below = lat.jn(below, b);
    if (below != a) lat.ji.push_back(a);
  }
  lat.ji_below.assign(static_cast<std::size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (std::size_t k = 0; k < lat.ji.size(); ++k)
      if (lat.le(lat.ji[k], a)) lat.ji_below[static_cast<std::size_t>(a)] |= 1u << k;
}

std::string leq_key(const std::vector<std::uint8_t>& leq) {
  std::string key;
  key.reserve(leq.size());
  for (std::uint8_t b : leq) key += b ? '1' : '0';
  return key;
}

/// Lexicographically least leq matrix over relabelings that keep the
/// linear-extension convention.
std::string canonical_leq_key(const Lattice& lat) {
  const int n = lat.n;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    // perm maps old labels to new labels; require order-compatibility.
    bool ok = true;
    std::vector<std::uint8_t> relabeled(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b) {
        if (!lat.le(a, b)) continue;
        int na = perm[static_cast<std::size_t>(a)], nb = perm[static_cast<std::size_t>(b)];
        if (na > nb) {
          ok = false;
          break;
        }
        relabeled[static_cast<std::size_t>(na * n + nb)] = 1;
      }
    if (!ok) continue;
    std::string key = leq_key(relabeled);
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void compute_automorphisms(Lattice& lat) {
  const int n = lat.n;
  lat.automorphisms.clear();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b)
        if (lat.le(a, b) != lat.le(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)])) {
          ok = false;
          break;
        }
    if (ok) lat.automorphisms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

/// All lattices with n elements, one per isomorphism class, in
/// canonical order.
std::vector<Lattice> enumerate_lattices(int n) {
  std::vector<Lattice> out;
  if (n <= 0) return out;
  if (n == 1) {
    Lattice lat;
    lat.n = 1;
    lat.leq = {1};
    compute_joins(lat);
    compute_ji(lat);
    compute_automorphisms(lat);
    out.push_back(std::move(lat));
    return out;
  }

  std::set<std::string> seen;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) leq[static_cast<std::size_t>(a * n + a)] = 1;

  auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a * n + b)] != 0; };

  // Choose, for each j in turn, its set of predecessors among 0..j-1:
  // any transitively closed down-set containing the bottom 0.
  std::function<void(int)> place = [&](int j) {
    if (j == n) {
      for (int a = 0; a < n; ++a)
        if (!le(a, n - 1)) return;  // n-1 must be the top
      Lattice lat;
      lat.n = n;
      lat.leq = leq;
      if (!compute_joins(lat)) return;
      std::string canon = canonical_leq_key(lat);
      if (!seen.insert(canon).second) return;
      compute_ji(lat);
      compute_automorphisms(lat);
      out.push_back(std::move(lat));
      return;
    }
    for (std::uint32_t preds = 1; preds < (1u << j); preds += 2) {  // bit 0: bottom always below
      bool down_closed = true;
      for (int i = 0; i < j && down_closed; ++i) {
        if (!((preds >> i) & 1u)) continue;
        for (int k = 0; k < i; ++k)
          if (le(k, i) && !((preds >> k) & 1u)) {
            down_closed = false;
            break;
          }
      }
      if (!down_closed) continue;
      for (int i = 0; i < j; ++i)
        if ((preds >> i) & 1u) leq[static_cast<std::size_t>(i * n + j)] = 1;
      place(j + 1);
      for (int i = 0; i < j; ++i)
        if ((preds >> i) & 1u) leq[static_cast<std::size_t>(i * n + j)] = 0;
    }
  };
  place(1);

  std::sort(out.begin(), out.end(),
            [](const Lattice& a, const Lattice& b) { return leq_key(a.leq) < leq_key(b.leq); });
  return out;
}

std::string mult_key(const std::vector<int>& mult) {
  std::string key;
  for (int v : mult) {
    key += static_cast<char>('0' + v);
  }
  return key;
}

/// Multiplication tables on the lattice forming a quantale, canonical
/// under the automorphism group, sorted.
std::vector<std::vector<int>> enumerate_mults(const Lattice& lat) {
  const int n = lat.n;
  const int m = static_cast<int>(lat.ji.size());
  std::vector<std::vector<int>> result;
  std::set<std::string> seen;

  std::vector<int> f(static_cast<std::size_t>(m) * m, 0);
  auto fval = [&](int i, int j) { return f[static_cast<std::size_t>(i * m + j)]; };

  std::vector<int> mult(static_cast<std::size_t>(n) * n, 0);

  // Elements whose full product row/column is already determined by
  // the f rows assigned so far: all their join-irreducibles sit in
  // completed rows.
  std::vector<int> max_ji_row(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < m; ++i)
      if ((lat.ji_below[static_cast<std::size_t>(a)] >> i) & 1u)
        max_ji_row[static_cast<std::size_t>(a)] = i;

  // Early check after completing f row `row`: extend products for the
  // determined elements and test associativity and distributivity on
  // the determined cube. Violations there can never be repaired by
  // later rows.
  auto determined_ok = [&](int row) {
    std::vector<int> det;
    for (int a = 0; a < n; ++a)
      if (max_ji_row[static_cast<std::size_t>(a)] <= row) det.push_back(a);
    for (int a : det)
      for (int b : det) {
        int acc = 0;
        std::uint32_t pa = lat.ji_below[static_cast<std::size_t>(a)];
        std::uint32_t pb = lat.ji_below[static_cast<std::size_t>(b)];
        for (int i = 0; i < m; ++i) {
          if (!((pa >> i) & 1u)) continue;
          for (int j = 0; j < m; ++j)
            if ((pb >> j) & 1u) acc = lat.jn(acc, fval(i, j));
        }
        mult[static_cast<std::size_t>(a * n + b)] = acc;
      }
    std::vector<char> in_det(static_cast<std::size_t>(n), 0);
    for (int a : det) in_det[static_cast<std::size_t>(a)] = 1;
    for (int a : det)
      for (int b : det) {
        int ab = mult[static_cast<std::size_t>(a * n + b)];
        for (int c : det) {
          int bc = mult[static_cast<std::size_t>(b * n + c)];
          if (in_det[static_cast<std::size_t>(ab)] && in_det[static_cast<std::size_t>(bc)] &&
              mult[static_cast<std::size_t>(ab * n + c)] != mult[static_cast<std::size_t>(a * n + bc)])
            return false;
          int bjc = lat.jn(b, c);
          if (in_det[static_cast<std::size_t>(bjc)]) {
            if (mult[static_cast<std::size_t>(a * n + bjc)] !=
                lat.jn(mult[static_cast<std::size_t>(a * n + b)],
                       mult[static_cast<std::size_t>(a * n + c)]))
              return false;
            if (mult[static_cast<std::size_t>(bjc * n + a)] !=
                lat.jn(mult[static_cast<std::size_t>(b * n + a)],
                       mult[static_cast<std::size_t>(c * n + a)]))
              return false;
          }
        }
      }
    return true;
  };

  auto try_complete = [&]() {
    // Extend by joins of ji-pair values.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int acc = 0;
        std::uint32_t pa = lat.ji_below[static_cast<std::size_t>(a)];
        std::uint32_t pb = lat.ji_below[static_cast<std::size_t>(b)];
        for (int i = 0; i < m; ++i) {
          if (!((pa >> i) & 1u)) continue;
          for (int j = 0; j < m; ++j)
            if ((pb >> j) & 1u) acc = lat.jn(acc, fval(i, j));
        }
        mult[static_cast<std::size_t>(a * n + b)] = acc;
      }
    // Associativity.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mult[static_cast<std::size_t>(a * n + b)];
        for (int c = 0; c < n; ++c) {
          int bc = mult[static_cast<std::size_t>(b * n + c)];
          if (mult[static_cast<std::size_t>(ab * n + c)] != mult[static_cast<std::size_t>(a * n + bc)])
            return;
        }
      }
    // Distributivity over binary joins (the extension formula does not
    // guarantee it on non-distributive lattices).
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int bc = lat.jn(b, c);
          if (mult[static_cast<std::size_t>(a * n + bc)] !=
              lat.jn(mult[static_cast<std::size_t>(a * n + b)], mult[static_cast<std::size_t>(a * n + c)]))
            return;
          if (mult[static_cast<std::size_t>(bc * n + a)] !=
              lat.jn(mult[static_cast<std::size_t>(b * n + a)], mult[static_cast<std::size_t>(c * n + a)]))
            return;
        }
    // Canonical representative under lattice automorphisms.
    std::string best = mult_key(mult);
    if (lat.automorphisms.size() > 1) {
      std::vector<int> transported(static_cast<std::size_t>(n) * n);
      std::vector<int> inv(static_cast<std::size_t>(n));
      for (const auto& pi : lat.automorphisms) {
        for (int a = 0; a < n; ++a) inv[static_cast<std::size_t>(pi[static_cast<std::size_t>(a)])] = a;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            transported[static_cast<std::size_t>(a * n + b)] =
                pi[static_cast<std::size_t>(mult[static_cast<std::size_t>(
                    inv[static_cast<std::size_t>(a)] * n + inv[static_cast<std::size_t>(b)])])];
        std::string key = mult_key(transported);
        if (key < best) best = key;
      }
    }
    if (seen.insert(best).second) {
      std::vector<int> canonical(static_cast<std::size_t>(n) * n);
      for (std::size_t i = 0; i < canonical.size(); ++i) canonical[i] = best[i] - '0';
      result.push_back(std::move(canonical));
    }
  };

  // Backtrack over monotone ji-pair assignments.
  std::function<void(int)> assign = [&](int cell) {
    if (cell == m * m) {
      try_complete();
      return;
    }
    int i = cell / m, j = cell % m;
    if (j == 0 && i > 0 && !determined_ok(i - 1)) return;
    for (int v = 0; v < n; ++v) {
      bool ok = true;
      for (int c = 0; c < cell && ok; ++c) {
        int ci = c / m, cj = c % m;
        bool le_ij = lat.le(lat.ji[static_cast<std::size_t>(ci)], lat.ji[static_cast<std::size_t>(i)]) &&
                     lat.le(lat.ji[static_cast<std::size_t>(cj)], lat.ji[static_cast<std::size_t>(j)]);
        bool ge_ij = lat.le(lat.ji[static_cast<std::size_t>(i)], lat.ji[static_cast<std::size_t>(ci)]) &&
                     lat.le(lat.ji[static_cast<std::size_t>(j)], lat.ji[static_cast<std::size_t>(cj)]);
        if (le_ij && !lat.le(fval(ci, cj), v)) ok = false;
        if (ge_ij && !lat.le(v, fval(ci, cj))) ok = false;
      }
      if (!ok) continue;
      f[static_cast<std::size_t>(cell)] = v;
      assign(cell + 1);
    }
    f[static_cast<std::size_t>(cell)] = 0;
  };
  if (m == 0) {
    try_complete();  // the one-element quantale
  } else {
    assign(0);
  }

  std::sort(result.begin(), result.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a < b; });
  return result;
}

std::optional<int> find_unit(int n, const std::vector<int>& mult) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = mult[static_cast<std::size_t>(e * n + a)] == a && mult[static_cast<std::size_t>(a * n + e)] == a;
    if (ok) return e;
  }
  return std::nullopt;
}

}  // namespace

bool for_each_quantale(int size, bool unital_only,
                       const std::function<bool(const FiniteQuantale&)>& visit) {
  for (const Lattice& lat : enumerate_lattices(size)) {
    for (const std::vector<int>& mult : enumerate_mults(lat)) {
      std::optional<int> unit = find_unit(lat.n, mult);
      if (unital_only && !unit) continue;
      QuantaleResult built = validate_quantale(lat.n, lat.leq, mult, unit);
      if (!built.ok())
        throw std::logic_error("enumerated candidate failed validation: " + built.errors.front());
      if (!visit(*built.quantale)) return false;
    }
  }
  return true;
}

std::vector<FiniteQuantale> enumerate_quantales(int max_size, bool unital_only) {
  std::vector<FiniteQuantale> out;
  for (int size = 1; size <= max_size; ++size)
    for_each_quantale(size, unital_only, [&out](const FiniteQuantale& q) {
      out.push_back(q);
      return true;
    });
  return out;
}

std::vector<ConucleusMap> all_conuclei(const FiniteQuantale& q) {
  std::vector<ConucleusMap> out;
  for (std::uint32_t mask : subquantale_masks(q))
    out.push_back(conucleus_from_subquantale(q, Subquantale{&q, mask}, ConucleusFilter::none()));
  return out;
}

}  // namespace smalc
