#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "smalc/enumerate.hpp"
#include "smalc/semantics.hpp"

using namespace smalc;

namespace {

/// Naive oracle: every mult table over a fixed lattice, validated from
/// scratch. The lattices up to three elements are chains, which are
/// rigid, so labeled counts equal isomorphism classes.
int naive_chain_count(int n, bool unital_only) {
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) leq[static_cast<std::size_t>(a * n + b)] = 1;

  const int cells = n * n;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) total *= static_cast<std::uint64_t>(n);

  int count = 0;
  std::vector<int> mult(static_cast<std::size_t>(cells));
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < cells; ++i) {
      mult[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::uint64_t>(n));
      c /= static_cast<std::uint64_t>(n);
    }
    std::optional<int> unit;
    for (int e = 0; e < n && !unit; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        ok = mult[static_cast<std::size_t>(e * n + a)] == a &&
             mult[static_cast<std::size_t>(a * n + e)] == a;
      if (ok) unit = e;
    }
    if (unital_only && !unit) continue;
    if (validate_quantale(n, leq, mult, unit).ok()) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("one-element enumeration") {
  auto all = enumerate_quantales(1, false);
  REQUIRE(all.size() == 1);
  CHECK(all[0].unit() == 0);  // the trivial quantale is unital
  auto unital = enumerate_quantales(1, true);
  CHECK(unital.size() == 1);
}

TEST_CASE("two-element counts cross-checked against naive full-table enumeration") {
  auto all = enumerate_quantales(2, false);
  auto unital = enumerate_quantales(2, true);
  int all2 = 0, unital2 = 0;
  for (const auto& q : all)
    if (q.size() == 2) ++all2;
  for (const auto& q : unital)
    if (q.size() == 2) ++unital2;

  CHECK(all2 == naive_chain_count(2, false));
  CHECK(unital2 == naive_chain_count(2, true));
  CHECK(unital2 == 1);  // exactly the locale structure

  for (const auto& q : unital)
    if (q.size() == 2) {
      CHECK(q.unit() == q.top());
      CHECK(q.mult(1, 1) == 1);
      CHECK(q.mult(0, 1) == 0);
    }
}

TEST_CASE("three-element counts cross-checked against naive full-table enumeration") {
  int all3 = 0, unital3 = 0;
  for_each_quantale(3, false, [&](const FiniteQuantale&) {
    ++all3;
    return true;
  });
  for_each_quantale(3, true, [&](const FiniteQuantale&) {
    ++unital3;
    return true;
  });
  CHECK(all3 == naive_chain_count(3, false));
  CHECK(unital3 == naive_chain_count(3, true));
  CHECK(all3 > 0);
  CHECK(unital3 > 0);
}

TEST_CASE("every yielded quantale passes validation and is iso-deduplicated") {
  std::set<std::string> seen;
  for (const auto& q : enumerate_quantales(4, false)) {
    CHECK(validate_quantale(q.size(), q.leq_table(), q.mult_table(), q.unit()).ok());
    std::string key = print_quantale(q);
    CHECK(seen.insert(key).second);  // no duplicates as emitted
  }
}

TEST_CASE("unital enumeration is the unital slice of the full one") {
  auto all = enumerate_quantales(4, false);
  auto unital = enumerate_quantales(4, true);
  std::set<std::string> all_keys;
  std::size_t all_unital = 0;
  for (const auto& q : all) {
    all_keys.insert(print_quantale(q));
    if (q.unit()) ++all_unital;
  }
  CHECK(unital.size() == all_unital);
  for (const auto& q : unital) CHECK(all_keys.count(print_quantale(q)) == 1);
}

TEST_CASE("non-distributive lattices appear at size five") {
  // Both five-element non-distributive lattices must carry at least
  // one unital quantale for additive countermodels to exist.
  bool found_nondistributive_unital = false;
  for_each_quantale(5, true, [&](const FiniteQuantale& q) {
    for (int a = 0; a < q.size() && !found_nondistributive_unital; ++a)
      for (int b = 0; b < q.size(); ++b)
        for (int c = 0; c < q.size(); ++c)
          if (q.meet(a, q.join(b, c)) != q.join(q.meet(a, b), q.meet(a, c))) {
            found_nondistributive_unital = true;
            break;
          }
    return !found_nondistributive_unital;
  });
  CHECK(found_nondistributive_unital);
}

TEST_CASE("subquantale masks") {
  auto locale = validate_quantale(2, {1, 1, 0, 1}, {0, 0, 0, 1}, 1);
  REQUIRE(locale.ok());
  auto masks = subquantale_masks(*locale.quantale);
  CHECK(masks == std::vector<std::uint32_t>{0b01, 0b11});
}

TEST_CASE("enumeration is deterministic") {
  auto first = enumerate_quantales(3, false);
  auto second = enumerate_quantales(3, false);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    CHECK(print_quantale(first[i]) == print_quantale(second[i]));
}
