#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smalc/parse.hpp"
#include "smalc/signature.hpp"

using namespace smalc;

TEST_CASE("formula parsing hits the declared shapes") {
  auto f = parse_formula("a \\ b");
  CHECK(f->kind() == Formula::Kind::LDiv);
  CHECK(f->left()->name() == "a");
  CHECK(f->right()->name() == "b");

  auto g = parse_formula("(np/n)/np");
  REQUIRE(g->kind() == Formula::Kind::RDiv);
  REQUIRE(g->left()->kind() == Formula::Kind::RDiv);
  CHECK(g->left()->left()->name() == "np");
  CHECK(g->left()->right()->name() == "n");
  CHECK(g->right()->name() == "np");

  auto h = parse_formula("!{s}(a*b)");
  REQUIRE(h->kind() == Formula::Kind::Bang);
  CHECK(h->name() == "s");
  CHECK(h->body()->kind() == Formula::Kind::Product);
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_formula("a|b&c")->kind() == Formula::Kind::Plus);
  CHECK(parse_formula("a&b|c")->kind() == Formula::Kind::Plus);
  // ! binds tighter than *
  auto f = parse_formula("!{s}a*b");
  REQUIRE(f->kind() == Formula::Kind::Product);
  CHECK(f->left()->kind() == Formula::Kind::Bang);
  // * associates to the left
  auto g = parse_formula("a*b*c");
  REQUIRE(g->kind() == Formula::Kind::Product);
  CHECK(g->left()->kind() == Formula::Kind::Product);
  CHECK(g->right()->name() == "c");
  // divisions do not associate
  CHECK_THROWS_AS(parse_formula("a\\b\\c"), ParseError);
  CHECK_NOTHROW(parse_formula("a\\(b\\c)"));
  CHECK_NOTHROW(parse_formula("(a\\b)\\c"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_formula("a *"), ParseError);
  CHECK_THROWS_AS(parse_formula("a @ b"), ParseError);
  CHECK_THROWS_AS(parse_formula("!s a"), ParseError);
  CHECK_THROWS_AS(parse_formula(""), ParseError);
  try {
    parse_formula("a * (b");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
}

TEST_CASE("sequent parsing") {
  Sequent s = parse_sequent("a, a\\b -> b");
  REQUIRE(s.antecedent.size() == 2);
  CHECK(s.antecedent[0]->name() == "a");
  CHECK(s.antecedent[1]->kind() == Formula::Kind::LDiv);
  CHECK(s.succedent->name() == "b");

  Sequent empty = parse_sequent("-> 1");
  CHECK(empty.antecedent.empty());
  CHECK(empty.succedent->kind() == Formula::Kind::Unit);

  Sequent ax = parse_sequent("a -> a");
  CHECK(ax.antecedent.size() == 1);
  CHECK(formula_eq(ax.antecedent[0], ax.succedent));

  CHECK_THROWS_AS(parse_sequent("a ->"), ParseError);
  CHECK_THROWS_AS(parse_sequent("a b -> c"), ParseError);
}

namespace {

FormulaPtr random_formula(std::mt19937& rng, int depth) {
  static const char* atoms[] = {"a", "b", "c", "np", "n", "x_1"};
  static const char* indices[] = {"s", "t"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 8);
  switch (pick(rng)) {
    case 0:
      return Formula::atom(atoms[rng() % 6]);
    case 1:
      return Formula::unit();
    case 2:
      return Formula::product(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3:
      return Formula::ldiv(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4:
      return Formula::rdiv(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5:
      return Formula::with(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 6:
      return Formula::plus(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default:
      return Formula::bang(indices[rng() % 2], random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("print/parse round-trip on random formulas and sequents") {
  std::mt19937 rng(20240917);
  for (int i = 0; i < 800; ++i) {
    FormulaPtr f = random_formula(rng, 4);
    FormulaPtr back = parse_formula(print_formula(f));
    CAPTURE(print_formula(f));
    CHECK(formula_eq(f, back));
  }
  for (int i = 0; i < 200; ++i) {
    Sequent s;
    std::uniform_int_distribution<int> len(0, 3);
    int k = len(rng);
    for (int j = 0; j < k; ++j) s.antecedent.push_back(random_formula(rng, 3));
    s.succedent = random_formula(rng, 3);
    Sequent back = parse_sequent(print_sequent(s));
    CAPTURE(print_sequent(s));
    CHECK(s == back);
  }
}

TEST_CASE("signature validation examples") {
  SUBCASE("discrete single index is valid") {
    SignatureDescription d;
    d.indices = {"s"};
    auto r = validate_signature(d);
    REQUIRE(r.ok());
    CHECK(r.signature->preceq("s", "s"));
    CHECK_FALSE(r.signature->in_weakening("s"));
  }
  SUBCASE("upward closure is enforced, not repaired") {
    SignatureDescription d;
    d.indices = {"s", "t"};
    d.order = {{"s", "t"}};
    d.contraction = {"s"};
    auto r = validate_signature(d);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().find("not upward-closed: C misses t above s") != std::string::npos);
  }
  SUBCASE("W and C together require E") {
    SignatureDescription d;
    d.indices = {"s"};
    d.weakening = {"s"};
    d.contraction = {"s"};
    auto r = validate_signature(d);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().find("W&C not within E: index s") != std::string::npos);
  }
  SUBCASE("duplicate index") {
    SignatureDescription d;
    d.indices = {"s", "s"};
    auto r = validate_signature(d);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().find("duplicate index") != std::string::npos);
  }
  SUBCASE("order pairs close transitively") {
    SignatureDescription d;
    d.indices = {"u", "v", "w"};
    d.order = {{"u", "v"}, {"v", "w"}};
    auto r = validate_signature(d);
    REQUIRE(r.ok());
    CHECK(r.signature->preceq("u", "w"));
    CHECK_FALSE(r.signature->preceq("w", "u"));
  }
}

TEST_CASE("validate_signature is idempotent on valid input") {
  SignatureDescription d;
  d.indices = {"s", "t"};
  d.order = {{"s", "t"}};
  d.exchange = {"s", "t"};
  auto first = validate_signature(d);
  REQUIRE(first.ok());
  auto again = validate_signature(first.signature->describe());
  REQUIRE(again.ok());
  CHECK(again.signature->describe().order == first.signature->describe().order);
  CHECK(print_signature(*again.signature) == print_signature(*first.signature));
}

TEST_CASE("upward-closure property by pair enumeration") {
  SignatureDescription d;
  d.indices = {"p", "q", "r"};
  d.order = {{"p", "q"}, {"q", "r"}};
  d.weakening = {"q", "r"};
  d.exchange = {"p", "q", "r"};
  auto r = validate_signature(d);
  REQUIRE(r.ok());
  const Signature& sig = *r.signature;
  for (int s = 0; s < sig.index_count(); ++s)
    for (int t = 0; t < sig.index_count(); ++t)
      if (sig.preceq(s, t)) {
        if (sig.in_weakening(s)) CHECK(sig.in_weakening(t));
        if (sig.in_contraction(s)) CHECK(sig.in_contraction(t));
        if (sig.in_exchange(s)) CHECK(sig.in_exchange(t));
      }
}

TEST_CASE("signature file format") {
  const char* text =
      "# demo signature\n"
      "index s\n"
      "index t\n"
      "order s <= t\n"
      "set W = s,t\n"
      "set E = s, t\n";
  auto r = parse_signature_text(text);
  REQUIRE(r.ok());
  CHECK(r.signature->in_weakening("s"));
  CHECK(r.signature->in_exchange("t"));
  CHECK_FALSE(r.signature->in_contraction("s"));
  CHECK(r.signature->preceq("s", "t"));

  auto bad = parse_signature_text("index 9s\n");
  CHECK_FALSE(bad.ok());
  auto unknown = parse_signature_text("index s\norder s <= zz\n");
  CHECK_FALSE(unknown.ok());
}
