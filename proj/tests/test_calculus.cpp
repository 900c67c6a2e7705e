#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "smalc/calculus.hpp"
#include "smalc/parse.hpp"

using namespace smalc;

namespace {

Signature sig_of(const std::string& text) {
  auto r = parse_signature_text(text);
  REQUIRE(r.ok());
  return *r.signature;
}

bool has_instance(const std::vector<RuleInstance>& instances, RuleId id,
                  const std::vector<std::string>& premises) {
  for (const auto& inst : instances) {
    if (inst.app.id != id || inst.premises.size() != premises.size()) continue;
    bool all = true;
    for (std::size_t i = 0; i < premises.size(); ++i)
      if (!(inst.premises[i] == parse_sequent(premises[i]))) all = false;
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("golden derivations pass check_derivation") {
  Signature sig = corpus::golden_signature();
  for (const auto& d : corpus::golden_corpus()) {
    CheckReport r = check_derivation(d, sig, Mode::L1);
    CAPTURE(print_sequent(d.conclusion));
    CAPTURE(r.to_string());
    CHECK(r.ok());
  }
}

TEST_CASE("promotion side condition") {
  Signature forward = sig_of("index s\nindex s1\norder s <= s1\n");
  Signature backward = sig_of("index s\nindex s1\norder s1 <= s\n");
  Derivation d = corpus::golden_promotion_weakened();
  CHECK(check_derivation(d, forward, Mode::L1).ok());
  CheckReport r = check_derivation(d, backward, Mode::L1);
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors.front().message.find("promotion side condition") != std::string::npos);
}

TEST_CASE("checker rejects corrupted derivations") {
  Signature sig = corpus::golden_signature();

  SUBCASE("axiom with mismatched sides") {
    Derivation d = corpus::ax("a -> b");
    CHECK_FALSE(check_derivation(d, sig, Mode::L1).ok());
  }
  SUBCASE("swapped premises of a two-premise rule") {
    Derivation d = corpus::node("a, a\\b -> b", {RuleId::LDivL, "", 1, 0},
                                {corpus::ax("b -> b"), corpus::ax("a -> a")});
    CHECK_FALSE(check_derivation(d, sig, Mode::L1).ok());
  }
  SUBCASE("contraction without C membership") {
    Signature no_c = sig_of("index s\nset E = s\n");
    Derivation d =
        corpus::node("!{s}a -> !{s}a*!{s}a", {RuleId::NContr1, "s", 0, 1},
                     {corpus::node("!{s}a, !{s}a -> !{s}a*!{s}a", {RuleId::ProdR, "", -1, 1},
                                   {corpus::ax("!{s}a -> !{s}a"), corpus::ax("!{s}a -> !{s}a")})});
    CheckReport r = check_derivation(d, no_c, Mode::L1);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().message.find("not in C") != std::string::npos);
  }
  SUBCASE("weakening without W membership") {
    Signature no_w = sig_of("index s\nset E = s\n");
    Derivation d = corpus::node("!{s}a, b -> b", {RuleId::WeakBang, "s", 0}, {corpus::ax("b -> b")});
    CheckReport r = check_derivation(d, no_w, Mode::L1);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().message.find("not in W") != std::string::npos);
  }
  SUBCASE("exchange without E membership") {
    Signature no_e = sig_of("index s\n");
    Derivation d = corpus::node(
        "!{s}a, d -> d*!{s}a", {RuleId::Ex1, "s", 0, 1},
        {corpus::node("d, !{s}a -> d*!{s}a", {RuleId::ProdR, "", -1, 1},
                      {corpus::ax("d -> d"), corpus::ax("!{s}a -> !{s}a")})});
    CheckReport r = check_derivation(d, no_e, Mode::L1);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().message.find("not in E") != std::string::npos);
  }
  SUBCASE("unknown index is reported") {
    Signature tiny = sig_of("index s\n");
    Derivation d = corpus::node("!{zz}a -> a", {RuleId::BangL, "zz", 0}, {corpus::ax("a -> a")});
    CheckReport r = check_derivation(d, tiny, Mode::L1);
    REQUIRE_FALSE(r.ok());
    CHECK(r.errors.front().message.find("unknown subexponential index") != std::string::npos);
  }
}

TEST_CASE("mode gates") {
  Signature sig = corpus::golden_signature();
  Derivation unit_intro = corpus::node("a, 1 -> a", {RuleId::UnitL, "", 1}, {corpus::ax("a -> a")});
  CHECK(check_derivation(unit_intro, sig, Mode::L1).ok());
  CHECK_FALSE(check_derivation(unit_intro, sig, Mode::Lstar).ok());
  CHECK_FALSE(check_derivation(unit_intro, sig, Mode::L).ok());

  // -> a\a needs an empty antecedent: fine in Lstar, rejected in L.
  Derivation empty_pi = corpus::node("-> a\\a", {RuleId::LDivR}, {corpus::ax("a -> a")});
  CHECK(check_derivation(empty_pi, sig, Mode::Lstar).ok());
  CHECK(check_derivation(empty_pi, sig, Mode::L1).ok());
  CheckReport r = check_derivation(empty_pi, sig, Mode::L);
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors.front().message.find("empty antecedent") != std::string::npos);
}

TEST_CASE("checker infers instantiations when metadata is absent") {
  Signature sig = corpus::golden_signature();
  Derivation d = corpus::node("a, a\\b -> b", {RuleId::LDivL},
                              {corpus::ax("a -> a"), corpus::ax("b -> b")});
  CHECK(check_derivation(d, sig, Mode::L1).ok());
}

TEST_CASE("applicable_rules enumerates the expected instances") {
  Signature sig = corpus::golden_signature();

  auto ax_goal = applicable_rules(parse_sequent("a -> a"), sig, Mode::L1);
  CHECK(has_instance(ax_goal, RuleId::Ax, {}));

  auto prod_goal = applicable_rules(parse_sequent("a, b -> a*b"), sig, Mode::L1);
  CHECK(has_instance(prod_goal, RuleId::ProdR, {"a -> a", "b -> b"}));
  CHECK(has_instance(prod_goal, RuleId::ProdR, {"-> a", "a, b -> b"}));
  CHECK(has_instance(prod_goal, RuleId::ProdR, {"a, b -> a", "-> b"}));

  auto ex_goal = applicable_rules(parse_sequent("!{s}a, d -> d*!{s}a"), sig, Mode::L1);
  CHECK(has_instance(ex_goal, RuleId::Ex1, {"d, !{s}a -> d*!{s}a"}));

  SUBCASE("cut is never enumerated") {
    for (const char* text : {"a -> a", "a, b -> a*b", "!{s}a, d -> d*!{s}a", "a&b -> b&a"})
      for (const auto& inst : applicable_rules(parse_sequent(text), sig, Mode::L1))
        CHECK(inst.app.id != RuleId::Cut);
  }

  SUBCASE("mode L suppresses empty-antecedent premises") {
    auto in_l = applicable_rules(parse_sequent("a, b -> a*b"), sig, Mode::L);
    CHECK(has_instance(in_l, RuleId::ProdR, {"a -> a", "b -> b"}));
    CHECK_FALSE(has_instance(in_l, RuleId::ProdR, {"-> a", "a, b -> b"}));
  }

  SUBCASE("no-op exchange is not generated") {
    for (const auto& inst : applicable_rules(parse_sequent("!{s}a, d -> d"), sig, Mode::L1))
      if (inst.app.id == RuleId::Ex1 || inst.app.id == RuleId::Ex2)
        CHECK_FALSE(inst.premises[0] == parse_sequent("!{s}a, d -> d"));
  }
}

TEST_CASE("cut corpus checks") {
  Signature sig = corpus::golden_signature();
  auto cuts = corpus::cut_corpus();
  CHECK(cuts.size() == 20);
  for (const auto& d : cuts) {
    CAPTURE(print_sequent(d.conclusion));
    CheckReport r = check_derivation(d, sig, Mode::L1);
    CAPTURE(r.to_string());
    CHECK(r.ok());
  }
}

TEST_CASE("corrupting any leaf of a valid proof is caught") {
  Signature sig = corpus::golden_signature();
  for (const auto& gold : corpus::golden_corpus()) {
    // Rewrite each axiom leaf in turn to conclude "x -> zz".
    std::function<int(Derivation&, int)> corrupt_nth = [&](Derivation& d, int n) {
      if (d.rule.id == RuleId::Ax) {
        if (n == 0) d.conclusion.succedent = Formula::atom("zz");
        return n - 1;
      }
      for (auto& p : d.premises) {
        n = corrupt_nth(p, n);
        if (n < 0) break;
      }
      return n;
    };
    for (int leaf = 0;; ++leaf) {
      Derivation mutated = gold;
      if (corrupt_nth(mutated, leaf) >= 0) break;  // ran out of leaves
      CAPTURE(print_sequent(gold.conclusion));
      CHECK_FALSE(check_derivation(mutated, sig, Mode::L1).ok());
    }
  }
}

TEST_CASE("the shipped golden signature file matches the fixture") {
  SignatureResult file = load_signature_file(std::string(SMALC_DATA_DIR) + "/golden.sig");
  REQUIRE(file.ok());
  CHECK(print_signature(*file.signature) == print_signature(corpus::golden_signature()));
}

TEST_CASE("derivation import rejects malformed trees") {
  CHECK_THROWS_AS(import_derivation(""), ParseError);
  CHECK_THROWS_AS(import_derivation("Nope :: a -> a\n"), ParseError);
  CHECK_THROWS_AS(import_derivation("Ax a -> a\n"), ParseError);
  CHECK_THROWS_AS(import_derivation("  Ax :: a -> a\n"), ParseError);  // indented root
  CHECK_THROWS_AS(import_derivation("Ax :: a -> a\n    Ax :: a -> a\n"), ParseError);  // level jump
  CHECK_THROWS_AS(import_derivation("Ax :: a -> a\nAx :: b -> b\n"), ParseError);  // two roots
  // Comments and blank lines are fine.
  Derivation d = import_derivation("# found by search\n\nAx :: a -> a\n");
  CHECK(d.rule.id == RuleId::Ax);
}

TEST_CASE("derivation export format and round-trip") {
  Derivation d = corpus::golden_modus_ponens_left();
  CHECK(export_derivation(d) ==
        "LDivL :: a, a\\b -> b\n"
        "  Ax :: a -> a\n"
        "  Ax :: b -> b\n");

  Derivation promoted = corpus::golden_promotion_weakened();
  CHECK(export_derivation(promoted) ==
        "BangR [s] :: !{s1}a -> !{s}a\n"
        "  BangL [s1] :: !{s1}a -> a\n"
        "    Ax :: a -> a\n");

  Signature sig = corpus::golden_signature();
  for (const auto& gold : corpus::golden_corpus()) {
    std::string text = export_derivation(gold);
    Derivation back = import_derivation(text);
    CHECK(export_derivation(back) == text);
    CHECK(check_derivation(back, sig, Mode::L1).ok());
  }
}
