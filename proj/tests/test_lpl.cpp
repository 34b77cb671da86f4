#include <doctest.h>

#include "posslog/lpl.hpp"
#include "test_support.hpp"

using namespace posslog;
using namespace posslog::testing;

namespace {

LplFormula L(const std::string& text) { return parse_lpl(text); }
Formula F(const std::string& text) { return parse_formula(text); }

KnowledgeBase kb(std::initializer_list<std::pair<const char*, const char*>> items) {
  std::vector<WeightedFormula> out;
  for (const auto& [formula, weight] : items) {
    out.emplace_back(parse_formula(formula), deg(weight));
  }
  return KnowledgeBase(std::move(out));
}

const NormFamily* families[] = {&NormFamily::minimum(), &NormFamily::product(),
                                &NormFamily::lukasiewicz()};

/// Random graded formula for round-trip checks.
LplFormula random_lpl(std::mt19937& rng, int depth) {
  static const char* atoms[] = {"A", "B", "C", "D"};
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  switch (pick(rng)) {
    case 0:
      return LplFormula::atom(atoms[rng() % 4]);
    case 1: {
      std::uniform_int_distribution<int> num(0, 10);
      return LplFormula::constant(Degree(num(rng), 10));
    }
    case 2:
      return LplFormula::and_min(random_lpl(rng, depth - 1), random_lpl(rng, depth - 1));
    case 3:
      return LplFormula::or_max(random_lpl(rng, depth - 1), random_lpl(rng, depth - 1));
    case 4:
      return LplFormula::tensor(random_lpl(rng, depth - 1), random_lpl(rng, depth - 1));
    case 5:
      return LplFormula::arrow(random_lpl(rng, depth - 1), random_lpl(rng, depth - 1));
    default:
      return LplFormula::negation(random_lpl(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("graded parser builds the expected trees") {
  CHECK(L("0.4 (+) G") ==
        LplFormula::or_max(LplFormula::constant(deg(2, 5)), LplFormula::atom("G")));
  CHECK(L("A -> 0") == LplFormula::negation(LplFormula::atom("A")));
  CHECK(L("(0.2 (+) (A & B -> D))") ==
        LplFormula::or_max(
            LplFormula::constant(deg(1, 5)),
            LplFormula::arrow(
                LplFormula::and_min(LplFormula::atom("A"), LplFormula::atom("B")),
                LplFormula::atom("D"))));
  // Precedence: ! > (*) > & > (+) > ->
  CHECK(L("a (*) b & c (+) d -> e") ==
        L("(((a (*) b) & c) (+) d) -> e"));
  CHECK(L("!A (*) B") == L("(!A) (*) B"));
  CHECK_THROWS_AS(L("1.5 (+) A"), ParseError);
  CHECK_THROWS_AS(L("A (+)"), ParseError);
}

TEST_CASE("degree variables parse as symbolic constants") {
  std::set<std::string> vars = {"x", "theta6"};
  LplFormula f = parse_lpl("theta6 (+) G", vars);
  CHECK(f.kind() == LplKind::OrMax);
  CHECK(f.left().kind() == LplKind::Const);
  CHECK(f.left().constant_term().kind() == TermKind::Var);
  CHECK(!f.is_ground());
  CHECK(!f.is_l1());
  std::set<std::string> seen;
  f.collect_vars(seen);
  CHECK(seen == std::set<std::string>{"theta6"});
  CHECK(f.substitute({{"theta6", deg(2, 5)}}) == L("0.4 (+) G"));
}

TEST_CASE("graded print then parse is the identity") {
  std::mt19937 rng(47);
  for (int i = 0; i < 300; ++i) {
    LplFormula f = random_lpl(rng, 4);
    CHECK(parse_lpl(f.to_string()) == f);
  }
  CHECK(L("!A").to_string() == "!A");
  CHECK(L("A -> 0").to_string() == "!A");
}

TEST_CASE("classical fragment membership") {
  CHECK(L("A & (B (+) 1)").is_l1());
  CHECK(L("0 (+) A").is_l1());
  CHECK(!L("0.5 (+) A").is_l1());
  CHECK(L("!(A (*) B)").is_l1());
}

TEST_CASE("truth values follow the compositional table") {
  AtomUniverse u(std::set<std::string>{"A", "B"});
  const auto& prod = NormFamily::product();

  auto zero_tv = truth_value(L("0"), u, prod);
  for (std::size_t i = 0; i < zero_tv.world_count(); ++i) {
    CHECK(zero_tv.at_index(i) == Degree::zero());
  }

  // A graded disjunct with a classical formula: 1 on its models, the grade
  // elsewhere.
  auto graded = truth_value(L("0.3 (+) (A (+) B)"), u, prod);
  Formula cls = F("A | B");
  for (const auto& w : enumerate_worlds(u)) {
    CHECK(graded.at_index(w.bits()) ==
          (eval_classical(cls, w) ? Degree::one() : deg(3, 10)));
  }

  auto not_grade_prod = truth_value(L("!0.4"), u, prod);
  CHECK(not_grade_prod.at_index(0) == Degree::zero());
  auto not_grade_luk = truth_value(L("!0.4"), u, NormFamily::lukasiewicz());
  CHECK(not_grade_luk.at_index(0) == deg(3, 5));

  CHECK_THROWS_AS(truth_value(parse_lpl("x (+) A", {"x"}), u, prod), PosslogError);
}

TEST_CASE("forcing is the pointwise lower bound") {
  AtomUniverse u(std::set<std::string>{"A"});
  auto ones = PossibilityDistribution::constant(u, Degree::one());
  CHECK(forces(ones, L("1"), NormFamily::minimum()));
  CHECK(!forces(ones, L("0.5"), NormFamily::minimum()));

  auto base = kb({{"A", "0.4"}, {"A | B", "0.7"}});
  auto translated = translate_spl(base);
  auto tv = truth_value(translated, base.universe(), NormFamily::product());
  CHECK(forces(tv, translated, NormFamily::product()));
}

TEST_CASE("base translation") {
  CHECK(translate_spl(kb({{"A", "1"}})) == L("0 (+) A"));
  CHECK(translate_spl(kb({{"A", "0.4"}})) == L("0.6 (+) A"));
  CHECK(translate_spl(kb({{"G", "0.6"}})).to_string() == "0.4 (+) G");
  CHECK(translate_spl(KnowledgeBase()).to_string() == "1");
  CHECK(translate_spl(kb({{"A", "0.5"}, {"B & C", "1"}})) ==
        L("(0.5 (+) A) & (0 (+) B & C)"));
  CHECK(translate_spl(kb({{"!A -> B", "0.5"}})) == L("0.5 (+) (!A -> B)"));
}

TEST_CASE("translation reproduces the least specific distribution") {
  std::mt19937 rng(53);
  for (int i = 0; i < 200; ++i) {
    KnowledgeBase base = random_kb(rng, 8, 5, 2);
    auto pi = least_specific(base);
    for (const auto* n : families) {
      CHECK(truth_value(translate_spl(base), base.universe(), *n) == pi);
    }
  }
}

TEST_CASE("t-norms distribute over lattice joins and meets") {
  for (const auto* n : families) {
    for (const auto& a : degree_grid()) {
      for (const auto& b : degree_grid()) {
        for (const auto& c : degree_grid()) {
          CHECK(n->tnorm(a, max(b, c)) == max(n->tnorm(a, b), n->tnorm(a, c)));
          CHECK(n->tnorm(a, min(b, c)) == min(n->tnorm(a, b), n->tnorm(a, c)));
        }
      }
    }
  }
}

TEST_CASE("classical-fragment formulas evaluate classically") {
  std::mt19937 rng(59);
  for (int i = 0; i < 100; ++i) {
    Formula cls = random_formula(rng, 5, 3);
    KnowledgeBase holder({WeightedFormula(cls, Degree::one())});
    LplFormula translated = translate_spl(holder);  // 0 (+) tr(cls)
    const LplFormula& tr = translated.right();
    CHECK(tr.is_l1());
    for (const auto* n : families) {
      auto tv = truth_value(tr, holder.universe(), *n);
      for (const auto& w : enumerate_worlds(holder.universe())) {
        Degree v = tv.at_index(w.bits());
        CHECK((v.is_zero() || v.is_one()));
        CHECK(v.is_one() == eval_classical(cls, w));
      }
    }
  }
}

TEST_CASE("double negation is transparent on the classical fragment") {
  std::mt19937 rng(61);
  for (int i = 0; i < 60; ++i) {
    Formula cls = random_formula(rng, 4, 3);
    KnowledgeBase holder({WeightedFormula(cls, Degree::one())});
    LplFormula tr = translate_spl(holder).right();
    LplFormula nn = LplFormula::negation(LplFormula::negation(tr));
    for (const auto* n : families) {
      CHECK(truth_value(nn, holder.universe(), *n) ==
            truth_value(tr, holder.universe(), *n));
    }
  }
}

TEST_CASE("implication is the residuated adjoint at the distribution level") {
  std::mt19937 rng(67);
  for (int i = 0; i < 40; ++i) {
    LplFormula a = random_lpl(rng, 2);
    LplFormula b = random_lpl(rng, 2);
    std::set<std::string> atoms = a.atoms();
    b.collect_atoms(atoms);
    atoms.insert("A");
    AtomUniverse u((atoms));
    for (const auto* n : families) {
      auto ta = truth_value(a, u, *n);
      auto tb = truth_value(b, u, *n);
      auto tr = truth_value(LplFormula::arrow(a, b), u, *n);
      for (std::size_t w = 0; w < tr.world_count(); ++w) {
        // r (x) a <= b, and r is the largest grid value doing so.
        CHECK(!(n->tnorm(tr.at_index(w), ta.at_index(w)) > tb.at_index(w)));
        for (const auto& candidate : degree_grid()) {
          if (candidate > tr.at_index(w)) {
            CHECK(n->tnorm(candidate, ta.at_index(w)) > tb.at_index(w));
          }
        }
      }
    }
  }
}

TEST_CASE("necessity under tensor-combined premises") {
  CHECK(lpl_necessity({L("0 (+) A")}, F("A"), NormFamily::minimum()) == Degree::one());
  CHECK(lpl_necessity({L("0.6 (+) A")}, F("A"), NormFamily::product()) == deg(2, 5));
  CHECK(lpl_necessity({}, F("A"), NormFamily::product()) == Degree::zero());
  CHECK(lpl_necessity({L("0.6 (+) A")}, Formula::truth(), NormFamily::product()) ==
        Degree::one());

  // The seven-premise localization set under the product norm.
  std::vector<LplFormula> gamma = {
      L("(D & E & F (+) G) -> H"), L("0.2 (+) (A & B -> D)"),
      L("0.6 (+) A"),              L("0.5 (+) B"),
      L("0.3 (+) E"),              L("0.6 (+) F"),
      L("0.4 (+) G")};
  CHECK(lpl_necessity(gamma, F("H"), NormFamily::product()) == deg(19, 25));
  CHECK(lpl_necessity(gamma, F("H"), NormFamily::lukasiewicz()) == Degree::one());
}
