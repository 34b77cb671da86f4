#include <doctest.h>

#include "posslog/derivations.hpp"
#include "test_support.hpp"

using namespace posslog;
using namespace posslog::testing;
using derivations::node;

namespace {

LplFormula L(const std::string& text) { return parse_lpl(text); }
LplFormula Lv(const std::string& text, const std::set<std::string>& vars) {
  return parse_lpl(text, vars);
}

const std::set<std::string> kVars = {"alpha", "beta", "gamma", "x",
                                     "xi1",   "xi2",  "eta"};

DegreeTerm var(const std::string& name) { return DegreeTerm::variable(name); }

std::map<std::string, Degree> paper_bindings() {
  return {{"theta1", deg(3, 5)}, {"theta2", deg(1, 2)}, {"theta4", deg(3, 10)},
          {"theta5", deg(3, 5)}, {"theta6", deg(2, 5)}, {"eta", deg(1, 5)}};
}

/// Every subtree of an accepted ground derivation is semantically valid.
void check_sound_everywhere(const Derivation& d, const NormFamily& n) {
  CHECK(sequent_semantically_valid(d.conclusion, n));
  for (const auto& p : d.premises) check_sound_everywhere(p, n);
}

}  // namespace

TEST_CASE("identity and numeric leaves") {
  auto id = node("id", {L("A (+) 0.5")}, L("A (+) 0.5"));
  auto v = check_derivation(id, NormFamily::minimum());
  CHECK(v.valid);
  CHECK(v.constraints.empty());

  auto leq = node("s'", {L("0.3")}, L("0.5"));
  CHECK(check_derivation(leq, NormFamily::minimum()).valid);
  auto bad = node("s'", {L("0.5")}, L("0.3"));
  auto bad_v = check_derivation(bad, NormFamily::minimum());
  CHECK(!bad_v.valid);
  CHECK(bad_v.failures.front().path == "root");

  auto open = node("s'", {Lv("beta", kVars)}, Lv("x", kVars));
  auto open_v = check_derivation(open, NormFamily::minimum());
  CHECK(open_v.valid);
  REQUIRE(open_v.constraints.size() == 1);
  CHECK(open_v.constraints[0] == Constraint{var("beta"), var("x")});
}

TEST_CASE("tensor and negation definition leaves follow the norm") {
  auto prod_ok = node("tensor-def", {L("0.2 (*) 0.3")}, L("0.06"));
  CHECK(check_derivation(prod_ok, NormFamily::product()).valid);
  CHECK(!check_derivation(prod_ok, NormFamily::minimum()).valid);

  auto reverse = node("tensor-def", {L("0.06")}, L("0.2 (*) 0.3"));
  CHECK(check_derivation(reverse, NormFamily::product()).valid);

  auto neg_prod = node("neg-def", {L("!0.4")}, L("0"));
  CHECK(check_derivation(neg_prod, NormFamily::product()).valid);
  // The reverse direction pins the norm: 0.6 |- !0.4 holds under Lukasiewicz
  // (residuum 0.6) but not under product (residuum 0).
  auto neg_luk = node("neg-def", {L("0.6")}, L("!0.4"));
  CHECK(check_derivation(neg_luk, NormFamily::lukasiewicz()).valid);
  CHECK(!check_derivation(neg_luk, NormFamily::product()).valid);
}

TEST_CASE("arity is enforced per rule") {
  auto premise = node("id", {L("A")}, L("A"));
  auto conj = node("andR", {L("A")}, L("A & A"), {premise});
  auto v = check_derivation(conj, NormFamily::minimum());
  CHECK(!v.valid);
  CHECK(v.failures.front().reason.find("premise") != std::string::npos);
}

TEST_CASE("unknown and out-of-scope rules are reported distinctly") {
  auto quant = node("forallL", {L("A")}, L("A"));
  auto v = check_derivation(quant, NormFamily::minimum());
  CHECK(!v.valid);
  CHECK(v.failures.front().reason.find("out-of-scope") != std::string::npos);

  auto typo = node("andLeft", {L("A & B")}, L("A"));
  v = check_derivation(typo, NormFamily::minimum());
  CHECK(!v.valid);
  CHECK(v.failures.front().reason.find("unknown rule") != std::string::npos);
}

TEST_CASE("structural rules") {
  // weakening
  auto we = node("weL", {L("A"), L("B")}, L("A"), {node("id", {L("A")}, L("A"))});
  CHECK(check_derivation(we, NormFamily::minimum()).valid);

  // exchange is a no-op thanks to multiset matching
  auto ex = node("exL", {L("B"), L("A")}, L("A"),
                 {node("weL", {L("A"), L("B")}, L("A"), {node("id", {L("A")}, L("A"))})});
  CHECK(check_derivation(ex, NormFamily::minimum()).valid);

  // cut composes antecedents
  auto cut = node("cut", {L("A")}, L("A (+) B"),
                  {node("id", {L("A")}, L("A")),
                   node("plusR", {L("A")}, L("A (+) B"), {node("id", {L("A")}, L("A"))})});
  CHECK(check_derivation(cut, NormFamily::minimum()).valid);

  // oneL drops a literal 1
  auto one = node("oneL", {L("A"), L("1")}, L("A"), {node("id", {L("A")}, L("A"))});
  CHECK(check_derivation(one, NormFamily::minimum()).valid);

  // zeroL closes any sequent with a literal 0
  auto zero = node("zeroL", {L("B"), L("0")}, L("A & 0.3"));
  CHECK(check_derivation(zero, NormFamily::minimum()).valid);
}

TEST_CASE("contraction demands a classical-fragment formula") {
  // Contract A using itself: premises A, A |- A & A and A |- A.
  auto both = node("andR", {L("A"), L("A")}, L("A & A"),
                   {node("weL", {L("A"), L("A")}, L("A"), {node("id", {L("A")}, L("A"))}),
                    node("weL", {L("A"), L("A")}, L("A"), {node("id", {L("A")}, L("A"))})});
  auto con = node("l1con", {L("A")}, L("A & A"),
                  {both, node("id", {L("A")}, L("A"))});
  CHECK(check_derivation(con, NormFamily::minimum()).valid);

  // The same shape on a graded formula must fail the side condition.
  auto graded_both =
      node("andR", {L("0.5 (+) A"), L("0.5 (+) A")}, L("(0.5 (+) A) & (0.5 (+) A)"),
           {node("weL", {L("0.5 (+) A"), L("0.5 (+) A")}, L("0.5 (+) A"),
                 {node("id", {L("0.5 (+) A")}, L("0.5 (+) A"))}),
            node("weL", {L("0.5 (+) A"), L("0.5 (+) A")}, L("0.5 (+) A"),
                 {node("id", {L("0.5 (+) A")}, L("0.5 (+) A"))})});
  auto bad_con = node("l1con", {L("0.5 (+) A")}, L("(0.5 (+) A) & (0.5 (+) A)"),
                      {graded_both, node("id", {L("0.5 (+) A")}, L("0.5 (+) A"))});
  auto v = check_derivation(bad_con, NormFamily::minimum());
  CHECK(!v.valid);
  CHECK(v.failures.front().reason.find("classical fragment") != std::string::npos);
}

TEST_CASE("double negation axiom is fragment-restricted") {
  auto ok = node("dneg", {L("!!(A (+) B)")}, L("A (+) B"));
  CHECK(check_derivation(ok, NormFamily::minimum()).valid);
  auto graded = node("dneg", {L("!!(0.5 (+) A)")}, L("0.5 (+) A"));
  CHECK(!check_derivation(graded, NormFamily::minimum()).valid);
}

TEST_CASE("distributivity axioms match structurally") {
  auto tensor_ok = node("tensor-and-distr", {L("(A (*) C) & (B (*) C)")},
                        L("(A & B) (*) C"));
  CHECK(check_derivation(tensor_ok, NormFamily::product()).valid);
  auto tensor_bad = node("tensor-and-distr", {L("(A (*) C) & (B (*) D)")},
                         L("(A & B) (*) C"));
  CHECK(!check_derivation(tensor_bad, NormFamily::product()).valid);

  auto plus_ok = node("plus-and-distr", {L("(A (+) C) & (B (+) C)")},
                      L("(A & B) (+) C"));
  CHECK(check_derivation(plus_ok, NormFamily::product()).valid);
}

TEST_CASE("one-premise and two-premise additive forms are both accepted") {
  // Choosing a conjunct on the left.
  auto pick = node("andL", {L("A & B")}, L("A"), {node("id", {L("A")}, L("A"))});
  CHECK(check_derivation(pick, NormFamily::minimum()).valid);
  auto pick_right = node("andL", {L("A & B")}, L("B"), {node("id", {L("B")}, L("B"))});
  CHECK(check_derivation(pick_right, NormFamily::minimum()).valid);

  // The printed shared-context form with both premises.
  auto both = node("andL", {L("A & A")}, L("A"),
                   {node("id", {L("A")}, L("A")), node("id", {L("A")}, L("A"))});
  CHECK(check_derivation(both, NormFamily::minimum()).valid);

  // Choosing a disjunct on the right.
  auto inject = node("plusR", {L("B")}, L("A (+) B"), {node("id", {L("B")}, L("B"))});
  CHECK(check_derivation(inject, NormFamily::minimum()).valid);

  // plusL always needs both branches.
  auto half = node("plusL", {L("A (+) A")}, L("A"), {node("id", {L("A")}, L("A"))});
  CHECK(!check_derivation(half, NormFamily::minimum()).valid);
}

TEST_CASE("tensor rules split and join contexts") {
  auto intro = node("tensorR", {L("A"), L("B")}, L("A (*) B"),
                    {node("id", {L("A")}, L("A")), node("id", {L("B")}, L("B"))});
  CHECK(check_derivation(intro, NormFamily::product()).valid);

  auto elim = node("tensorL", {L("A (*) B")}, L("A (*) B"), {intro});
  CHECK(check_derivation(elim, NormFamily::product()).valid);

  // A context split that does not recombine to the conclusion fails.
  auto wrong = node("tensorR", {L("A")}, L("A (*) B"),
                    {node("id", {L("A")}, L("A")), node("id", {L("B")}, L("B"))});
  CHECK(!check_derivation(wrong, NormFamily::product()).valid);
}

TEST_CASE("implication rules") {
  auto mp = node("arrowL", {L("A"), L("A -> B")}, L("B"),
                 {node("id", {L("A")}, L("A")), node("id", {L("B")}, L("B"))});
  CHECK(check_derivation(mp, NormFamily::minimum()).valid);

  auto abstraction = node("arrowR", {}, L("A -> A"), {node("id", {L("A")}, L("A"))});
  CHECK(check_derivation(abstraction, NormFamily::minimum()).valid);
}

TEST_CASE("excluded middle and the case-split tautology derive") {
  for (const auto* n : {&NormFamily::minimum(), &NormFamily::product(),
                        &NormFamily::lukasiewicz()}) {
    auto em = derivations::excluded_middle(L("A"));
    auto v = check_derivation(em, *n);
    CHECK(v.valid);
    CHECK(v.constraints.empty());
    check_sound_everywhere(em, *n);

    auto split = derivations::case_split_tautology(L("A"), L("B & C"));
    auto sv = check_derivation(split, *n);
    CHECK(sv.valid);
    CHECK(sv.constraints.empty());
    check_sound_everywhere(split, *n);
  }
}

TEST_CASE("graded modus ponens emits its two lower bounds") {
  auto gm = derivations::graded_modus_ponens(var("alpha"), L("A"), var("beta"),
                                             L("B"), var("x"));
  auto v = check_derivation(gm, NormFamily::product());
  CHECK(v.valid);
  REQUIRE(v.constraints.size() == 2);
  CHECK(((v.constraints[0] == Constraint{var("alpha"), var("x")}) ||
         (v.constraints[0] == Constraint{var("beta"), var("x")})));
  CHECK(((v.constraints[1] == Constraint{var("alpha"), var("x")}) ||
         (v.constraints[1] == Constraint{var("beta"), var("x")})));
  CHECK(!(v.constraints[0] == v.constraints[1]));
}

TEST_CASE("tensor composition emits the product bound") {
  auto comp = derivations::graded_tensor_modus_ponens(
      var("xi2"), L("K"), var("xi1"), L("G"), L("H"), var("x"));
  auto v = check_derivation(comp, NormFamily::product());
  CHECK(v.valid);
  REQUIRE(v.constraints.size() == 1);
  CHECK(v.constraints[0] ==
        Constraint{DegreeTerm::times(var("xi2"), var("xi1")), var("x")});
}

TEST_CASE("and-composition emits one bound per grade") {
  auto comp = derivations::graded_and_composition(var("alpha"), L("A"), var("beta"),
                                                  L("B"), var("x"));
  auto v = check_derivation(comp, NormFamily::product());
  CHECK(v.valid);
  REQUIRE(v.constraints.size() == 2);
}

TEST_CASE("substituted ground proofs stay valid and sound") {
  auto gm = derivations::graded_modus_ponens(var("alpha"), L("A"), var("beta"),
                                             L("B"), var("x"));
  auto ground = gm.substitute(
      {{"alpha", deg(3, 10)}, {"beta", deg(1, 2)}, {"x", deg(1, 2)}});
  auto v = check_derivation(ground, NormFamily::product());
  CHECK(v.valid);
  CHECK(v.constraints.empty());
  check_sound_everywhere(ground, NormFamily::product());

  // Pushing x below a bound breaks a numeric leaf.
  auto broken = gm.substitute(
      {{"alpha", deg(3, 10)}, {"beta", deg(1, 2)}, {"x", deg(2, 5)}});
  CHECK(!check_derivation(broken, NormFamily::product()).valid);
}

TEST_CASE("constraint solving takes joins of lower bounds") {
  const auto& n = NormFamily::product();
  CHECK(solve_min({{DegreeTerm::constant(deg(1, 2)), var("x")}}, "x", {}, n) ==
        deg(1, 2));

  std::vector<Constraint> two = {{var("a"), var("x")}, {var("b"), var("x")}};
  CHECK(solve_min(two, "x", {{"a", deg(1, 4)}, {"b", deg(3, 4)}}, n) == deg(3, 4));

  // Chained dependencies resolve in order.
  std::vector<Constraint> chained = {
      {var("a"), var("y")},
      {DegreeTerm::times(var("y"), var("b")), var("x")},
  };
  CHECK(solve_min(chained, "x", {{"a", deg(3, 5)}, {"b", deg(2, 5)}}, n) ==
        deg(6, 25));
}

TEST_CASE("constraint solving rejects ill-posed systems") {
  const auto& n = NormFamily::product();
  // Upper bound on an unknown.
  CHECK_THROWS_AS(solve_min({{var("x"), DegreeTerm::constant(deg(1, 2))}}, "x", {}, n),
                  PosslogError);
  // Cycle.
  std::vector<Constraint> cycle = {{var("x"), var("y")}, {var("y"), var("x")}};
  CHECK_THROWS_AS(solve_min(cycle, "x", {}, n), PosslogError);
  // Referenced variable without any bound.
  std::vector<Constraint> dangling = {{var("y"), var("x")}};
  CHECK_THROWS_AS(solve_min(dangling, "x", {}, n), PosslogError);
  // Violated ground constraint.
  std::vector<Constraint> violated = {
      {DegreeTerm::constant(deg(3, 4)), DegreeTerm::constant(deg(1, 4))}};
  CHECK_THROWS_AS(solve_min(violated, "x", {}, n), PosslogError);
  // Bound target.
  CHECK_THROWS_AS(solve_min({{var("a"), var("x")}}, "x", {{"x", deg(1, 2)}}, n),
                  PosslogError);
}

TEST_CASE("the bundled localization proof solves to the published degree") {
  auto doc = load_proof_file(corpus_path("proofs/robot_necessity.json"));
  const auto& n = NormFamily::product();
  auto verdict = check_derivation(doc.root, n);
  CHECK(verdict.valid);
  CHECK(verdict.constraints.size() == 9);

  auto constraints = extract_constraints(doc.root, n);
  auto assignment = solve_min_assignment(constraints, "x", paper_bindings(), n);
  CHECK(assignment.at("x") == deg(6, 25));
  CHECK(assignment.at("x").complement() == deg(19, 25));
  CHECK(assignment.at("xi2") == deg(3, 5));

  // The least solution satisfies everything; shaving the target breaks it.
  for (const auto& c : constraints) {
    CHECK(!(c.rhs.eval(assignment, n) < c.lhs.eval(assignment, n)));
  }
  auto perturbed = assignment;
  perturbed["x"] = Degree(assignment.at("x").value() - Rational(1, 1000));
  bool violated = false;
  for (const auto& c : constraints) {
    if (c.rhs.eval(perturbed, n) < c.lhs.eval(perturbed, n)) violated = true;
  }
  CHECK(violated);

  // Substituting the full solution grounds the proof completely.
  auto ground = doc.root.substitute(assignment);
  auto ground_verdict = check_derivation(ground, n);
  CHECK(ground_verdict.valid);
  CHECK(ground_verdict.constraints.empty());
}

TEST_CASE("proof documents round-trip through JSON") {
  for (const char* name :
       {"proofs/graded_mp.json", "proofs/tensor_mp.json",
        "proofs/and_composition.json", "proofs/robot_necessity.json"}) {
    auto doc = load_proof_file(corpus_path(name));
    auto echoed = parse_proof_json(proof_to_json(doc));
    CHECK(proof_to_json(echoed) == proof_to_json(doc));
    CHECK(echoed.vars == doc.vars);
  }

  auto doc = load_proof_file(corpus_path("proofs/graded_mp.json"));
  auto v = check_derivation(doc.root, NormFamily::minimum());
  CHECK(v.valid);
  REQUIRE(v.constraints.size() == 2);

  CHECK_THROWS_AS(parse_proof_json("{not json"), PosslogError);
  CHECK_THROWS_AS(parse_proof_json("{\"proof\": {\"rule\": \"id\"}}"), PosslogError);
}
