// Regenerates the derivation files under corpus/proofs/. Each proof is built
// from the schemata in posslog/derivations.hpp, self-checked, and written as
// JSON. Usage: posslog-proofgen [output-dir]

#include <iostream>
#include <string>

#include "kbdoc.hpp"
#include "posslog/derivations.hpp"

using namespace posslog;
using namespace posslog::derivations;

namespace {

LplFormula C(const char* var) {
  return LplFormula::constant(DegreeTerm::variable(var));
}

LplFormula plus(LplFormula a, LplFormula b) {
  return LplFormula::or_max(std::move(a), std::move(b));
}

LplFormula amin(LplFormula a, LplFormula b) {
  return LplFormula::and_min(std::move(a), std::move(b));
}

DegreeTerm V(const char* name) { return DegreeTerm::variable(name); }

int write_proof(const std::string& dir, const std::string& name,
                const ProofDocument& doc) {
  Verdict v = check_derivation(doc.root, NormFamily::product());
  if (!v.valid) {
    std::cerr << name << " does not check:\n";
    for (const auto& f : v.failures) {
      std::cerr << "  " << f.path << ": " << f.reason << "\n";
    }
    return 1;
  }
  cli::write_file(dir + "/" + name + ".json", proof_to_json(doc) + "\n");
  std::cout << name << ": ok, " << v.constraints.size() << " constraint(s)\n";
  for (const auto& c : v.constraints) std::cout << "    " << c.to_string() << "\n";
  return 0;
}

/// The camera/sonar localization proof: from the graded premise set
///   (theta4 (+) E) & (theta5 (+) F),
///   (D & E & F (+) G) -> H,
///   eta (+) (A & B -> D),
///   (theta1 (+) A) & (theta2 (+) B),
///   theta6 (+) G
/// derive x (+) H, collecting the lower-bound constraints on x.
Derivation robot_derivation() {
  LplFormula A = LplFormula::atom("A"), B = LplFormula::atom("B");
  LplFormula D = LplFormula::atom("D"), E = LplFormula::atom("E");
  LplFormula F = LplFormula::atom("F"), G = LplFormula::atom("G");
  LplFormula H = LplFormula::atom("H");

  LplFormula def = amin(amin(D, E), F);  // D & E & F
  LplFormula item_ef = amin(plus(C("theta4"), E), plus(C("theta5"), F));
  LplFormula rule_h = LplFormula::arrow(plus(def, G), H);
  LplFormula rule_d = plus(C("eta"), LplFormula::arrow(amin(A, B), D));
  LplFormula item_ab = amin(plus(C("theta1"), A), plus(C("theta2"), B));
  LplFormula item_g = plus(C("theta6"), G);

  // Gamma4 = everything except the hard rule and the camera fact.
  std::vector<LplFormula> gamma4 = {item_ef, rule_d, item_ab};

  // E,F pair: Gamma4 |- alpha (+) (E & F).
  LplFormula ef_goal = plus(C("alpha"), amin(E, F));
  Derivation comp_ef = graded_and_composition(V("theta4"), E, V("theta5"), F, V("alpha"));
  Derivation ef_1 = node("weL", {item_ef, rule_d}, ef_goal, {std::move(comp_ef)});
  Derivation ef_full = node("weL", gamma4, ef_goal, {std::move(ef_1)});

  // A,B pair through the uncertain rule: Gamma4 |- beta (+) D.
  LplFormula d_goal = plus(C("beta"), D);
  Derivation comp_ab = graded_and_composition(V("theta1"), A, V("theta2"), B, V("gamma"));
  Derivation mp =
      graded_modus_ponens(V("eta"), amin(A, B), V("gamma"), D, V("beta"));
  Derivation d_2 = node("cut", {item_ab, rule_d}, d_goal,
                        {std::move(comp_ab), std::move(mp)});
  Derivation d_full = node("weL", gamma4, d_goal, {std::move(d_2)});

  // Pair them up and compose once more: Gamma4 |- xi2 (+) ((E & F) & D).
  LplFormula pair = amin(ef_goal, d_goal);
  LplFormula efd_goal = plus(C("xi2"), amin(amin(E, F), D));
  Derivation paired = node("andR", gamma4, pair, {std::move(ef_full), std::move(d_full)});
  Derivation comp_efd =
      graded_and_composition(V("alpha"), amin(E, F), V("beta"), D, V("xi2"));
  Derivation efd = node("cut", gamma4, efd_goal,
                        {std::move(paired), std::move(comp_efd)});

  // Reassociate (E & F) & D into the rule's (D & E) & F reading.
  LplFormula src = amin(amin(E, F), D);
  LplFormula dst = def;
  Derivation pick_d = node("andL", {src}, D, {node("id", {D}, D)});
  Derivation e_of_ef = node("andL", {amin(E, F)}, E, {node("id", {E}, E)});
  Derivation pick_e = node("andL", {src}, E, {std::move(e_of_ef)});
  Derivation de = node("andR", {src}, amin(D, E), {std::move(pick_d), std::move(pick_e)});
  Derivation f_of_ef = node("andL", {amin(E, F)}, F, {node("id", {F}, F)});
  Derivation pick_f = node("andL", {src}, F, {std::move(f_of_ef)});
  Derivation reassoc = node("andR", {src}, dst, {std::move(de), std::move(pick_f)});

  LplFormula from = plus(C("xi2"), src);
  LplFormula to = plus(C("xi2"), dst);
  Derivation keep_num =
      node("plusR", {C("xi2")}, to, {node("id", {C("xi2")}, C("xi2"))});
  Derivation keep_f = node("plusR", {src}, to, {std::move(reassoc)});
  Derivation lemma =
      node("plusL", {from}, to, {std::move(keep_num), std::move(keep_f)});
  Derivation efd_rot = node("cut", gamma4, to, {std::move(efd), std::move(lemma)});

  // Tensor with the camera fact, then discharge the hard rule.
  std::vector<LplFormula> gamma3 = {item_ef, rule_d, item_ab, item_g};
  LplFormula big_tensor = LplFormula::tensor(to, item_g);
  Derivation tensored = node("tensorR", gamma3, big_tensor,
                             {std::move(efd_rot), node("id", {item_g}, item_g)});
  Derivation discharge =
      graded_tensor_modus_ponens(V("xi2"), dst, V("theta6"), G, H, V("x"));

  std::vector<LplFormula> gamma1 = {item_ef, rule_h, rule_d, item_ab, item_g};
  return node("cut", gamma1, plus(C("x"), H),
              {std::move(tensored), std::move(discharge)});
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "corpus/proofs";
  int rc = 0;
  try {
    {
      ProofDocument doc;
      doc.vars = {"alpha", "beta", "x"};
      doc.root = graded_modus_ponens(V("alpha"), LplFormula::atom("A"), V("beta"),
                                     LplFormula::atom("B"), V("x"));
      rc |= write_proof(dir, "graded_mp", doc);
    }
    {
      ProofDocument doc;
      doc.vars = {"xi1", "xi2", "x"};
      doc.root = graded_tensor_modus_ponens(V("xi2"), LplFormula::atom("K"),
                                            V("xi1"), LplFormula::atom("G"),
                                            LplFormula::atom("H"), V("x"));
      rc |= write_proof(dir, "tensor_mp", doc);
    }
    {
      ProofDocument doc;
      doc.vars = {"alpha1", "alpha2", "x"};
      doc.root = graded_and_composition(V("alpha1"), LplFormula::atom("A"),
                                        V("alpha2"), LplFormula::atom("B"), V("x"));
      rc |= write_proof(dir, "and_composition", doc);
    }
    {
      ProofDocument doc;
      doc.vars = {"theta1", "theta2", "theta4", "theta5", "theta6",
                  "eta",    "alpha",  "beta",   "gamma",  "xi2",   "x"};
      doc.root = robot_derivation();
      rc |= write_proof(dir, "robot_necessity", doc);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
