#include "posslog/derivations.hpp"

namespace posslog::derivations {

namespace {

LplFormula C(const DegreeTerm& t) { return LplFormula::constant(t); }
LplFormula plus(LplFormula a, LplFormula b) {
  return LplFormula::or_max(std::move(a), std::move(b));
}
LplFormula amin(LplFormula a, LplFormula b) {
  return LplFormula::and_min(std::move(a), std::move(b));
}
LplFormula neg(LplFormula a) { return LplFormula::negation(std::move(a)); }

const LplFormula& zero() {
  static const LplFormula z = LplFormula::constant(Degree::zero());
  return z;
}

Derivation id_leaf(const LplFormula& a) { return node("id", {a}, a); }

/// L, !L |- S by deriving 0 and cutting with the 0-left axiom.
Derivation ex_falso(const LplFormula& l, const LplFormula& succedent) {
  Derivation bottom =
      node("arrowL", {l, neg(l)}, zero(), {id_leaf(l), id_leaf(zero())});
  Derivation from_zero = node("zeroL", {zero()}, succedent);
  return node("cut", {l, neg(l)}, succedent, {std::move(bottom), std::move(from_zero)});
}

}  // namespace

Derivation node(std::string rule, std::vector<LplFormula> antecedent,
                LplFormula succedent, std::vector<Derivation> premises) {
  Derivation d;
  d.rule = std::move(rule);
  d.conclusion.antecedent = std::move(antecedent);
  d.conclusion.succedent = std::move(succedent);
  d.premises = std::move(premises);
  return d;
}

Derivation excluded_middle(const LplFormula& l) {
  LplFormula em = plus(l, neg(l));
  LplFormula em_neg = neg(em);

  // em_neg |- em: refute l against em_neg, abstract to !l, pick that disjunct.
  Derivation pick_left = node("plusR", {l}, em, {id_leaf(l)});
  Derivation to_zero =
      node("arrowL", {l, em_neg}, zero(), {std::move(pick_left), id_leaf(zero())});
  Derivation not_l = node("arrowR", {em_neg}, neg(l), {std::move(to_zero)});
  Derivation em_from_neg = node("plusR", {em_neg}, em, {std::move(not_l)});

  // em_neg, em_neg |- 0, contracted to em_neg |- 0 (em_neg stays classical).
  Derivation double_neg_seq = node("arrowL", {em_neg, em_neg}, zero(),
                                   {std::move(em_from_neg), id_leaf(zero())});
  Derivation contracted = node("l1con", {em_neg}, zero(),
                               {std::move(double_neg_seq), id_leaf(em_neg)});
  Derivation nn_em = node("arrowR", {}, neg(em_neg), {std::move(contracted)});
  Derivation dneg_axiom = node("dneg", {neg(em_neg)}, em);
  return node("cut", {}, em, {std::move(nn_em), std::move(dneg_axiom)});
}

Derivation case_split_tautology(const LplFormula& l1, const LplFormula& l2) {
  LplFormula c1 = amin(neg(l1), neg(l2));
  LplFormula c2 = amin(l1, neg(l2));
  LplFormula c3 = amin(neg(l1), l2);
  LplFormula c4 = amin(l1, l2);
  LplFormula a2 = plus(c1, c2);
  LplFormula a3 = plus(a2, c3);
  LplFormula taut = plus(a3, c4);
  LplFormula x1 = plus(l1, neg(l1));
  LplFormula x2 = plus(l2, neg(l2));

  // {s1, s2} |- taut by proving the matching conjunction and walking up the
  // disjunction spine. depth counts the plusR steps above the conjunction.
  auto one_case = [&](const LplFormula& s1, const LplFormula& s2,
                      const LplFormula& conj, int depth) {
    Derivation left = node("weL", {s1, s2}, s1, {id_leaf(s1)});
    Derivation right = node("weL", {s1, s2}, s2, {id_leaf(s2)});
    Derivation d =
        node("andR", {s1, s2}, conj, {std::move(left), std::move(right)});
    const LplFormula* spine[] = {&a2, &a3, &taut};
    for (int i = 3 - depth; i < 3; ++i) {
      d = node("plusR", {s1, s2}, *spine[i], {std::move(d)});
    }
    return d;
  };

  Derivation q1 = node("plusL", {l1, x2}, taut,
                       {one_case(l1, l2, c4, 1), one_case(l1, neg(l2), c2, 3)});
  Derivation q2 = node("plusL", {neg(l1), x2}, taut,
                       {one_case(neg(l1), l2, c3, 2),
                        one_case(neg(l1), neg(l2), c1, 3)});
  Derivation q3 =
      node("plusL", {x1, x2}, taut, {std::move(q1), std::move(q2)});
  Derivation q4 =
      node("tensorL", {LplFormula::tensor(x1, x2)}, taut, {std::move(q3)});

  Derivation tensor_em =
      node("tensorR", {}, LplFormula::tensor(x1, x2),
           {excluded_middle(l1), excluded_middle(l2)});
  return node("cut", {}, taut, {std::move(tensor_em), std::move(q4)});
}

Derivation graded_modus_ponens(const DegreeTerm& a, const LplFormula& A,
                               const DegreeTerm& b, const LplFormula& B,
                               const DegreeTerm& x) {
  LplFormula rule = plus(C(a), LplFormula::arrow(A, B));
  LplFormula fact = plus(C(b), A);
  LplFormula target = plus(C(x), B);

  Derivation b_leq = node("s'", {C(b)}, C(x));
  Derivation b_target = node("plusR", {C(b)}, target, {std::move(b_leq)});
  Derivation left_branch = node("weL", {C(b), rule}, target, {std::move(b_target)});

  Derivation a_leq = node("s'", {C(a)}, C(x));
  Derivation a_target = node("plusR", {C(a)}, target, {std::move(a_leq)});
  Derivation a_weak = node("weL", {C(a), A}, target, {std::move(a_target)});

  Derivation b_to_target = node("plusR", {B}, target, {id_leaf(B)});
  Derivation apply = node("arrowL", {A, LplFormula::arrow(A, B)}, target,
                          {id_leaf(A), std::move(b_to_target)});
  Derivation right_branch = node("plusL", {A, rule}, target,
                                 {std::move(a_weak), std::move(apply)});

  return node("plusL", {rule, fact}, target,
              {std::move(left_branch), std::move(right_branch)});
}

Derivation graded_and_composition(const DegreeTerm& a1, const LplFormula& l1,
                                  const DegreeTerm& a2, const LplFormula& l2,
                                  const DegreeTerm& x) {
  LplFormula item1 = plus(C(a1), l1);
  LplFormula item2 = plus(C(a2), l2);
  LplFormula both = amin(item1, item2);
  LplFormula goal = amin(l1, l2);
  LplFormula target = plus(C(x), goal);

  LplFormula c1 = amin(neg(l1), neg(l2));
  LplFormula c2 = amin(l1, neg(l2));
  LplFormula c3 = amin(neg(l1), l2);
  LplFormula c4 = amin(l1, l2);

  // {both, case} |- target for each world case: the graded disjunct whose
  // formula the case refutes either pays its degree or clashes classically.
  auto sub_case = [&](const LplFormula& the_case, const DegreeTerm& av,
                      const LplFormula& item, const LplFormula& refuted) {
    Derivation a_leq = node("s'", {C(av)}, C(x));
    Derivation a_target = node("plusR", {C(av)}, target, {std::move(a_leq)});
    Derivation a_branch =
        node("weL", {C(av), the_case}, target, {std::move(a_target)});

    Derivation clash = ex_falso(refuted, target);
    Derivation case_pick =
        node("andL", {refuted, the_case}, target, {std::move(clash)});

    Derivation split = node("plusL", {item, the_case}, target,
                            {std::move(a_branch), std::move(case_pick)});
    return node("andL", {both, the_case}, target, {std::move(split)});
  };

  Derivation sub1 = sub_case(c1, a1, item1, l1);
  Derivation sub2 = sub_case(c2, a2, item2, l2);
  Derivation sub3 = sub_case(c3, a1, item1, l1);

  Derivation direct = node("plusR", {c4}, target, {id_leaf(c4)});
  Derivation sub4 = node("weL", {both, c4}, target, {std::move(direct)});

  LplFormula a2f = plus(c1, c2);
  LplFormula a3f = plus(a2f, c3);
  LplFormula taut = plus(a3f, c4);

  Derivation e1 = node("plusL", {both, a2f}, target, {std::move(sub1), std::move(sub2)});
  Derivation e2 = node("plusL", {both, a3f}, target, {std::move(e1), std::move(sub3)});
  Derivation e3 = node("plusL", {both, taut}, target, {std::move(e2), std::move(sub4)});

  Derivation weak_taut = node("weL", {both}, taut, {case_split_tautology(l1, l2)});
  return node("l1con", {both}, target, {std::move(e3), std::move(weak_taut)});
}

Derivation graded_tensor_modus_ponens(const DegreeTerm& s, const LplFormula& K,
                                      const DegreeTerm& t, const LplFormula& G,
                                      const LplFormula& H, const DegreeTerm& x) {
  LplFormula rule = LplFormula::arrow(plus(K, G), H);
  LplFormula graded_k = plus(C(s), K);
  LplFormula graded_g = plus(C(t), G);
  LplFormula target = plus(C(x), H);

  // Numeric side: s, t |- x via the tensor definition.
  Derivation pair = node("tensorR", {C(s), C(t)}, LplFormula::tensor(C(s), C(t)),
                         {id_leaf(C(s)), id_leaf(C(t))});
  Derivation product_leq =
      node("tensor-def", {LplFormula::tensor(C(s), C(t))}, C(x));
  Derivation numeric = node("cut", {C(s), C(t)}, C(x),
                            {std::move(pair), std::move(product_leq)});
  Derivation numeric_target = node("plusR", {C(s), C(t)}, target, {std::move(numeric)});
  Derivation numeric_weak =
      node("weL", {rule, C(s), C(t)}, target, {std::move(numeric_target)});

  // Applying the rule once G is at hand.
  auto apply_rule = [&](std::vector<LplFormula> gamma, const Derivation& into_kg) {
    std::vector<LplFormula> ante = gamma;
    ante.push_back(rule);
    Derivation applied = node("arrowL", ante, H, {into_kg, id_leaf(H)});
    return node("plusR", std::move(ante), target, {std::move(applied)});
  };

  Derivation g_in = node("plusR", {G}, plus(K, G), {id_leaf(G)});
  Derivation g_applied = apply_rule({G}, g_in);
  Derivation g_weak = node("weL", {rule, C(s), G}, target, {std::move(g_applied)});
  Derivation part1 = node("plusL", {rule, C(s), graded_g}, target,
                          {std::move(numeric_weak), std::move(g_weak)});

  Derivation k_in = node("plusR", {K}, plus(K, G), {id_leaf(K)});
  Derivation k_applied = apply_rule({K}, k_in);
  Derivation k_weak = node("weL", {rule, K, C(t)}, target, {std::move(k_applied)});

  Derivation kg_base = node("weL", {K, G}, K, {id_leaf(K)});
  Derivation kg_in = node("plusR", {K, G}, plus(K, G), {std::move(kg_base)});
  Derivation kg_applied = apply_rule({K, G}, kg_in);
  Derivation part2 = node("plusL", {rule, K, graded_g}, target,
                          {std::move(k_weak), std::move(kg_applied)});

  Derivation split = node("plusL", {rule, graded_k, graded_g}, target,
                          {std::move(part1), std::move(part2)});
  return node("tensorL", {rule, LplFormula::tensor(graded_k, graded_g)}, target,
              {std::move(split)});
}

}  // namespace posslog::derivations
