#ifndef POSSLOG_DERIVATIONS_HPP
#define POSSLOG_DERIVATIONS_HPP

#include "posslog/sequent.hpp"

namespace posslog::derivations {

/// Convenience constructor for a proof node.
Derivation node(std::string rule, std::vector<LplFormula> antecedent,
                LplFormula succedent, std::vector<Derivation> premises = {});

/// |- L (+) !L for classical-fragment L, via the double-negation axiom and
/// the contraction rule restricted to that fragment.
Derivation excluded_middle(const LplFormula& l);

/// |- the four-way case split (!L1 & !L2) (+) (L1 & !L2) (+) (!L1 & L2)
///    (+) (L1 & L2), for classical-fragment L1, L2.
Derivation case_split_tautology(const LplFormula& l1, const LplFormula& l2);

/// Graded modus ponens:  a (+) (A -> B), b (+) A  |-  x (+) B.
/// Checks with constraints { a <= x, b <= x }.
Derivation graded_modus_ponens(const DegreeTerm& a, const LplFormula& A,
                               const DegreeTerm& b, const LplFormula& B,
                               const DegreeTerm& x);

/// Composition under the min conjunction:
///   (a1 (+) L1) & (a2 (+) L2)  |-  x (+) (L1 & L2)
/// for classical-fragment L1, L2; constraints { a1 <= x, a2 <= x }.
Derivation graded_and_composition(const DegreeTerm& a1, const LplFormula& l1,
                                  const DegreeTerm& a2, const LplFormula& l2,
                                  const DegreeTerm& x);

/// Graded modus ponens across a tensor of graded disjunctions:
///   (K (+) G) -> H, (s (+) K) (*) (t (+) G)  |-  x (+) H
/// with the single constraint s * t <= x.
Derivation graded_tensor_modus_ponens(const DegreeTerm& s, const LplFormula& K,
                                      const DegreeTerm& t, const LplFormula& G,
                                      const LplFormula& H, const DegreeTerm& x);

}  // namespace posslog::derivations

#endif  // POSSLOG_DERIVATIONS_HPP
