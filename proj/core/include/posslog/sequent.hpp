#ifndef POSSLOG_SEQUENT_HPP
#define POSSLOG_SEQUENT_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "posslog/lpl.hpp"

namespace posslog {

/// A single-conclusion sequent. The antecedent is a multiset: matching never
/// depends on order, so explicit exchange steps are optional.
struct Sequent {
  std::vector<LplFormula> antecedent;
  LplFormula succedent;

  bool operator==(const Sequent& o) const;  // multiset comparison on the left
  std::string to_string() const;
};

/// lhs <= rhs over degree terms; the inequalities produced by numeric leaves.
struct Constraint {
  DegreeTerm lhs;
  DegreeTerm rhs;

  bool operator==(const Constraint& o) const {
    return lhs == o.lhs && rhs == o.rhs;
  }
  std::string to_string() const { return lhs.to_string() + " <= " + rhs.to_string(); }
};

/// A proof tree node: a rule name, its conclusion, premise subtrees and
/// optional rule-specific hints (e.g. the cut formula) that narrow matching.
///
/// Rule names:
///   structural: id, cut, weL, exL, l1con
///   logical:    andL, andR, plusL, plusR, tensorL, tensorR, arrowL, arrowR,
///               oneL, zeroL, dneg
///   axioms:     tensor-and-distr, plus-and-distr
///   numeric:    s', tensor-def, neg-def
///
/// andL and plusR accept one premise (pick a component) or two (the shared
/// context form); both readings are sound and the derivations in the bundled
/// corpus use the one-premise form.
struct Derivation {
  std::string rule;
  Sequent conclusion;
  std::vector<Derivation> premises;
  std::map<std::string, std::string> side;

  Derivation substitute(const std::map<std::string, Degree>& bindings) const;
};

struct CheckFailure {
  std::string path;  // "root.1.0" style premise indices
  std::string reason;
};

struct Verdict {
  bool valid = false;
  std::vector<CheckFailure> failures;
  std::vector<Constraint> constraints;  // deduplicated, emission order
};

/// Validates every node against its rule schema. Ground numeric leaves are
/// decided immediately under the norm; leaves with symbolic degrees emit
/// constraints instead. valid means no failures (open constraints allowed).
Verdict check_derivation(const Derivation& d, const NormFamily& n);

/// The constraint set of a derivation that checks valid; throws PosslogError
/// if it does not.
std::vector<Constraint> extract_constraints(const Derivation& d, const NormFamily& n);

/// Least solution of a stratified lower-bound system: every unbound variable
/// other than the target may only appear constrained from below (alone on the
/// right-hand side), and the dependency graph must be acyclic. Each variable
/// gets the join of its lower bounds in dependency order; returns the full
/// assignment. Ground constraints are verified and rejected if violated.
std::map<std::string, Degree> solve_min_assignment(
    const std::vector<Constraint>& constraints, const std::string& target,
    const std::map<std::string, Degree>& bindings, const NormFamily& n);

/// Just the target's least value.
Degree solve_min(const std::vector<Constraint>& constraints,
                 const std::string& target,
                 const std::map<std::string, Degree>& bindings,
                 const NormFamily& n);

/// Semantic validity of a ground sequent: the truth value of the tensor fold
/// of the antecedent lies below the succedent's truth value pointwise, over
/// the sequent's own atoms. The soundness half of the calculus guarantees
/// this for every checked derivation.
bool sequent_semantically_valid(const Sequent& s, const NormFamily& n);

// ---------------------------------------------------------------------------
// Proof documents (JSON)

/// A derivation plus the names that parse as symbolic degrees in its sequents.
struct ProofDocument {
  std::set<std::string> vars;
  Derivation root;
};

/// Reads {"vars": [...], "proof": {rule, conclusion: {antecedent: [...],
/// succedent}, premises: [...], side?}}; a bare proof object is also accepted.
ProofDocument parse_proof_json(const std::string& text);
ProofDocument load_proof_file(const std::string& path);
std::string proof_to_json(const ProofDocument& doc, bool pretty = true);

}  // namespace posslog

#endif  // POSSLOG_SEQUENT_HPP
