#ifndef POSSLOG_LPL_HPP
#define POSSLOG_LPL_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "posslog/degree_term.hpp"
#include "posslog/formula.hpp"
#include "posslog/norms.hpp"
#include "posslog/possdist.hpp"

namespace posslog {

enum class LplKind { Atom, Const, AndMin, OrMax, Tensor, Arrow };

/// A formula of the graded language: atoms, graded constants, the min
/// conjunction `&`, max disjunction `(+)`, t-norm conjunction `(*)` and the
/// residuated implication `->`. Negation is sugar: !A is A -> 0.
///
/// Constants normally hold plain degrees; inside sequent proofs they may hold
/// symbolic degree terms, in which case the formula is not ground.
class LplFormula {
 public:
  LplFormula() : LplFormula(constant(Degree::one())) {}

  static LplFormula atom(std::string name);
  static LplFormula constant(Degree d);
  static LplFormula constant(DegreeTerm t);
  static LplFormula and_min(LplFormula a, LplFormula b);
  static LplFormula or_max(LplFormula a, LplFormula b);
  static LplFormula tensor(LplFormula a, LplFormula b);
  static LplFormula arrow(LplFormula a, LplFormula b);
  static LplFormula negation(LplFormula a) {
    return arrow(std::move(a), constant(Degree::zero()));
  }

  LplKind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  const DegreeTerm& constant_term() const { return node_->term; }
  const LplFormula& left() const { return *node_->left; }
  const LplFormula& right() const { return *node_->right; }

  bool operator==(const LplFormula& o) const;

  /// No symbolic constants anywhere in the tree.
  bool is_ground() const;

  /// Membership in the classically-behaved fragment: no constant strictly
  /// between 0 and 1 (symbolic constants disqualify, since their value is
  /// unknown).
  bool is_l1() const;

  /// True when this is `other -> 0` with a literal ground zero.
  bool is_negation_of(const LplFormula& other) const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;
  void collect_vars(std::set<std::string>& out) const;

  LplFormula substitute(const std::map<std::string, Degree>& bindings) const;

  /// ASCII rendering; parses back to an equal tree. An implication into a
  /// ground 0 prints as `!`.
  std::string to_string() const;

 private:
  struct Node {
    LplKind kind;
    std::string name;  // Atom
    DegreeTerm term;   // Const
    std::shared_ptr<const LplFormula> left, right;
  };
  explicit LplFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: `!` > `(*)` > `&` > `(+)` > `->` (right-associative); numeric
/// literals are exact decimals or fractions in [0,1]; identifiers listed in
/// degree_vars parse as symbolic constants, all others as atoms.
LplFormula parse_lpl(std::string_view text);
LplFormula parse_lpl(std::string_view text, const std::set<std::string>& degree_vars);

using TruthValue = PossibilityDistribution;

/// Compositional truth value over the universe: atoms become 0/1 indicator
/// distributions, constants constant distributions, & / (+) / (*) / -> apply
/// min / max / t-norm / residuum pointwise. Requires a ground formula.
TruthValue truth_value(const LplFormula& f, const AtomUniverse& universe,
                       const NormFamily& n);

/// Forcing: d makes f locally true iff d lies below f's truth value pointwise.
bool forces(const PossibilityDistribution& d, const LplFormula& f,
            const NormFamily& n);

/// Encoding of a weighted base: the min-conjunction over (1 - w_i) (+) tr(A_i),
/// where tr maps the classical connectives onto & , (+), -> and !. An empty
/// base encodes to the constant 1.
LplFormula translate_spl(const KnowledgeBase& kb);

/// Necessity of a classical goal under the tensor combination of gamma:
/// 1 - max{ pi(w) : w violates goal } where pi is the truth value of the
/// (*)-fold of gamma ((*) is associative and commutative, so multiset order
/// does not matter).
Degree lpl_necessity(const std::vector<LplFormula>& gamma, const Formula& goal,
                     const NormFamily& n);

}  // namespace posslog

#endif  // POSSLOG_LPL_HPP
