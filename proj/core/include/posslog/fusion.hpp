#ifndef POSSLOG_FUSION_HPP
#define POSSLOG_FUSION_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "posslog/norms.hpp"
#include "posslog/possdist.hpp"

namespace posslog {

enum class CombinationMode { Conjunctive, Disjunctive };

/// Pointwise combination after cylindrical extension to the united universe:
/// conjunctive mode applies the t-norm, disjunctive mode its dual t-conorm.
PossibilityDistribution combine_semantic(const PossibilityDistribution& d1,
                                         const PossibilityDistribution& d2,
                                         const NormFamily& n,
                                         CombinationMode mode);

/// Syntactic counterpart of the conjunctive combination: both bases plus every
/// cross-disjunction A_i | B_j weighted by the dual t-conorm of the parent
/// weights. The merged base induces exactly the t-norm combination of the two
/// input distributions. May be inconsistent.
KnowledgeBase merge_conjunctive(const KnowledgeBase& k1, const KnowledgeBase& k2,
                                const NormFamily& n);

/// Syntactic counterpart of the disjunctive combination: only the
/// cross-disjunctions, weighted by the t-norm dual to the requested t-conorm.
/// Cross entries whose weight collapses to 0 are vacuous and omitted. Always
/// consistent when either input is.
KnowledgeBase merge_disjunctive(const KnowledgeBase& k1, const KnowledgeBase& k2,
                                const NormFamily& n);

/// True iff the other formulae of kb with weight >= wf.weight classically
/// entail wf.formula (the strict cut of Def-3 subsumption). wf must occur in
/// kb; one occurrence is excluded from the cut.
bool is_subsumed(const KnowledgeBase& kb, const WeightedFormula& wf);
bool is_subsumed_at(const KnowledgeBase& kb, std::size_t index);

/// Drops tautologies, then repeatedly drops subsumed formulae until a
/// fixpoint. The result induces the identical least-specific distribution.
KnowledgeBase simplify(const KnowledgeBase& kb);

enum class PlanKind { Leaf, Union, Conjunction, Disjunction };

/// An explicit binary merge tree. Mixed-operator combinations are not
/// associative, so plans are never flattened; evaluation follows the tree.
class MergePlan {
 public:
  static MergePlan leaf(std::string name);
  static MergePlan unite(MergePlan left, MergePlan right);
  static MergePlan conjunction(const NormFamily& n, MergePlan left, MergePlan right);
  static MergePlan disjunction(const NormFamily& n, MergePlan left, MergePlan right);

  PlanKind kind() const { return node_->kind; }
  const std::string& leaf_name() const { return node_->name; }
  const NormFamily& norm() const { return *node_->norm; }
  const MergePlan& left() const { return *node_->left; }
  const MergePlan& right() const { return *node_->right; }

  std::string to_string() const;

 private:
  struct Node {
    PlanKind kind;
    std::string name;
    std::optional<NormFamily> norm;
    std::shared_ptr<const MergePlan> left, right;
  };
  explicit MergePlan(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: `name` | `union(p,q)` | `conj(norm,p,q)` | `disj(norm,p,q)`
/// with norm in {min, product, lukasiewicz}.
MergePlan parse_plan(std::string_view text);

/// Bottom-up evaluation; Union is multiset union. With simplify_each, every
/// node's result is simplified before use. Throws on unbound leaf names.
KnowledgeBase eval_plan(const MergePlan& plan,
                        const std::map<std::string, KnowledgeBase>& env,
                        bool simplify_each = false);

}  // namespace posslog

#endif  // POSSLOG_FUSION_HPP
