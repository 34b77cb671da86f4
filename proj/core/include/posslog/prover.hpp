#ifndef POSSLOG_PROVER_HPP
#define POSSLOG_PROVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "posslog/possdist.hpp"

namespace posslog {

struct WeightedClause {
  WeightedClause(Clause c, Degree w) : clause(std::move(c)), weight(w) {
    if (weight.is_zero()) throw PosslogError("weighted clause with weight 0");
  }
  Clause clause;
  Degree weight;

  bool operator==(const WeightedClause& o) const = default;
  std::string to_string() const;
};

/// One application of the weighted resolution rule, for trace output.
struct ResolutionStep {
  WeightedClause left;
  WeightedClause right;
  std::string pivot;
  WeightedClause resolvent;

  /// "(A | B 1/2) x (!A | C 4/5) / A => (B | C 1/2)"
  std::string to_string() const;
};

struct ProofResult {
  bool derivable = false;
  Degree degree;    // best refutation weight; meaningful when derivable
  Degree inc_base;  // inconsistency degree of the base alone
  std::optional<std::vector<ResolutionStep>> trace;
};

/// Resolvent of c1 and c2 on `pivot`, weighted min(a, b). The pivot must occur
/// positively in one clause and negatively in the other.
WeightedClause resolve_step(const WeightedClause& c1, const WeightedClause& c2,
                            const std::string& pivot);

/// The greatest weight alpha occurring in kb whose cut {A_i : w_i >= alpha} is
/// classically unsatisfiable; 0 for a consistent base. Equals the best lower
/// bound derivable for the empty clause by weighted resolution.
Degree inconsistency_degree(const KnowledgeBase& kb);

/// Preferential entailment by refutation: the goal's negation is added at
/// weight 1 and the conclusion holds iff the inconsistency degree rises
/// strictly above the base's own. With want_trace, a resolution refutation
/// within the winning cut is reconstructed (small bases only).
ProofResult prove_pref(const KnowledgeBase& kb, const Formula& goal,
                       bool want_trace = false);

}  // namespace posslog

#endif  // POSSLOG_PROVER_HPP
