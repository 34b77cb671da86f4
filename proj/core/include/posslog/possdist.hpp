#ifndef POSSLOG_POSSDIST_HPP
#define POSSLOG_POSSDIST_HPP

#include <string>
#include <vector>

#include "posslog/degree.hpp"
#include "posslog/formula.hpp"

namespace posslog {

/// A possibility distribution: one exact degree per world of a universe,
/// indexed in world enumeration order. Height 1 means normalized.
class PossibilityDistribution {
 public:
  PossibilityDistribution(AtomUniverse universe, std::vector<Degree> pi);
  static PossibilityDistribution constant(const AtomUniverse& universe, Degree d);

  const AtomUniverse& universe() const { return universe_; }
  std::size_t world_count() const { return pi_.size(); }

  Degree at_index(std::size_t world_index) const { return pi_.at(world_index); }
  Degree at(const World& w) const;

  /// max over all worlds; 1 - height is the semantic inconsistency degree.
  Degree height() const;
  bool is_normalized() const { return height().is_one(); }

  /// Cylindrical extension to a superset universe: each world keeps the degree
  /// of its restriction.
  PossibilityDistribution extended_to(const AtomUniverse& larger) const;

  bool operator==(const PossibilityDistribution& o) const = default;

 private:
  AtomUniverse universe_;
  std::vector<Degree> pi_;
};

/// A formula carrying a strictly positive lower bound on its necessity.
struct WeightedFormula {
  WeightedFormula(Formula f, Degree w) : formula(std::move(f)), weight(w) {
    if (weight.is_zero()) {
      throw PosslogError("weighted formula with weight 0 is vacuous: " +
                         formula.to_string());
    }
  }
  Formula formula;
  Degree weight;

  bool operator==(const WeightedFormula& o) const = default;
  std::string to_string() const;
};

/// A finite multiset of weighted formulae plus its atom universe. The universe
/// always covers every mentioned atom and may be declared wider so that bases
/// over different vocabularies stay comparable after union.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  explicit KnowledgeBase(std::vector<WeightedFormula> items,
                         const AtomUniverse& declared = AtomUniverse());

  const std::vector<WeightedFormula>& items() const { return items_; }
  const AtomUniverse& universe() const { return universe_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  /// Same items over the union with `extra` (used before cross-base queries).
  KnowledgeBase with_universe(const AtomUniverse& extra) const;
  KnowledgeBase with(WeightedFormula extra) const;
  static KnowledgeBase unite(const KnowledgeBase& a, const KnowledgeBase& b);

  /// The distinct weights occurring in the base, descending.
  std::vector<Degree> weight_levels() const;

  /// Formulae of the items with weight >= alpha.
  std::vector<Formula> cut(Degree alpha) const;

  bool operator==(const KnowledgeBase& o) const = default;

 private:
  std::vector<WeightedFormula> items_;
  AtomUniverse universe_;
};

/// Nec(f) = 1 - max{ pi(w) : w violates f }; 1 when f has no countermodel.
Degree necessity(const PossibilityDistribution& d, const Formula& f);

/// The least specific (pointwise greatest) distribution compatible with every
/// weight constraint of the base: 1 on models of all formulae, otherwise the
/// min of 1 - weight over the violated ones.
PossibilityDistribution least_specific(const KnowledgeBase& kb);

/// 1 - height; 0 exactly when the distribution is normalized.
Degree inconsistency_semantic(const PossibilityDistribution& d);

/// Def-1 plausible conclusion: Nec(f) > Nec(!f) and Nec(f) >= alpha. Both
/// clauses are checked even for normalized distributions.
bool plausible_conclusion(const PossibilityDistribution& d, const Formula& f,
                          Degree alpha);

/// True iff d1 <= d2 pointwise, i.e. d2 is less specific (less informative).
bool leq_specific(const PossibilityDistribution& d1,
                  const PossibilityDistribution& d2);

}  // namespace posslog

#endif  // POSSLOG_POSSDIST_HPP
