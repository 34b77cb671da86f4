#include "posslog/possdist.hpp"

#include <algorithm>

namespace posslog {

PossibilityDistribution::PossibilityDistribution(AtomUniverse universe,
                                                 std::vector<Degree> pi)
    : universe_(std::move(universe)), pi_(std::move(pi)) {
  if (pi_.size() != universe_.world_count()) {
    throw PosslogError("distribution is not total over its universe");
  }
}

PossibilityDistribution PossibilityDistribution::constant(
    const AtomUniverse& universe, Degree d) {
  if (universe.size() > world_limit()) {
    throw UniverseTooLarge(universe.size(), world_limit());
  }
  return PossibilityDistribution(universe,
                                 std::vector<Degree>(universe.world_count(), d));
}

Degree PossibilityDistribution::at(const World& w) const {
  if (!(w.universe() == universe_)) {
    throw PosslogError("world universe does not match distribution universe");
  }
  return pi_.at(w.bits());
}

Degree PossibilityDistribution::height() const {
  Degree h = Degree::zero();
  for (const auto& d : pi_) h = max(h, d);
  return h;
}

PossibilityDistribution PossibilityDistribution::extended_to(
    const AtomUniverse& larger) const {
  if (larger == universe_) return *this;
  if (!larger.contains_all(universe_)) {
    throw PosslogError("cannot extend distribution: universe is not a superset");
  }
  if (larger.size() > world_limit()) {
    throw UniverseTooLarge(larger.size(), world_limit());
  }
  // Map each small-universe atom index to its bit in the larger universe.
  std::vector<std::size_t> bit_of(universe_.size());
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    bit_of[i] = *larger.index_of(universe_.atoms()[i]);
  }
  std::vector<Degree> pi(larger.world_count());
  for (std::uint64_t w = 0; w < larger.world_count(); ++w) {
    std::uint64_t restricted = 0;
    for (std::size_t i = 0; i < bit_of.size(); ++i) {
      restricted |= ((w >> bit_of[i]) & 1) << i;
    }
    pi[w] = pi_[restricted];
  }
  return PossibilityDistribution(larger, std::move(pi));
}

std::string WeightedFormula::to_string() const {
  return "(" + formula.to_string() + " " + weight.to_compact_string() + ")";
}

KnowledgeBase::KnowledgeBase(std::vector<WeightedFormula> items,
                             const AtomUniverse& declared)
    : items_(std::move(items)) {
  std::set<std::string> atoms(declared.atoms().begin(), declared.atoms().end());
  for (const auto& wf : items_) wf.formula.collect_atoms(atoms);
  universe_ = AtomUniverse(atoms);
}

KnowledgeBase KnowledgeBase::with_universe(const AtomUniverse& extra) const {
  KnowledgeBase kb = *this;
  kb.universe_ = AtomUniverse::unite(universe_, extra);
  return kb;
}

KnowledgeBase KnowledgeBase::with(WeightedFormula extra) const {
  std::vector<WeightedFormula> items = items_;
  items.push_back(std::move(extra));
  return KnowledgeBase(std::move(items), universe_);
}

KnowledgeBase KnowledgeBase::unite(const KnowledgeBase& a, const KnowledgeBase& b) {
  std::vector<WeightedFormula> items = a.items_;
  items.insert(items.end(), b.items_.begin(), b.items_.end());
  return KnowledgeBase(std::move(items),
                       AtomUniverse::unite(a.universe_, b.universe_));
}

std::vector<Degree> KnowledgeBase::weight_levels() const {
  std::vector<Degree> levels;
  for (const auto& wf : items_) levels.push_back(wf.weight);
  std::sort(levels.begin(), levels.end(),
            [](const Degree& a, const Degree& b) { return b < a; });
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

std::vector<Formula> KnowledgeBase::cut(Degree alpha) const {
  std::vector<Formula> out;
  for (const auto& wf : items_) {
    if (!(wf.weight < alpha)) out.push_back(wf.formula);
  }
  return out;
}

Degree necessity(const PossibilityDistribution& d, const Formula& f) {
  for (const auto& a : f.atoms()) {
    if (!d.universe().contains(a)) {
      throw PosslogError("atom '" + a + "' not in distribution universe");
    }
  }
  Degree worst = Degree::zero();  // max over countermodels; empty max is 0
  for (const auto& w : enumerate_worlds(d.universe())) {
    if (!eval_classical(f, w)) worst = max(worst, d.at_index(w.bits()));
  }
  return worst.complement();
}

PossibilityDistribution least_specific(const KnowledgeBase& kb) {
  const AtomUniverse& u = kb.universe();
  if (u.size() > world_limit()) throw UniverseTooLarge(u.size(), world_limit());
  std::vector<Degree> pi(u.world_count(), Degree::one());
  for (const auto& wf : kb.items()) {
    Degree penalty = wf.weight.complement();
    for (const auto& w : enumerate_worlds(u)) {
      if (!eval_classical(wf.formula, w)) {
        pi[w.bits()] = min(pi[w.bits()], penalty);
      }
    }
  }
  return PossibilityDistribution(u, std::move(pi));
}

Degree inconsistency_semantic(const PossibilityDistribution& d) {
  return d.height().complement();
}

bool plausible_conclusion(const PossibilityDistribution& d, const Formula& f,
                          Degree alpha) {
  Degree pro = necessity(d, f);
  Degree con = necessity(d, Formula::negation(f));
  return con < pro && !(pro < alpha);
}

bool leq_specific(const PossibilityDistribution& d1,
                  const PossibilityDistribution& d2) {
  if (!(d1.universe() == d2.universe())) {
    throw PosslogError("cannot compare distributions over different universes");
  }
  for (std::size_t i = 0; i < d1.world_count(); ++i) {
    if (d2.at_index(i) < d1.at_index(i)) return false;
  }
  return true;
}

}  // namespace posslog
