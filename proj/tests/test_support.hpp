#ifndef POSSLOG_TESTS_SUPPORT_HPP
#define POSSLOG_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "posslog/formula.hpp"
#include "posslog/possdist.hpp"

#ifndef POSSLOG_SOURCE_DIR
#define POSSLOG_SOURCE_DIR "."
#endif

namespace posslog::testing {

inline std::string corpus_path(const std::string& rel) {
  return std::string(POSSLOG_SOURCE_DIR) + "/corpus/" + rel;
}

inline Degree deg(const std::string& text) {
  auto d = Degree::parse(text);
  if (!d) throw PosslogError("bad test degree literal: " + text);
  return *d;
}

inline Degree deg(int num, int den) { return Degree(num, den); }

/// Random classical formula over the first `num_atoms` names of a fixed pool.
inline Formula random_formula(std::mt19937& rng, int num_atoms, int depth) {
  static const std::vector<std::string> pool = {"A", "B", "C", "D", "E",
                                                "F", "G", "H", "I", "J"};
  std::uniform_int_distribution<int> atom_pick(0, num_atoms - 1);
  if (depth <= 0) {
    return Formula::atom(pool[static_cast<std::size_t>(atom_pick(rng))]);
  }
  std::uniform_int_distribution<int> kind_pick(0, 5);
  switch (kind_pick(rng)) {
    case 0:
      return Formula::atom(pool[static_cast<std::size_t>(atom_pick(rng))]);
    case 1:
      return Formula::negation(random_formula(rng, num_atoms, depth - 1));
    case 2:
      return Formula::conjunction(random_formula(rng, num_atoms, depth - 1),
                                  random_formula(rng, num_atoms, depth - 1));
    case 3:
      return Formula::disjunction(random_formula(rng, num_atoms, depth - 1),
                                  random_formula(rng, num_atoms, depth - 1));
    case 4:
      return Formula::implication(random_formula(rng, num_atoms, depth - 1),
                                  random_formula(rng, num_atoms, depth - 1));
    default:
      return Formula::atom(pool[static_cast<std::size_t>(atom_pick(rng))]);
  }
}

/// Random weight from {1/12, ..., 12/12}; never zero.
inline Degree random_weight(std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(1, 12);
  return Degree(pick(rng), 12);
}

inline KnowledgeBase random_kb(std::mt19937& rng, int num_atoms, int max_formulas,
                               int depth = 3) {
  std::uniform_int_distribution<int> count_pick(0, max_formulas);
  int count = count_pick(rng);
  std::vector<WeightedFormula> items;
  for (int i = 0; i < count; ++i) {
    items.emplace_back(random_formula(rng, num_atoms, depth), random_weight(rng));
  }
  return KnowledgeBase(std::move(items));
}

/// Truth-table entailment, independent of the clause-form search path.
inline bool tt_entails(const std::vector<Formula>& premises, const Formula& goal) {
  std::set<std::string> atoms = goal.atoms();
  for (const auto& p : premises) p.collect_atoms(atoms);
  AtomUniverse u((atoms));
  for (const auto& w : enumerate_worlds(u)) {
    bool all = true;
    for (const auto& p : premises) {
      if (!eval_classical(p, w)) {
        all = false;
        break;
      }
    }
    if (all && !eval_classical(goal, w)) return false;
  }
  return true;
}

/// The 11-point rational grid {0, 1/10, ..., 1}.
inline std::vector<Degree> degree_grid() {
  std::vector<Degree> grid;
  for (int i = 0; i <= 10; ++i) grid.push_back(Degree(i, 10));
  return grid;
}

}  // namespace posslog::testing

#endif  // POSSLOG_TESTS_SUPPORT_HPP
