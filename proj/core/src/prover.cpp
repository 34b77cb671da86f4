#include "posslog/prover.hpp"

#include <algorithm>

namespace posslog {

std::string WeightedClause::to_string() const {
  return "(" + clause.to_string() + " " + weight.to_compact_string() + ")";
}

std::string ResolutionStep::to_string() const {
  return left.to_string() + " x " + right.to_string() + " / " + pivot +
         " => " + resolvent.to_string();
}

WeightedClause resolve_step(const WeightedClause& c1, const WeightedClause& c2,
                            const std::string& pivot) {
  const Clause* pos = nullptr;
  const Clause* neg = nullptr;
  if (c1.clause.positive.count(pivot) && c2.clause.negative.count(pivot)) {
    pos = &c1.clause;
    neg = &c2.clause;
  } else if (c2.clause.positive.count(pivot) && c1.clause.negative.count(pivot)) {
    pos = &c2.clause;
    neg = &c1.clause;
  } else {
    throw PosslogError("pivot '" + pivot + "' is not complementary in " +
                       c1.clause.to_string() + " and " + c2.clause.to_string());
  }
  Clause resolvent;
  resolvent.positive = pos->positive;
  resolvent.positive.erase(pivot);
  resolvent.positive.insert(neg->positive.begin(), neg->positive.end());
  resolvent.negative = neg->negative;
  resolvent.negative.erase(pivot);
  resolvent.negative.insert(pos->negative.begin(), pos->negative.end());
  return WeightedClause(std::move(resolvent), min(c1.weight, c2.weight));
}

Degree inconsistency_degree(const KnowledgeBase& kb) {
  // The least specific distribution only takes values in {1} u {1 - w_i}, so
  // only occurring weights are candidates; the cuts shrink as alpha grows, so
  // the first unsatisfiable cut while descending is the answer.
  for (const Degree& level : kb.weight_levels()) {
    std::vector<Clause> clauses;
    for (const Formula& f : kb.cut(level)) {
      auto cs = to_cnf(f);
      clauses.insert(clauses.end(), cs.begin(), cs.end());
    }
    if (!clauses_satisfiable(clauses)) return level;
  }
  return Degree::zero();
}

namespace {

bool subsumes(const Clause& a, const Clause& b) {
  return std::includes(b.positive.begin(), b.positive.end(), a.positive.begin(),
                       a.positive.end()) &&
         std::includes(b.negative.begin(), b.negative.end(), a.negative.begin(),
                       a.negative.end());
}

struct TracedClause {
  WeightedClause wc;
  int left_parent = -1;
  int right_parent = -1;
  std::string pivot;
};

/// Saturation with subsumption over the clauses of the given cut. Returns the
/// steps of a refutation, or nullopt if none was found within the effort cap.
std::optional<std::vector<ResolutionStep>> refutation_trace(
    const std::vector<WeightedClause>& input) {
  std::vector<TracedClause> db;
  auto add = [&](TracedClause tc) -> int {
    if (tc.wc.clause.tautologous()) return -1;
    for (const auto& existing : db) {
      if (subsumes(existing.wc.clause, tc.wc.clause) &&
          !(existing.wc.weight < tc.wc.weight)) {
        return -1;
      }
    }
    db.push_back(std::move(tc));
    return static_cast<int>(db.size()) - 1;
  };
  for (const auto& wc : input) add({wc, -1, -1, ""});

  constexpr std::size_t kMaxClauses = 5000;
  int empty_index = -1;
  for (std::size_t i = 0; i < db.size() && empty_index < 0; ++i) {
    if (db[i].wc.clause.empty()) empty_index = static_cast<int>(i);
    for (std::size_t j = 0; j < i && empty_index < 0; ++j) {
      std::vector<std::string> pivots;
      for (const auto& a : db[i].wc.clause.positive) {
        if (db[j].wc.clause.negative.count(a)) pivots.push_back(a);
      }
      for (const auto& a : db[i].wc.clause.negative) {
        if (db[j].wc.clause.positive.count(a)) pivots.push_back(a);
      }
      for (const auto& pivot : pivots) {
        TracedClause tc{resolve_step(db[i].wc, db[j].wc, pivot),
                        static_cast<int>(j), static_cast<int>(i), pivot};
        int idx = add(std::move(tc));
        if (idx >= 0 && db[idx].wc.clause.empty()) {
          empty_index = idx;
          break;
        }
        if (db.size() > kMaxClauses) return std::nullopt;
      }
    }
  }
  if (empty_index < 0) return std::nullopt;

  // Unwind the derivation of the empty clause, parents before children.
  std::vector<ResolutionStep> steps;
  std::vector<bool> emitted(db.size(), false);
  auto emit = [&](auto&& self, int idx) -> void {
    const TracedClause& tc = db[static_cast<std::size_t>(idx)];
    if (tc.left_parent < 0 || emitted[static_cast<std::size_t>(idx)]) return;
    emitted[static_cast<std::size_t>(idx)] = true;
    self(self, tc.left_parent);
    self(self, tc.right_parent);
    steps.push_back({db[static_cast<std::size_t>(tc.left_parent)].wc,
                     db[static_cast<std::size_t>(tc.right_parent)].wc, tc.pivot,
                     tc.wc});
  };
  emit(emit, empty_index);
  return steps;
}

}  // namespace

ProofResult prove_pref(const KnowledgeBase& kb, const Formula& goal,
                       bool want_trace) {
  Degree inc_base = inconsistency_degree(kb);
  KnowledgeBase refutation_base =
      kb.with(WeightedFormula(Formula::negation(goal), Degree::one()));
  Degree best = inconsistency_degree(refutation_base);

  ProofResult result;
  result.inc_base = inc_base;
  result.degree = best;
  result.derivable = inc_base < best;
  if (result.derivable && want_trace) {
    std::vector<WeightedClause> cut_clauses;
    for (const auto& wf : refutation_base.items()) {
      if (wf.weight < best) continue;
      // Nec(A & B) >= a splits into Nec(A) >= a and Nec(B) >= a, so each CNF
      // clause inherits the formula's weight unchanged.
      for (auto& c : to_cnf(wf.formula)) {
        cut_clauses.emplace_back(std::move(c), wf.weight);
      }
    }
    result.trace = refutation_trace(cut_clauses);
  }
  return result;
}

}  // namespace posslog
