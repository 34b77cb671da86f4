#ifndef POSSLOG_FORMULA_HPP
#define POSSLOG_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "posslog/errors.hpp"

namespace posslog {

enum class FormulaKind { True, False, Atom, Not, And, Or, Implies };

/// Immutable classical propositional formula. Copies share structure; equality
/// is structural. Atom names match [A-Za-z_][A-Za-z0-9_]*.
class Formula {
 public:
  Formula() : Formula(truth()) {}

  static Formula truth();
  static Formula falsity();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);

  FormulaKind kind() const { return node_->kind; }
  const std::string& atom_name() const { return node_->name; }
  const Formula& left() const { return *node_->left; }
  const Formula& right() const { return *node_->right; }
  /// Operand of a negation.
  const Formula& child() const { return *node_->left; }

  bool operator==(const Formula& o) const;

  void collect_atoms(std::set<std::string>& out) const;
  std::set<std::string> atoms() const;

  /// ASCII rendering with minimal parentheses; parse(to_string()) == *this.
  std::string to_string() const;

 private:
  struct Node {
    FormulaKind kind;
    std::string name;                           // Atom only
    std::shared_ptr<const Formula> left, right; // Not uses left only
    Node(FormulaKind k, std::string n) : kind(k), name(std::move(n)) {}
    explicit Node(FormulaKind k) : kind(k) {}
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: `!` > `&` > `|` > `->` (right-associative), identifiers,
/// `true`/`false`, parentheses. Throws ParseError with a byte position.
Formula parse_formula(std::string_view text);

bool is_valid_atom_name(std::string_view name);

// ---------------------------------------------------------------------------
// Worlds

/// An immutable, sorted set of atom names; the domain that worlds and
/// possibility distributions range over. Cheap to copy.
class AtomUniverse {
 public:
  AtomUniverse();
  explicit AtomUniverse(const std::set<std::string>& atoms);
  static AtomUniverse unite(const AtomUniverse& a, const AtomUniverse& b);

  std::size_t size() const { return atoms_->size(); }
  bool empty() const { return atoms_->empty(); }
  const std::vector<std::string>& atoms() const { return *atoms_; }
  bool contains(std::string_view name) const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains_all(const AtomUniverse& other) const;

  /// 2^size(), the number of worlds. Requires size() <= 63.
  std::uint64_t world_count() const;

  bool operator==(const AtomUniverse& o) const { return *atoms_ == *o.atoms_; }

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

/// A total valuation over a universe. World i of a universe assigns atom j
/// (in sorted order) the truth value of bit j of i, so enumeration order is
/// deterministic.
class World {
 public:
  World(AtomUniverse universe, std::uint64_t bits)
      : universe_(std::move(universe)), bits_(bits) {}

  const AtomUniverse& universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }

  /// Throws PosslogError on atoms outside the universe.
  bool value(std::string_view atom) const;

  std::string to_string() const;  // e.g. "{A:1 B:0}"

 private:
  AtomUniverse universe_;
  std::uint64_t bits_;
};

/// Process-wide cap on world enumeration (default 22 atoms).
std::size_t world_limit();
void set_world_limit(std::size_t limit);
inline constexpr std::size_t kDefaultWorldLimit = 22;

/// All 2^n worlds in counting order. Throws UniverseTooLarge beyond the limit.
std::vector<World> enumerate_worlds(const AtomUniverse& universe);

/// Standard truth-table semantics; throws PosslogError on unknown atoms.
bool eval_classical(const Formula& f, const World& w);

// ---------------------------------------------------------------------------
// Clausal form and satisfiability

/// A disjunction of literals, stored as positive / negative atom-name sets.
struct Clause {
  std::set<std::string> positive;
  std::set<std::string> negative;

  bool empty() const { return positive.empty() && negative.empty(); }
  /// True when some atom occurs with both signs.
  bool tautologous() const;

  bool operator==(const Clause& o) const = default;
  auto operator<=>(const Clause& o) const = default;

  std::string to_string() const;  // "A | !B"; the empty clause prints "false"
};

/// Equivalence-preserving distributive CNF: no auxiliary atoms, tautologous
/// clauses dropped, duplicates merged. True yields {}, False yields {{}}.
std::vector<Clause> to_cnf(const Formula& f);

/// DPLL (unit propagation + splitting) over a clause set.
bool clauses_satisfiable(const std::vector<Clause>& clauses);

/// True iff premises entail goal classically, decided by refutation over
/// clause form.
bool entails_classical(const std::vector<Formula>& premises, const Formula& goal);

/// True iff f holds in every world (decided by refutation, not enumeration).
bool is_tautology(const Formula& f);

}  // namespace posslog

#endif  // POSSLOG_FORMULA_HPP
