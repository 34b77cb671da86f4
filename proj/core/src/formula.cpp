#include "posslog/formula.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>

namespace posslog {

// ---------------------------------------------------------------------------
// AST construction

Formula Formula::truth() {
  static const Formula f(std::make_shared<const Node>(FormulaKind::True));
  return f;
}

Formula Formula::falsity() {
  static const Formula f(std::make_shared<const Node>(FormulaKind::False));
  return f;
}

Formula Formula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw PosslogError("invalid atom name: '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(FormulaKind::Atom, std::move(name)));
}

namespace {
std::shared_ptr<const Formula> box_formula(Formula f) {
  return std::make_shared<const Formula>(std::move(f));
}
}  // namespace

Formula Formula::negation(Formula f) {
  auto node = std::make_shared<Node>(FormulaKind::Not);
  node->left = box_formula(std::move(f));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula a, Formula b) {
  auto node = std::make_shared<Node>(FormulaKind::And);
  node->left = box_formula(std::move(a));
  node->right = box_formula(std::move(b));
  return Formula(std::move(node));
}

Formula Formula::disjunction(Formula a, Formula b) {
  auto node = std::make_shared<Node>(FormulaKind::Or);
  node->left = box_formula(std::move(a));
  node->right = box_formula(std::move(b));
  return Formula(std::move(node));
}

Formula Formula::implication(Formula a, Formula b) {
  auto node = std::make_shared<Node>(FormulaKind::Implies);
  node->left = box_formula(std::move(a));
  node->right = box_formula(std::move(b));
  return Formula(std::move(node));
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (node_->kind != o.node_->kind) return false;
  switch (node_->kind) {
    case FormulaKind::True:
    case FormulaKind::False:
      return true;
    case FormulaKind::Atom:
      return node_->name == o.node_->name;
    case FormulaKind::Not:
      return child() == o.child();
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return left() == o.left() && right() == o.right();
  }
  return false;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case FormulaKind::True:
    case FormulaKind::False:
      return;
    case FormulaKind::Atom:
      out.insert(atom_name());
      return;
    case FormulaKind::Not:
      child().collect_atoms(out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      left().collect_atoms(out);
      right().collect_atoms(out);
      return;
  }
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

// ---------------------------------------------------------------------------
// Printing. Precedence: ! (3) > & (2) > | (1) > -> (0, right-assoc).

namespace {

int precedence_of(FormulaKind k) {
  switch (k) {
    case FormulaKind::Implies: return 0;
    case FormulaKind::Or: return 1;
    case FormulaKind::And: return 2;
    case FormulaKind::Not: return 3;
    default: return 4;
  }
}

// min_prec is the lowest precedence printable at this position without
// parentheses; `&`/`|` associate left, `->` associates right.
void print_formula(const Formula& f, int min_prec, std::string& out) {
  int prec = precedence_of(f.kind());
  bool parens = prec < min_prec;
  switch (f.kind()) {
    case FormulaKind::True: out += "true"; return;
    case FormulaKind::False: out += "false"; return;
    case FormulaKind::Atom: out += f.atom_name(); return;
    case FormulaKind::Not:
      out += '!';
      print_formula(f.child(), prec, out);
      return;
    case FormulaKind::And:
    case FormulaKind::Or: {
      if (parens) out += '(';
      print_formula(f.left(), prec, out);
      out += f.kind() == FormulaKind::And ? " & " : " | ";
      print_formula(f.right(), prec + 1, out);
      if (parens) out += ')';
      return;
    }
    case FormulaKind::Implies: {
      if (parens) out += '(';
      print_formula(f.left(), prec + 1, out);
      out += " -> ";
      print_formula(f.right(), prec, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print_formula(*this, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

bool is_valid_atom_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
  for (char c : name) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return name != "true" && name != "false";
}

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = parse_implies();
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input", pos_);
    }
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (eat("->")) {
      return Formula::implication(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        f = Formula::disjunction(std::move(f), parse_and());
      } else {
        return f;
      }
    }
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        f = Formula::conjunction(std::move(f), parse_unary());
      } else {
        return f;
      }
    }
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '!') {
      ++pos_;
      return Formula::negation(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Formula f = parse_implies();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("expected ')'", pos_);
      }
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "true") return Formula::truth();
      if (name == "false") return Formula::falsity();
      return Formula::atom(std::move(name));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse(); }

// ---------------------------------------------------------------------------
// Universes and worlds

AtomUniverse::AtomUniverse()
    : atoms_(std::make_shared<const std::vector<std::string>>()) {}

AtomUniverse::AtomUniverse(const std::set<std::string>& atoms) {
  for (const auto& a : atoms) {
    if (!is_valid_atom_name(a)) throw PosslogError("invalid atom name: '" + a + "'");
  }
  atoms_ = std::make_shared<const std::vector<std::string>>(atoms.begin(), atoms.end());
}

AtomUniverse AtomUniverse::unite(const AtomUniverse& a, const AtomUniverse& b) {
  if (a == b) return a;
  std::set<std::string> merged(a.atoms().begin(), a.atoms().end());
  merged.insert(b.atoms().begin(), b.atoms().end());
  return AtomUniverse(merged);
}

bool AtomUniverse::contains(std::string_view name) const {
  return index_of(name).has_value();
}

std::optional<std::size_t> AtomUniverse::index_of(std::string_view name) const {
  auto it = std::lower_bound(atoms_->begin(), atoms_->end(), name);
  if (it != atoms_->end() && *it == name) {
    return static_cast<std::size_t>(it - atoms_->begin());
  }
  return std::nullopt;
}

bool AtomUniverse::contains_all(const AtomUniverse& other) const {
  return std::includes(atoms_->begin(), atoms_->end(), other.atoms().begin(),
                       other.atoms().end());
}

std::uint64_t AtomUniverse::world_count() const {
  if (size() > 63) throw PosslogError("universe too large to index worlds");
  return std::uint64_t{1} << size();
}

bool World::value(std::string_view atom) const {
  auto idx = universe_.index_of(atom);
  if (!idx) throw PosslogError("atom '" + std::string(atom) + "' not in universe");
  return (bits_ >> *idx) & 1;
}

std::string World::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (i) out += ' ';
    out += universe_.atoms()[i];
    out += ((bits_ >> i) & 1) ? ":1" : ":0";
  }
  out += '}';
  return out;
}

namespace {
std::atomic<std::size_t> g_world_limit{kDefaultWorldLimit};
}

std::size_t world_limit() { return g_world_limit.load(); }
void set_world_limit(std::size_t limit) { g_world_limit.store(limit); }

std::vector<World> enumerate_worlds(const AtomUniverse& universe) {
  if (universe.size() > world_limit()) {
    throw UniverseTooLarge(universe.size(), world_limit());
  }
  std::vector<World> worlds;
  std::uint64_t count = universe.world_count();
  worlds.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) worlds.emplace_back(universe, i);
  return worlds;
}

bool eval_classical(const Formula& f, const World& w) {
  switch (f.kind()) {
    case FormulaKind::True: return true;
    case FormulaKind::False: return false;
    case FormulaKind::Atom: return w.value(f.atom_name());
    case FormulaKind::Not: return !eval_classical(f.child(), w);
    case FormulaKind::And: return eval_classical(f.left(), w) && eval_classical(f.right(), w);
    case FormulaKind::Or: return eval_classical(f.left(), w) || eval_classical(f.right(), w);
    case FormulaKind::Implies:
      return !eval_classical(f.left(), w) || eval_classical(f.right(), w);
  }
  return false;
}

// ---------------------------------------------------------------------------
// CNF conversion: negation normal form, then distribution. No fresh atoms, so
// the clause set has exactly the models of the input.

bool Clause::tautologous() const {
  for (const auto& a : positive) {
    if (negative.count(a)) return true;
  }
  return false;
}

std::string Clause::to_string() const {
  if (empty()) return "false";
  std::string out;
  bool first = true;
  for (const auto& a : positive) {
    if (!first) out += " | ";
    out += a;
    first = false;
  }
  for (const auto& a : negative) {
    if (!first) out += " | ";
    out += '!';
    out += a;
    first = false;
  }
  return out;
}

namespace {

std::vector<Clause> cnf_of(const Formula& f, bool negated);

std::vector<Clause> cnf_cross(std::vector<Clause> a, std::vector<Clause> b) {
  // Distribute: (A1 & ... ) | (B1 & ...) = cross-product of disjunctions.
  std::vector<Clause> out;
  for (const auto& ca : a) {
    for (const auto& cb : b) {
      Clause c = ca;
      c.positive.insert(cb.positive.begin(), cb.positive.end());
      c.negative.insert(cb.negative.begin(), cb.negative.end());
      if (!c.tautologous()) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Clause> cnf_of(const Formula& f, bool negated) {
  switch (f.kind()) {
    case FormulaKind::True:
      if (!negated) return {};
      return {Clause{}};
    case FormulaKind::False:
      if (!negated) return {Clause{}};
      return {};
    case FormulaKind::Atom: {
      Clause c;
      (negated ? c.negative : c.positive).insert(f.atom_name());
      return {c};
    }
    case FormulaKind::Not:
      return cnf_of(f.child(), !negated);
    case FormulaKind::And: {
      if (!negated) {
        auto a = cnf_of(f.left(), false);
        auto b = cnf_of(f.right(), false);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
      return cnf_cross(cnf_of(f.left(), true), cnf_of(f.right(), true));
    }
    case FormulaKind::Or: {
      if (negated) {
        auto a = cnf_of(f.left(), true);
        auto b = cnf_of(f.right(), true);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
      return cnf_cross(cnf_of(f.left(), false), cnf_of(f.right(), false));
    }
    case FormulaKind::Implies: {
      if (!negated) {
        return cnf_cross(cnf_of(f.left(), true), cnf_of(f.right(), false));
      }
      auto a = cnf_of(f.left(), false);
      auto b = cnf_of(f.right(), true);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
  }
  return {};
}

}  // namespace

std::vector<Clause> to_cnf(const Formula& f) {
  std::vector<Clause> raw = cnf_of(f, false);
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return raw;
}

// ---------------------------------------------------------------------------
// DPLL over interned literals: variable v -> literals +v / -v.

namespace {

struct DpllProblem {
  std::vector<std::vector<int>> clauses;
  int num_vars = 0;
};

DpllProblem intern(const std::vector<Clause>& clauses) {
  DpllProblem p;
  std::map<std::string, int> ids;
  auto id_of = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, p.num_vars + 1);
    if (fresh) ++p.num_vars;
    return it->second;
  };
  p.clauses.reserve(clauses.size());
  for (const auto& c : clauses) {
    if (c.tautologous()) continue;
    std::vector<int> lits;
    lits.reserve(c.positive.size() + c.negative.size());
    for (const auto& a : c.positive) lits.push_back(id_of(a));
    for (const auto& a : c.negative) lits.push_back(-id_of(a));
    p.clauses.push_back(std::move(lits));
  }
  return p;
}

// assignment: 0 unassigned, +1 true, -1 false.
bool dpll(const std::vector<std::vector<int>>& clauses, std::vector<int>& assignment) {
  // Unit propagation to fixpoint.
  std::vector<int> trail;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& clause : clauses) {
      int unassigned = 0;
      int unit = 0;
      bool satisfied = false;
      for (int lit : clause) {
        int var = lit > 0 ? lit : -lit;
        int val = assignment[var];
        if (val == 0) {
          ++unassigned;
          unit = lit;
        } else if ((val > 0) == (lit > 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) {
        for (int lit : trail) assignment[lit > 0 ? lit : -lit] = 0;
        return false;  // conflict
      }
      if (unassigned == 1) {
        assignment[unit > 0 ? unit : -unit] = unit > 0 ? 1 : -1;
        trail.push_back(unit);
        changed = true;
      }
    }
  }
  // Pick a branch variable from the first unresolved clause.
  int branch = 0;
  for (const auto& clause : clauses) {
    bool satisfied = false;
    int candidate = 0;
    for (int lit : clause) {
      int var = lit > 0 ? lit : -lit;
      if (assignment[var] == 0) {
        candidate = var;
      } else if ((assignment[var] > 0) == (lit > 0)) {
        satisfied = true;
        break;
      }
    }
    if (!satisfied && candidate != 0) {
      branch = candidate;
      break;
    }
  }
  if (branch == 0) return true;  // every clause satisfied
  for (int phase : {1, -1}) {
    assignment[branch] = phase;
    if (dpll(clauses, assignment)) return true;
  }
  assignment[branch] = 0;
  for (int lit : trail) assignment[lit > 0 ? lit : -lit] = 0;
  return false;
}

}  // namespace

bool clauses_satisfiable(const std::vector<Clause>& clauses) {
  for (const auto& c : clauses) {
    if (c.empty()) return false;
  }
  DpllProblem p = intern(clauses);
  std::vector<int> assignment(p.num_vars + 1, 0);
  return dpll(p.clauses, assignment);
}

bool entails_classical(const std::vector<Formula>& premises, const Formula& goal) {
  std::vector<Clause> clauses;
  for (const auto& f : premises) {
    auto cs = to_cnf(f);
    clauses.insert(clauses.end(), cs.begin(), cs.end());
  }
  auto negated_goal = to_cnf(Formula::negation(goal));
  clauses.insert(clauses.end(), negated_goal.begin(), negated_goal.end());
  return !clauses_satisfiable(clauses);
}

bool is_tautology(const Formula& f) { return entails_classical({}, f); }

}  // namespace posslog
