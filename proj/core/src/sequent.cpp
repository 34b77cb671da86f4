#include "posslog/sequent.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace posslog {

namespace {

using FormulaList = std::vector<LplFormula>;

std::optional<FormulaList> remove_one(const FormulaList& list, const LplFormula& f) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i] == f) {
      FormulaList rest = list;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      return rest;
    }
  }
  return std::nullopt;
}

bool multiset_equal(const FormulaList& a, const FormulaList& b) {
  if (a.size() != b.size()) return false;
  FormulaList rest = b;
  for (const auto& f : a) {
    bool found = false;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (rest[i] == f) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

FormulaList multiset_union(FormulaList a, const FormulaList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FormulaList with_extra(FormulaList a, const LplFormula& f) {
  a.push_back(f);
  return a;
}

bool is_ground_const(const LplFormula& f, bool want_one) {
  if (f.kind() != LplKind::Const) return false;
  auto v = f.constant_term().as_constant();
  return v && (want_one ? v->is_one() : v->is_zero());
}

/// A formula made of graded constants only (Const, or Tensor / Arrow-to-0 over
/// them) viewed as a degree term; nullopt for anything containing atoms.
std::optional<DegreeTerm> as_degree_term(const LplFormula& f) {
  switch (f.kind()) {
    case LplKind::Const:
      return f.constant_term();
    case LplKind::Tensor: {
      auto a = as_degree_term(f.left());
      auto b = as_degree_term(f.right());
      if (a && b) return DegreeTerm::times(*a, *b);
      return std::nullopt;
    }
    case LplKind::OrMax: {
      auto a = as_degree_term(f.left());
      auto b = as_degree_term(f.right());
      if (a && b) return DegreeTerm::join(*a, *b);
      return std::nullopt;
    }
    case LplKind::Arrow: {
      auto a = as_degree_term(f.left());
      auto b = as_degree_term(f.right());
      if (a && b) return DegreeTerm::residuum(*a, *b);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

bool is_simple_const(const LplFormula& f) {
  return f.kind() == LplKind::Const &&
         (f.constant_term().kind() == TermKind::Const ||
          f.constant_term().kind() == TermKind::Var);
}

}  // namespace

bool Sequent::operator==(const Sequent& o) const {
  return succedent == o.succedent && multiset_equal(antecedent, o.antecedent);
}

std::string Sequent::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < antecedent.size(); ++i) {
    if (i) out += ", ";
    out += antecedent[i].to_string();
  }
  if (!antecedent.empty()) out += ' ';
  out += "|- ";
  out += succedent.to_string();
  return out;
}

Derivation Derivation::substitute(const std::map<std::string, Degree>& bindings) const {
  Derivation out;
  out.rule = rule;
  out.side = side;
  out.conclusion.succedent = conclusion.succedent.substitute(bindings);
  for (const auto& f : conclusion.antecedent) {
    out.conclusion.antecedent.push_back(f.substitute(bindings));
  }
  for (const auto& p : premises) out.premises.push_back(p.substitute(bindings));
  return out;
}

// ---------------------------------------------------------------------------
// Rule checking

namespace {

class Checker {
 public:
  explicit Checker(const NormFamily& n) : norm_(n) {}

  Verdict run(const Derivation& root) {
    check(root, "root");
    verdict_.valid = verdict_.failures.empty();
    return std::move(verdict_);
  }

 private:
  void fail(const std::string& path, std::string reason) {
    verdict_.failures.push_back({path, std::move(reason)});
  }

  void emit(DegreeTerm lhs, DegreeTerm rhs) {
    Constraint c{std::move(lhs), std::move(rhs)};
    std::string key = c.to_string();
    if (seen_constraints_.insert(key).second) {
      verdict_.constraints.push_back(std::move(c));
    }
  }

  /// Checks a fully numeric leaf: validates ground instances against the
  /// norm, emits a constraint when degree variables are involved.
  void numeric_leaf(const std::string& path, const DegreeTerm& lhs,
                    const DegreeTerm& rhs) {
    if (lhs.is_ground() && rhs.is_ground()) {
      Degree l = lhs.eval({}, norm_);
      Degree r = rhs.eval({}, norm_);
      if (r < l) {
        fail(path, "numeric leaf does not hold: " + l.to_string() + " <= " +
                       r.to_string() + " is false");
      }
      return;
    }
    emit(lhs, rhs);
  }

  void check(const Derivation& d, const std::string& path) {
    for (std::size_t i = 0; i < d.premises.size(); ++i) {
      check(d.premises[i], path + "." + std::to_string(i));
    }
    check_node(d, path);
  }

  bool arity(const Derivation& d, const std::string& path, std::size_t lo,
             std::size_t hi) {
    if (d.premises.size() < lo || d.premises.size() > hi) {
      fail(path, "rule '" + d.rule + "' expects " + std::to_string(lo) +
                     (hi != lo ? "-" + std::to_string(hi) : "") +
                     " premise(s), got " + std::to_string(d.premises.size()));
      return false;
    }
    return true;
  }

  void check_node(const Derivation& d, const std::string& path);

  const NormFamily& norm_;
  Verdict verdict_;
  std::set<std::string> seen_constraints_;
};

void Checker::check_node(const Derivation& d, const std::string& path) {
  const Sequent& c = d.conclusion;
  const auto& rule = d.rule;
  auto mismatch = [&] {
    fail(path, "conclusion does not instantiate rule '" + rule + "': " +
                   c.to_string());
  };

  if (rule == "id") {
    if (!arity(d, path, 0, 0)) return;
    if (c.antecedent.size() == 1 && c.antecedent[0] == c.succedent) return;
    mismatch();
    return;
  }

  if (rule == "s'" || rule == "tensor-def" || rule == "neg-def") {
    if (!arity(d, path, 0, 0)) return;
    if (c.antecedent.size() != 1) {
      mismatch();
      return;
    }
    const LplFormula& lhs_f = c.antecedent[0];
    const LplFormula& rhs_f = c.succedent;
    bool shape_ok = false;
    if (rule == "s'") {
      shape_ok = is_simple_const(lhs_f) && is_simple_const(rhs_f);
    } else if (rule == "tensor-def") {
      auto tensor_side = [&](const LplFormula& f) {
        return f.kind() == LplKind::Tensor && is_simple_const(f.left()) &&
               is_simple_const(f.right());
      };
      shape_ok = (tensor_side(lhs_f) && is_simple_const(rhs_f)) ||
                 (is_simple_const(lhs_f) && tensor_side(rhs_f));
    } else {  // neg-def
      auto neg_side = [&](const LplFormula& f) {
        return f.kind() == LplKind::Arrow && is_simple_const(f.left()) &&
               is_ground_const(f.right(), /*want_one=*/false);
      };
      shape_ok = (neg_side(lhs_f) && is_simple_const(rhs_f)) ||
                 (is_simple_const(lhs_f) && neg_side(rhs_f));
    }
    auto lhs = as_degree_term(lhs_f);
    auto rhs = as_degree_term(rhs_f);
    if (!shape_ok || !lhs || !rhs) {
      mismatch();
      return;
    }
    numeric_leaf(path, *lhs, *rhs);
    return;
  }

  if (rule == "zeroL") {
    if (!arity(d, path, 0, 0)) return;
    for (const auto& f : c.antecedent) {
      if (is_ground_const(f, /*want_one=*/false)) return;
    }
    fail(path, "zeroL needs a literal 0 in the antecedent");
    return;
  }

  if (rule == "dneg") {
    if (!arity(d, path, 0, 0)) return;
    if (c.antecedent.size() == 1 &&
        c.antecedent[0].kind() == LplKind::Arrow &&
        is_ground_const(c.antecedent[0].right(), false) &&
        c.antecedent[0].left().is_negation_of(c.succedent)) {
      if (!c.succedent.is_l1()) {
        fail(path, "dneg side condition: formula is not in the classical fragment");
      }
      return;
    }
    mismatch();
    return;
  }

  if (rule == "tensor-and-distr" || rule == "plus-and-distr") {
    if (!arity(d, path, 0, 0)) return;
    bool tensor = rule == "tensor-and-distr";
    LplKind inner = tensor ? LplKind::Tensor : LplKind::OrMax;
    if (c.antecedent.size() == 1 && c.antecedent[0].kind() == LplKind::AndMin) {
      const LplFormula& l = c.antecedent[0].left();
      const LplFormula& r = c.antecedent[0].right();
      if (l.kind() == inner && r.kind() == inner && l.right() == r.right()) {
        LplFormula expected_inner = LplFormula::and_min(l.left(), r.left());
        LplFormula expected =
            tensor ? LplFormula::tensor(expected_inner, l.right())
                   : LplFormula::or_max(expected_inner, l.right());
        if (c.succedent == expected) return;
      }
    }
    mismatch();
    return;
  }

  if (rule == "exL") {
    if (!arity(d, path, 1, 1)) return;
    if (d.premises[0].conclusion == c) return;
    mismatch();
    return;
  }

  if (rule == "weL") {
    if (!arity(d, path, 1, 1)) return;
    const Sequent& p = d.premises[0].conclusion;
    if (p.succedent == c.succedent && c.antecedent.size() == p.antecedent.size() + 1) {
      for (const auto& f : c.antecedent) {
        auto rest = remove_one(c.antecedent, f);
        if (rest && multiset_equal(*rest, p.antecedent)) return;
      }
    }
    mismatch();
    return;
  }

  if (rule == "oneL") {
    if (!arity(d, path, 1, 1)) return;
    const Sequent& p = d.premises[0].conclusion;
    if (p.succedent == c.succedent) {
      for (const auto& f : c.antecedent) {
        if (!is_ground_const(f, /*want_one=*/true)) continue;
        auto rest = remove_one(c.antecedent, f);
        if (rest && multiset_equal(*rest, p.antecedent)) return;
      }
    }
    mismatch();
    return;
  }

  if (rule == "cut") {
    if (!arity(d, path, 2, 2)) return;
    for (int order = 0; order < 2; ++order) {
      const Sequent& first = d.premises[order].conclusion;
      const Sequent& second = d.premises[1 - order].conclusion;
      if (!(second.succedent == c.succedent)) continue;
      auto rest = remove_one(second.antecedent, first.succedent);
      if (!rest) continue;
      if (multiset_equal(multiset_union(first.antecedent, *rest), c.antecedent)) {
        return;
      }
    }
    mismatch();
    return;
  }

  if (rule == "l1con") {
    if (!arity(d, path, 2, 2)) return;
    for (int order = 0; order < 2; ++order) {
      const Sequent& main = d.premises[order].conclusion;     // G, A, L |- B
      const Sequent& aux = d.premises[1 - order].conclusion;  // D, A |- L
      const LplFormula& l = aux.succedent;
      if (!(main.succedent == c.succedent)) continue;
      if (!l.is_l1()) continue;
      for (const auto& a : aux.antecedent) {
        auto delta = remove_one(aux.antecedent, a);
        auto gamma_l = remove_one(main.antecedent, a);
        if (!delta || !gamma_l) continue;
        auto gamma = remove_one(*gamma_l, l);
        if (!gamma) continue;
        if (multiset_equal(with_extra(multiset_union(*gamma, *delta), a),
                           c.antecedent)) {
          return;
        }
      }
    }
    // Distinguish a side-condition failure for clearer reports.
    for (int order = 0; order < 2; ++order) {
      if (!d.premises[1 - order].conclusion.succedent.is_l1()) continue;
      mismatch();
      return;
    }
    fail(path, "l1con side condition: contracted formula is not in the classical fragment");
    return;
  }

  if (rule == "andL") {
    if (!arity(d, path, 1, 2)) return;
    for (const auto& f : c.antecedent) {
      if (f.kind() != LplKind::AndMin) continue;
      auto rest = remove_one(c.antecedent, f);
      if (!rest) continue;
      if (d.premises.size() == 1) {
        const Sequent& p = d.premises[0].conclusion;
        if (!(p.succedent == c.succedent)) continue;
        if (multiset_equal(with_extra(*rest, f.left()), p.antecedent) ||
            multiset_equal(with_extra(*rest, f.right()), p.antecedent)) {
          return;
        }
      } else {
        const Sequent& p0 = d.premises[0].conclusion;
        const Sequent& p1 = d.premises[1].conclusion;
        if (!(p0.succedent == c.succedent) || !(p1.succedent == c.succedent)) continue;
        bool straight = multiset_equal(with_extra(*rest, f.left()), p0.antecedent) &&
                        multiset_equal(with_extra(*rest, f.right()), p1.antecedent);
        bool swapped = multiset_equal(with_extra(*rest, f.left()), p1.antecedent) &&
                       multiset_equal(with_extra(*rest, f.right()), p0.antecedent);
        if (straight || swapped) return;
      }
    }
    mismatch();
    return;
  }

  if (rule == "andR") {
    if (!arity(d, path, 2, 2)) return;
    if (c.succedent.kind() == LplKind::AndMin) {
      const Sequent& p0 = d.premises[0].conclusion;
      const Sequent& p1 = d.premises[1].conclusion;
      if (multiset_equal(p0.antecedent, c.antecedent) &&
          multiset_equal(p1.antecedent, c.antecedent)) {
        bool straight = p0.succedent == c.succedent.left() &&
                        p1.succedent == c.succedent.right();
        bool swapped = p1.succedent == c.succedent.left() &&
                       p0.succedent == c.succedent.right();
        if (straight || swapped) return;
      }
    }
    mismatch();
    return;
  }

  if (rule == "plusL") {
    if (!arity(d, path, 2, 2)) return;
    for (const auto& f : c.antecedent) {
      if (f.kind() != LplKind::OrMax) continue;
      auto rest = remove_one(c.antecedent, f);
      if (!rest) continue;
      const Sequent& p0 = d.premises[0].conclusion;
      const Sequent& p1 = d.premises[1].conclusion;
      if (!(p0.succedent == c.succedent) || !(p1.succedent == c.succedent)) continue;
      FormulaList with_l = with_extra(*rest, f.left());
      FormulaList with_r = with_extra(*rest, f.right());
      bool straight = multiset_equal(with_l, p0.antecedent) &&
                      multiset_equal(with_r, p1.antecedent);
      bool swapped = multiset_equal(with_l, p1.antecedent) &&
                     multiset_equal(with_r, p0.antecedent);
      if (straight || swapped) return;
    }
    mismatch();
    return;
  }

  if (rule == "plusR") {
    if (!arity(d, path, 1, 2)) return;
    if (c.succedent.kind() == LplKind::OrMax) {
      if (d.premises.size() == 1) {
        const Sequent& p = d.premises[0].conclusion;
        if (multiset_equal(p.antecedent, c.antecedent) &&
            (p.succedent == c.succedent.left() || p.succedent == c.succedent.right())) {
          return;
        }
      } else {
        const Sequent& p0 = d.premises[0].conclusion;
        const Sequent& p1 = d.premises[1].conclusion;
        if (multiset_equal(p0.antecedent, c.antecedent) &&
            multiset_equal(p1.antecedent, c.antecedent)) {
          bool straight = p0.succedent == c.succedent.left() &&
                          p1.succedent == c.succedent.right();
          bool swapped = p1.succedent == c.succedent.left() &&
                         p0.succedent == c.succedent.right();
          if (straight || swapped) return;
        }
      }
    }
    mismatch();
    return;
  }

  if (rule == "tensorL") {
    if (!arity(d, path, 1, 1)) return;
    const Sequent& p = d.premises[0].conclusion;
    if (p.succedent == c.succedent) {
      for (const auto& f : c.antecedent) {
        if (f.kind() != LplKind::Tensor) continue;
        auto rest = remove_one(c.antecedent, f);
        if (rest &&
            multiset_equal(with_extra(with_extra(*rest, f.left()), f.right()),
                           p.antecedent)) {
          return;
        }
      }
    }
    mismatch();
    return;
  }

  if (rule == "tensorR") {
    if (!arity(d, path, 2, 2)) return;
    if (c.succedent.kind() == LplKind::Tensor) {
      for (int order = 0; order < 2; ++order) {
        const Sequent& pl = d.premises[order].conclusion;
        const Sequent& pr = d.premises[1 - order].conclusion;
        if (pl.succedent == c.succedent.left() && pr.succedent == c.succedent.right() &&
            multiset_equal(multiset_union(pl.antecedent, pr.antecedent),
                           c.antecedent)) {
          return;
        }
      }
    }
    mismatch();
    return;
  }

  if (rule == "arrowL") {
    if (!arity(d, path, 2, 2)) return;
    for (const auto& f : c.antecedent) {
      if (f.kind() != LplKind::Arrow) continue;
      auto rest = remove_one(c.antecedent, f);
      if (!rest) continue;
      for (int order = 0; order < 2; ++order) {
        const Sequent& parg = d.premises[order].conclusion;     // G |- A
        const Sequent& pres = d.premises[1 - order].conclusion;  // D, B |- C
        if (!(parg.succedent == f.left())) continue;
        if (!(pres.succedent == c.succedent)) continue;
        auto delta = remove_one(pres.antecedent, f.right());
        if (!delta) continue;
        if (multiset_equal(multiset_union(parg.antecedent, *delta), *rest)) return;
      }
    }
    mismatch();
    return;
  }

  if (rule == "arrowR") {
    if (!arity(d, path, 1, 1)) return;
    if (c.succedent.kind() == LplKind::Arrow) {
      const Sequent& p = d.premises[0].conclusion;
      if (p.succedent == c.succedent.right()) {
        auto gamma = remove_one(p.antecedent, c.succedent.left());
        if (gamma && multiset_equal(*gamma, c.antecedent)) return;
      }
    }
    mismatch();
    return;
  }

  static const std::set<std::string> kOutOfScope = {
      "forallL", "forallR", "existsL", "existsR", "tensor-forall-distr", "cd", "CD"};
  if (kOutOfScope.count(rule)) {
    fail(path, "out-of-scope rule '" + rule + "' (first-order fragment)");
    return;
  }
  fail(path, "unknown rule '" + rule + "'");
}

}  // namespace

Verdict check_derivation(const Derivation& d, const NormFamily& n) {
  return Checker(n).run(d);
}

std::vector<Constraint> extract_constraints(const Derivation& d, const NormFamily& n) {
  Verdict v = check_derivation(d, n);
  if (!v.valid) {
    std::string msg = "derivation does not check";
    if (!v.failures.empty()) {
      msg += ": " + v.failures.front().path + ": " + v.failures.front().reason;
    }
    throw PosslogError(msg);
  }
  return std::move(v.constraints);
}

// ---------------------------------------------------------------------------
// Constraint solving

std::map<std::string, Degree> solve_min_assignment(
    const std::vector<Constraint>& constraints, const std::string& target,
    const std::map<std::string, Degree>& bindings, const NormFamily& n) {
  if (bindings.count(target)) {
    throw PosslogError("target variable '" + target + "' is already bound");
  }
  std::map<std::string, std::vector<DegreeTerm>> lower_bounds;
  std::set<std::string> referenced;
  for (const auto& c : constraints) {
    DegreeTerm lhs = c.lhs.substitute(bindings);
    DegreeTerm rhs = c.rhs.substitute(bindings);
    if (lhs.is_ground() && rhs.is_ground()) {
      if (rhs.eval({}, n) < lhs.eval({}, n)) {
        throw PosslogError("ground constraint violated: " + c.to_string());
      }
      continue;
    }
    if (rhs.kind() == TermKind::Var) {
      lower_bounds[rhs.var_name()].push_back(lhs);
      lhs.collect_vars(referenced);
      continue;
    }
    throw PosslogError(
        "non-stratified constraint (variable not alone on the right): " +
        c.to_string());
  }
  referenced.insert(target);
  for (const auto& v : referenced) {
    if (!lower_bounds.count(v)) {
      throw PosslogError("variable '" + v + "' has no lower bound");
    }
  }

  // Dependency order, dependencies first.
  std::map<std::string, std::set<std::string>> deps;
  for (const auto& [v, terms] : lower_bounds) {
    std::set<std::string> vs;
    for (const auto& t : terms) t.collect_vars(vs);
    deps[v] = std::move(vs);
  }
  std::vector<std::string> order;
  std::set<std::string> done, in_progress;
  auto visit = [&](auto&& self, const std::string& v) -> void {
    if (done.count(v)) return;
    if (!in_progress.insert(v).second) {
      throw PosslogError("cyclic dependency through variable '" + v + "'");
    }
    auto it = deps.find(v);
    if (it == deps.end()) throw PosslogError("variable '" + v + "' has no lower bound");
    for (const auto& w : it->second) self(self, w);
    in_progress.erase(v);
    done.insert(v);
    order.push_back(v);
  };
  for (const auto& [v, _] : lower_bounds) visit(visit, v);

  // Every operator is monotone, so taking the join of the lower bounds in
  // dependency order yields the least solution.
  std::map<std::string, Degree> assignment = bindings;
  for (const auto& v : order) {
    Degree value = Degree::zero();
    for (const auto& t : lower_bounds[v]) {
      value = max(value, t.eval(assignment, n));
    }
    assignment[v] = value;
  }
  return assignment;
}

Degree solve_min(const std::vector<Constraint>& constraints,
                 const std::string& target,
                 const std::map<std::string, Degree>& bindings,
                 const NormFamily& n) {
  return solve_min_assignment(constraints, target, bindings, n).at(target);
}

bool sequent_semantically_valid(const Sequent& s, const NormFamily& n) {
  std::set<std::string> atoms = s.succedent.atoms();
  for (const auto& f : s.antecedent) f.collect_atoms(atoms);
  AtomUniverse universe((atoms));
  LplFormula fold = LplFormula::constant(Degree::one());
  bool first = true;
  for (const auto& f : s.antecedent) {
    fold = first ? f : LplFormula::tensor(std::move(fold), f);
    first = false;
  }
  TruthValue lhs = truth_value(fold, universe, n);
  TruthValue rhs = truth_value(s.succedent, universe, n);
  return leq_specific(lhs, rhs);
}

// ---------------------------------------------------------------------------
// JSON I/O

namespace {

using nlohmann::json;

Derivation derivation_from_json(const json& j, const std::set<std::string>& vars) {
  if (!j.is_object()) throw PosslogError("proof node is not an object");
  Derivation d;
  d.rule = j.at("rule").get<std::string>();
  const json& conc = j.at("conclusion");
  for (const auto& f : conc.at("antecedent")) {
    d.conclusion.antecedent.push_back(parse_lpl(f.get<std::string>(), vars));
  }
  d.conclusion.succedent = parse_lpl(conc.at("succedent").get<std::string>(), vars);
  if (j.contains("premises")) {
    for (const auto& p : j.at("premises")) {
      d.premises.push_back(derivation_from_json(p, vars));
    }
  }
  if (j.contains("side")) {
    for (const auto& [k, v] : j.at("side").items()) {
      d.side[k] = v.get<std::string>();
    }
  }
  return d;
}

json derivation_to_json(const Derivation& d) {
  json j;
  j["rule"] = d.rule;
  json ante = json::array();
  for (const auto& f : d.conclusion.antecedent) ante.push_back(f.to_string());
  j["conclusion"] = {{"antecedent", std::move(ante)},
                     {"succedent", d.conclusion.succedent.to_string()}};
  if (!d.premises.empty()) {
    json ps = json::array();
    for (const auto& p : d.premises) ps.push_back(derivation_to_json(p));
    j["premises"] = std::move(ps);
  }
  if (!d.side.empty()) j["side"] = d.side;
  return j;
}

}  // namespace

ProofDocument parse_proof_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw PosslogError(std::string("invalid proof JSON: ") + e.what());
  }
  ProofDocument doc;
  const json* proof = &j;
  if (j.is_object() && j.contains("proof")) {
    if (j.contains("vars")) {
      for (const auto& v : j.at("vars")) doc.vars.insert(v.get<std::string>());
    }
    proof = &j.at("proof");
  }
  try {
    doc.root = derivation_from_json(*proof, doc.vars);
  } catch (const json::exception& e) {
    throw PosslogError(std::string("malformed proof document: ") + e.what());
  }
  return doc;
}

ProofDocument load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PosslogError("cannot open proof file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_proof_json(buffer.str());
}

std::string proof_to_json(const ProofDocument& doc, bool pretty) {
  json j;
  if (!doc.vars.empty()) {
    j["vars"] = std::vector<std::string>(doc.vars.begin(), doc.vars.end());
    j["proof"] = derivation_to_json(doc.root);
  } else {
    j = derivation_to_json(doc.root);
  }
  return pretty ? j.dump(2) : j.dump();
}

}  // namespace posslog
