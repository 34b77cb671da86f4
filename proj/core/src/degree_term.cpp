#include "posslog/degree_term.hpp"

namespace posslog {

namespace {
std::shared_ptr<const DegreeTerm> box(DegreeTerm t) {
  return std::make_shared<const DegreeTerm>(std::move(t));
}
}  // namespace

DegreeTerm DegreeTerm::constant(Degree d) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Const;
  node->value = d;
  return DegreeTerm(std::move(node));
}

DegreeTerm DegreeTerm::variable(std::string name) {
  if (name.empty()) throw PosslogError("degree variable with empty name");
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Var;
  node->name = std::move(name);
  return DegreeTerm(std::move(node));
}

DegreeTerm DegreeTerm::times(DegreeTerm a, DegreeTerm b) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Times;
  node->left = box(std::move(a));
  node->right = box(std::move(b));
  return DegreeTerm(std::move(node));
}

DegreeTerm DegreeTerm::join(DegreeTerm a, DegreeTerm b) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Join;
  node->left = box(std::move(a));
  node->right = box(std::move(b));
  return DegreeTerm(std::move(node));
}

DegreeTerm DegreeTerm::residuum(DegreeTerm a, DegreeTerm b) {
  auto node = std::make_shared<Node>();
  node->kind = TermKind::Residuum;
  node->left = box(std::move(a));
  node->right = box(std::move(b));
  return DegreeTerm(std::move(node));
}

bool DegreeTerm::is_ground() const {
  switch (kind()) {
    case TermKind::Const: return true;
    case TermKind::Var: return false;
    default: return left().is_ground() && right().is_ground();
  }
}

std::optional<Degree> DegreeTerm::as_constant() const {
  if (kind() == TermKind::Const) return constant_value();
  return std::nullopt;
}

void DegreeTerm::collect_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case TermKind::Const: return;
    case TermKind::Var: out.insert(var_name()); return;
    default:
      left().collect_vars(out);
      right().collect_vars(out);
      return;
  }
}

Degree DegreeTerm::eval(const std::map<std::string, Degree>& assignment,
                        const NormFamily& n) const {
  switch (kind()) {
    case TermKind::Const:
      return constant_value();
    case TermKind::Var: {
      auto it = assignment.find(var_name());
      if (it == assignment.end()) {
        throw PosslogError("unbound degree variable '" + var_name() + "'");
      }
      return it->second;
    }
    case TermKind::Times:
      return n.tnorm(left().eval(assignment, n), right().eval(assignment, n));
    case TermKind::Join:
      return max(left().eval(assignment, n), right().eval(assignment, n));
    case TermKind::Residuum:
      return n.residuum(left().eval(assignment, n), right().eval(assignment, n));
  }
  throw PosslogError("invalid degree term");
}

DegreeTerm DegreeTerm::substitute(const std::map<std::string, Degree>& bindings) const {
  switch (kind()) {
    case TermKind::Const:
      return *this;
    case TermKind::Var: {
      auto it = bindings.find(var_name());
      return it == bindings.end() ? *this : constant(it->second);
    }
    case TermKind::Times:
      return times(left().substitute(bindings), right().substitute(bindings));
    case TermKind::Join:
      return join(left().substitute(bindings), right().substitute(bindings));
    case TermKind::Residuum:
      return residuum(left().substitute(bindings), right().substitute(bindings));
  }
  throw PosslogError("invalid degree term");
}

bool DegreeTerm::operator==(const DegreeTerm& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case TermKind::Const: return constant_value() == o.constant_value();
    case TermKind::Var: return var_name() == o.var_name();
    default: return left() == o.left() && right() == o.right();
  }
}

std::string DegreeTerm::to_string() const {
  switch (kind()) {
    case TermKind::Const:
      return constant_value().to_compact_string();
    case TermKind::Var:
      return var_name();
    case TermKind::Times:
      return left().to_string() + " * " + right().to_string();
    case TermKind::Join:
      return "join(" + left().to_string() + ", " + right().to_string() + ")";
    case TermKind::Residuum:
      return "res(" + left().to_string() + ", " + right().to_string() + ")";
  }
  return "";
}

}  // namespace posslog
