#ifndef POSSLOG_DEGREE_TERM_HPP
#define POSSLOG_DEGREE_TERM_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "posslog/degree.hpp"
#include "posslog/norms.hpp"

namespace posslog {

enum class TermKind { Const, Var, Times, Join, Residuum };

/// A symbolic degree expression: constants, named variables, and the t-norm
/// (Times), max (Join) and residuum operations over them. Ground terms
/// evaluate to a Degree once a norm family is fixed.
class DegreeTerm {
 public:
  DegreeTerm() : DegreeTerm(constant(Degree::zero())) {}

  static DegreeTerm constant(Degree d);
  static DegreeTerm variable(std::string name);
  static DegreeTerm times(DegreeTerm a, DegreeTerm b);
  static DegreeTerm join(DegreeTerm a, DegreeTerm b);
  static DegreeTerm residuum(DegreeTerm a, DegreeTerm b);

  TermKind kind() const { return node_->kind; }
  const Degree& constant_value() const { return node_->value; }
  const std::string& var_name() const { return node_->name; }
  const DegreeTerm& left() const { return *node_->left; }
  const DegreeTerm& right() const { return *node_->right; }

  bool is_ground() const;
  /// The value of a ground Const node; nullopt for anything else.
  std::optional<Degree> as_constant() const;

  void collect_vars(std::set<std::string>& out) const;

  /// Evaluates under the assignment; throws PosslogError on unbound variables.
  Degree eval(const std::map<std::string, Degree>& assignment,
              const NormFamily& n) const;

  /// Replaces bound variables by constants; unbound ones stay symbolic.
  DegreeTerm substitute(const std::map<std::string, Degree>& bindings) const;

  bool operator==(const DegreeTerm& o) const;

  std::string to_string() const;

 private:
  struct Node {
    TermKind kind;
    Degree value;      // Const
    std::string name;  // Var
    std::shared_ptr<const DegreeTerm> left, right;
  };
  explicit DegreeTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace posslog

#endif  // POSSLOG_DEGREE_TERM_HPP
