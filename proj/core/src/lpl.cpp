#include "posslog/lpl.hpp"

#include <cctype>

namespace posslog {

namespace {
std::shared_ptr<const LplFormula> box(LplFormula f) {
  return std::make_shared<const LplFormula>(std::move(f));
}
}  // namespace

LplFormula LplFormula::atom(std::string name) {
  if (!is_valid_atom_name(name)) {
    throw PosslogError("invalid atom name: '" + name + "'");
  }
  auto node = std::make_shared<Node>();
  node->kind = LplKind::Atom;
  node->name = std::move(name);
  return LplFormula(std::move(node));
}

LplFormula LplFormula::constant(Degree d) { return constant(DegreeTerm::constant(d)); }

LplFormula LplFormula::constant(DegreeTerm t) {
  auto node = std::make_shared<Node>();
  node->kind = LplKind::Const;
  node->term = std::move(t);
  return LplFormula(std::move(node));
}

#define POSSLOG_LPL_BINARY(fn, k)                        \
  LplFormula LplFormula::fn(LplFormula a, LplFormula b) { \
    auto node = std::make_shared<Node>();                 \
    node->kind = LplKind::k;                              \
    node->left = box(std::move(a));                       \
    node->right = box(std::move(b));                      \
    return LplFormula(std::move(node));                   \
  }

POSSLOG_LPL_BINARY(and_min, AndMin)
POSSLOG_LPL_BINARY(or_max, OrMax)
POSSLOG_LPL_BINARY(tensor, Tensor)
POSSLOG_LPL_BINARY(arrow, Arrow)
#undef POSSLOG_LPL_BINARY

bool LplFormula::operator==(const LplFormula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case LplKind::Atom: return atom_name() == o.atom_name();
    case LplKind::Const: return constant_term() == o.constant_term();
    default: return left() == o.left() && right() == o.right();
  }
}

bool LplFormula::is_ground() const {
  switch (kind()) {
    case LplKind::Atom: return true;
    case LplKind::Const: return constant_term().is_ground();
    default: return left().is_ground() && right().is_ground();
  }
}

bool LplFormula::is_l1() const {
  switch (kind()) {
    case LplKind::Atom:
      return true;
    case LplKind::Const: {
      auto v = constant_term().as_constant();
      return v && (v->is_zero() || v->is_one());
    }
    default:
      return left().is_l1() && right().is_l1();
  }
}

bool LplFormula::is_negation_of(const LplFormula& other) const {
  if (kind() != LplKind::Arrow) return false;
  auto zero = right().kind() == LplKind::Const
                  ? right().constant_term().as_constant()
                  : std::nullopt;
  return zero && zero->is_zero() && left() == other;
}

void LplFormula::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case LplKind::Atom: out.insert(atom_name()); return;
    case LplKind::Const: return;
    default:
      left().collect_atoms(out);
      right().collect_atoms(out);
      return;
  }
}

std::set<std::string> LplFormula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

void LplFormula::collect_vars(std::set<std::string>& out) const {
  switch (kind()) {
    case LplKind::Atom: return;
    case LplKind::Const: constant_term().collect_vars(out); return;
    default:
      left().collect_vars(out);
      right().collect_vars(out);
      return;
  }
}

LplFormula LplFormula::substitute(const std::map<std::string, Degree>& bindings) const {
  switch (kind()) {
    case LplKind::Atom:
      return *this;
    case LplKind::Const:
      return constant(constant_term().substitute(bindings));
    case LplKind::AndMin:
      return and_min(left().substitute(bindings), right().substitute(bindings));
    case LplKind::OrMax:
      return or_max(left().substitute(bindings), right().substitute(bindings));
    case LplKind::Tensor:
      return tensor(left().substitute(bindings), right().substitute(bindings));
    case LplKind::Arrow:
      return arrow(left().substitute(bindings), right().substitute(bindings));
  }
  throw PosslogError("invalid formula");
}

// ---------------------------------------------------------------------------
// Printing. Precedence: ! (4) > (*) (3) > & (2) > (+) (1) > -> (0, right).

namespace {

int lpl_precedence(const LplFormula& f) {
  switch (f.kind()) {
    case LplKind::Arrow: return 0;
    case LplKind::OrMax: return 1;
    case LplKind::AndMin: return 2;
    case LplKind::Tensor: return 3;
    default: return 5;
  }
}

bool is_sugar_negation(const LplFormula& f) {
  if (f.kind() != LplKind::Arrow || f.right().kind() != LplKind::Const) return false;
  auto v = f.right().constant_term().as_constant();
  return v && v->is_zero();
}

void print_lpl(const LplFormula& f, int min_prec, std::string& out) {
  // Sugar first: an implication into a literal 0 prints as negation.
  if (is_sugar_negation(f)) {
    out += '!';
    print_lpl(f.left(), 4, out);
    return;
  }
  int prec = lpl_precedence(f);
  bool parens = prec < min_prec;
  switch (f.kind()) {
    case LplKind::Atom:
      out += f.atom_name();
      return;
    case LplKind::Const: {
      const DegreeTerm& t = f.constant_term();
      if (t.kind() == TermKind::Const || t.kind() == TermKind::Var) {
        out += t.to_string();
      } else {
        out += '(';
        out += t.to_string();
        out += ')';
      }
      return;
    }
    case LplKind::Tensor:
    case LplKind::AndMin:
    case LplKind::OrMax: {
      const char* op = f.kind() == LplKind::Tensor ? " (*) "
                       : f.kind() == LplKind::AndMin ? " & "
                                                     : " (+) ";
      if (parens) out += '(';
      print_lpl(f.left(), prec, out);
      out += op;
      print_lpl(f.right(), prec + 1, out);
      if (parens) out += ')';
      return;
    }
    case LplKind::Arrow: {
      if (parens) out += '(';
      print_lpl(f.left(), prec + 1, out);
      out += " -> ";
      print_lpl(f.right(), prec, out);
      if (parens) out += ')';
      return;
    }
  }
}

}  // namespace

std::string LplFormula::to_string() const {
  std::string out;
  print_lpl(*this, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class LplParser {
 public:
  LplParser(std::string_view text, const std::set<std::string>* vars)
      : text_(text), vars_(vars) {}

  LplFormula parse() {
    LplFormula f = parse_arrow();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_token(std::string_view token) {
    skip_ws();
    return text_.substr(pos_).starts_with(token);
  }

  bool eat_token(std::string_view token) {
    if (peek_token(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  LplFormula parse_arrow() {
    LplFormula lhs = parse_or();
    if (eat_token("->")) return LplFormula::arrow(std::move(lhs), parse_arrow());
    return lhs;
  }

  LplFormula parse_or() {
    LplFormula f = parse_and();
    while (eat_token("(+)")) f = LplFormula::or_max(std::move(f), parse_and());
    return f;
  }

  LplFormula parse_and() {
    LplFormula f = parse_tensor();
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        f = LplFormula::and_min(std::move(f), parse_tensor());
      } else {
        return f;
      }
    }
  }

  LplFormula parse_tensor() {
    LplFormula f = parse_unary();
    while (eat_token("(*)")) f = LplFormula::tensor(std::move(f), parse_unary());
    return f;
  }

  LplFormula parse_unary() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '!') {
      ++pos_;
      return LplFormula::negation(parse_unary());
    }
    return parse_primary();
  }

  LplFormula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      // "(+)" / "(*)" never reach here: the callers consume them first.
      ++pos_;
      LplFormula f = parse_arrow();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '.' || text_[pos_] == '/')) {
        ++pos_;
      }
      auto d = Degree::parse(text_.substr(start, pos_ - start));
      if (!d) {
        throw ParseError("invalid degree literal '" +
                             std::string(text_.substr(start, pos_ - start)) + "'",
                         start);
      }
      return LplFormula::constant(*d);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (vars_ && vars_->count(name)) {
        return LplFormula::constant(DegreeTerm::variable(std::move(name)));
      }
      return LplFormula::atom(std::move(name));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::set<std::string>* vars_;
  std::size_t pos_ = 0;
};

}  // namespace

LplFormula parse_lpl(std::string_view text) { return LplParser(text, nullptr).parse(); }

LplFormula parse_lpl(std::string_view text, const std::set<std::string>& degree_vars) {
  return LplParser(text, &degree_vars).parse();
}

// ---------------------------------------------------------------------------
// Semantics

TruthValue truth_value(const LplFormula& f, const AtomUniverse& universe,
                       const NormFamily& n) {
  switch (f.kind()) {
    case LplKind::Atom: {
      if (!universe.contains(f.atom_name())) {
        throw PosslogError("atom '" + f.atom_name() + "' not in universe");
      }
      std::vector<Degree> pi(universe.world_count());
      std::size_t bit = *universe.index_of(f.atom_name());
      if (universe.size() > world_limit()) {
        throw UniverseTooLarge(universe.size(), world_limit());
      }
      for (std::uint64_t w = 0; w < pi.size(); ++w) {
        pi[w] = ((w >> bit) & 1) ? Degree::one() : Degree::zero();
      }
      return TruthValue(universe, std::move(pi));
    }
    case LplKind::Const: {
      auto v = f.constant_term().as_constant();
      if (!v) {
        throw PosslogError("cannot evaluate symbolic constant '" +
                           f.constant_term().to_string() + "'");
      }
      return TruthValue::constant(universe, *v);
    }
    default: {
      TruthValue a = truth_value(f.left(), universe, n);
      TruthValue b = truth_value(f.right(), universe, n);
      std::vector<Degree> pi(a.world_count());
      for (std::size_t i = 0; i < pi.size(); ++i) {
        Degree x = a.at_index(i);
        Degree y = b.at_index(i);
        switch (f.kind()) {
          case LplKind::AndMin: pi[i] = min(x, y); break;
          case LplKind::OrMax: pi[i] = max(x, y); break;
          case LplKind::Tensor: pi[i] = n.tnorm(x, y); break;
          case LplKind::Arrow: pi[i] = n.residuum(x, y); break;
          default: break;
        }
      }
      return TruthValue(universe, std::move(pi));
    }
  }
}

bool forces(const PossibilityDistribution& d, const LplFormula& f,
            const NormFamily& n) {
  TruthValue tv = truth_value(f, d.universe(), n);
  return leq_specific(d, tv);
}

namespace {

LplFormula translate_classical(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True: return LplFormula::constant(Degree::one());
    case FormulaKind::False: return LplFormula::constant(Degree::zero());
    case FormulaKind::Atom: return LplFormula::atom(f.atom_name());
    case FormulaKind::Not: return LplFormula::negation(translate_classical(f.child()));
    case FormulaKind::And:
      return LplFormula::and_min(translate_classical(f.left()),
                                 translate_classical(f.right()));
    case FormulaKind::Or:
      return LplFormula::or_max(translate_classical(f.left()),
                                translate_classical(f.right()));
    case FormulaKind::Implies:
      return LplFormula::arrow(translate_classical(f.left()),
                               translate_classical(f.right()));
  }
  throw PosslogError("invalid formula");
}

}  // namespace

LplFormula translate_spl(const KnowledgeBase& kb) {
  if (kb.empty()) return LplFormula::constant(Degree::one());
  LplFormula acc;
  bool first = true;
  for (const auto& wf : kb.items()) {
    LplFormula item = LplFormula::or_max(
        LplFormula::constant(wf.weight.complement()), translate_classical(wf.formula));
    acc = first ? item : LplFormula::and_min(std::move(acc), std::move(item));
    first = false;
  }
  return acc;
}

Degree lpl_necessity(const std::vector<LplFormula>& gamma, const Formula& goal,
                     const NormFamily& n) {
  std::set<std::string> atoms = goal.atoms();
  for (const auto& f : gamma) f.collect_atoms(atoms);
  AtomUniverse universe((atoms));

  LplFormula combined = LplFormula::constant(Degree::one());
  bool first = true;
  for (const auto& f : gamma) {
    combined = first ? f : LplFormula::tensor(std::move(combined), f);
    first = false;
  }
  TruthValue pi = truth_value(combined, universe, n);

  Degree worst = Degree::zero();
  for (const auto& w : enumerate_worlds(universe)) {
    if (!eval_classical(goal, w)) worst = max(worst, pi.at_index(w.bits()));
  }
  return worst.complement();
}

}  // namespace posslog
