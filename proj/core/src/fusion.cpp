#include "posslog/fusion.hpp"

#include <cctype>

namespace posslog {

PossibilityDistribution combine_semantic(const PossibilityDistribution& d1,
                                         const PossibilityDistribution& d2,
                                         const NormFamily& n,
                                         CombinationMode mode) {
  AtomUniverse u = AtomUniverse::unite(d1.universe(), d2.universe());
  PossibilityDistribution e1 = d1.extended_to(u);
  PossibilityDistribution e2 = d2.extended_to(u);
  std::vector<Degree> pi(e1.world_count());
  for (std::size_t i = 0; i < pi.size(); ++i) {
    pi[i] = mode == CombinationMode::Conjunctive
                ? n.tnorm(e1.at_index(i), e2.at_index(i))
                : n.conorm(e1.at_index(i), e2.at_index(i));
  }
  return PossibilityDistribution(u, std::move(pi));
}

KnowledgeBase merge_conjunctive(const KnowledgeBase& k1, const KnowledgeBase& k2,
                                const NormFamily& n) {
  std::vector<WeightedFormula> items = k1.items();
  items.insert(items.end(), k2.items().begin(), k2.items().end());
  for (const auto& a : k1.items()) {
    for (const auto& b : k2.items()) {
      items.emplace_back(Formula::disjunction(a.formula, b.formula),
                         n.conorm(a.weight, b.weight));
    }
  }
  return KnowledgeBase(std::move(items),
                       AtomUniverse::unite(k1.universe(), k2.universe()));
}

KnowledgeBase merge_disjunctive(const KnowledgeBase& k1, const KnowledgeBase& k2,
                                const NormFamily& n) {
  std::vector<WeightedFormula> items;
  for (const auto& a : k1.items()) {
    for (const auto& b : k2.items()) {
      Degree w = n.tnorm(a.weight, b.weight);
      if (w.is_zero()) continue;  // imposes no constraint
      items.emplace_back(Formula::disjunction(a.formula, b.formula), w);
    }
  }
  return KnowledgeBase(std::move(items),
                       AtomUniverse::unite(k1.universe(), k2.universe()));
}

bool is_subsumed_at(const KnowledgeBase& kb, std::size_t index) {
  const WeightedFormula& wf = kb.items().at(index);
  std::vector<Formula> cut;
  for (std::size_t i = 0; i < kb.items().size(); ++i) {
    if (i == index) continue;
    if (!(kb.items()[i].weight < wf.weight)) cut.push_back(kb.items()[i].formula);
  }
  return entails_classical(cut, wf.formula);
}

bool is_subsumed(const KnowledgeBase& kb, const WeightedFormula& wf) {
  for (std::size_t i = 0; i < kb.items().size(); ++i) {
    if (kb.items()[i] == wf) return is_subsumed_at(kb, i);
  }
  throw PosslogError("formula not in knowledge base: " + wf.to_string());
}

KnowledgeBase simplify(const KnowledgeBase& kb) {
  std::vector<WeightedFormula> items;
  for (const auto& wf : kb.items()) {
    if (!is_tautology(wf.formula)) items.push_back(wf);
  }
  KnowledgeBase current(std::move(items), kb.universe());
  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < current.items().size(); ++i) {
      if (is_subsumed_at(current, i)) {
        std::vector<WeightedFormula> rest = current.items();
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        current = KnowledgeBase(std::move(rest), kb.universe());
        removed = true;
        break;
      }
    }
  }
  return current;
}

// ---------------------------------------------------------------------------
// Merge plans

MergePlan MergePlan::leaf(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::Leaf;
  node->name = std::move(name);
  return MergePlan(std::move(node));
}

namespace {

std::shared_ptr<const MergePlan> box(MergePlan p) {
  return std::make_shared<const MergePlan>(std::move(p));
}

}  // namespace

MergePlan MergePlan::unite(MergePlan left, MergePlan right) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::Union;
  node->left = box(std::move(left));
  node->right = box(std::move(right));
  return MergePlan(std::move(node));
}

MergePlan MergePlan::conjunction(const NormFamily& n, MergePlan left, MergePlan right) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::Conjunction;
  node->norm = n;
  node->left = box(std::move(left));
  node->right = box(std::move(right));
  return MergePlan(std::move(node));
}

MergePlan MergePlan::disjunction(const NormFamily& n, MergePlan left, MergePlan right) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::Disjunction;
  node->norm = n;
  node->left = box(std::move(left));
  node->right = box(std::move(right));
  return MergePlan(std::move(node));
}

std::string MergePlan::to_string() const {
  switch (kind()) {
    case PlanKind::Leaf:
      return leaf_name();
    case PlanKind::Union:
      return "union(" + left().to_string() + "," + right().to_string() + ")";
    case PlanKind::Conjunction:
      return "conj(" + std::string(norm().name()) + "," + left().to_string() +
             "," + right().to_string() + ")";
    case PlanKind::Disjunction:
      return "disj(" + std::string(norm().name()) + "," + left().to_string() +
             "," + right().to_string() + ")";
  }
  return "";
}

namespace {

class PlanParser {
 public:
  explicit PlanParser(std::string_view text) : text_(text) {}

  MergePlan parse() {
    MergePlan p = parse_node();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) throw ParseError("expected a name", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  MergePlan parse_node() {
    std::string word = parse_ident();
    skip_ws();
    bool call = pos_ < text_.size() && text_[pos_] == '(';
    if (!call) return MergePlan::leaf(std::move(word));
    expect('(');
    if (word == "union") {
      MergePlan l = parse_node();
      expect(',');
      MergePlan r = parse_node();
      expect(')');
      return MergePlan::unite(std::move(l), std::move(r));
    }
    if (word == "conj" || word == "disj") {
      std::string norm_name = parse_ident();
      auto norm = NormFamily::from_name(norm_name);
      if (!norm) throw ParseError("unknown norm '" + norm_name + "'", pos_);
      expect(',');
      MergePlan l = parse_node();
      expect(',');
      MergePlan r = parse_node();
      expect(')');
      return word == "conj" ? MergePlan::conjunction(*norm, std::move(l), std::move(r))
                            : MergePlan::disjunction(*norm, std::move(l), std::move(r));
    }
    throw ParseError("unknown plan operator '" + word + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MergePlan parse_plan(std::string_view text) { return PlanParser(text).parse(); }

KnowledgeBase eval_plan(const MergePlan& plan,
                        const std::map<std::string, KnowledgeBase>& env,
                        bool simplify_each) {
  auto finish = [&](KnowledgeBase kb) {
    return simplify_each ? simplify(kb) : kb;
  };
  switch (plan.kind()) {
    case PlanKind::Leaf: {
      auto it = env.find(plan.leaf_name());
      if (it == env.end()) {
        throw PosslogError("unbound base name '" + plan.leaf_name() + "'");
      }
      return finish(it->second);
    }
    case PlanKind::Union:
      return finish(KnowledgeBase::unite(eval_plan(plan.left(), env, simplify_each),
                                         eval_plan(plan.right(), env, simplify_each)));
    case PlanKind::Conjunction:
      return finish(merge_conjunctive(eval_plan(plan.left(), env, simplify_each),
                                      eval_plan(plan.right(), env, simplify_each),
                                      plan.norm()));
    case PlanKind::Disjunction:
      return finish(merge_disjunctive(eval_plan(plan.left(), env, simplify_each),
                                      eval_plan(plan.right(), env, simplify_each),
                                      plan.norm()));
  }
  throw PosslogError("invalid plan node");
}

}  // namespace posslog
