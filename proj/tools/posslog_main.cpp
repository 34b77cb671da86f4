#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kbdoc.hpp"
#include "posslog/derivations.hpp"
#include "posslog/fusion.hpp"
#include "posslog/prover.hpp"
#include "posslog/sequent.hpp"
#include "report.hpp"

using namespace posslog;
using namespace posslog::cli;

namespace {

const NormFamily& norm_from_flag(const std::string& name) {
  auto n = NormFamily::from_name(name);
  if (!n) throw PosslogError("unknown norm '" + name + "'");
  switch (n->kind()) {
    case NormKind::Product: return NormFamily::product();
    case NormKind::Lukasiewicz: return NormFamily::lukasiewicz();
    default: return NormFamily::minimum();
  }
}

void print_warnings(const KbDocument& doc) {
  for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
}

std::map<std::string, Degree> parse_bindings(const std::vector<std::string>& raw) {
  std::map<std::string, Degree> out;
  for (const auto& b : raw) {
    std::size_t eq = b.find('=');
    if (eq == std::string::npos) {
      throw PosslogError("binding must look like name=degree: '" + b + "'");
    }
    auto d = Degree::parse(b.substr(eq + 1));
    if (!d) throw PosslogError("invalid degree in binding '" + b + "'");
    out.emplace(b.substr(0, eq), *d);
  }
  return out;
}

void emit(const std::string& text) { std::cout << text; }

}  // namespace

int main(int argc, char** argv) {
  if (const char* limit = std::getenv("POSSLOG_MAX_ATOMS")) {
    set_world_limit(static_cast<std::size_t>(std::strtoul(limit, nullptr, 10)));
  }

  CLI::App app{"posslog - merging and querying uncertain knowledge bases"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  int exit_code = 0;

  // ---- kb ------------------------------------------------------------
  auto* kb_cmd = app.add_subcommand("kb", "Weighted knowledge-base commands");
  kb_cmd->require_subcommand(1);

  {
    auto* inc = kb_cmd->add_subcommand("inc", "Inconsistency degree of a base");
    auto file = std::make_shared<std::string>();
    inc->add_option("file", *file, "knowledge base file")->required();
    inc->callback([&, file] {
      KbDocument doc = KbDocument::load(*file);
      print_warnings(doc);
      Degree d = inconsistency_degree(doc.to_kb());
      if (format == "json") {
        emit("{\"inc\": \"" + d.to_string() + "\"}\n");
      } else {
        emit("inc = " + render_degree(d) + "\n");
      }
    });
  }

  {
    auto* query = kb_cmd->add_subcommand("query", "Prove a graded conclusion");
    auto file = std::make_shared<std::string>();
    auto goal_text = std::make_shared<std::string>();
    auto trace = std::make_shared<bool>(false);
    query->add_option("file", *file)->required();
    query->add_option("goal", *goal_text, "goal formula")->required();
    query->add_flag("--trace", *trace, "print a resolution refutation");
    query->callback([&, file, goal_text, trace] {
      KbDocument doc = KbDocument::load(*file);
      print_warnings(doc);
      Formula goal = parse_formula(*goal_text);
      ProofResult r = prove_pref(doc.to_kb(), goal, *trace);
      QueryReport report{*goal_text, r.derivable, r.degree, r.inc_base,
                         "spl-refutation"};
      emit(format == "json" ? report.render_json() : report.render_text());
      if (*trace && r.trace && format == "text") {
        emit("trace:\n");
        for (const auto& step : *r.trace) emit("  " + step.to_string() + "\n");
      }
      exit_code = r.derivable ? 0 : 1;
    });
  }

  {
    auto* merge = kb_cmd->add_subcommand("merge", "Evaluate a merge plan");
    auto plan_text = std::make_shared<std::string>();
    auto bases = std::make_shared<std::vector<std::string>>();
    auto simplify_flag = std::make_shared<bool>(false);
    auto out = std::make_shared<std::string>();
    merge->add_option("plan", *plan_text,
                      "e.g. conj(product,union(a,b),union(c,d))")->required();
    merge->add_option("bases", *bases, "base files, optionally name=path")
        ->required();
    merge->add_flag("--simplify", *simplify_flag,
                    "drop tautologies and subsumed formulae after each step");
    merge->add_option("-o,--out", *out, "output file (stdout if omitted)");
    merge->callback([&, plan_text, bases, simplify_flag, out] {
      std::map<std::string, KnowledgeBase> env;
      for (const auto& arg : *bases) {
        std::size_t eq = arg.find('=');
        std::string name = eq == std::string::npos ? path_stem(arg)
                                                   : arg.substr(0, eq);
        std::string path = eq == std::string::npos ? arg : arg.substr(eq + 1);
        KbDocument doc = KbDocument::load(path);
        print_warnings(doc);
        env.emplace(std::move(name), doc.to_kb());
      }
      MergePlan plan = parse_plan(*plan_text);
      KnowledgeBase merged = eval_plan(plan, env, *simplify_flag);
      KbDocument result =
          KbDocument::from_kb(merged, out->empty() ? "merged" : path_stem(*out));
      if (out->empty()) {
        emit(result.print());
      } else {
        result.save(*out);
      }
    });
  }

  {
    auto* simp = kb_cmd->add_subcommand("simplify", "Remove tautologies and subsumed formulae");
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    simp->add_option("file", *file)->required();
    simp->add_option("-o,--out", *out, "output file (stdout if omitted)");
    simp->callback([&, file, out] {
      KbDocument doc = KbDocument::load(*file);
      print_warnings(doc);
      KbDocument result = KbDocument::from_kb(simplify(doc.to_kb()), doc.name);
      if (out->empty()) {
        emit(result.print());
      } else {
        result.save(*out);
      }
    });
  }

  // ---- lpl -----------------------------------------------------------
  auto* lpl_cmd = app.add_subcommand("lpl", "Graded-logic commands");
  lpl_cmd->require_subcommand(1);
  auto lpl_norm = std::make_shared<std::string>("min");

  {
    auto* query = lpl_cmd->add_subcommand("query", "Necessity of a goal under a premise set");
    auto file = std::make_shared<std::string>();
    auto goal_text = std::make_shared<std::string>();
    query->add_option("file", *file, "premise file, one formula per line")->required();
    query->add_option("goal", *goal_text, "classical goal formula")->required();
    query->add_option("--norm", *lpl_norm, "t-norm: min, product, lukasiewicz")
        ->capture_default_str();
    query->callback([&, file, goal_text] {
      GammaDocument gamma = GammaDocument::load(*file);
      const NormFamily& n = norm_from_flag(*lpl_norm);
      Formula goal = parse_formula(*goal_text);
      Degree degree = lpl_necessity(gamma.formulas, goal, n);
      Degree inc = lpl_necessity(gamma.formulas, Formula::falsity(), n);
      QueryReport report{*goal_text, inc < degree, degree, inc, "lpl-semantic"};
      emit(format == "json" ? report.render_json() : report.render_text());
      exit_code = report.derivable ? 0 : 1;
    });
  }

  {
    auto* tr = lpl_cmd->add_subcommand("translate", "Encode a weighted base as one graded formula");
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    tr->add_option("file", *file, "knowledge base file")->required();
    tr->add_option("-o,--out", *out, "output file (stdout if omitted)");
    tr->callback([&, file, out] {
      KbDocument doc = KbDocument::load(*file);
      print_warnings(doc);
      std::string text = translate_spl(doc.to_kb()).to_string() + "\n";
      if (out->empty()) {
        emit(text);
      } else {
        write_file(*out, text);
      }
    });
  }

  // ---- proof ----------------------------------------------------------
  auto* proof_cmd = app.add_subcommand("proof", "Sequent derivation commands");
  proof_cmd->require_subcommand(1);

  {
    auto* check = proof_cmd->add_subcommand("check", "Check a derivation file");
    auto file = std::make_shared<std::string>();
    auto norm_name = std::make_shared<std::string>("min");
    auto binds_raw = std::make_shared<std::vector<std::string>>();
    auto solve_var = std::make_shared<std::string>();
    check->add_option("file", *file, "proof JSON file")->required();
    check->add_option("--norm", *norm_name, "t-norm: min, product, lukasiewicz")
        ->capture_default_str();
    check->add_option("--bind", *binds_raw, "degree binding name=value (repeatable)");
    check->add_option("--solve", *solve_var,
                      "minimize this variable under the extracted constraints");
    check->callback([&, file, norm_name, binds_raw, solve_var] {
      const NormFamily& n = norm_from_flag(*norm_name);
      ProofDocument doc = load_proof_file(*file);
      std::map<std::string, Degree> binds = parse_bindings(*binds_raw);
      ProofReport report;
      if (solve_var->empty() && !binds.empty()) {
        report.verdict = check_derivation(doc.root.substitute(binds), n);
      } else {
        report.verdict = check_derivation(doc.root, n);
      }
      if (report.verdict.valid && !solve_var->empty()) {
        auto assignment =
            solve_min_assignment(report.verdict.constraints, *solve_var, binds, n);
        report.solved_var = *solve_var;
        report.solved_value = assignment.at(*solve_var);
        report.solved_necessity = report.solved_value.complement();
      }
      emit(format == "json" ? report.render_json() : report.render_text());
      exit_code = report.verdict.valid ? 0 : 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const PosslogError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
