#include "kbdoc.hpp"

#include <fstream>
#include <sstream>

namespace posslog::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
  std::size_t pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PosslogError("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw PosslogError("cannot write file: " + path);
  out << content;
}

std::string path_stem(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

KbDocument KbDocument::parse(const std::string& text, std::string name) {
  KbDocument doc;
  doc.name = std::move(name);
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.starts_with("atoms:")) {
      std::istringstream atoms(line.substr(6));
      std::string atom;
      while (atoms >> atom) {
        if (!is_valid_atom_name(atom)) {
          throw PosslogError(doc.name + ":" + std::to_string(line_no) +
                             ": invalid atom name '" + atom + "'");
        }
        doc.declared_atoms.push_back(atom);
      }
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw PosslogError(doc.name + ":" + std::to_string(line_no) +
                         ": expected '<weight> : <formula>'");
    }
    std::string weight_text = trim(line.substr(0, colon));
    std::string formula_text = trim(line.substr(colon + 1));
    auto weight = Degree::parse(weight_text);
    if (!weight) {
      throw PosslogError(doc.name + ":" + std::to_string(line_no) +
                         ": invalid weight '" + weight_text + "' (must be in [0,1])");
    }
    Formula f;
    try {
      f = parse_formula(formula_text);
    } catch (const ParseError& e) {
      throw PosslogError(doc.name + ":" + std::to_string(line_no) + ": " + e.what());
    }
    if (weight->is_zero()) {
      doc.warnings.push_back(doc.name + ":" + std::to_string(line_no) +
                             ": weight 0 entry is vacuous and was dropped: " +
                             formula_text);
      continue;
    }
    doc.entries.push_back({*weight, std::move(f)});
  }
  return doc;
}

KbDocument KbDocument::load(const std::string& path) {
  return parse(read_file(path), path_stem(path));
}

KbDocument KbDocument::from_kb(const KnowledgeBase& kb, std::string name) {
  KbDocument doc;
  doc.name = std::move(name);
  doc.declared_atoms = kb.universe().atoms();
  for (const auto& wf : kb.items()) doc.entries.push_back({wf.weight, wf.formula});
  return doc;
}

std::string KbDocument::print() const {
  std::string out;
  if (!declared_atoms.empty()) {
    out += "atoms:";
    for (const auto& a : declared_atoms) {
      out += ' ';
      out += a;
    }
    out += '\n';
  }
  for (const auto& e : entries) {
    out += e.weight.to_compact_string();
    out += " : ";
    out += e.formula.to_string();
    out += '\n';
  }
  return out;
}

void KbDocument::save(const std::string& path) const { write_file(path, print()); }

KnowledgeBase KbDocument::to_kb() const {
  std::vector<WeightedFormula> items;
  items.reserve(entries.size());
  for (const auto& e : entries) items.emplace_back(e.formula, e.weight);
  std::set<std::string> declared(declared_atoms.begin(), declared_atoms.end());
  return KnowledgeBase(std::move(items), AtomUniverse(declared));
}

GammaDocument GammaDocument::parse(const std::string& text, std::string name) {
  GammaDocument doc;
  doc.name = std::move(name);
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    try {
      doc.formulas.push_back(parse_lpl(line));
    } catch (const ParseError& e) {
      throw PosslogError(doc.name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return doc;
}

GammaDocument GammaDocument::load(const std::string& path) {
  return parse(read_file(path), path_stem(path));
}

std::string GammaDocument::print() const {
  std::string out;
  for (const auto& f : formulas) {
    out += f.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace posslog::cli
