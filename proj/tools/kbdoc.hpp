#ifndef POSSLOG_TOOLS_KBDOC_HPP
#define POSSLOG_TOOLS_KBDOC_HPP

#include <string>
#include <vector>

#include "posslog/lpl.hpp"
#include "posslog/possdist.hpp"

namespace posslog::cli {

/// One `weight : formula` line of a knowledge-base file.
struct KbEntry {
  Degree weight;
  Formula formula;

  bool operator==(const KbEntry& o) const = default;
};

/// A knowledge-base file: optional `atoms:` header, `#` comments, one entry
/// per line. Weight literals are decimal or fraction strings in (0,1];
/// zero-weight entries are vacuous and dropped with a warning.
struct KbDocument {
  std::string name;
  std::vector<std::string> declared_atoms;
  std::vector<KbEntry> entries;
  std::vector<std::string> warnings;  // not part of document identity

  static KbDocument parse(const std::string& text, std::string name = "kb");
  static KbDocument load(const std::string& path);
  static KbDocument from_kb(const KnowledgeBase& kb, std::string name);

  std::string print() const;
  void save(const std::string& path) const;

  KnowledgeBase to_kb() const;

  bool same_document(const KbDocument& o) const {
    return declared_atoms == o.declared_atoms && entries == o.entries;
  }
};

/// A premise file for the graded logic: one formula per line, `#` comments.
struct GammaDocument {
  std::string name;
  std::vector<LplFormula> formulas;

  static GammaDocument parse(const std::string& text, std::string name = "gamma");
  static GammaDocument load(const std::string& path);
  std::string print() const;

  bool same_document(const GammaDocument& o) const { return formulas == o.formulas; }
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Stem of a path: "dir/sigma_s.kb" -> "sigma_s".
std::string path_stem(const std::string& path);

}  // namespace posslog::cli

#endif  // POSSLOG_TOOLS_KBDOC_HPP
