#ifndef POSSLOG_TOOLS_REPORT_HPP
#define POSSLOG_TOOLS_REPORT_HPP

#include <string>

#include "posslog/degree.hpp"
#include "posslog/sequent.hpp"

namespace posslog::cli {

/// "19/25 = 0.76"; fractions without a finite expansion are annotated:
/// "1/3 ~ 0.333333 (truncated)".
std::string render_degree(const Degree& d);

struct QueryReport {
  std::string goal;
  bool derivable = false;
  Degree degree;
  Degree inc;
  std::string method;  // "spl-refutation" | "lpl-semantic"

  std::string render_text() const;
  std::string render_json() const;
};

struct ProofReport {
  Verdict verdict;
  std::string solved_var;        // empty when --solve was not requested
  Degree solved_value;
  Degree solved_necessity;       // 1 - solved value

  std::string render_text() const;
  std::string render_json() const;
};

}  // namespace posslog::cli

#endif  // POSSLOG_TOOLS_REPORT_HPP
