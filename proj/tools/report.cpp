#include "report.hpp"

#include <json.hpp>

namespace posslog::cli {

using nlohmann::json;

std::string render_degree(const Degree& d) {
  const Rational& v = d.value();
  if (v.is_integer()) return v.to_fraction_string();
  if (auto dec = v.to_decimal_string()) {
    return v.to_fraction_string() + " = " + *dec;
  }
  char approx[64];
  std::snprintf(approx, sizeof approx, "%.6f", v.to_double());
  return v.to_fraction_string() + " ~ " + approx + " (truncated)";
}

namespace {

json degree_json(const Degree& d) {
  json j;
  j["rational"] = d.value().to_fraction_string();
  if (auto dec = d.value().to_decimal_string()) {
    j["decimal"] = *dec;
    j["exact_decimal"] = true;
  } else {
    j["decimal"] = d.value().to_double();
    j["exact_decimal"] = false;
  }
  return j;
}

}  // namespace

std::string QueryReport::render_text() const {
  std::string out;
  out += "goal:      " + goal + "\n";
  out += "method:    " + method + "\n";
  out += "inc(base): " + render_degree(inc) + "\n";
  if (derivable) {
    out += "derivable: yes, degree " + render_degree(degree) + "\n";
  } else {
    out += "derivable: no\n";
  }
  return out;
}

std::string QueryReport::render_json() const {
  json j;
  j["goal"] = goal;
  j["method"] = method;
  j["derivable"] = derivable;
  j["degree"] = degree_json(degree);
  j["inc"] = degree_json(inc);
  return j.dump(2) + "\n";
}

std::string ProofReport::render_text() const {
  std::string out;
  out += verdict.valid ? "proof: valid\n" : "proof: INVALID\n";
  for (const auto& f : verdict.failures) {
    out += "  " + f.path + ": " + f.reason + "\n";
  }
  if (!verdict.constraints.empty()) {
    out += "constraints:\n";
    for (const auto& c : verdict.constraints) {
      out += "  " + c.to_string() + "\n";
    }
  }
  if (!solved_var.empty()) {
    out += solved_var + " = " + render_degree(solved_value) + "\n";
    out += "necessity 1 - " + solved_var + " = " + render_degree(solved_necessity) + "\n";
  }
  return out;
}

std::string ProofReport::render_json() const {
  json j;
  j["valid"] = verdict.valid;
  json fails = json::array();
  for (const auto& f : verdict.failures) {
    fails.push_back({{"path", f.path}, {"reason", f.reason}});
  }
  j["failures"] = std::move(fails);
  json cs = json::array();
  for (const auto& c : verdict.constraints) cs.push_back(c.to_string());
  j["constraints"] = std::move(cs);
  if (!solved_var.empty()) {
    j["solved"] = {{"var", solved_var},
                   {"value", degree_json(solved_value)},
                   {"necessity", degree_json(solved_necessity)}};
  }
  return j.dump(2) + "\n";
}

}  // namespace posslog::cli
