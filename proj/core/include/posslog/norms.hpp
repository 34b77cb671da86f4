#ifndef POSSLOG_NORMS_HPP
#define POSSLOG_NORMS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "posslog/degree.hpp"

namespace posslog {

enum class NormKind { Minimum, Product, Lukasiewicz };

/// One of the three basic triangular norms together with its De Morgan dual
/// t-conorm and its adjoint implication (residuum):
///
///   min         / max               / Goedel:  b if a > b else 1
///   product     / probabilistic sum / Goguen:  b/a if a > b else 1
///   Lukasiewicz / bounded sum       / min(1, 1 - a + b)
///
/// All three operations are exact over rationals.
class NormFamily {
 public:
  static const NormFamily& minimum();
  static const NormFamily& product();
  static const NormFamily& lukasiewicz();

  /// Accepts "min"/"minimum", "product"/"prod", "lukasiewicz"/"luk".
  static std::optional<NormFamily> from_name(std::string_view name);

  NormKind kind() const { return kind_; }
  /// Canonical name: "min", "product" or "lukasiewicz".
  std::string_view name() const;

  Degree tnorm(Degree a, Degree b) const;
  Degree conorm(Degree a, Degree b) const;
  Degree residuum(Degree a, Degree b) const;

  bool operator==(const NormFamily& o) const { return kind_ == o.kind_; }

 private:
  explicit NormFamily(NormKind kind) : kind_(kind) {}
  NormKind kind_;
};

}  // namespace posslog

#endif  // POSSLOG_NORMS_HPP
