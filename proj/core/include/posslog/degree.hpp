#ifndef POSSLOG_DEGREE_HPP
#define POSSLOG_DEGREE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "posslog/rational.hpp"

namespace posslog {

/// A certainty / possibility degree: an exact rational confined to [0,1].
class Degree {
 public:
  constexpr Degree() : value_() {}
  explicit Degree(Rational value) : value_(value) {
    if (value < Rational(0) || value > Rational(1)) {
      throw PosslogError("degree out of range: " + value.to_fraction_string());
    }
  }
  Degree(std::int64_t num, std::int64_t den) : Degree(Rational(num, den)) {}

  static Degree zero() { return Degree(); }
  static Degree one() { return Degree(Rational(1)); }

  /// Parses a decimal or fraction literal in [0,1] ("0.76", ".5", "19/25", "1").
  static std::optional<Degree> parse(std::string_view text) {
    auto r = Rational::parse(text);
    if (!r || *r < Rational(0) || *r > Rational(1)) return std::nullopt;
    return Degree(*r);
  }

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == Rational(1); }

  /// 1 - x, the involutive complement used by the De Morgan duality.
  Degree complement() const { return Degree(Rational(1) - value_); }

  bool operator==(const Degree& o) const = default;
  auto operator<=>(const Degree& o) const { return value_ <=> o.value_; }

  /// "19/25" style rendering; always exact.
  std::string to_string() const { return value_.to_fraction_string(); }

  /// Exact decimal when one exists ("0.76"), fraction otherwise ("1/3").
  std::string to_compact_string() const {
    if (auto dec = value_.to_decimal_string()) return *dec;
    return value_.to_fraction_string();
  }

 private:
  Rational value_;
};

inline Degree min(const Degree& a, const Degree& b) { return a < b ? a : b; }
inline Degree max(const Degree& a, const Degree& b) { return a < b ? b : a; }

}  // namespace posslog

#endif  // POSSLOG_DEGREE_HPP
