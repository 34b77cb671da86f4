#ifndef POSSLOG_RATIONAL_HPP
#define POSSLOG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "posslog/errors.hpp"

namespace posslog {

/// Exact rational arithmetic on 64-bit numerator/denominator, always kept in
/// lowest terms with a positive denominator. Intermediate products are done in
/// 128 bits; results that do not fit back into 64 bits raise PosslogError
/// rather than silently overflowing.
class Rational {
 public:
  constexpr Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  /// Parses "3", "-1/4", "0.76", ".5"; decimal strings become exact fractions.
  static std::optional<Rational> parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;  // throws on division by zero

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  std::strong_ordering operator<=>(const Rational& o) const;

  /// "p/q" for non-integers, plain "p" otherwise.
  std::string to_fraction_string() const;

  /// Exact decimal expansion when the denominator is of the form 2^a 5^b;
  /// nullopt otherwise.
  std::optional<std::string> to_decimal_string() const;

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  __extension__ using Wide = __int128;
  static Rational from_wide(Wide num, Wide den);

  std::int64_t num_;
  std::int64_t den_;
};

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace posslog

#endif  // POSSLOG_RATIONAL_HPP
