#include "posslog/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace posslog {

namespace {

__extension__ using Wide = __int128;

Wide gcd128(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw PosslogError("rational arithmetic overflow");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

Rational Rational::from_wide(Wide num, Wide den) {
  if (den == 0) throw PosslogError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::operator-() const { return from_wide(-(Wide)num_, den_); }

Rational Rational::operator+(const Rational& o) const {
  return from_wide((Wide)num_ * o.den_ + (Wide)o.num_ * den_,
                   (Wide)den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return from_wide((Wide)num_ * o.den_ - (Wide)o.num_ * den_,
                   (Wide)den_ * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return from_wide((Wide)num_ * o.num_, (Wide)den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw PosslogError("rational division by zero");
  return from_wide((Wide)num_ * o.den_, (Wide)den_ * o.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  Wide lhs = (Wide)num_ * o.den_;
  Wide rhs = (Wide)o.num_ * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '-' || text[pos] == '+') {
    negative = text[pos] == '-';
    ++pos;
  }
  std::int64_t int_part = 0;
  bool any_digits = false;
  auto read_digits = [&](std::int64_t& out, std::int64_t& scale) -> bool {
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (out > (std::numeric_limits<std::int64_t>::max() - 9) / 10) return false;
      out = out * 10 + (text[pos] - '0');
      scale *= 10;
      any_digits = true;
      ++pos;
    }
    return true;
  };
  std::int64_t ignore_scale = 1;
  if (!read_digits(int_part, ignore_scale)) return std::nullopt;

  Rational value(int_part);
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t frac = 0;
    std::int64_t scale = 1;
    if (!read_digits(frac, scale)) return std::nullopt;
    value = value + Rational(frac, scale);
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::int64_t den = 0;
    std::int64_t dscale = 1;
    bool had = any_digits;
    any_digits = false;
    if (!read_digits(den, dscale) || !any_digits || den == 0) return std::nullopt;
    any_digits = had;
    value = Rational(int_part, den);
  }
  if (!any_digits || pos != text.size()) return std::nullopt;
  return negative ? -value : value;
}

std::string Rational::to_fraction_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<std::string> Rational::to_decimal_string() const {
  std::int64_t d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return std::nullopt;
  int digits = twos > fives ? twos : fives;
  if (digits == 0) return std::to_string(num_);
  Wide scaled = num_;
  for (int i = 0; i < digits; ++i) scaled *= 10;
  scaled /= den_;
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string raw;
  while (scaled > 0) {
    raw.insert(raw.begin(), static_cast<char>('0' + (int)(scaled % 10)));
    scaled /= 10;
  }
  while ((int)raw.size() <= digits) raw.insert(raw.begin(), '0');
  raw.insert(raw.size() - digits, ".");
  return (neg ? "-" : "") + raw;
}

}  // namespace posslog
