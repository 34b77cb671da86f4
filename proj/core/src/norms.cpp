#include "posslog/norms.hpp"

namespace posslog {

const NormFamily& NormFamily::minimum() {
  static const NormFamily n(NormKind::Minimum);
  return n;
}

const NormFamily& NormFamily::product() {
  static const NormFamily n(NormKind::Product);
  return n;
}

const NormFamily& NormFamily::lukasiewicz() {
  static const NormFamily n(NormKind::Lukasiewicz);
  return n;
}

std::optional<NormFamily> NormFamily::from_name(std::string_view name) {
  if (name == "min" || name == "minimum") return minimum();
  if (name == "product" || name == "prod") return product();
  if (name == "lukasiewicz" || name == "luk") return lukasiewicz();
  return std::nullopt;
}

std::string_view NormFamily::name() const {
  switch (kind_) {
    case NormKind::Minimum: return "min";
    case NormKind::Product: return "product";
    case NormKind::Lukasiewicz: return "lukasiewicz";
  }
  return "";
}

Degree NormFamily::tnorm(Degree a, Degree b) const {
  switch (kind_) {
    case NormKind::Minimum:
      return min(a, b);
    case NormKind::Product:
      return Degree(a.value() * b.value());
    case NormKind::Lukasiewicz: {
      Rational r = a.value() + b.value() - Rational(1);
      return r < Rational(0) ? Degree::zero() : Degree(r);
    }
  }
  return Degree::zero();
}

Degree NormFamily::conorm(Degree a, Degree b) const {
  // a (+) b = 1 - ((1-a) (x) (1-b)), spelled out per norm for exactness.
  switch (kind_) {
    case NormKind::Minimum:
      return max(a, b);
    case NormKind::Product:
      return Degree(a.value() + b.value() - a.value() * b.value());
    case NormKind::Lukasiewicz: {
      Rational r = a.value() + b.value();
      return r > Rational(1) ? Degree::one() : Degree(r);
    }
  }
  return Degree::zero();
}

Degree NormFamily::residuum(Degree a, Degree b) const {
  if (!(b < a)) return Degree::one();
  switch (kind_) {
    case NormKind::Minimum:
      return b;
    case NormKind::Product:
      return Degree(b.value() / a.value());  // a > b >= 0, so a > 0
    case NormKind::Lukasiewicz:
      return Degree(Rational(1) - a.value() + b.value());
  }
  return Degree::zero();
}

}  // namespace posslog
