#include "germcalc/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace germcalc {

namespace {

bool isPrime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t powMod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !isPrime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  return Field{p};
}

std::string Field::toString() const {
  return isRational() ? "Q" : "Fp:" + std::to_string(prime_);
}

Field Field::parse(const std::string& text) {
  if (text == "Q" || text == "QQ") return rationals();
  if (text == "Fp") return prime(kDefaultPrime);
  if (text.rfind("Fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10)
      throw std::invalid_argument("bad field characteristic '" + digits + "'");
    return prime(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw std::invalid_argument("unknown field '" + text + "' (expected Q or Fp:<p>)");
}

Scalar::Scalar(const Field& field, long value) {
  if (field.isRational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(mpz_class(value), field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(const Field& field, const mpz_class& value) {
  if (field.isRational()) {
    value_ = mpq_class(value);
  } else {
    value_ = Residue{reduce(value, field.characteristic()), field.characteristic()};
  }
}

Scalar::Scalar(const Field& field, const mpz_class& num, const mpz_class& den) {
  if (field.isRational()) {
    if (den == 0) throw std::domain_error("division by zero in rational constant");
    mpq_class q(num, den);
    q.canonicalize();
    value_ = std::move(q);
  } else {
    const std::uint32_t p = field.characteristic();
    const std::uint32_t d = reduce(den, p);
    if (d == 0) throw std::domain_error("denominator is not invertible in " + field.toString());
    const std::uint64_t n = reduce(num, p);
    value_ = Residue{static_cast<std::uint32_t>(n * powMod(d, p - 2, p) % p), p};
  }
}

Field Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return Field::prime(r->prime);
  return Field::rationals();
}

bool Scalar::isZero() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::isOne() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::requireSameField(const Scalar& o) const {
  if (value_.index() != o.value_.index())
    throw std::invalid_argument("scalar field mismatch");
  if (const auto* r = std::get_if<Residue>(&value_)) {
    if (r->prime != std::get<Residue>(o.value_).prime) throw std::invalid_argument("scalar field mismatch");
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  requireSameField(o);
  if (const auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} + std::get<Residue>(o.value_).value;
    return Scalar(Residue{static_cast<std::uint32_t>(s % r->prime), r->prime});
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) + std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator-(const Scalar& o) const {
  requireSameField(o);
  if (const auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} + r->prime - std::get<Residue>(o.value_).value;
    return Scalar(Residue{static_cast<std::uint32_t>(s % r->prime), r->prime});
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) - std::get<mpq_class>(o.value_)));
}

Scalar Scalar::operator*(const Scalar& o) const {
  requireSameField(o);
  if (const auto* r = std::get_if<Residue>(&value_)) {
    const std::uint64_t s = std::uint64_t{r->value} * std::get<Residue>(o.value_).value;
    return Scalar(Residue{static_cast<std::uint32_t>(s % r->prime), r->prime});
  }
  return Scalar(mpq_class(std::get<mpq_class>(value_) * std::get<mpq_class>(o.value_)));
}

Scalar Scalar::inverse() const {
  if (isZero()) throw std::domain_error("division by zero");
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{powMod(r->value, r->prime - 2, r->prime), r->prime});
  return Scalar(mpq_class(1 / std::get<mpq_class>(value_)));
}

Scalar Scalar::operator/(const Scalar& o) const {
  requireSameField(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{r->value == 0 ? 0 : r->prime - r->value, r->prime});
  return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

bool Scalar::isNegative() const {
  if (std::holds_alternative<Residue>(value_)) return false;
  return sgn(std::get<mpq_class>(value_)) < 0;
}

std::string Scalar::toString() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.toString(); }

}  // namespace germcalc
