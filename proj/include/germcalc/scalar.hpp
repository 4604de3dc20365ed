#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace germcalc {

/// Coefficient field: the rationals or a prime field F_p.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  static Field rationals() { return Field{0}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool isRational() const { return prime_ == 0; }
  std::uint32_t characteristic() const { return prime_; }
  std::string toString() const;  // "Q" or "Fp:<p>"

  /// Accepts "Q", "Fp" (default prime) and "Fp:<p>".
  static Field parse(const std::string& text);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : prime_(p) {}
  std::uint32_t prime_;
};

/// Residue class modulo a prime, value kept in [0, p).
struct Residue {
  std::uint32_t value;
  std::uint32_t prime;
  friend bool operator==(const Residue&, const Residue&) = default;
};

/// Exact field element. Rationals are always canonical (lowest terms,
/// positive denominator); residues always reduced.
class Scalar {
 public:
  Scalar(const Field& field, long value);
  Scalar(const Field& field, int value) : Scalar(field, static_cast<long>(value)) {}
  Scalar(const Field& field, const mpz_class& value);
  /// num/den; throws std::domain_error when den vanishes in the field.
  Scalar(const Field& field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(const Field& f) { return Scalar(f, 0L); }
  static Scalar one(const Field& f) { return Scalar(f, 1L); }

  Field field() const;
  bool isZero() const;
  bool isOne() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  /// Sign used when printing (residues are never negative).
  bool isNegative() const;
  std::string toString() const;

  /// Only valid over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  /// Only valid over F_p.
  std::uint32_t residue() const { return std::get<Residue>(value_).value; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

 private:
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}
  explicit Scalar(Residue r) : value_(r) {}
  void requireSameField(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace germcalc
