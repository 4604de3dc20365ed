#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "germcalc/monomial.hpp"
#include "germcalc/scalar.hpp"

namespace germcalc {

class GermRing;
using RingPtr = std::shared_ptr<const GermRing>;

/// Polynomial representatives of germs in the localization of k[x] at the
/// units of the ordering. Immutable once created and shared by pointer.
class GermRing {
 public:
  static constexpr std::uint32_t kDefaultDegreeCap = 30;

  /// Uses the local degree ordering when `ordering` is omitted.
  static RingPtr create(std::vector<std::string> names, Field field,
                        std::optional<MonomialOrdering> ordering = std::nullopt,
                        std::uint32_t degreeCap = kDefaultDegreeCap);

  std::size_t variableCount() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const Field& field() const { return field_; }
  const MonomialOrdering& ordering() const { return ordering_; }
  /// Largest total degree any intermediate of a standard basis computation
  /// may reach before the engine gives up.
  std::uint32_t degreeCap() const { return degreeCap_; }
  /// -1 when absent.
  int indexOf(const std::string& name) const;

  RingPtr withOrdering(MonomialOrdering ordering) const;
  RingPtr withField(Field field) const;
  RingPtr withDegreeCap(std::uint32_t cap) const;
  /// Prepends fresh global variables (names made unique) compared before
  /// everything else.
  RingPtr withAuxiliaryVariables(const std::vector<std::string>& names) const;

  Scalar scalar(long v) const { return Scalar(field_, v); }

  friend bool operator==(const GermRing& a, const GermRing& b);

 private:
  GermRing(std::vector<std::string> names, Field field, MonomialOrdering ordering, std::uint32_t cap);
  std::vector<std::string> names_;
  Field field_;
  MonomialOrdering ordering_;
  std::uint32_t degreeCap_;
};

struct Term {
  Monomial mono;
  Scalar coef;
};

/// Sparse polynomial with terms strictly decreasing under the ring ordering
/// and no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial constant(RingPtr ring, long c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial m, Scalar c);
  /// Sorts, merges like terms and drops zeros.
  static Polynomial fromTerms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Preconditions: nonzero.
  const Term& leadTerm() const { return terms_.front(); }
  const Monomial& leadMonomial() const { return terms_.front().mono; }
  const Scalar& leadCoefficient() const { return terms_.front().coef; }

  /// Largest total degree of a term (0 for the zero polynomial).
  std::uint64_t degree() const;
  /// Smallest total degree of a term (0 for the zero polynomial).
  std::uint64_t order() const;
  Scalar constantTerm() const;
  bool isConstant() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Scalar& c) const;
  Polynomial mulTerm(const Monomial& m, const Scalar& c) const;
  /// *this - c * m * g, computed by a single merge.
  Polynomial subMulTerm(const Polynomial& g, const Monomial& m, const Scalar& c) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial derivative(std::size_t var) const;
  /// Drops every term of total degree >= bound.
  Polynomial truncated(std::uint64_t bound) const;
  Polynomial monic() const;

  /// Re-expresses in `target`: target variable i takes source variable
  /// map[i] (map[i] < 0 means the variable is new). Source variables missing
  /// from the map must not occur.
  Polynomial remap(RingPtr target, const std::vector<int>& map) const;
  /// Substitutes images[i] (all in one common ring) for variable i.
  Polynomial substitute(const std::vector<Polynomial>& images) const;

  /// Exact quotient *this / d; nullopt when d does not divide *this in k[x].
  std::optional<Polynomial> exactDivide(const Polynomial& d) const;

  std::string toString() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sortedTerms);
  void requireSameRing(const Polynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace germcalc
