#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "germcalc/polynomial.hpp"

namespace germcalc {

/// Element of the free module R^r. Terms are ranked position-over-term:
/// any term in component i outranks every term in components j > i, so the
/// leading term lives in the first nonzero component.
class FreeModuleVector {
 public:
  FreeModuleVector(RingPtr ring, std::size_t rank);
  explicit FreeModuleVector(std::vector<Polynomial> components);
  static FreeModuleVector unit(RingPtr ring, std::size_t rank, std::size_t index);
  static FreeModuleVector fromPolynomial(const Polynomial& p);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return comps_.size(); }
  const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
  const std::vector<Polynomial>& components() const { return comps_; }
  bool isZero() const;

  /// Preconditions for the lead accessors: nonzero.
  /// Module terms are compared position first (lower index wins), except
  /// under the local degree ordering where degree comes first, then
  /// position, so that the leading degree is the order of the vector.
  std::size_t leadComponent() const;
  const Monomial& leadMonomial() const { return comps_[leadComponent()].leadMonomial(); }
  const Scalar& leadCoefficient() const { return comps_[leadComponent()].leadCoefficient(); }
  std::uint64_t degree() const;
  /// degree() minus the degree of the leading monomial.
  std::uint64_t ecart() const;

  FreeModuleVector operator+(const FreeModuleVector& o) const;
  FreeModuleVector operator-(const FreeModuleVector& o) const;
  FreeModuleVector operator*(const Polynomial& p) const;
  FreeModuleVector scaled(const Scalar& c) const;
  FreeModuleVector mulTerm(const Monomial& m, const Scalar& c) const;
  FreeModuleVector subMulTerm(const FreeModuleVector& g, const Monomial& m, const Scalar& c) const;
  FreeModuleVector monic() const;

  /// Components [first, first + count).
  FreeModuleVector slice(std::size_t first, std::size_t count) const;
  /// Concatenation (this, tail).
  FreeModuleVector concat(const FreeModuleVector& tail) const;

  std::string toString() const;
  friend bool operator==(const FreeModuleVector& a, const FreeModuleVector& b) { return a.comps_ == b.comps_; }

 private:
  void requireCompatible(const FreeModuleVector& o) const;
  RingPtr ring_;
  std::vector<Polynomial> comps_;
};

/// Same coefficients in a ring with the same variables (e.g. another ordering).
FreeModuleVector changeRing(const FreeModuleVector& v, const RingPtr& target);
std::vector<int> identityMap(std::size_t n);

/// Wraps each polynomial as a rank-1 vector.
std::vector<FreeModuleVector> asVectors(const std::vector<Polynomial>& ideal);

}  // namespace germcalc
