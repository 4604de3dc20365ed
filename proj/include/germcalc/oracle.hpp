#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "germcalc/extended_nat.hpp"
#include "germcalc/polynomial.hpp"

namespace germcalc {

/// Outcome of the truncated-elimination colength oracle.
struct OracleResult {
  enum class Status { Finite, Infinite, Inconclusive };
  Status status = Status::Inconclusive;
  std::uint64_t value = 0;
  /// dims[d] = dim k[x]/(I + m^d) for d = 0..last degree examined.
  std::vector<std::uint64_t> dims;

  /// Finite value, infinite, or throws for Inconclusive.
  ExtendedNat asExtendedNat() const;
  std::string toString() const;
};

/// Colength of an ideal of the local ring by dense linear algebra only:
/// dim k[x]/(I + m^d) is computed as the quotient of polynomials of degree
/// < d by the truncated span of {monomial * generator}, for d = 1, 2, ...
/// The first d with dim(d) == dim(d-1) gives the exact colength (m^(d-1) is
/// then contained in I by Nakayama). If `truncationDegree` is reached first,
/// a nondecreasing positive top-degree contribution over the last three
/// degrees is reported as Infinite, anything else as Inconclusive.
OracleResult oracleColength(const std::vector<Polynomial>& gens, std::uint32_t truncationDegree);

}  // namespace germcalc
