#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "germcalc/linalg.hpp"
#include "germcalc/modops.hpp"

namespace germcalc {

/// R = O_n / J for an ideal J of finite colength, as a finite-dimensional
/// vector space on the standard monomials of J.
class ArtinianAlgebra {
 public:
  /// Throws std::invalid_argument when J has infinite colength.
  explicit ArtinianAlgebra(const Ideal& J);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Coordinates of the class of p.
  std::vector<Scalar> coordinates(const Polynomial& p) const;
  /// Matrix of multiplication by p: column j holds p * basis[j].
  DenseMatrix multiplication(const Polynomial& p) const;
  /// Multiplication by each variable.
  const std::vector<DenseMatrix>& multiplicationTables() const { return tables_; }

 private:
  RingPtr ring_;
  StandardBasis sb_;
  std::vector<Monomial> basis_;
  std::map<Monomial::Exponents, std::size_t> index_;
  std::vector<DenseMatrix> tables_;
};

/// Homology dimensions H_0..H_k of the Koszul complex of k commuting
/// operators on one vector space. Throws InternalError when they do not
/// commute.
std::vector<std::uint64_t> koszulHomology(const std::vector<DenseMatrix>& ops);

/// dim Tor_i(O/<I>, O/J) for a regular sequence I of length k and J of finite
/// colength, i = 0..k, through the Koszul complex of I tensored with O/J.
std::vector<std::uint64_t> koszulTor(const Ideal& I, const Ideal& J);

}  // namespace germcalc
