#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "germcalc/extended_nat.hpp"
#include "germcalc/module_vector.hpp"

namespace germcalc {

enum class Truncation;

/// Leading term position of a standard basis element.
struct LeadingTerm {
  std::size_t component;
  Monomial monomial;
};

/// Standard basis of a submodule of R^r with respect to the module ordering
/// of FreeModuleVector::leadComponent. Generators are monic and minimal: no leading
/// term divides another.
class StandardBasis {
 public:
  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const MonomialOrdering& ordering() const { return ring_->ordering(); }
  const std::vector<FreeModuleVector>& generators() const { return gens_; }
  const std::vector<LeadingTerm>& leadingModule() const { return leads_; }
  /// Tails are not inter-reduced; only leading terms are minimal.
  bool reduced() const { return false; }
  /// Ideal case convenience: the generators as polynomials.
  std::vector<Polynomial> polynomials() const;
  /// Weak normal form against this basis; terms at or above the Noether
  /// bound are dropped when one is known.
  FreeModuleVector normalForm(const FreeModuleVector& v) const;
  /// False when the module has infinite colength and the automatic
  /// truncation gave up: generators then form a standard basis of
  /// M + m^D for some D only. Colength is infinite; membership falls back to a
  /// polynomial-ring test; normal forms are unavailable.
  bool exact() const { return exact_; }
  /// Fully reduced representative: every term is a standard monomial.
  /// Needs a Noether bound and the local degree ordering; throws
  /// std::invalid_argument otherwise.
  FreeModuleVector reducedNormalForm(const FreeModuleVector& v) const;
  /// Degree N with m^N * R^r inside the module, when the leading module
  /// certifies finite colength under a degree-compatible local ordering.
  std::optional<std::uint64_t> noetherBound() const { return noether_; }

 private:
  friend StandardBasis standardBasis(const RingPtr&, std::size_t, std::vector<FreeModuleVector>, Truncation);
  friend StandardBasis tangentConeBasis(const RingPtr&, std::size_t, const std::vector<FreeModuleVector>&,
                                        std::optional<std::uint64_t>, std::size_t, std::vector<FreeModuleVector>*);
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<FreeModuleVector> gens_;
  std::vector<LeadingTerm> leads_;
  std::optional<std::uint64_t> noether_;
  bool exact_ = true;
  std::vector<FreeModuleVector> inputs_;
  friend bool isMember(const FreeModuleVector&, const StandardBasis&);
};

/// Mora's weak normal form with ecart-minimal reducer choice (plain
/// reduction when the ordering is global). The result r
/// satisfies u*v = sum(a_i*g_i) + r for a unit u, and r's leading term is
/// divisible by no basis leading term. Throws std::invalid_argument when the
/// ordering is mixed with a global final block, DegreeCapExceeded on runaway degree.
FreeModuleVector moraNormalForm(const FreeModuleVector& v, std::span<const FreeModuleVector> basis);

/// Auto: under the local degree ordering, first try bases modulo growing
/// powers of m and accept one once it certifies m^N inside the module.
/// Off: plain tangent cone algorithm. Tails are only cut once a Noether
/// bound appears, so intermediate degrees can pass the cap even for finite
/// colength.
enum class Truncation { Auto, Off };

/// Mora's tangent cone algorithm. Zero generators are ignored; the empty
/// module is allowed when ring and rank are explicit.
StandardBasis standardBasis(const RingPtr& ring, std::size_t rank, std::vector<FreeModuleVector> gens,
                            Truncation truncation = Truncation::Auto);
/// Precondition: gens nonempty with uniform rank.
StandardBasis standardBasis(std::vector<FreeModuleVector> gens);
/// Ideal case; precondition: ideal nonempty.
StandardBasis standardBasis(const std::vector<Polynomial>& ideal);
StandardBasis standardBasis(const RingPtr& ring, const std::vector<Polynomial>& ideal);

/// Lift vectors (m_j, e_j) in R^top + R^(rank - top): runs the basis
/// algorithm, setting aside every reduced element whose first `top`
/// components vanish, and returns those elements' last rank - top components.
/// By Schreyer's theorem they generate the relations among the m_j.
std::vector<FreeModuleVector> liftSyzygies(const RingPtr& ring, std::size_t top, std::size_t rank,
                                           const std::vector<FreeModuleVector>& lift);

/// The same variables and field under the global degree ordering.
RingPtr globalOrderingCopy(const RingPtr& ring);

/// v in the localization of M, decided over the polynomial ring: some
/// element of M : v has a nonzero constant term.
bool locallyContains(const std::vector<FreeModuleVector>& M, const FreeModuleVector& v);

/// Number of standard monomials (component, monomial) outside the leading
/// module, or infinite. Requires a purely local ordering.
ExtendedNat colength(const StandardBasis& basis);
ExtendedNat colength(const RingPtr& ring, const std::vector<Polynomial>& ideal);

/// Monomials of `component` outside the leading module, decreasing in the
/// ordering. Throws std::invalid_argument if there are infinitely many.
std::vector<Monomial> standardMonomials(const StandardBasis& basis, std::size_t component = 0);

bool isMember(const FreeModuleVector& v, const StandardBasis& basis);
bool isMember(const Polynomial& p, const StandardBasis& basis);

/// S-vector of two elements with the same leading component.
FreeModuleVector sVector(const FreeModuleVector& f, const FreeModuleVector& g);

}  // namespace germcalc
