#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "germcalc/modops.hpp"

namespace germcalc {

/// (X, 0) = V(phi_1, ..., phi_k) in (K^n, 0); k = 0 is the ambient space.
class ICISPresentation {
 public:
  /// Throws std::invalid_argument when k > n or a generator lives elsewhere.
  ICISPresentation(RingPtr ring, Ideal phi);

  const RingPtr& ring() const { return ring_; }
  const Ideal& phi() const { return phi_; }
  std::size_t n() const { return ring_->variableCount(); }
  std::size_t k() const { return phi_.size(); }

  /// (phi, f), presenting X cut by f = 0.
  ICISPresentation withFunction(const Polynomial& f) const;
  /// Generators after substituting images[i] for x_i.
  ICISPresentation substituted(const std::vector<Polynomial>& images) const;

 private:
  RingPtr ring_;
  Ideal phi_;
};

/// The chain X_1 = V(g_1) > X_2 = V(g_1, g_2) > ... used for the Milnor
/// number: c_i = colength(<g_1..g_{i-1}> + i-minors of d(g_1..g_i)) equals
/// mu(X_i) + mu(X_{i-1}).
struct MilnorChain {
  Ideal generators;                  // combination of phi actually used
  std::vector<ExtendedNat> colengths;  // c_1, c_2, ... up to the first infinite one
  std::vector<std::uint64_t> milnor;   // mu(X_1) .. mu(X_k) when complete
  unsigned attempts = 0;
  bool complete() const { return milnor.size() == generators.size(); }
};

/// Tries phi in the given order, then up to 10 seeded random invertible
/// constant combinations, until every c_i is finite.
MilnorChain milnorChain(const ICISPresentation& X, std::uint64_t seed);

struct ICISCertificate {
  bool valid = false;
  std::string reason;               // why not, when invalid
  ExtendedNat singularColength;     // colength(<phi> + k-minors of d phi)
  MilnorChain chain;
};

/// X passes through 0, its singular locus is isolated and the chain above
/// exists.
ICISCertificate isICIS(const ICISPresentation& X, std::uint64_t seed = 1);

/// colength(Jf).
ExtendedNat milnorNumber(const Polynomial& f);
Ideal jacobianIdeal(const Polynomial& f);

/// Milnor number of an ICIS by the chain. For k = n it is also checked
/// against colength(<phi>) - 1. Infinite when the singular locus is not
/// isolated; throws PreconditionFailed when no chain is found.
ExtendedNat milnorICIS(const ICISPresentation& X, std::uint64_t seed = 1);

/// colength of O^k / (Im dphi + I_X O^k).
ExtendedNat tjurina(const ICISPresentation& X);

/// Vector fields as rank-n vectors of coefficients of d/dx_1 .. d/dx_n.
using VectorFieldModule = std::vector<FreeModuleVector>;

/// Fields tangent to X: relations of [dphi | phi_i e_j] cut to the first n
/// coordinates. Every generator is checked to satisfy dphi(xi) in I_X O^k.
VectorFieldModule thetaX(const ICISPresentation& X);
/// Cofactor fields of the (k+1)-minors of (d/dx ; dphi) plus phi_j d/dx_i.
VectorFieldModule thetaXTrivial(const ICISPresentation& X);
/// <df(xi) : xi a generator>.
Ideal dfImage(const Polynomial& f, const VectorFieldModule& theta);
/// (k+1)-minors of the Jacobian matrix of (f, phi).
Ideal relativeJacobian(const Polynomial& f, const ICISPresentation& X);

/// Positive integer weights making every generator quasi-homogeneous in the
/// given coordinates, searched up to a bound that keeps the search small.
std::optional<std::vector<std::uint32_t>> quasiHomogeneousWeights(const Ideal& gens);

/// Regular sequence test: some set of n - k random linear forms makes the
/// colength finite (then dim O/I = n - k). False may be a miss after
/// `attempts` draws.
bool isRegularSequence(const Ideal& I, std::mt19937_64& rng, unsigned attempts = 5);

/// Tor_1(O/I, O/J) by (I cap J)/(I J) and, when J has finite colength and I
/// is a regular sequence, by Koszul homology over O/J. InternalError when
/// the two differ.
struct Tor1Dimension {
  ExtendedNat subquotient;
  std::optional<std::uint64_t> koszul;
  ExtendedNat value() const { return subquotient; }
};
Tor1Dimension tor1Dimension(const Ideal& I, const Ideal& J, bool regularSequence);

/// Caches the X-only ingredients. Not safe for concurrent use of one object.
class ICISData {
 public:
  explicit ICISData(ICISPresentation X, std::uint64_t seed = 1);

  const ICISPresentation& presentation() const { return X_; }
  std::uint64_t seed() const { return seed_; }
  const ICISCertificate& certificate() const;
  ExtendedNat milnor() const;
  ExtendedNat tjurinaNumber() const;
  const VectorFieldModule& theta() const;
  const VectorFieldModule& trivialTheta() const;
  const std::optional<std::vector<std::uint32_t>>& weights() const;

 private:
  ICISPresentation X_;
  std::uint64_t seed_;
  mutable std::optional<ICISCertificate> cert_;
  mutable std::optional<ExtendedNat> mu_, tau_;
  mutable std::optional<VectorFieldModule> theta_, trivial_;
  mutable std::optional<std::optional<std::vector<std::uint32_t>>> weights_;
};

// Bruce-Roberts numbers of f on X.

/// colength(df(Theta_X) + I_X).
ExtendedNat bruceRobertsMinusDirect(const ICISData& X, const Polynomial& f);
/// colength(J(f, phi) + I_X) - tau(X). Throws PreconditionFailed when dim X = 0.
ExtendedNat bruceRobertsMinusFormula(const ICISData& X, const Polynomial& f);
/// colength(df(Theta_X)).
ExtendedNat bruceRobertsDirect(const ICISData& X, const Polynomial& f);

/// Terms of mu(f) + mu(X cap f=0) + mu(X) - tau(X) - colength(Jf + I_X) + Tor_1.
struct BruceRobertsTerms {
  ExtendedNat muF, muSection, muX, tauX, colengthJfIX;
  std::optional<Tor1Dimension> tor1;
  ExtendedNat value = ExtendedNat::infinite();
  std::string infiniteTerm;  // first infinite term, if any
};
BruceRobertsTerms bruceRobertsTor(const ICISData& X, const Polynomial& f);
/// k = 2: mu(f) + mu(X cap f=0) + mu(X) - tau(X) + colength(Jf + I_X).
/// Throws std::invalid_argument for k != 2.
BruceRobertsTerms bruceRobertsCodimTwo(const ICISData& X, const Polynomial& f);

/// mu(X cap f^-1(0)) by the chain of (phi, f). Throws PreconditionFailed when dim X = 0.
ExtendedNat sectionMilnor(const ICISData& X, const Polynomial& f);
/// colength(J(f, phi) + I_X) finite and (phi, f) an ICIS; false when dim X = 0.
bool isFinitelyDetermined(const ICISData& X, const Polynomial& f);

/// dim Theta_X / Theta_X^T and dim df(Theta_X) / df(Theta_X^T).
struct ThetaQuotients {
  ExtendedNat fields, images;
};
ThetaQuotients tauViaThetaQuotient(const ICISData& X, const Polynomial& f);

/// Random linear form with integer coefficients in [-9, 9], not all zero.
Polynomial randomLinearForm(const RingPtr& ring, std::mt19937_64& rng);
/// Images of x_i under a random invertible integer linear map.
std::vector<Polynomial> randomLinearCoordinates(const RingPtr& ring, std::mt19937_64& rng);

/// Polar multiplicity m_{n-k} = mu_BR^-(p) + tau and Euler obstruction
/// m_{n-k} - mu + (-1)^(n-k-1) for a generic linear p, taken as the minimum
/// over `draws` seeded random forms. Both mu_BR^- routes are compared on
/// every draw. Requires 1 <= k < n.
struct PolarData {
  ExtendedNat brMinus = ExtendedNat::infinite();
  ExtendedNat polarMultiplicity = ExtendedNat::infinite();
  std::optional<std::int64_t> eulerObstruction;
  std::optional<Polynomial> projection;
  unsigned finiteDraws = 0;
};
PolarData polarAndEuler(const ICISData& X, std::uint64_t seed, unsigned draws = 10);

/// Ideals of the logarithmic characteristic varieties in K{x}[p].
struct LCBundle {
  RingPtr ring;  // x_1..x_n local, then p_1..p_n global compared first
  Ideal lc, lcMinus, lcT;
};
LCBundle lcIdeals(const ICISData& X);

// Identity checks.

enum class Verdict { Pass, Fail, Skipped };
std::string toString(Verdict v);

struct IdentityCheck {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::Skipped;
  std::vector<std::pair<std::string, ExtendedNat>> sides;
  std::string note;
};

/// t22, t46, c412, c49, p47, p41, cor23.
const std::vector<std::string>& identityIds();
/// Throws std::invalid_argument for an unknown id. Inapplicable identities
/// come back Skipped with the reason in `note`.
IdentityCheck verifyIdentity(const std::string& id, const ICISData& X, const std::optional<Polynomial>& f);

// Reports.

enum class Method { Direct, Formula, Both };

struct InvariantValue {
  std::string name;
  std::optional<std::int64_t> value;  // nullopt: infinite
  std::string route;
};

struct InvariantReport {
  std::vector<InvariantValue> entries;
  /// Same quantity, different routes, different values.
  std::vector<std::string> mismatches;
  /// Requested but not computable here: (name, reason).
  std::vector<std::pair<std::string, std::string>> skipped;
  const InvariantValue* find(const std::string& name) const;
};

/// muX, tauX, muF, muSection, brMinusDirect, brMinusFormula, brDirect,
/// brThm46, brCor412, tor1, colengthJfIX, polarMult, eulerObstruction.
const std::vector<std::string>& invariantNames();
/// An empty list asks for everything. Names that need f, or whose
/// preconditions fail, land in `skipped`. Method picks the routes for the
/// Bruce-Roberts numbers, and Both records every disagreement.
InvariantReport computeInvariants(const ICISData& X, const std::optional<Polynomial>& f,
                                  const std::vector<std::string>& names, Method method);

// Tor lengths of two regular sequences.

enum class ScanStratum { Generic, Contained };

struct ScanRow {
  std::uint64_t trial = 0;
  Ideal I, J;
  std::vector<std::uint64_t> tor;
  std::uint64_t colength = 0;  // colength(I + J)
  std::vector<std::uint64_t> predicted;
  bool matches = false;
  bool eulerZero = false;
  unsigned redraws = 0;
};

struct ScanReport {
  std::size_t n = 0, k = 0;
  std::uint64_t trials = 0, seed = 0;
  std::uint32_t maxdeg = 0;
  Field field = Field::prime(Field::kDefaultPrime);
  ScanStratum stratum = ScanStratum::Generic;
  std::vector<ScanRow> rows;
  std::uint64_t abandoned = 0;  // trials with no valid draw
};

/// For each trial draws a regular sequence I of length k and J of length n
/// with finite colength (J containing I in the Contained stratum) and
/// compares dim Tor_i with binom(k, i) * colength(I + J).
ScanReport conjectureScan(std::size_t n, std::size_t k, std::uint64_t trials, std::uint32_t maxdeg,
                          std::uint64_t seed, const Field& field, ScanStratum stratum = ScanStratum::Generic);

}  // namespace germcalc
