#include "germcalc/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "germcalc/artinian.hpp"
#include "germcalc/errors.hpp"
#include "germcalc/linalg.hpp"

namespace germcalc {

namespace {

constexpr unsigned kChainRetries = 10;

std::int64_t asSigned(const ExtendedNat& e) { return static_cast<std::int64_t>(e.value()); }

ExtendedNat fromSigned(std::int64_t v, const std::string& what) {
  if (v < 0) throw InternalError(what + " came out negative (" + std::to_string(v) + ")");
  return ExtendedNat(static_cast<std::uint64_t>(v));
}

ExtendedNat colengthOf(const RingPtr& ring, const Ideal& ideal) {
  return colength(standardBasis(ring, 1, asVectors(pruneGenerators(ideal))));
}

Ideal prefix(const Ideal& g, std::size_t len) { return Ideal(g.begin(), g.begin() + static_cast<long>(len)); }

Polynomial randomIntegerForm(const RingPtr& ring, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  Polynomial p(ring);
  while (p.isZero())
    for (std::size_t i = 0; i < ring->variableCount(); ++i)
      p += Polynomial::variable(ring, i).scaled(ring->scalar(coef(rng)));
  return p;
}

// Square integer matrix with entries in [-bound, bound], invertible over the field.
std::vector<std::vector<long>> randomInvertible(const Field& field, std::size_t k, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> coef(-bound, bound);
  for (;;) {
    std::vector<std::vector<long>> a(k, std::vector<long>(k));
    DenseMatrix m(field, k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        a[i][j] = coef(rng);
        m(i, j) = Scalar(field, a[i][j]);
      }
    if (rank(m) == k) return a;
  }
}

Ideal randomCombination(const ICISPresentation& X, std::mt19937_64& rng) {
  const auto a = randomInvertible(X.ring()->field(), X.k(), rng, 5);
  Ideal out;
  for (std::size_t i = 0; i < X.k(); ++i) {
    Polynomial g(X.ring());
    for (std::size_t j = 0; j < X.k(); ++j) g += X.phi()[j].scaled(X.ring()->scalar(a[i][j]));
    out.push_back(g);
  }
  return out;
}

FreeModuleVector unitTimes(const Polynomial& p, std::size_t rank, std::size_t index) {
  return FreeModuleVector::unit(p.ring(), rank, index) * p;
}

void addUnique(VectorFieldModule& out, FreeModuleVector v) {
  if (v.isZero()) return;
  const FreeModuleVector key = v.monic();
  for (const auto& w : out)
    if (w.monic() == key) return;
  out.push_back(std::move(v));
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t b = 1;
  for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

Polynomial withoutConstant(const Polynomial& f) {
  return f - Polynomial::constant(f.ring(), f.constantTerm());
}

}  // namespace

// ---------------------------------------------------------------------------

ICISPresentation::ICISPresentation(RingPtr ring, Ideal phi) : ring_(std::move(ring)), phi_(std::move(phi)) {
  if (phi_.size() > ring_->variableCount())
    throw std::invalid_argument("more equations than variables");
  for (const auto& g : phi_)
    if (!(*g.ring() == *ring_)) throw std::invalid_argument("equation from a different ring");
}

ICISPresentation ICISPresentation::withFunction(const Polynomial& f) const {
  Ideal g = phi_;
  g.push_back(f);
  return ICISPresentation(ring_, std::move(g));
}

ICISPresentation ICISPresentation::substituted(const std::vector<Polynomial>& images) const {
  Ideal g;
  for (const auto& p : phi_) g.push_back(p.substitute(images));
  return ICISPresentation(ring_, std::move(g));
}

MilnorChain milnorChain(const ICISPresentation& X, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MilnorChain chain;
  for (unsigned attempt = 0; attempt <= kChainRetries; ++attempt) {
    chain = MilnorChain{};
    chain.generators = attempt == 0 ? X.phi() : randomCombination(X, rng);
    chain.attempts = attempt + 1;
    std::uint64_t previous = 0;
    bool ok = true;
    for (std::size_t i = 1; i <= X.k(); ++i) {
      const Ideal head = prefix(chain.generators, i - 1);
      const ExtendedNat c =
          colengthOf(X.ring(), sum(head, maximalMinors(jacobianMatrix(prefix(chain.generators, i)), i)));
      chain.colengths.push_back(c);
      if (c.isInfinite()) {
        ok = false;
        break;
      }
      if (c.value() < previous) throw InternalError("Milnor chain term below the previous Milnor number");
      previous = c.value() - previous;
      chain.milnor.push_back(previous);
    }
    if (ok || X.k() == 0) return chain;
  }
  return chain;
}

ICISCertificate isICIS(const ICISPresentation& X, std::uint64_t seed) {
  ICISCertificate cert;
  for (const auto& g : X.phi()) {
    if (g.isZero()) {
      cert.reason = "zero equation";
      return cert;
    }
    if (!g.constantTerm().isZero()) {
      cert.reason = "X does not pass through the origin";
      return cert;
    }
  }
  if (X.k() == 0) {
    cert.valid = true;
    cert.singularColength = 0;
    return cert;
  }
  cert.singularColength = colengthOf(X.ring(), sum(X.phi(), maximalMinors(jacobianMatrix(X.phi()), X.k())));
  if (cert.singularColength.isInfinite()) {
    cert.reason = "singular locus is not isolated: colength(<phi> + maximal minors) is infinite";
    return cert;
  }
  cert.chain = milnorChain(X, seed);
  if (!cert.chain.complete()) {
    cert.reason = "no Milnor chain with finite colengths after " + std::to_string(cert.chain.attempts) + " attempts";
    return cert;
  }
  cert.valid = true;
  return cert;
}

Ideal jacobianIdeal(const Polynomial& f) {
  Ideal out;
  for (std::size_t i = 0; i < f.ring()->variableCount(); ++i) out.push_back(f.derivative(i));
  return pruneGenerators(out);
}

ExtendedNat milnorNumber(const Polynomial& f) { return colengthOf(f.ring(), jacobianIdeal(f)); }

ExtendedNat milnorICIS(const ICISPresentation& X, std::uint64_t seed) {
  if (X.k() == 0) return 0;
  const ICISCertificate cert = isICIS(X, seed);
  if (!cert.valid) {
    if (cert.singularColength.isInfinite() && !cert.reason.empty() && cert.reason.rfind("singular", 0) == 0)
      return ExtendedNat::infinite();
    throw PreconditionFailed("Milnor number undefined: " + cert.reason);
  }
  const std::uint64_t mu = cert.chain.milnor.back();
  if (X.k() == X.n()) {
    const ExtendedNat c = colengthOf(X.ring(), X.phi());
    if (c.isInfinite() || c.value() == 0 || c.value() - 1 != mu)
      throw InternalError("zero-dimensional Milnor number " + std::to_string(mu) + " disagrees with colength " +
                          c.toString() + " minus one");
  }
  return mu;
}

ExtendedNat tjurina(const ICISPresentation& X) {
  const std::size_t k = X.k();
  if (k == 0) return 0;
  std::vector<FreeModuleVector> gens = jacobianMatrix(X.phi()).columns();
  for (const auto& p : X.phi())
    for (std::size_t j = 0; j < k; ++j) gens.push_back(unitTimes(p, k, j));
  return colength(standardBasis(X.ring(), k, gens));
}

VectorFieldModule thetaX(const ICISPresentation& X) {
  const std::size_t n = X.n(), k = X.k();
  VectorFieldModule out;
  if (k == 0) {
    for (std::size_t i = 0; i < n; ++i) out.push_back(FreeModuleVector::unit(X.ring(), n, i));
    return out;
  }
  const PolyMatrix dphi = jacobianMatrix(X.phi());
  std::vector<FreeModuleVector> cols = dphi.columns();
  std::vector<FreeModuleVector> ix;
  for (const auto& p : X.phi())
    for (std::size_t j = 0; j < k; ++j) ix.push_back(unitTimes(p, k, j));
  cols.insert(cols.end(), ix.begin(), ix.end());
  for (const auto& v : syzygies(PolyMatrix::fromColumns(X.ring(), k, cols))) addUnique(out, v.slice(0, n));

  const StandardBasis ixBasis = standardBasis(X.ring(), k, ix);
  for (const auto& xi : out)
    if (!isMember(dphi * xi, ixBasis)) throw InternalError("tangent field fails dphi(xi) in I_X: " + xi.toString());
  return out;
}

VectorFieldModule thetaXTrivial(const ICISPresentation& X) {
  const std::size_t n = X.n(), k = X.k();
  VectorFieldModule out;
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  const std::optional<PolyMatrix> dphi = k ? std::optional(jacobianMatrix(X.phi())) : std::nullopt;
  // expansion of det (d/dx_S ; dphi_S) along the symbolic first row
  std::vector<std::size_t> cols(k + 1);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(std::min(n, k + 1)), true);
  if (k + 1 <= n) {
    do {
      std::size_t c = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) cols[c++] = i;
      FreeModuleVector xi(X.ring(), n);
      for (std::size_t t = 0; t <= k; ++t) {
        std::vector<std::size_t> rest;
        for (std::size_t u = 0; u <= k; ++u)
          if (u != t) rest.push_back(cols[u]);
        Polynomial minor = k ? dphi->submatrix(rows, rest).determinant() : Polynomial::constant(X.ring(), 1);
        if (t % 2) minor = -minor;
        xi = xi + unitTimes(minor, n, cols[t]);
      }
      addUnique(out, xi);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  for (const auto& p : X.phi())
    for (std::size_t i = 0; i < n; ++i) addUnique(out, unitTimes(p, n, i));
  return out;
}

Ideal dfImage(const Polynomial& f, const VectorFieldModule& theta) {
  const std::size_t n = f.ring()->variableCount();
  Ideal out;
  for (const auto& xi : theta) {
    if (xi.rank() != n) throw std::invalid_argument("vector field of the wrong rank");
    Polynomial v(f.ring());
    for (std::size_t j = 0; j < n; ++j) v += f.derivative(j) * xi[j];
    out.push_back(v);
  }
  return pruneGenerators(out);
}

Ideal relativeJacobian(const Polynomial& f, const ICISPresentation& X) {
  // more rows than columns: the minors ideal is zero
  if (X.k() + 1 > X.ring()->variableCount()) return {};
  Ideal g{f};
  g.insert(g.end(), X.phi().begin(), X.phi().end());
  return maximalMinors(jacobianMatrix(g), X.k() + 1);
}

std::optional<std::vector<std::uint32_t>> quasiHomogeneousWeights(const Ideal& gens) {
  if (gens.empty()) return std::nullopt;
  const std::size_t n = gens.front().ring()->variableCount();
  // differences of exponent vectors within one generator must be orthogonal to w
  std::vector<std::vector<long>> diffs;
  for (const auto& g : gens) {
    if (g.isZero()) continue;
    const auto& base = g.leadMonomial();
    for (const auto& t : g.terms()) {
      std::vector<long> d(n);
      bool zero = true;
      for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<long>(t.mono[i]) - static_cast<long>(base[i]);
        zero = zero && d[i] == 0;
      }
      if (!zero) diffs.push_back(std::move(d));
    }
  }
  std::uint32_t bound = 1;
  while (std::pow(static_cast<double>(bound + 1), static_cast<double>(n)) <= 200000.0 && bound < 1000) ++bound;
  std::vector<std::uint32_t> w(n, 1);
  for (;;) {
    const bool ok = std::all_of(diffs.begin(), diffs.end(), [&](const std::vector<long>& d) {
      long s = 0;
      for (std::size_t i = 0; i < n; ++i) s += d[i] * static_cast<long>(w[i]);
      return s == 0;
    });
    if (ok) {
      std::uint32_t g = 0;
      for (auto x : w) g = std::gcd(g, x);
      for (auto& x : w) x /= g;
      return w;
    }
    std::size_t i = 0;
    while (i < n && w[i] == bound) w[i++] = 1;
    if (i == n) return std::nullopt;
    ++w[i];
  }
}

bool isRegularSequence(const Ideal& I, std::mt19937_64& rng, unsigned attempts) {
  if (I.empty()) return true;
  const RingPtr& ring = I.front().ring();
  const std::size_t n = ring->variableCount(), k = I.size();
  if (k > n) return false;
  for (const auto& g : I)
    if (g.isZero() || !g.constantTerm().isZero()) return false;
  for (unsigned a = 0; a < (k == n ? 1u : attempts); ++a) {
    Ideal cut = I;
    for (std::size_t i = k; i < n; ++i) cut.push_back(randomIntegerForm(ring, rng, 9));
    if (colengthOf(ring, cut).isFinite()) return true;
  }
  return false;
}

Tor1Dimension tor1Dimension(const Ideal& I, const Ideal& J, bool regularSequence) {
  Tor1Dimension t;
  const Ideal pi = pruneGenerators(I), pj = pruneGenerators(J);
  if (pi.empty() || pj.empty()) {
    t.subquotient = 0;
    return t;
  }
  t.subquotient = subquotientColength(Subquotient(intersect(pi, pj), product(pi, pj)));
  if (regularSequence && colengthOf(pj.front().ring(), pj).isFinite()) {
    const auto tor = koszulTor(I, pj);
    t.koszul = tor.size() > 1 ? tor[1] : 0;
    if (ExtendedNat(*t.koszul) != t.subquotient)
      throw InternalError("Tor_1 routes disagree: (I cap J)/(IJ) has length " + t.subquotient.toString() +
                          ", Koszul homology " + std::to_string(*t.koszul));
  }
  return t;
}

// ---------------------------------------------------------------------------

ICISData::ICISData(ICISPresentation X, std::uint64_t seed) : X_(std::move(X)), seed_(seed) {}

const ICISCertificate& ICISData::certificate() const {
  if (!cert_) cert_ = isICIS(X_, seed_);
  return *cert_;
}

ExtendedNat ICISData::milnor() const {
  if (!mu_) {
    const auto& cert = certificate();
    if (X_.k() == 0) {
      mu_ = 0;
    } else if (!cert.valid) {
      mu_ = milnorICIS(X_, seed_);
    } else {
      mu_ = cert.chain.milnor.back();
      if (X_.k() == X_.n()) mu_ = milnorICIS(X_, seed_);
    }
  }
  return *mu_;
}

ExtendedNat ICISData::tjurinaNumber() const {
  if (!tau_) tau_ = tjurina(X_);
  return *tau_;
}

const VectorFieldModule& ICISData::theta() const {
  if (!theta_) theta_ = thetaX(X_);
  return *theta_;
}

const VectorFieldModule& ICISData::trivialTheta() const {
  if (!trivial_) trivial_ = thetaXTrivial(X_);
  return *trivial_;
}

const std::optional<std::vector<std::uint32_t>>& ICISData::weights() const {
  if (!weights_) weights_ = quasiHomogeneousWeights(X_.phi());
  return *weights_;
}

ExtendedNat bruceRobertsMinusDirect(const ICISData& X, const Polynomial& f) {
  return colengthOf(f.ring(), sum(dfImage(f, X.theta()), X.presentation().phi()));
}

ExtendedNat bruceRobertsMinusFormula(const ICISData& X, const Polynomial& f) {
  if (X.presentation().k() == X.presentation().n()) throw PreconditionFailed("needs dim X > 0");
  const ExtendedNat c = colengthOf(f.ring(), sum(relativeJacobian(f, X.presentation()), X.presentation().phi()));
  if (c.isInfinite()) return c;
  return fromSigned(asSigned(c) - asSigned(X.tjurinaNumber()), "colength(J(f,phi) + I_X) - tau");
}

ExtendedNat bruceRobertsDirect(const ICISData& X, const Polynomial& f) {
  return colengthOf(f.ring(), dfImage(f, X.theta()));
}

ExtendedNat sectionMilnor(const ICISData& X, const Polynomial& f) {
  if (X.presentation().k() == X.presentation().n())
    throw PreconditionFailed("X is zero-dimensional, so X cap f=0 is not a complete intersection");
  return milnorICIS(X.presentation().withFunction(withoutConstant(f)), X.seed());
}

bool isFinitelyDetermined(const ICISData& X, const Polynomial& f) {
  const auto& P = X.presentation();
  if (P.k() == P.n()) return false;
  if (colengthOf(f.ring(), sum(relativeJacobian(f, P), P.phi())).isInfinite()) return false;
  return isICIS(P.withFunction(withoutConstant(f)), X.seed()).valid;
}

namespace {

// Fills the four terms shared by both formulas; false when one is infinite.
bool commonTerms(const ICISData& X, const Polynomial& f, BruceRobertsTerms& t) {
  t.muF = milnorNumber(f);
  t.muX = X.milnor();
  t.tauX = X.tjurinaNumber();
  t.colengthJfIX = colengthOf(f.ring(), sum(jacobianIdeal(f), X.presentation().phi()));
  const std::pair<const char*, ExtendedNat*> named[] = {
      {"mu(f)", &t.muF}, {"mu(X)", &t.muX}, {"tau(X)", &t.tauX}, {"colength(Jf + I_X)", &t.colengthJfIX}};
  for (const auto& [name, value] : named)
    if (value->isInfinite()) {
      t.infiniteTerm = name;
      return false;
    }
  t.muSection = sectionMilnor(X, f);
  if (t.muSection.isInfinite()) {
    t.infiniteTerm = "mu(X cap f=0)";
    return false;
  }
  return true;
}

}  // namespace

BruceRobertsTerms bruceRobertsTor(const ICISData& X, const Polynomial& f) {
  BruceRobertsTerms t;
  if (!commonTerms(X, f, t)) return t;
  t.tor1 = tor1Dimension(X.presentation().phi(), jacobianIdeal(f), true);
  if (t.tor1->value().isInfinite()) {
    t.infiniteTerm = "Tor_1";
    return t;
  }
  t.value = fromSigned(asSigned(t.muF) + asSigned(t.muSection) + asSigned(t.muX) - asSigned(t.tauX) -
                           asSigned(t.colengthJfIX) + asSigned(t.tor1->value()),
                       "Bruce-Roberts number by the Tor formula");
  return t;
}

BruceRobertsTerms bruceRobertsCodimTwo(const ICISData& X, const Polynomial& f) {
  if (X.presentation().k() != 2) throw std::invalid_argument("codimension-two formula needs k = 2");
  BruceRobertsTerms t;
  if (!commonTerms(X, f, t)) return t;
  t.value = fromSigned(asSigned(t.muF) + asSigned(t.muSection) + asSigned(t.muX) - asSigned(t.tauX) +
                           asSigned(t.colengthJfIX),
                       "Bruce-Roberts number by the codimension-two formula");
  return t;
}

ThetaQuotients tauViaThetaQuotient(const ICISData& X, const Polynomial& f) {
  const auto& P = X.presentation();
  ThetaQuotients q;
  q.fields = subquotientColength(Subquotient(P.ring(), P.n(), X.theta(), X.trivialTheta()));
  const Ideal num = dfImage(f, X.theta()), den = dfImage(f, X.trivialTheta());
  q.images = num.empty() ? ExtendedNat(0) : subquotientColength(Subquotient(num, den));
  return q;
}

Polynomial randomLinearForm(const RingPtr& ring, std::mt19937_64& rng) { return randomIntegerForm(ring, rng, 9); }

std::vector<Polynomial> randomLinearCoordinates(const RingPtr& ring, std::mt19937_64& rng) {
  const std::size_t n = ring->variableCount();
  const auto a = randomInvertible(ring->field(), n, rng, 3);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial p(ring);
    for (std::size_t j = 0; j < n; ++j) p += Polynomial::variable(ring, j).scaled(ring->scalar(a[i][j]));
    images.push_back(p);
  }
  return images;
}

PolarData polarAndEuler(const ICISData& X, std::uint64_t seed, unsigned draws) {
  const auto& P = X.presentation();
  if (P.k() == 0 || P.k() >= P.n()) throw std::invalid_argument("polar multiplicity needs 1 <= k < n");
  std::mt19937_64 rng(seed);
  PolarData out;
  for (unsigned d = 0; d < draws; ++d) {
    const Polynomial p = randomLinearForm(P.ring(), rng);
    const ExtendedNat direct = bruceRobertsMinusDirect(X, p), formula = bruceRobertsMinusFormula(X, p);
    if (direct != formula)
      throw InternalError("mu_BR^- routes disagree for p = " + p.toString() + ": " + direct.toString() + " vs " +
                          formula.toString());
    if (direct.isInfinite()) continue;
    ++out.finiteDraws;
    if (out.brMinus.isInfinite() || direct.value() < out.brMinus.value()) {
      out.brMinus = direct;
      out.projection = p;
    }
  }
  if (out.brMinus.isInfinite()) throw PreconditionFailed("every linear form drawn had infinite mu_BR^-");
  out.polarMultiplicity = out.brMinus + X.tjurinaNumber();
  const std::int64_t sign = (P.n() - P.k() - 1) % 2 == 0 ? 1 : -1;
  out.eulerObstruction = asSigned(out.polarMultiplicity) - asSigned(X.milnor()) + sign;
  return out;
}

LCBundle lcIdeals(const ICISData& X) {
  const auto& P = X.presentation();
  const std::size_t n = P.n(), k = P.k();
  std::vector<std::string> names = P.ring()->names();
  std::string base = "p";
  auto clash = [&](const std::string& b) {
    for (std::size_t j = 1; j <= n; ++j)
      if (P.ring()->indexOf(b + std::to_string(j)) >= 0) return true;
    return false;
  };
  while (clash(base)) base += "p";
  for (std::size_t j = 1; j <= n; ++j) names.push_back(base + std::to_string(j));
  const auto ordering =
      MonomialOrdering::product(2 * n, {{n, n, BlockKind::Global}, {0, n, BlockKind::Local}});
  LCBundle out;
  out.ring = GermRing::create(names, P.ring()->field(), ordering, P.ring()->degreeCap());
  std::vector<int> map(2 * n, -1);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<int>(i);
  auto lift = [&](const Polynomial& q) { return q.remap(out.ring, map); };
  auto p = [&](std::size_t j) { return Polynomial::variable(out.ring, n + j); };

  for (const auto& xi : X.theta()) {
    Polynomial symbol(out.ring);
    for (std::size_t j = 0; j < n; ++j) symbol += lift(xi[j]) * p(j);
    out.lc.push_back(symbol);
  }
  out.lc = pruneGenerators(out.lc);
  Ideal pIdeal;
  for (std::size_t j = 0; j < n; ++j) pIdeal.push_back(p(j));
  out.lcMinus = quotientIdeal(out.lc, pIdeal);

  for (const auto& g : P.phi()) out.lcT.push_back(lift(g));
  if (k + 1 <= n) {
    PolyMatrix m(out.ring, k + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
      m(0, j) = p(j);
      for (std::size_t i = 0; i < k; ++i) m(i + 1, j) = lift(P.phi()[i].derivative(j));
    }
    const Ideal minors = maximalMinors(m, k + 1);
    out.lcT.insert(out.lcT.end(), minors.begin(), minors.end());
  }
  out.lcT = pruneGenerators(out.lcT);
  for (Ideal* I : {&out.lc, &out.lcMinus, &out.lcT})
    for (auto& g : *I) g = g.monic();
  return out;
}

// ---------------------------------------------------------------------------

std::string toString(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skipped:
      return "SKIPPED";
  }
  return "?";
}

const std::vector<std::string>& identityIds() {
  static const std::vector<std::string> ids = {"t22", "t46", "c412", "c49", "p47", "p41", "cor23"};
  return ids;
}

namespace {

IdentityCheck skipped(IdentityCheck c, std::string why) {
  c.verdict = Verdict::Skipped;
  c.note = std::move(why);
  return c;
}

void settleByEquality(IdentityCheck& c) {
  bool equal = !c.sides.empty();
  for (const auto& [name, value] : c.sides) equal = equal && value.isFinite() && value == c.sides.front().second;
  c.verdict = equal ? Verdict::Pass : Verdict::Fail;
}

}  // namespace

IdentityCheck verifyIdentity(const std::string& id, const ICISData& X, const std::optional<Polynomial>& f) {
  const auto& P = X.presentation();
  if (!X.certificate().valid) throw PreconditionFailed("not an ICIS: " + X.certificate().reason);
  IdentityCheck c;
  c.id = id;
  const bool needsF = id == "t22" || id == "t46" || id == "c412" || id == "c49" || id == "p41";
  if (std::find(identityIds().begin(), identityIds().end(), id) == identityIds().end())
    throw std::invalid_argument("unknown identity '" + id + "'");
  if (needsF && !f) return skipped(c, "needs a function f");
  if (P.k() == P.n() && (id == "t22" || id == "cor23")) return skipped(c, "needs dim X > 0");

  if (id == "t22") {
    c.statement = "mu(X cap f=0) = mu_BR^-(f,X) - mu(X) + tau(X)";
    const ExtendedNat brm = bruceRobertsMinusDirect(X, *f);
    if (brm.isInfinite()) return skipped(c, "mu_BR^-(f,X) is infinite");
    ExtendedNat lhs = ExtendedNat::infinite();
    try {
      lhs = sectionMilnor(X, *f);
    } catch (const PreconditionFailed& e) {
      c.note = e.what();
    }
    const std::int64_t rhs = asSigned(brm) - asSigned(X.milnor()) + asSigned(X.tjurinaNumber());
    c.sides = {{"mu(X cap f=0)", lhs}};
    c.sides.emplace_back("mu_BR^- - mu(X) + tau(X)", rhs < 0 ? ExtendedNat::infinite() : ExtendedNat(rhs));
    settleByEquality(c);
    if (rhs < 0) c.verdict = Verdict::Fail;
    return c;
  }
  if (id == "t46" || id == "c412") {
    if (id == "c412" && P.k() != 2) return skipped(c, "needs codimension k = 2");
    if (!isFinitelyDetermined(X, *f)) return skipped(c, "f is not finitely determined relative to X");
    if (milnorNumber(*f).isInfinite()) return skipped(c, "f has a non-isolated critical point");
    const BruceRobertsTerms tor = bruceRobertsTor(X, *f);
    if (id == "t46") {
      c.statement = "mu_BR(f,X) = mu(f) + mu(X cap f=0) + mu(X) - tau(X) - colength(Jf + I_X) + Tor_1";
      c.sides = {{"colength(df(Theta_X))", bruceRobertsDirect(X, *f)}, {"Tor formula", tor.value}};
    } else {
      c.statement = "mu_BR(f,X) = mu(f) + mu(X cap f=0) + mu(X) - tau(X) + colength(Jf + I_X)";
      c.sides = {{"Tor formula", tor.value}, {"codimension-two formula", bruceRobertsCodimTwo(X, *f).value}};
    }
    if (!tor.infiniteTerm.empty()) c.note = "infinite term: " + tor.infiniteTerm;
    settleByEquality(c);
    return c;
  }
  if (id == "c49") {
    c.statement = "dim Tor_1(O/I_X, O/Jf) = colength(I_X + Jf) for a hypersurface";
    if (P.k() != 1) return skipped(c, "needs a hypersurface, k = 1");
    if (milnorNumber(*f).isInfinite()) return skipped(c, "f has a non-isolated critical point");
    const Ideal jf = jacobianIdeal(*f);
    c.sides = {{"Tor_1", tor1Dimension(P.phi(), jf, true).value()},
               {"colength(I_X + Jf)", colengthOf(P.ring(), sum(P.phi(), jf))}};
    settleByEquality(c);
    return c;
  }
  if (id == "p47") {
    c.statement = "tau(X) = dim Theta_X/Theta_X^T = dim df(Theta_X)/df(Theta_X^T)";
    std::optional<Polynomial> g;
    if (f && isFinitelyDetermined(X, *f)) {
      g = *f;
    } else {
      std::mt19937_64 rng(X.seed());
      for (unsigned d = 0; d < 10 && !g; ++d) {
        const Polynomial p = randomLinearForm(P.ring(), rng);
        if (isFinitelyDetermined(X, p)) g = p;
      }
      if (!g) return skipped(c, "no finitely determined function found");
      c.note = "function " + g->toString();
    }
    const ThetaQuotients q = tauViaThetaQuotient(X, *g);
    c.sides = {{"tau(X)", X.tjurinaNumber()}, {"dim Theta_X/Theta_X^T", q.fields}, {"dim df(Theta_X)/df(Theta_X^T)", q.images}};
    settleByEquality(c);
    return c;
  }
  if (id == "p41") {
    c.statement = "colength(df(Theta_X)) finite iff colength(df(Theta_X^T)) finite";
    const ExtendedNat a = colengthOf(P.ring(), dfImage(*f, X.theta()));
    const ExtendedNat b = colengthOf(P.ring(), dfImage(*f, X.trivialTheta()));
    c.sides = {{"colength(df(Theta_X))", a}, {"colength(df(Theta_X^T))", b}};
    c.verdict = a.isFinite() == b.isFinite() ? Verdict::Pass : Verdict::Fail;
    return c;
  }
  // cor23
  c.statement = "mu(X) = tau(X) for a weighted homogeneous X";
  if (!X.weights()) return skipped(c, "no positive weights make X weighted homogeneous in these coordinates");
  c.sides = {{"mu(X)", X.milnor()}, {"tau(X)", X.tjurinaNumber()}};
  settleByEquality(c);
  return c;
}

// ---------------------------------------------------------------------------

const InvariantValue* InvariantReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const std::vector<std::string>& invariantNames() {
  static const std::vector<std::string> names = {
      "muX",     "tauX",    "muF",      "muSection", "brMinusDirect", "brMinusFormula", "brDirect",
      "brThm46", "brCor412", "tor1",    "colengthJfIX", "polarMult",  "eulerObstruction"};
  return names;
}

InvariantReport computeInvariants(const ICISData& X, const std::optional<Polynomial>& f,
                                  const std::vector<std::string>& requested, Method method) {
  const auto& P = X.presentation();
  for (const auto& name : requested)
    if (std::find(invariantNames().begin(), invariantNames().end(), name) == invariantNames().end())
      throw std::invalid_argument("unknown invariant '" + name + "'");
  auto wanted = [&](const std::string& name) {
    return requested.empty() || std::find(requested.begin(), requested.end(), name) != requested.end();
  };
  const bool direct = method != Method::Formula, formula = method != Method::Direct;
  const bool polar = P.k() >= 1 && P.k() < P.n();
  InvariantReport r;
  auto put = [&](const std::string& name, const ExtendedNat& v, const std::string& route) {
    r.entries.push_back({name, v.isFinite() ? std::optional<std::int64_t>(asSigned(v)) : std::nullopt, route});
  };
  // Runs `body` for a wanted name; an explicit request that cannot be met is recorded.
  auto attempt = [&](const std::string& name, bool applicable, const std::string& why, auto body) {
    if (!wanted(name)) return;
    if (!applicable) {
      if (!requested.empty()) r.skipped.emplace_back(name, why);
      return;
    }
    try {
      body();
    } catch (const PreconditionFailed& e) {
      r.skipped.emplace_back(name, e.what());
    }
  };
  auto agree = [&](const std::string& what, const std::vector<std::string>& names) {
    std::vector<const InvariantValue*> present;
    for (const auto& nm : names)
      if (const auto* e = r.find(nm)) present.push_back(e);
    for (std::size_t i = 1; i < present.size(); ++i)
      if (present[i]->value != present[0]->value)
        r.mismatches.push_back(what + ": " + present[0]->name + " and " + present[i]->name + " differ");
  };

  attempt("muX", true, "", [&] { put("muX", X.milnor(), "Milnor chain"); });
  attempt("tauX", true, "", [&] { put("tauX", X.tjurinaNumber(), "colength of O^k/(Im dphi + I_X O^k)"); });
  std::optional<PolarData> pd;
  const std::string polarWhy = "needs 1 <= k < n";
  attempt("polarMult", polar, polarWhy, [&] {
    pd = polarAndEuler(X, X.seed());
    put("polarMult", pd->polarMultiplicity, "generic mu_BR^- + tau");
  });
  attempt("eulerObstruction", polar, polarWhy, [&] {
    if (!pd) pd = polarAndEuler(X, X.seed());
    r.entries.push_back({"eulerObstruction", pd->eulerObstruction, "polar multiplicity - mu + sign"});
  });

  const bool hasF = f.has_value();
  const std::string noF = "needs a function f";
  const Ideal jf = hasF ? jacobianIdeal(*f) : Ideal{};
  attempt("muF", hasF, noF, [&] { put("muF", milnorNumber(*f), "colength(Jf)"); });
  attempt("muSection", hasF, noF, [&] { put("muSection", sectionMilnor(X, *f), "Milnor chain of (phi, f)"); });
  attempt("colengthJfIX", hasF, noF,
          [&] { put("colengthJfIX", colengthOf(P.ring(), sum(jf, P.phi())), "colength"); });
  attempt("tor1", hasF, noF, [&] {
    const Tor1Dimension t = tor1Dimension(P.phi(), jf, true);
    put("tor1", t.value(), t.koszul ? "(I_X cap Jf)/(I_X Jf), Koszul homology" : "(I_X cap Jf)/(I_X Jf)");
  });
  const std::string wrongMethod = "not computed by the selected method";
  attempt("brMinusDirect", hasF && direct, hasF ? wrongMethod : noF,
          [&] { put("brMinusDirect", bruceRobertsMinusDirect(X, *f), "colength(df(Theta_X) + I_X)"); });
  attempt("brMinusFormula", hasF && formula, hasF ? wrongMethod : noF,
          [&] { put("brMinusFormula", bruceRobertsMinusFormula(X, *f), "colength(J(f,phi) + I_X) - tau"); });
  attempt("brDirect", hasF && direct, hasF ? wrongMethod : noF,
          [&] { put("brDirect", bruceRobertsDirect(X, *f), "colength(df(Theta_X))"); });
  attempt("brThm46", hasF && formula, hasF ? wrongMethod : noF,
          [&] { put("brThm46", bruceRobertsTor(X, *f).value, "Tor formula"); });
  attempt("brCor412", hasF && formula && P.k() == 2, !hasF ? noF : P.k() != 2 ? "needs k = 2" : wrongMethod,
          [&] { put("brCor412", bruceRobertsCodimTwo(X, *f).value, "codimension-two formula"); });
  agree("mu_BR^-", {"brMinusDirect", "brMinusFormula"});
  agree("mu_BR", {"brDirect", "brThm46", "brCor412"});
  return r;
}

// ---------------------------------------------------------------------------

ScanReport conjectureScan(std::size_t n, std::size_t k, std::uint64_t trials, std::uint32_t maxdeg,
                          std::uint64_t seed, const Field& field, ScanStratum stratum) {
  if (n == 0 || k == 0 || k > n) throw std::invalid_argument("need 1 <= k <= n");
  if (maxdeg == 0) throw std::invalid_argument("maxdeg must be positive");
  ScanReport rep;
  rep.n = n;
  rep.k = k;
  rep.trials = trials;
  rep.maxdeg = maxdeg;
  rep.seed = seed;
  rep.field = field;
  rep.stratum = stratum;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 3 ? std::string(1, "xyz"[i]) : "x" + std::to_string(i + 1));
  const RingPtr ring = GermRing::create(names, field);
  std::mt19937_64 rng(seed);

  // all monomials of degree 1..maxdeg
  std::vector<Monomial> monomials;
  Monomial::Exponents e(n, 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var == n) {
      Monomial m(e);
      if (m.degree() >= 1) monomials.push_back(m);
      return;
    }
    for (std::uint32_t a = 0; a <= left; ++a) {
      e[var] = a;
      self(self, var + 1, left - a);
    }
    e[var] = 0;
  };
  rec(rec, 0, maxdeg);

  // dense in the degrees from a random order up to maxdeg, no constant term
  auto draw = [&]() {
    std::uniform_int_distribution<std::uint32_t> order(1, maxdeg);
    const std::uint32_t o = order(rng);
    std::uniform_int_distribution<long> coef = field.isRational()
                                                   ? std::uniform_int_distribution<long>(-9, 9)
                                                   : std::uniform_int_distribution<long>(0, field.characteristic() - 1);
    for (;;) {
      std::vector<Term> terms;
      for (const auto& m : monomials)
        if (m.degree() >= o) terms.push_back(Term{m, ring->scalar(coef(rng))});
      Polynomial p = Polynomial::fromTerms(ring, std::move(terms));
      if (!p.isZero()) return p;
    }
  };

  constexpr unsigned kRedraws = 50;
  for (std::uint64_t t = 0; t < trials; ++t) {
    bool done = false;
    for (unsigned attempt = 0; attempt < kRedraws && !done; ++attempt) {
      Ideal I, J;
      for (std::size_t i = 0; i < k; ++i) I.push_back(draw());
      if (!isRegularSequence(I, rng)) continue;
      if (stratum == ScanStratum::Contained) J = I;
      while (J.size() < n) J.push_back(draw());
      if (colengthOf(ring, J).isInfinite()) continue;
      ScanRow row;
      row.trial = t;
      row.redraws = attempt;
      row.tor = koszulTor(I, J);
      const ExtendedNat c = colengthOf(ring, sum(I, J));
      if (c != ExtendedNat(row.tor[0]))
        throw InternalError("Tor_0 " + std::to_string(row.tor[0]) + " differs from colength(I + J) " + c.toString());
      row.colength = c.value();
      std::int64_t chi = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        row.predicted.push_back(binomial(k, i) * row.colength);
        chi += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(row.tor[i]);
      }
      row.matches = row.tor == row.predicted;
      row.eulerZero = chi == 0;
      row.I = std::move(I);
      row.J = std::move(J);
      rep.rows.push_back(std::move(row));
      done = true;
    }
    if (!done) ++rep.abandoned;
  }
  return rep;
}

}  // namespace germcalc
