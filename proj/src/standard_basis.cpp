#include "germcalc/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

#include "germcalc/errors.hpp"

namespace germcalc {

namespace {

struct Reducer {
  const FreeModuleVector* vec;
  std::size_t comp;
  Monomial lead;
  std::uint64_t ecart;
};

void requireMoraOrdering(const RingPtr& ring) {
  if (!ring->ordering().hasLocalFinalBlock() && !ring->ordering().isGlobal())
    throw std::invalid_argument("normal forms need a global ordering or one whose final block is local, got " +
                                ring->ordering().describe());
}

void checkCap(const FreeModuleVector& h, std::uint32_t cap) {
  if (h.degree() > cap) throw DegreeCapExceeded(cap);
}

// Drops every term of degree >= bound.
FreeModuleVector truncate(const FreeModuleVector& v, std::optional<std::uint64_t> bound) {
  if (!bound || v.isZero()) return v;
  std::vector<Polynomial> comps;
  for (const auto& c : v.components()) comps.push_back(c.truncated(*bound));
  return FreeModuleVector(std::move(comps));
}

FreeModuleVector leadingMonomialVector(const FreeModuleVector& v) {
  std::vector<Polynomial> comps(v.rank(), Polynomial(v.ring()));
  comps[v.leadComponent()] = Polynomial::monomial(v.ring(), v.leadMonomial(), Scalar::one(v.ring()->field()));
  return FreeModuleVector(std::move(comps));
}

// With a degree-compatible local ordering, a leading module containing every
// monomial of degree `bound` in each component forces m^bound * R^r into the
// module itself, so all terms of degree >= bound may be discarded.
std::optional<std::uint64_t> noetherBound(const MonomialOrdering& ord, std::size_t rank,
                                          const std::vector<std::size_t>& comp, const std::vector<Monomial>& lead) {
  if (!ord.isLocalDegreeOrdering()) return std::nullopt;
  const std::size_t n = ord.variableCount();
  std::uint64_t bound = 1;
  for (std::size_t c = 0; c < rank; ++c) {
    std::vector<std::uint32_t> power(n, 0);
    bool unit = false;
    for (std::size_t i = 0; i < lead.size(); ++i) {
      if (comp[i] != c) continue;
      if (lead[i].isOne()) unit = true;
      const int v = lead[i].purePowerVariable();
      if (v >= 0 && (power[v] == 0 || lead[i][v] < power[v])) power[v] = lead[i][v];
    }
    if (unit) continue;
    std::uint64_t sum = 1;
    for (auto a : power) {
      if (a == 0) return std::nullopt;
      sum += a - 1;
    }
    bound = std::max(bound, sum);
  }
  return bound;
}

FreeModuleVector weakNormalForm(FreeModuleVector h, std::vector<Reducer> table, std::uint32_t cap,
                                std::optional<std::uint64_t> bound = std::nullopt) {
  std::deque<FreeModuleVector> pushed;
  const bool global = h.ring()->ordering().isGlobal();
  h = truncate(h, bound);
  checkCap(h, cap);
  while (!h.isZero()) {
    const std::size_t comp = h.leadComponent();
    const Monomial lead = h.leadMonomial();
    const Reducer* best = nullptr;
    for (const auto& r : table) {
      if (r.comp != comp || !r.lead.divides(lead)) continue;
      if (!best || r.ecart < best->ecart) best = &r;
      if (best->ecart == 0) break;
    }
    if (!best) break;
    const std::uint64_t ecart = h.ecart();
    const Scalar factor = h.leadCoefficient() / best->vec->leadCoefficient();
    const Monomial shift = lead / best->lead;
    const FreeModuleVector* reducer = best->vec;
    // Under a well-ordering plain reduction terminates; recording h would
    // introduce non-unit multipliers.
    if (best->ecart > ecart && !global) {
      pushed.push_back(h);
      table.push_back(Reducer{&pushed.back(), comp, lead, ecart});
    }
    h = truncate(h.subMulTerm(*reducer, shift, factor), bound);
    checkCap(h, cap);
  }
  return h;
}

std::vector<Reducer> reducersFor(std::span<const FreeModuleVector> basis) {
  std::vector<Reducer> table;
  table.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.isZero()) continue;
    table.push_back(Reducer{&g, g.leadComponent(), g.leadMonomial(), g.ecart()});
  }
  return table;
}

// Calls visit(exponents) for every monomial of the component staircase.
// Returns false (and stops) if some variable has no pure power.
bool forEachStandardMonomial(const StandardBasis& basis, std::size_t component,
                             const std::function<void(const Monomial&)>& visit) {
  const std::size_t n = basis.ring()->variableCount();
  std::vector<const Monomial*> leads;
  for (const auto& lt : basis.leadingModule())
    if (lt.component == component) leads.push_back(&lt.monomial);
  for (const auto* m : leads)
    if (m->isOne()) return true;
  std::vector<std::uint32_t> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto* m : leads) {
      if (m->purePowerVariable() == static_cast<int>(v)) {
        bound[v] = found ? std::min(bound[v], (*m)[v]) : (*m)[v];
        found = true;
      }
    }
    if (!found) return false;
  }
  Monomial::Exponents exps(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t var) {
    Monomial m(exps);
    for (const auto* l : leads)
      if (l->divides(m)) return;  // every extension is divisible as well
    if (var == n) {
      visit(m);
      return;
    }
    for (std::uint32_t e = 0; e < bound[var]; ++e) {
      exps[var] = e;
      rec(var + 1);
    }
    exps[var] = 0;
  };
  rec(0);
  return true;
}

// Largest degree (< D) of a monomial outside the leading module, over all
// components; 0 when there is none.
std::uint64_t maxStaircaseDegree(const StandardBasis& basis, std::uint64_t D) {
  const std::size_t n = basis.ring()->variableCount();
  std::uint64_t best = 0;
  for (std::size_t c = 0; c < basis.rank(); ++c) {
    std::vector<const Monomial*> leads;
    for (const auto& lt : basis.leadingModule())
      if (lt.component == c) leads.push_back(&lt.monomial);
    Monomial::Exponents exps(n, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t var, std::uint64_t deg) {
      Monomial m(exps);
      for (const auto* l : leads)
        if (l->divides(m)) return;
      best = std::max(best, deg);
      if (best + 1 >= D) return;
      for (std::size_t v = var; v < n; ++v) {
        if (deg + 1 >= D) break;
        ++exps[v];
        rec(v, deg + 1);
        --exps[v];
      }
    };
    rec(0, 0);
  }
  return best;
}

}  // namespace

std::vector<Polynomial> StandardBasis::polynomials() const {
  if (rank_ != 1) throw std::invalid_argument("polynomials() needs a rank-1 basis");
  std::vector<Polynomial> out;
  for (const auto& g : gens_) out.push_back(g[0]);
  return out;
}

FreeModuleVector sVector(const FreeModuleVector& f, const FreeModuleVector& g) {
  const Monomial l = f.leadMonomial().lcm(g.leadMonomial());
  const Scalar one = Scalar::one(f.ring()->field());
  FreeModuleVector a = f.mulTerm(l / f.leadMonomial(), one / f.leadCoefficient());
  return a.subMulTerm(g, l / g.leadMonomial(), one / g.leadCoefficient());
}

FreeModuleVector moraNormalForm(const FreeModuleVector& v, std::span<const FreeModuleVector> basis) {
  requireMoraOrdering(v.ring());
  for (const auto& g : basis)
    if (g.rank() != v.rank()) throw std::invalid_argument("rank mismatch in normal form");
  return weakNormalForm(v, reducersFor(basis), v.ring()->degreeCap());
}

// Tangent cone algorithm. With `truncation` set, the result is a standard
// basis of M + m^truncation * R^r with every term of higher degree dropped.
// With `cutoff` < rank, elements whose leading component is >= cutoff are
// moved to `cut` instead of joining the basis: they take part in no pairs.
StandardBasis tangentConeBasis(const RingPtr& ring, std::size_t rank, const std::vector<FreeModuleVector>& gens,
                               std::optional<std::uint64_t> truncation, std::size_t cutoff,
                               std::vector<FreeModuleVector>* cut) {
  const std::uint32_t cap = ring->degreeCap();
  std::vector<FreeModuleVector> G;
  std::vector<std::size_t> comp;
  std::vector<Monomial> lead;
  std::optional<std::uint64_t> bound = truncation;
  std::deque<FreeModuleVector> incoming;
  for (const auto& g : gens) {
    if (g.rank() != rank) throw std::invalid_argument("generators of non-uniform rank");
    if (!(*g.ring() == *ring)) throw std::invalid_argument("generator from a different ring");
    incoming.push_back(g);
  }

  // Pending pairs keyed by (sugar, i, j). The sugar is the total degree of
  // the homogenized S-vector, i.e. lead degree plus ecart.
  using PairKey = std::tuple<std::uint64_t, std::size_t, std::size_t>;
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto addPair = [&](std::size_t i, std::size_t j) {
    if (comp[i] != comp[j]) return;
    const Monomial l = lead[i].lcm(lead[j]);
    const std::uint64_t sugar = std::max(G[i].degree() + (l / lead[i]).degree(), G[j].degree() + (l / lead[j]).degree());
    queue.emplace(sugar, i, j);
    pending.emplace(i, j);
  };
  auto isPending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  // A smaller Noether bound re-truncates the basis. An element whose leading
  // term reaches the bound keeps just that monomial (it lies in the module);
  // its truncated remainder is also in the module and is fed back in.
  auto tighten = [&] {
    auto b = noetherBound(ring->ordering(), rank, comp, lead);
    if (!b || (bound && *b >= *bound)) return;
    bound = b;
    for (std::size_t i = 0; i < G.size(); ++i) {
      FreeModuleVector t = truncate(G[i], bound);
      if (lead[i].degree() >= *bound) {
        G[i] = leadingMonomialVector(G[i]);
        if (!t.isZero()) incoming.push_back(std::move(t));
      } else {
        G[i] = std::move(t);
      }
    }
  };
  auto process = [&](const FreeModuleVector& v) {
    FreeModuleVector h = weakNormalForm(v, reducersFor(G), cap, bound);
    if (h.isZero()) return;
    if (h.leadComponent() >= cutoff) {
      cut->push_back(std::move(h));
      return;
    }
    G.push_back(h.monic());
    comp.push_back(G.back().leadComponent());
    lead.push_back(G.back().leadMonomial());
    for (std::size_t k = 0; k + 1 < G.size(); ++k) addPair(k, G.size() - 1);
    tighten();
  };

  while (!incoming.empty() || !queue.empty()) {
    if (!incoming.empty()) {
      FreeModuleVector v = std::move(incoming.front());
      incoming.pop_front();
      process(v);
      continue;
    }
    const auto [sugar, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    if (rank == 1 && lead[i].coprime(lead[j])) continue;
    const Monomial l = lead[i].lcm(lead[j]);
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || comp[k] != comp[i]) continue;
      chain = lead[k].divides(l) && !isPending(i, k) && !isPending(j, k);
    }
    if (chain) continue;
    process(sVector(G[i], G[j]));
  }

  StandardBasis sb;
  sb.ring_ = ring;
  sb.rank_ = rank;
  sb.noether_ = bound;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || comp[k] != comp[i] || !lead[k].divides(lead[i])) continue;
      redundant = !(lead[k] == lead[i]) || k < i;
    }
    if (redundant) continue;
    sb.gens_.push_back(G[i]);
    sb.leads_.push_back(LeadingTerm{comp[i], lead[i]});
  }
  return sb;
}

RingPtr globalOrderingCopy(const RingPtr& ring) {
  return ring->withOrdering(MonomialOrdering::globalDegRevLex(ring->variableCount()));
}

namespace {

// Relations (c, d) with c * v + sum d_j m_j = 0, over the polynomial ring;
// returns the generators c of the ideal M : v.
std::vector<Polynomial> colonByVector(const RingPtr& global, const std::vector<FreeModuleVector>& M,
                                      const FreeModuleVector& v) {
  const std::size_t r = v.rank(), s = M.size() + 1;
  std::vector<FreeModuleVector> lift;
  lift.push_back(changeRing(v, global).concat(FreeModuleVector::unit(global, s, 0)));
  for (std::size_t j = 0; j < M.size(); ++j)
    lift.push_back(changeRing(M[j], global).concat(FreeModuleVector::unit(global, s, j + 1)));
  std::vector<FreeModuleVector> cut;
  tangentConeBasis(global, r + s, lift, std::nullopt, r, &cut);
  std::vector<Polynomial> out;
  for (const auto& c : cut)
    if (!c[r].isZero()) out.push_back(c[r]);
  return out;
}

bool hasUnit(const std::vector<Polynomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [](const Polynomial& g) { return !g.constantTerm().isZero(); });
}

// The origin is an isolated point of V(I) (or not on it) iff I : x_i^inf
// contains an element with nonzero constant term for every variable x_i.
// The saturation is the t-free part of I + <1 - t x_i> under elimination.
bool originIsolated(const RingPtr& global, const std::vector<Polynomial>& ideal) {
  if (hasUnit(ideal)) return true;
  const std::size_t n = global->variableCount();
  const RingPtr big = global->withAuxiliaryVariables({"t"});
  std::vector<int> up(n + 1, -1);
  for (std::size_t i = 0; i < n; ++i) up[i + 1] = static_cast<int>(i);
  const Polynomial t = Polynomial::variable(big, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Polynomial> gens;
    for (const auto& g : ideal) gens.push_back(g.remap(big, up));
    gens.push_back(Polynomial::constant(big, 1) - t * Polynomial::variable(big, v + 1));
    const StandardBasis sb = tangentConeBasis(big, 1, asVectors(gens), std::nullopt, 1, nullptr);
    bool escapes = false;
    for (const auto& g : sb.generators())
      if (g.leadMonomial()[0] == 0 && !g[0].constantTerm().isZero()) escapes = true;
    if (!escapes) return false;
  }
  return true;
}

// R^r / M has finite length iff every R / (M : e_i) does.
bool finiteLocalColength(const RingPtr& ring, std::size_t rank, const std::vector<FreeModuleVector>& gens) {
  const RingPtr global = globalOrderingCopy(ring);
  for (std::size_t i = 0; i < rank; ++i) {
    std::vector<Polynomial> colon;
    if (rank == 1) {
      for (const auto& g : gens) colon.push_back(g[0].remap(global, identityMap(ring->variableCount())));
    } else {
      colon = colonByVector(global, gens, FreeModuleVector::unit(ring, rank, i));
    }
    if (!originIsolated(global, colon)) return false;
  }
  return true;
}

}  // namespace

bool locallyContains(const std::vector<FreeModuleVector>& M, const FreeModuleVector& v) {
  if (!v.ring()->ordering().isLocal())
    throw std::invalid_argument("local membership test needs a purely local ordering");
  if (v.isZero()) return true;
  if (M.empty()) return false;
  return hasUnit(colonByVector(globalOrderingCopy(v.ring()), M, v));
}

StandardBasis standardBasis(const RingPtr& ring, std::size_t rank, std::vector<FreeModuleVector> gens,
                            Truncation truncation) {
  requireMoraOrdering(ring);
  for (const auto& g : gens) {
    if (g.rank() != rank) throw std::invalid_argument("generators of non-uniform rank");
    if (!(*g.ring() == *ring)) throw std::invalid_argument("generator from a different ring");
  }
  if (truncation == Truncation::Off || !ring->ordering().isLocalDegreeOrdering())
    return tangentConeBasis(ring, rank, gens, std::nullopt, rank, nullptr);

  // Work modulo m^D for growing D. Once every monomial of degree D-1 is a
  // leading monomial of M + m^D, Nakayama gives m^(D-1) * R^r inside M and
  // the truncated basis is a standard basis of M itself.
  std::uint64_t order = 0;
  for (const auto& g : gens)
    for (const auto& c : g.components())
      if (!c.isZero()) order = std::max(order, c.order());
  const std::uint64_t cap = ring->degreeCap();
  int uncertified = 0;
  for (std::uint64_t D = std::min<std::uint64_t>(cap, std::max<std::uint64_t>(4, order + 2));; D = std::min(cap, 2 * D)) {
    StandardBasis sb = tangentConeBasis(ring, rank, gens, D, rank, nullptr);
    if (sb.noether_ && *sb.noether_ < D) return sb;
    if (maxStaircaseDegree(sb, D) + 2 <= D) {
      sb.noether_ = D - 1;
      return sb;
    }
    // Not certified after two truncations: either the colength is infinite,
    // which the global saturation test proves, or it is merely large.
    if (++uncertified == 2) {
      if (!finiteLocalColength(ring, rank, gens)) {
        sb.exact_ = false;
        sb.noether_.reset();
        sb.inputs_ = gens;
        return sb;
      }
    }
    if (D == cap) throw DegreeCapExceeded(cap);
  }
}

std::vector<FreeModuleVector> liftSyzygies(const RingPtr& ring, std::size_t top, std::size_t rank,
                                           const std::vector<FreeModuleVector>& lift) {
  requireMoraOrdering(ring);
  if (top > rank) throw std::invalid_argument("lift split beyond the rank");
  std::vector<FreeModuleVector> cut;
  tangentConeBasis(ring, rank, lift, std::nullopt, top, &cut);
  std::vector<FreeModuleVector> out;
  for (const auto& v : cut) out.push_back(v.slice(top, rank - top));
  return out;
}

StandardBasis standardBasis(std::vector<FreeModuleVector> gens) {
  if (gens.empty()) throw std::invalid_argument("standardBasis needs at least one generator");
  RingPtr ring = gens.front().ring();
  const std::size_t rank = gens.front().rank();
  return standardBasis(ring, rank, std::move(gens));
}

StandardBasis standardBasis(const std::vector<Polynomial>& ideal) {
  if (ideal.empty()) throw std::invalid_argument("standardBasis needs at least one generator");
  return standardBasis(ideal.front().ring(), ideal);
}

StandardBasis standardBasis(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  return standardBasis(ring, 1, asVectors(ideal));
}

ExtendedNat colength(const StandardBasis& basis) {
  if (!basis.ordering().isLocal())
    throw std::invalid_argument("colength needs a local ordering, got " + basis.ordering().describe());
  if (!basis.exact()) return ExtendedNat::infinite();
  std::uint64_t total = 0;
  for (std::size_t c = 0; c < basis.rank(); ++c) {
    std::uint64_t count = 0;
    if (!forEachStandardMonomial(basis, c, [&](const Monomial&) { ++count; })) return ExtendedNat::infinite();
    total += count;
  }
  return total;
}

ExtendedNat colength(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  return colength(standardBasis(ring, ideal));
}

std::vector<Monomial> standardMonomials(const StandardBasis& basis, std::size_t component) {
  if (!basis.ordering().isLocal()) throw std::invalid_argument("standard monomials need a local ordering");
  std::vector<Monomial> out;
  if (!forEachStandardMonomial(basis, component, [&](const Monomial& m) { out.push_back(m); }))
    throw std::invalid_argument("infinitely many standard monomials");
  const auto& ord = basis.ordering();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) > 0; });
  return out;
}

FreeModuleVector StandardBasis::normalForm(const FreeModuleVector& v) const {
  if (v.rank() != rank_) throw std::invalid_argument("rank mismatch in normal form");
  if (!exact_) throw std::logic_error("normal form against a basis known only modulo a power of m");
  return weakNormalForm(v, reducersFor(gens_), ring_->degreeCap(), noether_);
}

FreeModuleVector StandardBasis::reducedNormalForm(const FreeModuleVector& v) const {
  if (v.rank() != rank_) throw std::invalid_argument("rank mismatch in normal form");
  if (!noether_ || !ordering().isLocalDegreeOrdering())
    throw std::invalid_argument("reduced normal form needs a finite-colength basis under the local degree ordering");
  // Each step removes the leading term and only adds smaller ones, and there
  // are finitely many terms below the Noether bound, so this terminates
  // without the unit multipliers of the weak normal form.
  FreeModuleVector h = truncate(v, noether_);
  std::vector<std::vector<Term>> kept(rank_);
  while (!h.isZero()) {
    const std::size_t c = h.leadComponent();
    const Monomial lead = h.leadMonomial();
    const Scalar coef = h.leadCoefficient();
    const FreeModuleVector* reducer = nullptr;
    for (const auto& g : gens_)
      if (g.leadComponent() == c && g.leadMonomial().divides(lead)) {
        reducer = &g;
        break;
      }
    if (reducer) {
      h = truncate(h.subMulTerm(*reducer, lead / reducer->leadMonomial(), coef / reducer->leadCoefficient()), noether_);
    } else {
      kept[c].push_back(Term{lead, coef});
      h = h.subMulTerm(FreeModuleVector::unit(ring_, rank_, c), lead, coef);
    }
  }
  std::vector<Polynomial> comps;
  for (auto& terms : kept) comps.push_back(Polynomial::fromTerms(ring_, std::move(terms)));
  return comps.empty() ? FreeModuleVector(ring_, 0) : FreeModuleVector(std::move(comps));
}

bool isMember(const FreeModuleVector& v, const StandardBasis& basis) {
  if (v.rank() != basis.rank()) throw std::invalid_argument("rank mismatch in membership test");
  if (!basis.exact()) return locallyContains(basis.inputs_, v);
  return basis.normalForm(v).isZero();
}

bool isMember(const Polynomial& p, const StandardBasis& basis) {
  return isMember(FreeModuleVector::fromPolynomial(p), basis);
}

}  // namespace germcalc
