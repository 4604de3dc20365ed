#include "germcalc/module_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace germcalc {

FreeModuleVector::FreeModuleVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
  comps_.assign(rank, Polynomial(ring_));
}

FreeModuleVector::FreeModuleVector(std::vector<Polynomial> components) : comps_(std::move(components)) {
  if (comps_.empty()) throw std::invalid_argument("use the (ring, rank) constructor for rank 0");
  ring_ = comps_.front().ring();
  for (const auto& c : comps_)
    if (!(*c.ring() == *ring_)) throw std::invalid_argument("vector components from different rings");
}

FreeModuleVector FreeModuleVector::unit(RingPtr ring, std::size_t rank, std::size_t index) {
  FreeModuleVector v(ring, rank);
  v.comps_.at(index) = Polynomial::constant(ring, 1);
  return v;
}

FreeModuleVector FreeModuleVector::fromPolynomial(const Polynomial& p) { return FreeModuleVector({p}); }

bool FreeModuleVector::isZero() const {
  return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.isZero(); });
}

std::size_t FreeModuleVector::leadComponent() const {
  const bool byDegree = ring_->ordering().isLocalDegreeOrdering();
  std::size_t best = comps_.size();
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].isZero()) continue;
    if (!byDegree) return i;
    if (best == comps_.size() || comps_[i].leadMonomial().degree() < comps_[best].leadMonomial().degree()) best = i;
  }
  if (best == comps_.size()) throw std::logic_error("lead component of the zero vector");
  return best;
}

std::uint64_t FreeModuleVector::degree() const {
  std::uint64_t d = 0;
  for (const auto& c : comps_) d = std::max(d, c.degree());
  return d;
}

std::uint64_t FreeModuleVector::ecart() const { return degree() - leadMonomial().degree(); }

void FreeModuleVector::requireCompatible(const FreeModuleVector& o) const {
  if (o.rank() != rank()) throw std::invalid_argument("rank mismatch");
}

FreeModuleVector FreeModuleVector::operator+(const FreeModuleVector& o) const {
  requireCompatible(o);
  FreeModuleVector r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] += o.comps_[i];
  return r;
}

FreeModuleVector FreeModuleVector::operator-(const FreeModuleVector& o) const {
  requireCompatible(o);
  FreeModuleVector r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i) r.comps_[i] -= o.comps_[i];
  return r;
}

FreeModuleVector FreeModuleVector::operator*(const Polynomial& p) const {
  FreeModuleVector r = *this;
  for (auto& c : r.comps_) c *= p;
  return r;
}

FreeModuleVector FreeModuleVector::scaled(const Scalar& s) const {
  FreeModuleVector r = *this;
  for (auto& c : r.comps_) c = c.scaled(s);
  return r;
}

FreeModuleVector FreeModuleVector::mulTerm(const Monomial& m, const Scalar& s) const {
  FreeModuleVector r = *this;
  for (auto& c : r.comps_) c = c.mulTerm(m, s);
  return r;
}

FreeModuleVector FreeModuleVector::subMulTerm(const FreeModuleVector& g, const Monomial& m, const Scalar& s) const {
  requireCompatible(g);
  FreeModuleVector r = *this;
  for (std::size_t i = 0; i < comps_.size(); ++i)
    if (!g.comps_[i].isZero()) r.comps_[i] = comps_[i].subMulTerm(g.comps_[i], m, s);
  return r;
}

FreeModuleVector FreeModuleVector::monic() const {
  if (isZero()) return *this;
  return scaled(leadCoefficient().inverse());
}

FreeModuleVector FreeModuleVector::slice(std::size_t first, std::size_t count) const {
  if (first + count > comps_.size()) throw std::out_of_range("slice out of range");
  FreeModuleVector r(ring_, count);
  for (std::size_t i = 0; i < count; ++i) r.comps_[i] = comps_[first + i];
  return r;
}

FreeModuleVector FreeModuleVector::concat(const FreeModuleVector& tail) const {
  FreeModuleVector r = *this;
  r.comps_.insert(r.comps_.end(), tail.comps_.begin(), tail.comps_.end());
  return r;
}

std::string FreeModuleVector::toString() const {
  std::string s = "[";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += ", ";
    s += comps_[i].toString();
  }
  return s + "]";
}

std::vector<int> identityMap(std::size_t n) {
  std::vector<int> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<int>(i);
  return map;
}

FreeModuleVector changeRing(const FreeModuleVector& v, const RingPtr& target) {
  if (v.rank() == 0) return FreeModuleVector(target, 0);
  const auto map = identityMap(target->variableCount());
  std::vector<Polynomial> comps;
  for (const auto& c : v.components()) comps.push_back(c.remap(target, map));
  return FreeModuleVector(std::move(comps));
}

std::vector<FreeModuleVector> asVectors(const std::vector<Polynomial>& ideal) {
  std::vector<FreeModuleVector> out;
  out.reserve(ideal.size());
  for (const auto& p : ideal) out.push_back(FreeModuleVector::fromPolynomial(p));
  return out;
}

}  // namespace germcalc
