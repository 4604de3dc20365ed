#include "germcalc/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace germcalc {

GermRing::GermRing(std::vector<std::string> names, Field field, MonomialOrdering ordering, std::uint32_t cap)
    : names_(std::move(names)), field_(field), ordering_(std::move(ordering)), degreeCap_(cap) {}

RingPtr GermRing::create(std::vector<std::string> names, Field field, std::optional<MonomialOrdering> ordering,
                         std::uint32_t degreeCap) {
  if (names.empty()) throw std::invalid_argument("a ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
  }
  MonomialOrdering ord = ordering ? *ordering : MonomialOrdering::localNegDegRevLex(names.size());
  if (ord.variableCount() != names.size())
    throw std::invalid_argument("ordering does not match variable count");
  return RingPtr(new GermRing(std::move(names), field, std::move(ord), degreeCap));
}

int GermRing::indexOf(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr GermRing::withOrdering(MonomialOrdering ordering) const {
  return create(names_, field_, std::move(ordering), degreeCap_);
}

RingPtr GermRing::withField(Field field) const { return create(names_, field, ordering_, degreeCap_); }

RingPtr GermRing::withDegreeCap(std::uint32_t cap) const { return create(names_, field_, ordering_, cap); }

RingPtr GermRing::withAuxiliaryVariables(const std::vector<std::string>& aux) const {
  std::vector<std::string> names;
  for (auto n : aux) {
    while (indexOf(n) >= 0 || std::find(names.begin(), names.end(), n) != names.end()) n += "_";
    names.push_back(n);
  }
  names.insert(names.end(), names_.begin(), names_.end());
  return create(std::move(names), field_, ordering_.withAuxiliaryBlock(aux.size()), degreeCap_);
}

bool operator==(const GermRing& a, const GermRing& b) {
  if (&a == &b) return true;
  return a.names_ == b.names_ && a.field_ == b.field_ && a.ordering_ == b.ordering_;
}

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, std::vector<Term> sortedTerms)
    : ring_(std::move(ring)), terms_(std::move(sortedTerms)) {}

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  if (!(c.field() == ring->field())) throw std::invalid_argument("constant from a different field");
  if (c.isZero()) return Polynomial(std::move(ring));
  const std::size_t n = ring->variableCount();
  return Polynomial(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::constant(RingPtr ring, long c) {
  Scalar s(ring->field(), c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->variableCount();
  return Polynomial(ring, {Term{Monomial::variable(n, index), ring->scalar(1)}});
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, Scalar c) {
  if (m.size() != ring->variableCount()) throw std::invalid_argument("monomial length mismatch");
  if (c.isZero()) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{std::move(m), std::move(c)}});
}

Polynomial Polynomial::fromTerms(RingPtr ring, std::vector<Term> terms) {
  const auto& ord = ring->ordering();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef.isZero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef.isZero()) out.pop_back();
  return Polynomial(std::move(ring), std::move(out));
}

void Polynomial::requireSameRing(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw std::invalid_argument("polynomials from different rings");
}

std::uint64_t Polynomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint64_t Polynomial::order() const {
  if (terms_.empty()) return 0;
  std::uint64_t d = terms_.front().mono.degree();
  for (const auto& t : terms_) d = std::min(d, t.mono.degree());
  return d;
}

Scalar Polynomial::constantTerm() const {
  for (const auto& t : terms_)
    if (t.mono.isOne()) return t.coef;
  return Scalar::zero(ring_->field());
}

bool Polynomial::isConstant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.isOne()); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  return subMulTerm(o, Monomial(ring_->variableCount()), -Scalar::one(ring_->field()));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return subMulTerm(o, Monomial(ring_->variableCount()), Scalar::one(ring_->field()));
}

Polynomial Polynomial::subMulTerm(const Polynomial& g, const Monomial& m, const Scalar& c) const {
  requireSameRing(g);
  if (c.isZero() || g.isZero()) return *this;
  const auto& ord = ring_->ordering();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  const bool trivialShift = m.isOne();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial bm = trivialShift ? b->mono : b->mono * m;
    if (a == terms_.end()) {
      out.push_back(Term{std::move(bm), -(c * b->coef)});
      ++b;
      continue;
    }
    const int cmp = ord.compare(a->mono, bm);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      out.push_back(Term{std::move(bm), -(c * b->coef)});
      ++b;
    } else {
      Scalar s = a->coef - c * b->coef;
      if (!s.isZero()) out.push_back(Term{std::move(bm), std::move(s)});
      ++a;
      ++b;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  requireSameRing(o);
  if (isZero() || o.isZero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mulTerm(o.terms_[0].mono, o.terms_[0].coef);
  if (terms_.size() == 1) return o.mulTerm(terms_[0].mono, terms_[0].coef);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) prod.push_back(Term{s.mono * t.mono, s.coef * t.coef});
  return fromTerms(ring_, std::move(prod));
}

Polynomial Polynomial::operator-() const { return scaled(-Scalar::one(ring_->field())); }

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.isZero()) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coef *= c;
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mulTerm(const Monomial& m, const Scalar& c) const {
  if (c.isZero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coef * c});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= ring_->variableCount()) throw std::out_of_range("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.mono[var];
    if (e == 0) continue;
    Scalar c = t.coef * Scalar(ring_->field(), static_cast<long>(e));
    if (c.isZero()) continue;
    out.push_back(Term{t.mono / Monomial::variable(t.mono.size(), var), std::move(c)});
  }
  // Lowering one exponent can reorder terms under block orderings.
  return fromTerms(ring_, std::move(out));
}

Polynomial Polynomial::truncated(std::uint64_t bound) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.degree() < bound) out.push_back(t);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (isZero()) return *this;
  return scaled(leadCoefficient().inverse());
}

Polynomial Polynomial::remap(RingPtr target, const std::vector<int>& map) const {
  if (map.size() != target->variableCount()) throw std::invalid_argument("variable map size mismatch");
  if (!(target->field() == ring_->field())) throw std::invalid_argument("remap across fields");
  std::vector<bool> kept(ring_->variableCount(), false);
  for (int m : map)
    if (m >= 0) kept.at(static_cast<std::size_t>(m)) = true;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < kept.size(); ++i)
      if (!kept[i] && t.mono[i] != 0) throw std::invalid_argument("remap drops a variable that occurs");
    out.push_back(Term{t.mono.remap(map), t.coef});
  }
  return fromTerms(std::move(target), std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->variableCount()) throw std::invalid_argument("substitution needs one image per variable");
  const RingPtr& target = images.front().ring();
  Polynomial result(target);
  std::vector<std::vector<Polynomial>> powers(images.size());
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef);
    for (std::size_t i = 0; i < images.size(); ++i) {
      const std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
      term *= cache[e];
    }
    result += term;
  }
  return result;
}

std::optional<Polynomial> Polynomial::exactDivide(const Polynomial& d) const {
  requireSameRing(d);
  if (d.isZero()) throw std::domain_error("division by the zero polynomial");
  Polynomial rem = *this;
  std::vector<Term> quot;
  const std::uint64_t bound = degree();
  const Monomial& dl = d.leadMonomial();
  const Scalar dlcInv = d.leadCoefficient().inverse();
  while (!rem.isZero()) {
    const Term& lt = rem.leadTerm();
    if (!dl.divides(lt.mono) || lt.mono.degree() > bound) return std::nullopt;
    Monomial q = lt.mono / dl;
    Scalar c = lt.coef * dlcInv;
    rem = rem.subMulTerm(d, q, c);
    quot.push_back(Term{std::move(q), std::move(c)});
  }
  return fromTerms(ring_, std::move(quot));
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    if (c.isNegative()) {
      os << '-';
      c = -c;
    } else if (!first) {
      os << '+';
    }
    first = false;
    bool needStar = false;
    if (!c.isOne() || t.mono.isOne()) {
      os << c.toString();
      needStar = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      const std::uint32_t e = t.mono[i];
      if (e == 0) continue;
      if (needStar) os << '*';
      os << ring_->names()[i];
      if (e > 1) os << '^' << e;
      needStar = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  return true;
}

}  // namespace germcalc
