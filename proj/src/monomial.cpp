#include "germcalc/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace germcalc {

namespace {

std::uint64_t sum(const Monomial::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

}  // namespace

Monomial::Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps), degree_(sum(exps_)) {}

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)), degree_(sum(exps_)) {}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Exponents e(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

int Monomial::purePowerVariable() const {
  int found = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<int>(i);
  }
  return found;
}

Monomial Monomial::remap(const std::vector<int>& map) const {
  Exponents e(map.size(), 0);
  for (std::size_t i = 0; i < map.size(); ++i)
    if (map[i] >= 0) e[i] = exps_.at(static_cast<std::size_t>(map[i]));
  return Monomial(std::move(e));
}

MonomialOrdering::MonomialOrdering(std::size_t nvars, Kind kind, std::vector<OrderingBlock> blocks)
    : nvars_(nvars), kind_(kind), blocks_(std::move(blocks)) {
  std::vector<int> seen(nvars, 0);
  for (const auto& b : blocks_) {
    if (b.first + b.count > nvars) throw std::invalid_argument("ordering block exceeds variable count");
    for (std::size_t i = b.first; i < b.first + b.count; ++i) ++seen[i];
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; }))
    throw std::invalid_argument("ordering blocks must partition the variables");
}

MonomialOrdering MonomialOrdering::globalDegRevLex(std::size_t nvars) {
  return MonomialOrdering(nvars, Kind::GlobalDegRevLex, {{0, nvars, BlockKind::Global}});
}

MonomialOrdering MonomialOrdering::localNegDegRevLex(std::size_t nvars) {
  return MonomialOrdering(nvars, Kind::LocalNegDegRevLex, {{0, nvars, BlockKind::Local}});
}

MonomialOrdering MonomialOrdering::eliminationBlock(std::size_t aux, std::size_t nvars) {
  if (aux > nvars) throw std::invalid_argument("auxiliary block larger than variable count");
  return MonomialOrdering(nvars, Kind::EliminationBlock,
                          {{0, aux, BlockKind::Global}, {aux, nvars - aux, BlockKind::Local}});
}

MonomialOrdering MonomialOrdering::product(std::size_t nvars, std::vector<OrderingBlock> blocks) {
  return MonomialOrdering(nvars, Kind::Product, std::move(blocks));
}

MonomialOrdering MonomialOrdering::withAuxiliaryBlock(std::size_t aux) const {
  std::vector<OrderingBlock> blocks{{0, aux, BlockKind::Global}};
  for (const auto& b : blocks_) blocks.push_back({b.first + aux, b.count, b.kind});
  const Kind k = kind_ == Kind::LocalNegDegRevLex ? Kind::EliminationBlock : Kind::Product;
  return MonomialOrdering(nvars_ + aux, k, std::move(blocks));
}

int MonomialOrdering::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != nvars_ || b.size() != nvars_)
    throw std::invalid_argument("monomial length does not match ordering");
  for (const auto& blk : blocks_) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = blk.first; i < blk.first + blk.count; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) {
      const bool aBigger = blk.kind == BlockKind::Global ? da > db : da < db;
      return aBigger ? 1 : -1;
    }
    for (std::size_t i = blk.first + blk.count; i-- > blk.first;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
  }
  return 0;
}

bool MonomialOrdering::isLocal() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const OrderingBlock& b) { return b.kind == BlockKind::Local || b.count == 0; });
}

bool MonomialOrdering::isGlobal() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const OrderingBlock& b) { return b.kind == BlockKind::Global || b.count == 0; });
}

bool MonomialOrdering::hasLocalFinalBlock() const {
  for (auto it = blocks_.rbegin(); it != blocks_.rend(); ++it) {
    if (it->count == 0) continue;
    return it->kind == BlockKind::Local;
  }
  return false;
}

std::string MonomialOrdering::describe() const {
  switch (kind_) {
    case Kind::GlobalDegRevLex:
      return "dp";
    case Kind::LocalNegDegRevLex:
      return "ds";
    default:
      break;
  }
  std::string s = "(";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += ",";
    s += (blocks_[i].kind == BlockKind::Global ? "dp[" : "ds[") + std::to_string(blocks_[i].first) + "+" +
         std::to_string(blocks_[i].count) + "]";
  }
  return s + ")";
}

}  // namespace germcalc
