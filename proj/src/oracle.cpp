#include "germcalc/oracle.hpp"

#include <map>
#include <stdexcept>

#include "germcalc/linalg.hpp"

namespace germcalc {

namespace {

std::vector<Monomial> monomialsBelow(std::size_t nvars, std::uint32_t bound) {
  std::vector<Monomial> out;
  Monomial::Exponents e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t var, std::uint32_t left) -> void {
    if (var == nvars) {
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      e[var] = k;
      self(self, var + 1, left - k);
    }
    e[var] = 0;
  };
  if (bound > 0) rec(rec, 0, bound - 1);
  return out;
}

std::uint64_t quotientDimension(const std::vector<Polynomial>& gens, std::uint32_t d) {
  const RingPtr& ring = gens.front().ring();
  const auto monos = monomialsBelow(ring->variableCount(), d);
  std::map<Monomial::Exponents, std::size_t> column;
  for (std::size_t i = 0; i < monos.size(); ++i) column.emplace(monos[i].exponents(), i);
  std::vector<Polynomial> rows;
  for (const auto& g : gens) {
    if (g.isZero() || g.order() >= d) continue;
    for (const auto& m : monos) {
      if (m.degree() + g.order() >= d) continue;
      rows.push_back(g.mulTerm(m, Scalar::one(ring->field())).truncated(d));
    }
  }
  DenseMatrix mat(ring->field(), rows.size(), monos.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& t : rows[r].terms()) mat(r, column.at(t.mono.exponents())) = t.coef;
  return monos.size() - rank(mat);
}

}  // namespace

ExtendedNat OracleResult::asExtendedNat() const {
  switch (status) {
    case Status::Finite:
      return value;
    case Status::Infinite:
      return ExtendedNat::infinite();
    default:
      throw std::runtime_error("oracle inconclusive at the truncation degree");
  }
}

std::string OracleResult::toString() const {
  switch (status) {
    case Status::Finite:
      return std::to_string(value);
    case Status::Infinite:
      return "infinite";
    default:
      return "inconclusive";
  }
}

OracleResult oracleColength(const std::vector<Polynomial>& gens, std::uint32_t truncationDegree) {
  if (gens.empty()) throw std::invalid_argument("oracle needs at least one generator");
  OracleResult res;
  res.dims.push_back(0);
  for (std::uint32_t d = 1; d <= truncationDegree; ++d) {
    res.dims.push_back(quotientDimension(gens, d));
    if (res.dims[d] == res.dims[d - 1]) {
      res.status = OracleResult::Status::Finite;
      res.value = res.dims[d];
      return res;
    }
  }
  const std::size_t last = res.dims.size() - 1;
  if (last >= 3) {
    auto h = [&](std::size_t d) { return res.dims[d] - res.dims[d - 1]; };
    if (h(last - 2) > 0 && h(last - 2) <= h(last - 1) && h(last - 1) <= h(last)) {
      res.status = OracleResult::Status::Infinite;
      return res;
    }
  }
  res.status = OracleResult::Status::Inconclusive;
  return res;
}

}  // namespace germcalc
