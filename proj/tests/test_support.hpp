#pragma once

#include <string>
#include <vector>

#include "germcalc/parser.hpp"
#include "germcalc/polynomial.hpp"

namespace germcalc::testing {

inline RingPtr ring(std::vector<std::string> names, Field field = Field::rationals()) {
  return GermRing::create(std::move(names), std::move(field));
}

inline Polynomial poly(const RingPtr& r, std::string_view text) { return parsePolynomial(text, r); }

inline std::vector<Polynomial> ideal(const RingPtr& r, std::string_view text) {
  return parsePolynomialList(text, r);
}

}  // namespace germcalc::testing
