#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace germcalc {

/// Non-negative integer or infinity; the value type of every colength.
class ExtendedNat {
 public:
  constexpr ExtendedNat() = default;
  constexpr ExtendedNat(std::uint64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr ExtendedNat infinite() {
    ExtendedNat e;
    e.value_.reset();
    return e;
  }

  constexpr bool isFinite() const { return value_.has_value(); }
  constexpr bool isInfinite() const { return !value_.has_value(); }
  std::uint64_t value() const {
    if (!value_) throw std::logic_error("value() of an infinite ExtendedNat");
    return *value_;
  }

  friend ExtendedNat operator+(ExtendedNat a, ExtendedNat b) {
    if (a.isInfinite() || b.isInfinite()) return infinite();
    return ExtendedNat(*a.value_ + *b.value_);
  }
  friend constexpr bool operator==(const ExtendedNat&, const ExtendedNat&) = default;

  std::string toString() const { return value_ ? std::to_string(*value_) : "infinite"; }

 private:
  std::optional<std::uint64_t> value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const ExtendedNat& e) { return os << e.toString(); }

}  // namespace germcalc
