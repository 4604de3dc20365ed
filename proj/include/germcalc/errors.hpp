#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germcalc {

/// Malformed polynomial or germfile text; `position` is a 0-based offset
/// into the parsed string (or a 1-based line number for germfiles).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A standard basis computation exceeded the ring's degree cap. Raised
/// instead of returning a possibly wrong answer.
class DegreeCapExceeded : public std::runtime_error {
 public:
  explicit DegreeCapExceeded(unsigned cap)
      : std::runtime_error("degree cap " + std::to_string(cap) + " exceeded (set GERMCALC_DEGREE_CAP to raise it)") {}
};

/// An input does not satisfy the hypotheses of the requested invariant
/// (not an ICIS, function not finitely determined, degenerate draws).
class PreconditionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two routes that must agree did not, or an algebraic postcondition failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace germcalc
