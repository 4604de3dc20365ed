#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "germcalc/polynomial.hpp"

namespace germcalc::app {

/// Line-oriented input:
///   ring <Q|Fp:p> <vars...>     (first directive; vars by spaces or commas)
///   X: <poly>, <poly>, ...      (required; may be empty for the ambient space)
///   f: <poly>                   (optional)
///   seed: <n>                   (optional)
/// '#' starts a comment. Each directive appears at most once.
struct Germfile {
  std::string source;  // path or "<string>"
  RingPtr ring;
  std::vector<Polynomial> phi;
  std::optional<Polynomial> f;
  std::optional<std::uint64_t> seed;
};

/// Syntax or semantic error with a 1-based line and column.
class GermfileError : public std::runtime_error {
 public:
  GermfileError(const std::string& source, std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

Germfile parseGermfile(std::string_view text, std::uint32_t degreeCap = GermRing::kDefaultDegreeCap,
                       const std::string& source = "<string>");
/// Throws std::runtime_error when the file cannot be read.
Germfile loadGermfile(const std::string& path, std::uint32_t degreeCap = GermRing::kDefaultDegreeCap);

}  // namespace germcalc::app
