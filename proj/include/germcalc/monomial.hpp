#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace germcalc {

/// Exponent vector x^a with its cached total degree.
class Monomial {
 public:
  using Exponents = boost::container::small_vector<std::uint32_t, 8>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exps);
  explicit Monomial(Exponents exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  bool isOne() const { return degree_ == 0; }
  const Exponents& exponents() const { return exps_; }

  /// True iff this divides other.
  bool divides(const Monomial& other) const;
  /// Precondition: divisor divides *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// Index of the variable when this is a pure power x_i^a (a >= 1), else -1.
  int purePowerVariable() const;

  /// Drops/inserts variables: result has `nvars` slots, slot i takes exponent
  /// of source slot map[i] (or 0 when map[i] < 0).
  Monomial remap(const std::vector<int>& map) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  Exponents exps_;
  std::uint64_t degree_ = 0;
};

enum class BlockKind { Global, Local };

/// Contiguous group of variables ordered by degree-reverse-lexicographic
/// rules: Global ranks higher degree first, Local ranks lower degree first.
struct OrderingBlock {
  std::size_t first;
  std::size_t count;
  BlockKind kind;
  friend bool operator==(const OrderingBlock&, const OrderingBlock&) = default;
};

/// Total, multiplicative order on monomials built from blocks compared in
/// sequence. Ties inside a block are broken by the reverse-lexicographic rule:
/// the last variable with differing exponent decides, smaller exponent wins.
class MonomialOrdering {
 public:
  enum class Kind { GlobalDegRevLex, LocalNegDegRevLex, EliminationBlock, Product };

  static MonomialOrdering globalDegRevLex(std::size_t nvars);
  static MonomialOrdering localNegDegRevLex(std::size_t nvars);
  /// The first `aux` variables form a global block compared first; the
  /// remaining variables form a local block.
  static MonomialOrdering eliminationBlock(std::size_t aux, std::size_t nvars);
  /// Arbitrary block list; blocks must partition the variables.
  static MonomialOrdering product(std::size_t nvars, std::vector<OrderingBlock> blocks);

  /// New ordering over `aux + nvars` variables: a global block on the new
  /// leading `aux` variables, then this ordering's blocks shifted by `aux`.
  MonomialOrdering withAuxiliaryBlock(std::size_t aux) const;

  /// -1, 0, +1. Throws std::invalid_argument on length mismatch.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::size_t variableCount() const { return nvars_; }
  Kind kind() const { return kind_; }
  const std::vector<OrderingBlock>& blocks() const { return blocks_; }
  /// Every variable is smaller than 1.
  bool isLocal() const;
  /// Every variable is larger than 1 (a well-ordering).
  bool isGlobal() const;
  /// The last compared block is local (Mora normal forms are permitted).
  bool hasLocalFinalBlock() const;
  /// Degree-compatible local order: deg a < deg b implies a > b.
  bool isLocalDegreeOrdering() const { return kind_ == Kind::LocalNegDegRevLex; }
  std::string describe() const;

  friend bool operator==(const MonomialOrdering& a, const MonomialOrdering& b) {
    return a.nvars_ == b.nvars_ && a.blocks_ == b.blocks_;
  }

 private:
  MonomialOrdering(std::size_t nvars, Kind kind, std::vector<OrderingBlock> blocks);
  std::size_t nvars_;
  Kind kind_;
  std::vector<OrderingBlock> blocks_;
};

}  // namespace germcalc
