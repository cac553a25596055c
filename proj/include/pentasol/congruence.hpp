#pragma once

#include "pentasol/semigroup.hpp"

namespace pentasol {

/// A partition of the elements compatible with multiplication. Block ids
/// are normalized to first-appearance order, so equal partitions compare
/// equal regardless of how the input labelled its blocks.
class Congruence {
 public:
  /// Throws std::invalid_argument when the partition is not compatible:
  /// a ~ a' and b ~ b' must force ab ~ a'b'.
  Congruence(const FiniteSemigroup& s, std::vector<int> class_of);

  int block_count() const noexcept { return blocks_; }
  int block_of(int x) const { return class_of_[x]; }
  const std::vector<int>& classes() const noexcept { return class_of_; }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<int> class_of_;
  int blocks_;
};

/// The kernel congruence of a self-map: blocks are the fibers of m.
/// Throws std::invalid_argument ("not a congruence") when the fibers are
/// not multiplication-compatible, which signals that m is not a
/// homomorphism.
Congruence kernel_congruence(const FiniteSemigroup& s, const ElementMap& m);

struct QuotientResult {
  FiniteSemigroup quotient;
  std::vector<int> projection;  // element -> block
};

/// Cayley table on the blocks plus the projection map; the projection is a
/// surjective homomorphism, and the quotient inherits the identity block
/// when the input is a monoid.
QuotientResult quotient(const FiniteSemigroup& s, const Congruence& c);

}  // namespace pentasol
