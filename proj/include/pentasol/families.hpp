#pragma once

#include "pentasol/semigroup.hpp"

namespace pentasol {

/// Stock tables used all over the tests, the lab and the tools.

FiniteSemigroup null_semigroup(int n);        // xy = 0
FiniteSemigroup left_zero_semigroup(int n);   // xy = x
FiniteSemigroup right_zero_semigroup(int n);  // xy = y

/// The chain 0 > 1 > ... > n-1 under xy = max(x, y); an idempotent
/// commutative monoid with identity 0.
FiniteSemigroup chain_semilattice(int n);

FiniteSemigroup cyclic_group(int n);
FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);
FiniteSemigroup dihedral_group(int sides);  // order 2*sides
FiniteSemigroup quaternion_group();         // order 8

/// Appends an absorbing zero as index n; a declared identity survives.
FiniteSemigroup zero_adjoined(const FiniteSemigroup& s);

/// All groups of order 1..max_order, one per isomorphism class.
std::vector<FiniteSemigroup> groups_up_to_order(int max_order);

}  // namespace pentasol
