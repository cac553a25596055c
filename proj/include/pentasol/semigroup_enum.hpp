#pragma once

#include "pentasol/semigroup.hpp"

namespace pentasol {

struct SemigroupEnumOptions {
  bool monoid_only = false;
  bool up_to_iso = false;
  /// Order 5 is out of desk scale (about a million classes); refuse past
  /// this cap unless the caller raises it explicitly.
  int hard_cap = 4;
};

/// Every Cayley table of order n that is associative, by backtracking with
/// incremental associativity pruning. Tables arrive in lexicographic order.
/// With up_to_iso, keeps exactly the tables that are lexicographically
/// least within their isomorphism class. An identity, when the table has
/// one, is detected and stored on the result.
std::vector<FiniteSemigroup> enumerate_semigroups(
    int n, const SemigroupEnumOptions& options = {});

}  // namespace pentasol
