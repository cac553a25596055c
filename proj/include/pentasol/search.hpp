#pragma once

#include <map>

#include "pentasol/solution.hpp"

namespace pentasol {

struct SearchOptions {
  /// Flags set to true are required of every reported solution; they are
  /// pushed into the search as constraints, and every emitted solution is
  /// re-checked post-hoc.
  ClassificationFlags filter{};
  bool up_to_iso = false;
  int worker_count = 1;
  int hard_cap = 4;
};

/// Exactly the theta tables on s satisfying (P1) and (P2) plus the active
/// filters, in lexicographic theta order. With up_to_iso, one
/// representative per Aut(s)-orbit, namely the lexicographically least
/// theta of the orbit. Any worker_count produces the identical list.
std::vector<PentagonSolution> enumerate_solutions(
    const FiniteSemigroup& s, const SearchOptions& options = {});

/// Counts of the full solution list keyed by classification bitmask.
std::map<uint32_t, long long> count_by_flags(const FiniteSemigroup& s,
                                             bool up_to_iso = false,
                                             int worker_count = 1);

}  // namespace pentasol
