#pragma once

#include "pentasol/semigroup.hpp"

namespace pentasol {

/// A multiplication-preserving bijection between two semigroups.
struct IsoWitness {
  std::vector<int> f;

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

/// All isomorphisms s -> t in lexicographic order of the permutation table;
/// empty when the sizes differ. Exhaustive over permutations, which is the
/// right tool at the orders this library handles.
std::vector<IsoWitness> isomorphisms(const FiniteSemigroup& s,
                                     const FiniteSemigroup& t);

std::vector<IsoWitness> automorphisms(const FiniteSemigroup& s);

bool are_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t);

/// Relabels the table along a bijection: result[f(x)][f(y)] = f(xy).
std::vector<int> relabel_table(int n, const std::vector<int>& table,
                               const std::vector<int>& f);

/// Lexicographically least relabelled table; the canonical representative
/// of the isomorphism class.
std::vector<int> canonical_table(int n, const std::vector<int>& table);

}  // namespace pentasol
