#include "pentasol/iso.hpp"

#include <algorithm>
#include <numeric>

namespace pentasol {

namespace {

bool preserves_mul(const FiniteSemigroup& s, const FiniteSemigroup& t,
                   const std::vector<int>& f) {
  int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (f[s.mul(x, y)] != t.mul(f[x], f[y])) return false;
  return true;
}

}  // namespace

std::vector<IsoWitness> isomorphisms(const FiniteSemigroup& s,
                                     const FiniteSemigroup& t) {
  std::vector<IsoWitness> out;
  if (s.size() != t.size()) return out;
  std::vector<int> f(s.size());
  std::iota(f.begin(), f.end(), 0);
  do {
    if (preserves_mul(s, t, f)) out.push_back({f});
  } while (std::next_permutation(f.begin(), f.end()));
  return out;
}

std::vector<IsoWitness> automorphisms(const FiniteSemigroup& s) {
  return isomorphisms(s, s);
}

bool are_isomorphic(const FiniteSemigroup& s, const FiniteSemigroup& t) {
  if (s.size() != t.size()) return false;
  std::vector<int> f(s.size());
  std::iota(f.begin(), f.end(), 0);
  do {
    if (preserves_mul(s, t, f)) return true;
  } while (std::next_permutation(f.begin(), f.end()));
  return false;
}

std::vector<int> relabel_table(int n, const std::vector<int>& table,
                               const std::vector<int>& f) {
  std::vector<int> out(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out[f[x] * n + f[y]] = f[table[x * n + y]];
  return out;
}

std::vector<int> canonical_table(int n, const std::vector<int>& table) {
  std::vector<int> best = table;
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  do {
    auto candidate = relabel_table(n, table, f);
    if (candidate < best) best = std::move(candidate);
  } while (std::next_permutation(f.begin(), f.end()));
  return best;
}

}  // namespace pentasol
