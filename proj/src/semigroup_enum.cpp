#include "pentasol/semigroup_enum.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pentasol {

namespace {

// Associativity over the assigned part of a partial table (-1 = free).
// Checks every triple whose four lookups are all assigned; sound for
// pruning because a violation can only persist.
bool partial_associative(int n, const std::vector<int>& t) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = t[x * n + y];
      if (xy < 0) continue;
      for (int z = 0; z < n; ++z) {
        int yz = t[y * n + z];
        if (yz < 0) continue;
        int l = t[xy * n + z];
        int r = t[x * n + yz];
        if (l >= 0 && r >= 0 && l != r) return false;
      }
    }
  return true;
}

struct Enumerator {
  int n;
  SemigroupEnumOptions opts;
  std::vector<std::vector<int>> perms;
  std::vector<FiniteSemigroup> out;

  void leaf(const std::vector<int>& t) {
    auto identity = find_identity(n, t);
    if (opts.monoid_only && !identity) return;
    if (opts.up_to_iso) {
      for (const auto& p : perms) {
        std::vector<int> relabelled(n * n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            relabelled[p[x] * n + p[y]] = p[t[x * n + y]];
        if (relabelled < t) return;  // a smaller table represents this class
      }
    }
    out.emplace_back(n, t, identity);
  }

  void fill(std::vector<int>& t, int pos) {
    if (pos == n * n) {
      leaf(t);
      return;
    }
    for (int v = 0; v < n; ++v) {
      t[pos] = v;
      if (partial_associative(n, t)) fill(t, pos + 1);
    }
    t[pos] = -1;
  }
};

}  // namespace

std::vector<FiniteSemigroup> enumerate_semigroups(
    int n, const SemigroupEnumOptions& options) {
  if (n <= 0) throw std::invalid_argument("order must be positive");
  if (n > options.hard_cap)
    throw std::invalid_argument(
        "order " + std::to_string(n) + " exceeds the enumeration cap " +
        std::to_string(options.hard_cap) +
        "; raise hard_cap explicitly to acknowledge the runtime");

  Enumerator e{n, options, {}, {}};
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    e.perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<int> t(n * n, -1);
  e.fill(t, 0);
  return std::move(e.out);
}

}  // namespace pentasol
