#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "pentasol/iso.hpp"
#include "pentasol/semigroup_enum.hpp"

using namespace pentasol;

namespace {

// Full-scan oracle: every table of order n, filtered by a direct triple
// check, deduplicated by min-over-permutations. Independent of the
// backtracking enumerator it validates.
struct Oracle {
  std::set<std::vector<int>> all;
  std::set<std::vector<int>> canonical;
  std::set<std::vector<int>> monoid_canonical;
};

Oracle scan_all(int n) {
  Oracle oracle;
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<int> t(n * n, 0);
  while (true) {
    bool assoc = true;
    for (int x = 0; x < n && assoc; ++x)
      for (int y = 0; y < n && assoc; ++y)
        for (int z = 0; z < n && assoc; ++z)
          assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
    if (assoc) {
      oracle.all.insert(t);
      std::vector<int> best = t;
      for (const auto& q : perms) {
        std::vector<int> r(n * n);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            r[q[x] * n + q[y]] = q[t[x * n + y]];
        if (r < best) best = r;
      }
      oracle.canonical.insert(best);
      if (find_identity(n, t)) oracle.monoid_canonical.insert(best);
    }
    int i = 0;
    while (i < n * n && ++t[i] == n) t[i++] = 0;
    if (i == n * n) break;
  }
  return oracle;
}

}  // namespace

TEST_CASE("semigroup enumeration matches the full-scan oracle") {
  // Class counts pinned by the oracle: 1, 5 and 24 for orders 1..3.
  const long long expected_classes[] = {1, 5, 24};
  const long long expected_monoid_classes[] = {1, 2, 7};
  for (int n = 1; n <= 3; ++n) {
    auto oracle = scan_all(n);
    CHECK(static_cast<long long>(oracle.canonical.size()) ==
          expected_classes[n - 1]);
    CHECK(static_cast<long long>(oracle.monoid_canonical.size()) ==
          expected_monoid_classes[n - 1]);

    SemigroupEnumOptions raw;
    auto everything = enumerate_semigroups(n, raw);
    std::set<std::vector<int>> got;
    for (const auto& s : everything) got.insert(s.table());
    CHECK(got == oracle.all);

    SemigroupEnumOptions iso;
    iso.up_to_iso = true;
    auto reps = enumerate_semigroups(n, iso);
    std::set<std::vector<int>> got_reps;
    for (const auto& s : reps) got_reps.insert(s.table());
    CHECK(got_reps == oracle.canonical);

    iso.monoid_only = true;
    auto monoids = enumerate_semigroups(n, iso);
    std::set<std::vector<int>> got_monoids;
    for (const auto& s : monoids) {
      CHECK(s.is_monoid());
      got_monoids.insert(s.table());
    }
    CHECK(got_monoids == oracle.monoid_canonical);
  }
}

TEST_CASE("representatives are pairwise non-isomorphic and canonical") {
  SemigroupEnumOptions iso;
  iso.up_to_iso = true;
  auto reps = enumerate_semigroups(3, iso);
  for (size_t i = 0; i < reps.size(); ++i) {
    CHECK(canonical_table(3, reps[i].table()) == reps[i].table());
    for (size_t j = i + 1; j < reps.size(); ++j)
      CHECK_FALSE(are_isomorphic(reps[i], reps[j]));
  }
}

TEST_CASE("order-4 monoid classes agree with an identity-pinned oracle") {
  // Independent scan: fix each identity position, fill the remaining 3x3
  // block, dedupe canonically.
  int n = 4;
  std::set<std::vector<int>> oracle;
  for (int e = 0; e < n; ++e) {
    std::vector<int> others;
    for (int x = 0; x < n; ++x)
      if (x != e) others.push_back(x);
    std::vector<int> block(9, 0);
    while (true) {
      std::vector<int> t(n * n);
      for (int x = 0; x < n; ++x) {
        t[e * n + x] = x;
        t[x * n + e] = x;
      }
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          t[others[i] * n + others[j]] = block[i * 3 + j];
      bool assoc = true;
      for (int x = 0; x < n && assoc; ++x)
        for (int y = 0; y < n && assoc; ++y)
          for (int z = 0; z < n && assoc; ++z)
            assoc = t[t[x * n + y] * n + z] == t[x * n + t[y * n + z]];
      if (assoc) oracle.insert(canonical_table(n, t));
      int i = 0;
      while (i < 9 && ++block[i] == n) block[i++] = 0;
      if (i == 9) break;
    }
  }
  CHECK(oracle.size() == 35);

  SemigroupEnumOptions opts;
  opts.up_to_iso = true;
  opts.monoid_only = true;
  auto monoids = enumerate_semigroups(4, opts);
  std::set<std::vector<int>> got;
  for (const auto& s : monoids) got.insert(s.table());
  CHECK(got == oracle);
}

TEST_CASE("enumeration caps") {
  CHECK_THROWS_AS(enumerate_semigroups(5), std::invalid_argument);
  SemigroupEnumOptions opts;
  opts.hard_cap = 2;
  CHECK_THROWS_AS(enumerate_semigroups(3, opts), std::invalid_argument);
}
