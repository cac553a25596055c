#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pentasol/congruence.hpp"
#include "pentasol/families.hpp"
#include "pentasol/iso.hpp"

using namespace pentasol;

namespace {

FiniteSemigroup worked_monoid() {
  return FiniteSemigroup::from_rows({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}, 0);
}

}  // namespace

TEST_CASE("kernel congruences") {
  auto m = worked_monoid();

  auto discrete = kernel_congruence(m, identity_map(3));
  CHECK(discrete.block_count() == 3);

  auto full = kernel_congruence(m, ElementMap(3, {0, 0, 0}));
  CHECK(full.block_count() == 1);

  // gamma fixing the zero element and collapsing the unit pair.
  auto gamma = kernel_congruence(m, ElementMap(3, {0, 1, 0}));
  CHECK(gamma.block_count() == 2);
  CHECK(gamma.block_of(0) == gamma.block_of(2));
  CHECK(gamma.block_of(0) != gamma.block_of(1));

  // Fibers of a non-homomorphism are not compatible.
  CHECK_THROWS_AS(kernel_congruence(m, ElementMap(3, {0, 0, 2})),
                  std::invalid_argument);
}

TEST_CASE("quotients") {
  auto m = worked_monoid();

  auto discrete = quotient(m, kernel_congruence(m, identity_map(3)));
  CHECK(discrete.quotient.table() == m.table());

  auto full = quotient(m, kernel_congruence(m, ElementMap(3, {0, 0, 0})));
  CHECK(full.quotient.size() == 1);

  auto halves = quotient(m, kernel_congruence(m, ElementMap(3, {0, 1, 0})));
  CHECK(halves.quotient.size() == 2);
  CHECK(halves.quotient.table() == std::vector<int>{0, 1, 1, 1});
  CHECK(halves.quotient.identity() == 0);

  // The projection is a homomorphism onto the quotient.
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      CHECK(halves.projection[m.mul(x, y)] ==
            halves.quotient.mul(halves.projection[x], halves.projection[y]));
}

TEST_CASE("isomorphism search") {
  auto z2 = cyclic_group(2);
  auto autos = automorphisms(z2);
  REQUIRE(autos.size() == 1);
  CHECK(autos[0].f == std::vector<int>{0, 1});

  // Any bijection fixing the absorbing element preserves xy = 0.
  auto nulls = automorphisms(null_semigroup(3));
  REQUIRE(nulls.size() == 2);
  CHECK(nulls[0].f == std::vector<int>{0, 1, 2});
  CHECK(nulls[1].f == std::vector<int>{0, 2, 1});

  auto same = isomorphisms(worked_monoid(), worked_monoid());
  bool has_identity = false;
  for (const auto& w : same) has_identity |= w.f == std::vector<int>{0, 1, 2};
  CHECK(has_identity);

  CHECK(isomorphisms(cyclic_group(2), cyclic_group(3)).empty());
  CHECK_FALSE(are_isomorphic(left_zero_semigroup(2), right_zero_semigroup(2)));
}

TEST_CASE("canonical tables are relabelling invariant") {
  std::mt19937 rng(7);
  auto m = worked_monoid();
  auto canon = canonical_table(3, m.table());
  std::vector<int> perm{0, 1, 2};
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), rng);
    auto relabelled = relabel_table(3, m.table(), perm);
    CHECK(canonical_table(3, relabelled) == canon);
  }
}
