#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pentasol/families.hpp"
#include "pentasol/semigroup.hpp"

using namespace pentasol;

namespace {

// Independent triple-by-triple oracle used to pin the frozen witnesses.
bool oracle_associative(int n, const std::vector<int>& t) {
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[t[x * n + y] * n + z] != t[x * n + t[y * n + z]]) return false;
  return true;
}

FiniteSemigroup worked_monoid() {
  // {1, a, b} with a A zero element and b of order two: a^2 = ab = a,
  // b^2 = 1. Indices 1 -> 0, a -> 1, b -> 2.
  return FiniteSemigroup::from_rows({{0, 1, 2}, {1, 1, 1}, {2, 1, 0}}, 0);
}

}  // namespace

TEST_CASE("associativity scan accepts and rejects") {
  CHECK(check_associativity(1, {0}).ok);
  CHECK(check_associativity(2, {0, 1, 1, 0}).ok);  // xor

  // Frozen from the 8-triple hand check: (0*0)*1 = 1*1 = 0 while
  // 0*(0*1) = 0*0 = 1.
  auto bad = check_associativity(2, {1, 0, 0, 0});
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness == std::array<int, 3>{0, 0, 1});
  CHECK_FALSE(oracle_associative(2, {1, 0, 0, 0}));
}

TEST_CASE("associativity scan matches the oracle on random tables") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dist(0, 2);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<int> t(9);
    for (auto& v : t) v = dist(rng);
    CHECK(check_associativity(3, t).ok == oracle_associative(3, t));
  }
}

TEST_CASE("malformed tables are rejected") {
  CHECK_THROWS_AS(check_associativity(2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(check_associativity(2, {0, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup(2, {1, 0, 0, 0}), std::invalid_argument);
  // declared identity must actually be one
  CHECK_THROWS_AS(FiniteSemigroup(2, {0, 0, 0, 0}, 1), std::invalid_argument);
}

TEST_CASE("idempotents") {
  CHECK(cyclic_group(2).idempotents() == std::vector<int>{0});
  CHECK(null_semigroup(3).idempotents() == std::vector<int>{0});
  CHECK(worked_monoid().idempotents() == std::vector<int>{0, 1});
}

TEST_CASE("idempotent order") {
  auto m = worked_monoid();
  CHECK(idempotent_leq(m, 1, 1));
  CHECK(idempotent_leq(m, 1, 0));  // identity on top
  CHECK_FALSE(idempotent_leq(m, 0, 1));
  CHECK(idempotent_leq(null_semigroup(3), 0, 0));
  CHECK_THROWS_AS(idempotent_leq(m, 2, 0), std::domain_error);
}

TEST_CASE("principal structures") {
  auto m = worked_monoid();
  auto at_identity = principal_structures(m, 0);
  CHECK(at_identity.right_ideal == std::vector<int>{0, 1, 2});
  CHECK(at_identity.left_ideal == std::vector<int>{0, 1, 2});

  auto at_zero = principal_structures(null_semigroup(3), 0);
  CHECK(at_zero.right_ideal == std::vector<int>{0});
  CHECK(at_zero.left_ideal == std::vector<int>{0});
  CHECK(at_zero.two_sided == std::vector<int>{0});

  auto at_a = principal_structures(m, 1);
  CHECK(at_a.right_ideal == std::vector<int>{1});
  CHECK(at_a.left_ideal == std::vector<int>{1});

  CHECK_THROWS_AS(principal_structures(m, 2), std::domain_error);
}

TEST_CASE("local groups") {
  auto g = cyclic_group(4);
  auto h = local_group(g, 0);
  CHECK(h.elements == std::vector<int>{0, 1, 2, 3});
  CHECK(h.inverse == std::vector<int>{0, 3, 2, 1});

  auto z = local_group(null_semigroup(3), 0);
  CHECK(z.elements == std::vector<int>{0});

  // Clifford instance: a group with an absorbing zero; the local groups
  // partition the carrier.
  auto c = zero_adjoined(cyclic_group(2));
  std::vector<bool> covered(c.size(), false);
  for (int e : c.idempotents()) {
    auto he = local_group(c, e);
    for (int x : he.elements) {
      CHECK_FALSE(covered[x]);  // distinct idempotents give disjoint groups
      covered[x] = true;
    }
  }
  for (bool b : covered) CHECK(b);
}

TEST_CASE("central idempotents") {
  CHECK(has_central_idempotents(worked_monoid()));
  CHECK(has_central_idempotents(null_semigroup(3)));
  CHECK_FALSE(has_central_idempotents(left_zero_semigroup(2)));
}

TEST_CASE("clifford detection") {
  auto g = cyclic_group(3);
  auto inv = is_clifford(g);
  REQUIRE(inv);
  CHECK(*inv == group_inverses(g));

  auto lattice = chain_semilattice(3);
  auto lattice_inv = is_clifford(lattice);
  REQUIRE(lattice_inv);
  CHECK(*lattice_inv == std::vector<int>{0, 1, 2});

  CHECK_FALSE(is_clifford(null_semigroup(3)));
  CHECK(is_clifford(zero_adjoined(cyclic_group(2))));
}

TEST_CASE("cancellativity and units") {
  CHECK(is_cancellative(cyclic_group(3)));
  CHECK_FALSE(is_cancellative(null_semigroup(2)));

  auto m = worked_monoid();
  CHECK(right_units(m) == std::vector<int>{0, 2});  // b*b = 1
  CHECK(left_units(m) == std::vector<int>{0, 2});
  CHECK_THROWS_AS(right_units(null_semigroup(2)), std::domain_error);
}

TEST_CASE("variety [abc = bc]") {
  CHECK(in_variety_s(null_semigroup(3)));
  CHECK(in_variety_s(right_zero_semigroup(2)));
  CHECK_FALSE(in_variety_s(cyclic_group(2)));
}

TEST_CASE("group machinery") {
  auto g = dihedral_group(3);
  CHECK(g.size() == 6);
  CHECK(is_group(g));
  CHECK_FALSE(is_group(null_semigroup(2)));

  auto q = quaternion_group();
  CHECK(is_group(q));
  int order2 = 0;
  for (int x = 0; x < q.size(); ++x)
    if (x != 0 && q.mul(x, x) == 0) ++order2;
  CHECK(order2 == 1);  // distinguishes it from the dihedral group of order 8

  auto d4 = dihedral_group(4);
  order2 = 0;
  for (int x = 0; x < d4.size(); ++x)
    if (x != 0 && d4.mul(x, x) == 0) ++order2;
  CHECK(order2 == 5);

  CHECK(is_normal_subgroup(cyclic_group(4), {0, 2}));
  CHECK_FALSE(is_subgroup(cyclic_group(4), {0, 1}));
  // index-2 subgroups are normal; a point stabilizer in the dihedral
  // group of order 6 is not
  CHECK(is_normal_subgroup(g, {0, 1, 2}));
  CHECK(is_subgroup(g, {0, 3}));
  CHECK_FALSE(is_normal_subgroup(g, {0, 3}));
}

TEST_CASE("element maps") {
  CHECK_THROWS_AS(ElementMap(2, {0, 2}), std::invalid_argument);
  auto m = worked_monoid();
  ElementMap gamma(3, {0, 1, 0});
  CHECK(is_endomorphism(m, gamma));
  CHECK(is_idempotent_map(gamma));
  CHECK(compose(gamma, gamma).table == gamma.table);
  // swapping the zero with the unit breaks multiplicativity
  CHECK_FALSE(is_endomorphism(m, ElementMap(3, {0, 2, 1})));
}
