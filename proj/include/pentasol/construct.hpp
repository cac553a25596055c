#pragma once

#include <map>
#include <stdexcept>

#include "pentasol/solution.hpp"

namespace pentasol {

/// Raised when a construction's hypotheses fail; condition() carries the
/// name of the violated condition ("(P1)", "(ast)", "normality", ...) and
/// what() a witness.
class hypothesis_error : public std::runtime_error {
 public:
  hypothesis_error(std::string condition, const std::string& detail)
      : std::runtime_error(condition + ": " + detail),
        condition_(std::move(condition)) {}
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::string condition_;
};

/// s(x,y) = (xy, gamma(y)) for an idempotent endomorphism gamma.
PentagonSolution from_endomorphism(const FiniteSemigroup& s,
                                   const ElementMap& gamma);

/// The constant map at an idempotent e, the simplest case of the above.
PentagonSolution constant_solution(const FiniteSemigroup& s, int e);

/// s(x,y) = (xy, xy) on a member of the variety [abc = bc].
PentagonSolution variety_s_solution(const FiniteSemigroup& s);

/// s(x,y) = (xy, y^-1 y) on a Clifford semigroup.
PentagonSolution clifford_solution(const FiniteSemigroup& s);

/// x*y = f(x) with s(x,y) = (x*y, g(y)), for commuting idempotent maps
/// f, g on {0,..,n-1}; returns the solution (its semigroup carries the
/// constructed table).
PentagonSolution militaru_solution(int n, const ElementMap& f,
                                   const ElementMap& g);

/// Data for the description of solutions on a group: a normal subgroup K,
/// a system of coset representatives R containing the identity, and the
/// map mu sending x to its representative in R meeting Kx.
struct GroupConstructionData {
  FiniteSemigroup group;
  std::vector<int> subgroup;         // K
  std::vector<int> representatives;  // R
  ElementMap mu;
};

/// theta_x(y) = mu(x)^-1 mu(xy). Validates every hypothesis distinctly and
/// checks the round trip: K = {x | theta_1(x) = 1} and R = im theta_1 come
/// back out of the result.
PentagonSolution group_solution(const GroupConstructionData& data);

/// All solutions on a group, generated from every (K, R) pair rather than
/// searched; must coincide with enumerate_solutions on the same group.
std::vector<PentagonSolution> enumerate_group_solutions(
    const FiniteSemigroup& g);

/// Data for the description of idempotent solutions on a monoid with
/// central idempotents: an idempotent monoid homomorphism mu into E(M)
/// picking a right identity for every element, plus one map theta_e per
/// e in im(mu) with theta_1 = mu, subject to
///   (ast)        theta_e(xy) = theta_e(x) theta_f(y),  f = mu(ex)
///   (astast)     theta_e = theta_e theta_{ef},         f in im(mu)
///   (astastast)  theta_{ef}(theta_e(x)) = theta_e(x),  f = mu(x).
struct MonoidConstructionData {
  FiniteSemigroup monoid;
  ElementMap mu;
  std::map<int, ElementMap> theta_family;  // keyed by e in im(mu)
};

/// theta_x = theta_{mu(x)}; the result is a verified idempotent solution.
PentagonSolution monoid_idempotent_solution(const MonoidConstructionData& data);

/// All idempotent solutions on a central-idempotent monoid, generated by
/// iterating every admissible (mu, {theta_e}); must coincide with the
/// idempotent-filtered search. Throws hypothesis_error on a monoid with
/// non-central idempotents.
std::vector<PentagonSolution> enumerate_monoid_constructions(
    const FiniteSemigroup& m, int hard_cap = 4);

}  // namespace pentasol
