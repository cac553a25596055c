#pragma once

#include <cstdint>
#include <optional>

#include "pentasol/iso.hpp"
#include "pentasol/semigroup.hpp"

namespace pentasol {

enum class PentagonCondition { P1, P2 };

const char* condition_name(PentagonCondition c);  // "(P1)" / "(P2)"

struct Violation {
  PentagonCondition condition;
  std::array<int, 3> triple;
};

struct VerifyResult {
  bool ok = true;
  std::vector<Violation> violations;  // capped; see total
  long long total = 0;                // every violating (condition, triple)
};

/// Elementwise check of
///   (P1)  theta_x(y) * theta_{xy}(z) = theta_x(yz)
///   (P2)  theta_{theta_x(y)}(theta_{xy}(z)) = theta_y(z)
/// over all triples, enumerated in lexicographic order with (P1) before
/// (P2) at the same triple. theta is a flat n x n table, theta[x*n+y] =
/// theta_x(y). Throws std::invalid_argument on shape or range errors.
VerifyResult verify_solution(const FiniteSemigroup& s,
                             const std::vector<int>& theta,
                             int violation_cap = 16);

/// Independent oracle: builds s(x,y) = (xy, theta_x(y)) as a self-map of
/// X^2, forms s12, s23 and s13 = (id x tau) s12 (id x tau) as self-maps of
/// X^3, and compares the compositions s23 s13 s12 and s12 s23 pointwise.
/// Shares no logic with verify_solution.
bool verify_pentagon_direct(const FiniteSemigroup& s,
                            const std::vector<int>& theta);

struct ClassificationFlags {
  bool idempotent = false;
  bool involutive = false;
  bool nondegenerate = false;
  bool commutative = false;
  bool cocommutative = false;

  friend bool operator==(const ClassificationFlags&,
                         const ClassificationFlags&) = default;

  uint32_t bits() const noexcept {
    return (idempotent ? 1u : 0) | (involutive ? 2u : 0) |
           (nondegenerate ? 4u : 0) | (commutative ? 8u : 0) |
           (cocommutative ? 16u : 0);
  }
  static ClassificationFlags from_bits(uint32_t b) {
    return {(b & 1) != 0, (b & 2) != 0, (b & 4) != 0, (b & 8) != 0,
            (b & 16) != 0};
  }
  /// "idempotent+nondegenerate", or "none".
  std::string to_string() const;
};

/// A verified pentagon solution: a semigroup together with the full theta
/// table. The constructor enforces (P1) and (P2); use unchecked() only
/// where a deliberately broken table must be carried around (the lab's
/// mutation scan).
class PentagonSolution {
 public:
  PentagonSolution(FiniteSemigroup s, std::vector<int> theta);
  static PentagonSolution unchecked(FiniteSemigroup s,
                                    std::vector<int> theta);

  const FiniteSemigroup& semigroup() const noexcept { return sg_; }
  int size() const noexcept { return sg_.size(); }
  int theta(int x, int y) const { return theta_[x * sg_.size() + y]; }
  const std::vector<int>& theta_table() const noexcept { return theta_; }

  friend bool operator==(const PentagonSolution&,
                         const PentagonSolution&) = default;

 private:
  struct unchecked_t {};
  PentagonSolution(unchecked_t, FiniteSemigroup s, std::vector<int> theta);

  FiniteSemigroup sg_;
  std::vector<int> theta_;
};

/// Elementwise classification:
///   idempotent      (I1) xy theta_x(y) = xy and (I2) theta_{xy}(theta_x(y)) = theta_x(y)
///   involutive      s^2 = id
///   non-degenerate  every theta_x bijective
///   commutative     (C1) xzy = xyz and (C2) theta_x = theta_{xy}
///   cocommutative   (CC1) x theta_y(z) = xz and (CC2) theta_x theta_y = theta_y theta_x
ClassificationFlags classify(const PentagonSolution& sol);
ClassificationFlags classify_raw(const FiniteSemigroup& s,
                                 const std::vector<int>& theta);

/// The same flags computed from the compositional definitions (s^2 = s,
/// s^2 = id, s12 s13 = s13 s12, s13 s23 = s23 s13); the cross-check route
/// for tests and the lab.
ClassificationFlags classify_compositional(const FiniteSemigroup& s,
                                           const std::vector<int>& theta);

struct SolutionIso {
  IsoWitness f;
};

/// First semigroup isomorphism f (in lexicographic order) with
/// f(theta_x(y)) = eta_{f(x)}(f(y)), or nullopt.
std::optional<SolutionIso> solutions_isomorphic(const PentagonSolution& a,
                                                const PentagonSolution& b);

/// Lexicographically least relabelling of theta under Aut(S); two solutions
/// on the same semigroup are isomorphic iff their canonical thetas match.
std::vector<int> canonical_theta(const FiniteSemigroup& s,
                                 const std::vector<int>& theta);

}  // namespace pentasol
