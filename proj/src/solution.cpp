#include "pentasol/solution.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentasol {

namespace {

void require_theta_shape(const FiniteSemigroup& s,
                         const std::vector<int>& theta) {
  int n = s.size();
  if (static_cast<int>(theta.size()) != n * n)
    throw std::invalid_argument("theta table has " +
                                std::to_string(theta.size()) +
                                " entries, expected " + std::to_string(n * n));
  for (int i = 0; i < n * n; ++i)
    if (theta[i] < 0 || theta[i] >= n)
      throw std::invalid_argument(
          "theta entry at (" + std::to_string(i / n) + "," +
          std::to_string(i % n) + ") out of range");
}

}  // namespace

const char* condition_name(PentagonCondition c) {
  return c == PentagonCondition::P1 ? "(P1)" : "(P2)";
}

VerifyResult verify_solution(const FiniteSemigroup& s,
                             const std::vector<int>& theta,
                             int violation_cap) {
  require_theta_shape(s, theta);
  int n = s.size();
  auto th = [&](int x, int y) { return theta[x * n + y]; };
  VerifyResult result;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = s.mul(x, y);
        if (s.mul(th(x, y), th(xy, z)) != th(x, s.mul(y, z))) {
          result.ok = false;
          ++result.total;
          if (static_cast<int>(result.violations.size()) < violation_cap)
            result.violations.push_back({PentagonCondition::P1, {x, y, z}});
        }
        if (th(th(x, y), th(xy, z)) != th(y, z)) {
          result.ok = false;
          ++result.total;
          if (static_cast<int>(result.violations.size()) < violation_cap)
            result.violations.push_back({PentagonCondition::P2, {x, y, z}});
        }
      }
  return result;
}

bool verify_pentagon_direct(const FiniteSemigroup& s,
                            const std::vector<int>& theta) {
  require_theta_shape(s, theta);
  int n = s.size();
  int cube = n * n * n;

  // s as a self-map of X^2, index x*n + y.
  std::vector<int> smap(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      smap[x * n + y] = s.mul(x, y) * n + theta[x * n + y];

  auto pack = [n](int x, int y, int z) { return (x * n + y) * n + z; };
  std::vector<int> s12(cube), s23(cube), flip23(cube);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = smap[x * n + y];
        s12[pack(x, y, z)] = xy * n + z;  // (s(x,y), z)
        int yz = smap[y * n + z];
        s23[pack(x, y, z)] = x * n * n + yz;  // (x, s(y,z))
        flip23[pack(x, y, z)] = pack(x, z, y);
      }

  std::vector<int> s13(cube);
  for (int t = 0; t < cube; ++t) s13[t] = flip23[s12[flip23[t]]];

  for (int t = 0; t < cube; ++t)
    if (s23[s13[s12[t]]] != s12[s23[t]]) return false;
  return true;
}

PentagonSolution::PentagonSolution(unchecked_t, FiniteSemigroup s,
                                   std::vector<int> theta)
    : sg_(std::move(s)), theta_(std::move(theta)) {
  require_theta_shape(sg_, theta_);
}

PentagonSolution::PentagonSolution(FiniteSemigroup s, std::vector<int> theta)
    : PentagonSolution(unchecked_t{}, std::move(s), std::move(theta)) {
  auto check = verify_solution(sg_, theta_, 1);
  if (!check.ok) {
    const auto& v = check.violations.front();
    throw std::invalid_argument(
        "theta is not a solution: " +
        std::string(condition_name(v.condition)) + " fails at (" +
        std::to_string(v.triple[0]) + "," + std::to_string(v.triple[1]) +
        "," + std::to_string(v.triple[2]) + ")");
  }
}

PentagonSolution PentagonSolution::unchecked(FiniteSemigroup s,
                                             std::vector<int> theta) {
  return PentagonSolution(unchecked_t{}, std::move(s), std::move(theta));
}

std::string ClassificationFlags::to_string() const {
  static const char* names[] = {"idempotent", "involutive", "nondegenerate",
                                "commutative", "cocommutative"};
  std::string out;
  uint32_t b = bits();
  for (int i = 0; i < 5; ++i)
    if (b & (1u << i)) {
      if (!out.empty()) out += '+';
      out += names[i];
    }
  return out.empty() ? "none" : out;
}

ClassificationFlags classify_raw(const FiniteSemigroup& s,
                                 const std::vector<int>& theta) {
  require_theta_shape(s, theta);
  int n = s.size();
  auto th = [&](int x, int y) { return theta[x * n + y]; };

  ClassificationFlags f;
  f.idempotent = true;
  f.involutive = true;
  f.nondegenerate = true;
  f.commutative = true;
  f.cocommutative = true;

  for (int x = 0; x < n && (f.idempotent || f.involutive); ++x)
    for (int y = 0; y < n; ++y) {
      int xy = s.mul(x, y);
      int t = th(x, y);
      if (s.mul(xy, t) != xy || th(xy, t) != t) f.idempotent = false;
      if (s.mul(xy, t) != x || th(xy, t) != y) f.involutive = false;
    }

  for (int x = 0; x < n && f.nondegenerate; ++x) {
    std::vector<bool> hit(n, false);
    for (int y = 0; y < n; ++y) hit[th(x, y)] = true;
    f.nondegenerate = std::all_of(hit.begin(), hit.end(),
                                  [](bool h) { return h; });
  }

  // (C1) and (C2)
  for (int x = 0; x < n && f.commutative; ++x)
    for (int y = 0; y < n && f.commutative; ++y) {
      for (int z = 0; z < n; ++z)
        if (s.mul(s.mul(x, z), y) != s.mul(s.mul(x, y), z))
          f.commutative = false;
      int xy = s.mul(x, y);
      for (int t = 0; t < n; ++t)
        if (th(x, t) != th(xy, t)) f.commutative = false;
    }

  // (CC1) and (CC2)
  for (int x = 0; x < n && f.cocommutative; ++x)
    for (int y = 0; y < n && f.cocommutative; ++y)
      for (int z = 0; z < n; ++z) {
        if (s.mul(x, th(y, z)) != s.mul(x, z)) f.cocommutative = false;
        if (th(x, th(y, z)) != th(y, th(x, z))) f.cocommutative = false;
      }

  return f;
}

ClassificationFlags classify(const PentagonSolution& sol) {
  return classify_raw(sol.semigroup(), sol.theta_table());
}

ClassificationFlags classify_compositional(const FiniteSemigroup& s,
                                           const std::vector<int>& theta) {
  require_theta_shape(s, theta);
  int n = s.size();
  int cube = n * n * n;

  std::vector<int> smap(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      smap[x * n + y] = s.mul(x, y) * n + theta[x * n + y];

  ClassificationFlags f;
  f.idempotent = true;
  f.involutive = true;
  for (int p = 0; p < n * n; ++p) {
    if (smap[smap[p]] != smap[p]) f.idempotent = false;
    if (smap[smap[p]] != p) f.involutive = false;
  }

  f.nondegenerate = true;
  for (int x = 0; x < n && f.nondegenerate; ++x) {
    std::vector<bool> hit(n, false);
    for (int y = 0; y < n; ++y) hit[theta[x * n + y]] = true;
    f.nondegenerate = std::all_of(hit.begin(), hit.end(),
                                  [](bool h) { return h; });
  }

  auto pack = [n](int x, int y, int z) { return (x * n + y) * n + z; };
  std::vector<int> s12(cube), s23(cube), flip23(cube);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        s12[pack(x, y, z)] = smap[x * n + y] * n + z;
        s23[pack(x, y, z)] = x * n * n + smap[y * n + z];
        flip23[pack(x, y, z)] = pack(x, z, y);
      }
  std::vector<int> s13(cube);
  for (int t = 0; t < cube; ++t) s13[t] = flip23[s12[flip23[t]]];

  f.commutative = true;
  f.cocommutative = true;
  for (int t = 0; t < cube; ++t) {
    if (s12[s13[t]] != s13[s12[t]]) f.commutative = false;
    if (s13[s23[t]] != s23[s13[t]]) f.cocommutative = false;
  }
  return f;
}

std::optional<SolutionIso> solutions_isomorphic(const PentagonSolution& a,
                                                const PentagonSolution& b) {
  for (const auto& w : isomorphisms(a.semigroup(), b.semigroup())) {
    bool ok = true;
    int n = a.size();
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = w.f[a.theta(x, y)] == b.theta(w.f[x], w.f[y]);
    if (ok) return SolutionIso{w};
  }
  return std::nullopt;
}

std::vector<int> canonical_theta(const FiniteSemigroup& s,
                                 const std::vector<int>& theta) {
  int n = s.size();
  std::vector<int> best = theta;
  for (const auto& w : automorphisms(s)) {
    std::vector<int> candidate(n * n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        candidate[w.f[x] * n + w.f[y]] = w.f[theta[x * n + y]];
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

}  // namespace pentasol
