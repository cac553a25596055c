#include "pentasol/construct.hpp"

#include <algorithm>
#include <set>

namespace pentasol {

namespace {

std::string elem_pair(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PentagonSolution from_endomorphism(const FiniteSemigroup& s,
                                   const ElementMap& gamma) {
  if (gamma.n != s.size())
    throw hypothesis_error("carrier", "map size does not match the semigroup");
  if (!is_endomorphism(s, gamma)) {
    for (int x = 0; x < s.size(); ++x)
      for (int y = 0; y < s.size(); ++y)
        if (gamma(s.mul(x, y)) != s.mul(gamma(x), gamma(y)))
          throw hypothesis_error(
              "endomorphism", "gamma(xy) != gamma(x)gamma(y) at " +
                                  elem_pair(x, y));
  }
  if (!is_idempotent_map(gamma))
    throw hypothesis_error("idempotent-map", "gamma^2 != gamma");
  int n = s.size();
  std::vector<int> theta(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) theta[x * n + y] = gamma(y);
  return PentagonSolution(s, std::move(theta));
}

PentagonSolution constant_solution(const FiniteSemigroup& s, int e) {
  if (!s.is_idempotent(e))
    throw hypothesis_error("idempotent-element",
                           std::to_string(e) + " is not idempotent");
  return from_endomorphism(s, ElementMap(s.size(),
                                         std::vector<int>(s.size(), e)));
}

PentagonSolution variety_s_solution(const FiniteSemigroup& s) {
  if (!in_variety_s(s))
    throw hypothesis_error("variety-S", "abc = bc fails on the semigroup");
  int n = s.size();
  std::vector<int> theta(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) theta[x * n + y] = s.mul(x, y);
  return PentagonSolution(s, std::move(theta));
}

PentagonSolution clifford_solution(const FiniteSemigroup& s) {
  auto inv = is_clifford(s);
  if (!inv)
    throw hypothesis_error("clifford",
                           "no unique commuting relative inverses");
  int n = s.size();
  std::vector<int> theta(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) theta[x * n + y] = s.mul((*inv)[y], y);
  return PentagonSolution(s, std::move(theta));
}

PentagonSolution militaru_solution(int n, const ElementMap& f,
                                   const ElementMap& g) {
  if (f.n != n || g.n != n)
    throw hypothesis_error("carrier", "maps must live on the given set");
  if (!is_idempotent_map(f))
    throw hypothesis_error("idempotent-map", "f^2 != f");
  if (!is_idempotent_map(g))
    throw hypothesis_error("idempotent-map", "g^2 != g");
  for (int x = 0; x < n; ++x)
    if (f(g(x)) != g(f(x)))
      throw hypothesis_error("commuting-maps",
                             "fg != gf at " + std::to_string(x));
  std::vector<int> table(n * n), theta(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      table[x * n + y] = f(x);
      theta[x * n + y] = g(y);
    }
  auto identity = find_identity(n, table);
  FiniteSemigroup s(n, std::move(table), identity);
  return PentagonSolution(std::move(s), std::move(theta));
}

PentagonSolution group_solution(const GroupConstructionData& data) {
  const auto& g = data.group;
  if (!is_group(g)) throw hypothesis_error("group", "table is not a group");
  int one = g.identity() ? *g.identity() : *find_identity(g.size(), g.table());
  auto inv = group_inverses(g);

  if (!is_subgroup(g, data.subgroup))
    throw hypothesis_error("subgroup", "K is not a subgroup");
  if (!is_normal_subgroup(g, data.subgroup))
    throw hypothesis_error("normality", "K is not normal");

  // R meets every coset Kx exactly once and contains the identity.
  std::vector<int> coset_rep(g.size(), -1);
  std::vector<bool> in_r(g.size(), false);
  for (int r : data.representatives) {
    if (r < 0 || r >= g.size())
      throw hypothesis_error("coset-coverage", "representative out of range");
    in_r[r] = true;
  }
  if (!in_r[one])
    throw hypothesis_error("identity-in-R",
                           "representatives omit the identity");
  for (int x = 0; x < g.size(); ++x) {
    int hits = 0, rep = -1;
    for (int k : data.subgroup) {
      int kx = g.mul(k, x);
      if (in_r[kx]) {
        if (rep != kx) ++hits;
        rep = kx;
      }
    }
    if (hits != 1)
      throw hypothesis_error(
          "coset-coverage", "coset of " + std::to_string(x) + " meets R " +
                                std::to_string(hits) + " times");
    coset_rep[x] = rep;
  }

  if (data.mu.n != g.size())
    throw hypothesis_error("carrier", "mu size mismatch");
  for (int x = 0; x < g.size(); ++x)
    if (data.mu(x) != coset_rep[x])
      throw hypothesis_error(
          "mu-range", "mu(" + std::to_string(x) + ") = " +
                          std::to_string(data.mu(x)) +
                          " is not the representative of its coset");

  int n = g.size();
  std::vector<int> theta(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      theta[x * n + y] = g.mul(inv[data.mu(x)], data.mu(g.mul(x, y)));
  PentagonSolution sol(g, std::move(theta));

  // Round trip: the construction data comes back out of the solution.
  std::vector<int> k_back, r_back;
  for (int x = 0; x < n; ++x) {
    if (sol.theta(one, x) == one) k_back.push_back(x);
    r_back.push_back(sol.theta(one, x));
  }
  if (k_back != sorted_unique(data.subgroup) ||
      sorted_unique(r_back) != sorted_unique(data.representatives))
    throw std::logic_error("group construction round trip failed");
  return sol;
}

std::vector<PentagonSolution> enumerate_group_solutions(
    const FiniteSemigroup& g) {
  if (!is_group(g)) throw hypothesis_error("group", "table is not a group");
  int n = g.size();
  int one = g.identity() ? *g.identity() : *find_identity(n, g.table());

  std::vector<PentagonSolution> out;
  for (uint32_t bits = 0; bits < (1u << n); ++bits) {
    if (!(bits & (1u << one))) continue;
    std::vector<int> k;
    for (int x = 0; x < n; ++x)
      if (bits & (1u << x)) k.push_back(x);
    if (!is_normal_subgroup(g, k)) continue;

    // Cosets in order of least element; identity coset forces the
    // identity as representative.
    std::vector<std::vector<int>> cosets;
    std::vector<bool> seen(n, false);
    for (int x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<int> coset;
      for (int e : k) coset.push_back(g.mul(e, x));
      coset = sorted_unique(coset);
      for (int y : coset) seen[y] = true;
      cosets.push_back(std::move(coset));
    }

    std::vector<int> choice(cosets.size(), 0);
    while (true) {
      std::vector<int> reps;
      bool valid = true;
      for (size_t i = 0; i < cosets.size(); ++i) {
        int rep = cosets[i][choice[i]];
        bool is_identity_coset =
            std::find(cosets[i].begin(), cosets[i].end(), one) !=
            cosets[i].end();
        if (is_identity_coset && rep != one) valid = false;
        reps.push_back(rep);
      }
      if (valid) {
        std::vector<int> mu(n);
        for (size_t i = 0; i < cosets.size(); ++i)
          for (int x : cosets[i]) mu[x] = reps[i];
        GroupConstructionData data{g, k, reps, ElementMap(n, mu)};
        out.push_back(group_solution(data));
      }
      // next representative choice
      size_t i = 0;
      while (i < cosets.size() &&
             ++choice[i] == static_cast<int>(cosets[i].size())) {
        choice[i] = 0;
        ++i;
      }
      if (i == cosets.size()) break;
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PentagonSolution& a, const PentagonSolution& b) {
              return a.theta_table() < b.theta_table();
            });
  return out;
}

namespace {

// Shared validation for the monoid description data; returns the sorted
// image of mu.
std::vector<int> validate_monoid_data(const FiniteSemigroup& m,
                                      const ElementMap& mu) {
  if (!m.is_monoid())
    throw hypothesis_error("monoid", "identity must be declared");
  if (!has_central_idempotents(m))
    throw hypothesis_error("central-idempotents",
                           "E(M) is not contained in Z(M)");
  if (mu.n != m.size()) throw hypothesis_error("carrier", "mu size mismatch");
  int one = *m.identity();
  for (int x = 0; x < m.size(); ++x)
    if (!m.is_idempotent(mu(x)))
      throw hypothesis_error("into-idempotents",
                             "mu(" + std::to_string(x) + ") is not idempotent");
  if (mu(one) != one)
    throw hypothesis_error("homomorphism", "mu does not fix the identity");
  for (int x = 0; x < m.size(); ++x)
    for (int y = 0; y < m.size(); ++y)
      if (mu(m.mul(x, y)) != m.mul(mu(x), mu(y)))
        throw hypothesis_error("homomorphism",
                               "mu(xy) != mu(x)mu(y) at " + elem_pair(x, y));
  if (!is_idempotent_map(mu))
    throw hypothesis_error("idempotent-map", "mu^2 != mu");
  for (int x = 0; x < m.size(); ++x)
    if (m.mul(x, mu(x)) != x)
      throw hypothesis_error(
          "right-identity",
          "mu(" + std::to_string(x) + ") is not a right identity for " +
              std::to_string(x));
  return sorted_unique(mu.table);
}

}  // namespace

PentagonSolution monoid_idempotent_solution(
    const MonoidConstructionData& data) {
  const auto& m = data.monoid;
  auto image = validate_monoid_data(m, data.mu);
  int n = m.size();
  int one = *m.identity();

  std::vector<int> keys;
  for (const auto& [e, map] : data.theta_family) {
    keys.push_back(e);
    if (map.n != n) throw hypothesis_error("carrier", "theta_e size mismatch");
  }
  if (keys != image)
    throw hypothesis_error("family-domain",
                           "theta family must be indexed by im(mu) exactly");
  if (data.theta_family.at(one).table != data.mu.table)
    throw hypothesis_error("theta-1-equals-mu", "theta_1 differs from mu");

  auto th = [&](int e, int x) { return data.theta_family.at(e)(x); };

  for (int e : image)
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int f = data.mu(m.mul(e, x));
        if (th(e, m.mul(x, y)) != m.mul(th(e, x), th(f, y)))
          throw hypothesis_error(
              "(ast)", "theta_e(xy) != theta_e(x)theta_f(y) at e=" +
                           std::to_string(e) + ", " + elem_pair(x, y));
      }
      for (int f : image)
        if (th(e, th(m.mul(e, f), x)) != th(e, x))
          throw hypothesis_error(
              "(astast)", "theta_e != theta_e theta_{ef} at e=" +
                              std::to_string(e) + ", f=" + std::to_string(f) +
                              ", x=" + std::to_string(x));
      int f = data.mu(x);
      if (th(m.mul(e, f), th(e, x)) != th(e, x))
        throw hypothesis_error(
            "(astastast)", "theta_{ef}theta_e(x) != theta_e(x) at e=" +
                               std::to_string(e) + ", x=" + std::to_string(x));
    }

  std::vector<int> theta(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) theta[x * n + y] = th(data.mu(x), y);
  PentagonSolution sol(m, std::move(theta));
  if (!classify(sol).idempotent)
    throw std::logic_error("constructed monoid solution is not idempotent");
  return sol;
}

namespace {

// Backtracking over the family rows (one per element of im(mu) other than
// the identity), checking (ast)/(astast)/(astastast) on the assigned part
// and forcing values through (ast) where both factors are known.
struct FamilySearch {
  const FiniteSemigroup& m;
  const ElementMap& mu;
  std::vector<int> image;          // sorted im(mu)
  std::vector<int> row_of;         // element -> family row index or -1
  std::vector<int> cells;          // flattened family, -1 free
  int n;
  std::vector<std::vector<int>> found;  // complete family tables

  FamilySearch(const FiniteSemigroup& m, const ElementMap& mu,
               std::vector<int> img)
      : m(m), mu(mu), image(std::move(img)), n(m.size()) {
    row_of.assign(n, -1);
    for (size_t i = 0; i < image.size(); ++i) row_of[image[i]] = i;
    cells.assign(image.size() * n, -1);
    int one = *m.identity();
    for (int x = 0; x < n; ++x) cells[row_of[one] * n + x] = mu(x);
  }

  int& at(int e, int x) { return cells[row_of[e] * n + x]; }
  int get(int e, int x) const { return cells[row_of[e] * n + x]; }

  // Checks every instance whose cells are assigned; returns false on a
  // violation. With force, assigns (ast)-determined cells (returns the
  // number assigned through *forced).
  bool consistent(bool force, int* forced) {
    for (int e : image) {
      for (int x = 0; x < n; ++x) {
        int ex = m.mul(e, x);
        int f = mu(ex);
        int a = get(e, x);
        for (int y = 0; y < n; ++y) {
          int b = get(f, y);
          int c = get(e, m.mul(x, y));
          if (a >= 0 && b >= 0) {
            int prod = m.mul(a, b);
            if (c >= 0) {
              if (c != prod) return false;
            } else if (force) {
              at(e, m.mul(x, y)) = prod;
              ++*forced;
            }
          }
        }
        if (a >= 0) {
          // (astastast) with this (e, x)
          int ef = m.mul(e, mu(x));
          int outer = get(ef, a);
          if (outer >= 0 && outer != a) return false;
          if (outer < 0 && force) {
            at(ef, a) = a;
            ++*forced;
          }
        }
        for (int f2 : image) {
          int inner = get(m.mul(e, f2), x);
          if (inner < 0) continue;
          int outer = get(e, inner);
          int direct = get(e, x);
          if (outer >= 0 && direct >= 0 && outer != direct) return false;
        }
      }
    }
    return true;
  }

  bool propagate() {
    int forced = 1;
    while (forced) {
      forced = 0;
      if (!consistent(true, &forced)) return false;
    }
    return true;
  }

  void search(int pos) {
    if (pos == static_cast<int>(cells.size())) {
      found.push_back(cells);
      return;
    }
    if (cells[pos] >= 0) {
      search(pos + 1);
      return;
    }
    std::vector<int> snapshot = cells;
    for (int v = 0; v < n; ++v) {
      cells = snapshot;
      cells[pos] = v;
      if (propagate()) search(pos + 1);
    }
    cells = snapshot;
  }
};

}  // namespace

std::vector<PentagonSolution> enumerate_monoid_constructions(
    const FiniteSemigroup& m, int hard_cap) {
  if (m.size() > hard_cap)
    throw std::invalid_argument("order exceeds the construction cap");
  if (!m.is_monoid())
    throw hypothesis_error("monoid", "identity must be declared");
  if (!has_central_idempotents(m))
    throw hypothesis_error("central-idempotents",
                           "E(M) is not contained in Z(M)");
  int n = m.size();

  // Every admissible mu: map into E(M), monoid homomorphism, idempotent,
  // picking a right identity everywhere.
  std::vector<ElementMap> mus;
  std::vector<int> stack(n, 0);
  while (true) {
    ElementMap mu(n, stack);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = m.is_idempotent(mu(x)) && m.mul(x, mu(x)) == x;
    if (ok) ok = mu(*m.identity()) == *m.identity();
    if (ok) ok = is_idempotent_map(mu);
    if (ok)
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          ok = mu(m.mul(x, y)) == m.mul(mu(x), mu(y));
    if (ok) mus.push_back(mu);
    int i = 0;
    while (i < n && ++stack[i] == n) stack[i++] = 0;
    if (i == n) break;
  }

  std::vector<PentagonSolution> out;
  for (const auto& mu : mus) {
    FamilySearch fs(m, mu, sorted_unique(mu.table));
    if (fs.propagate()) fs.search(0);
    for (const auto& family : fs.found) {
      std::map<int, ElementMap> theta_family;
      for (size_t i = 0; i < fs.image.size(); ++i) {
        std::vector<int> row(family.begin() + i * n,
                             family.begin() + (i + 1) * n);
        theta_family.emplace(fs.image[i], ElementMap(n, std::move(row)));
      }
      out.push_back(monoid_idempotent_solution({m, mu, theta_family}));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PentagonSolution& a, const PentagonSolution& b) {
              return a.theta_table() < b.theta_table();
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pentasol
