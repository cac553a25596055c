#include "pentasol/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "pentasol/congruence.hpp"
#include "pentasol/search.hpp"
#include "pentasol/semigroup_enum.hpp"

namespace pentasol {

namespace {

CaseOutcome pass() { return {CaseStatus::pass, ""}; }
CaseOutcome pass_with(std::string d) { return {CaseStatus::pass, std::move(d)}; }
CaseOutcome fail(std::string w) { return {CaseStatus::fail, std::move(w)}; }
CaseOutcome skip(std::string r) { return {CaseStatus::skip, std::move(r)}; }

std::string at2(int x, int y) {
  return "x=" + std::to_string(x) + ",y=" + std::to_string(y);
}
std::string at3(int x, int y, int z) {
  return at2(x, y) + ",z=" + std::to_string(z);
}

using Guard = std::optional<CaseOutcome>;

Guard need_semigroup(const LabContext& c) {
  if (!c.sg) return skip("table rejected: " + c.sg_skip_reason);
  return std::nullopt;
}

Guard need_solution(const LabContext& c) {
  if (auto g = need_semigroup(c)) return g;
  if (!c.raw->theta) return skip("no theta attached");
  if (!c.theta_shape_ok) return skip("theta malformed");
  if (!c.is_solution) return skip("theta is not a pentagon solution");
  return std::nullopt;
}

Guard need_idempotent_solution(const LabContext& c) {
  if (auto g = need_solution(c)) return g;
  if (!c.flags.idempotent) return skip("solution not idempotent");
  return std::nullopt;
}

Guard need_monoid(const LabContext& c) {
  if (!c.sg->is_monoid()) return skip("no identity declared");
  return std::nullopt;
}

// Semigroup-level cases run on bare instances so each semigroup is
// evaluated once, not once per attached solution.
Guard need_bare(const LabContext& c) {
  if (auto g = need_semigroup(c)) return g;
  if (c.raw->theta) return skip("evaluated on bare instances only");
  if (c.sg->size() > c.enumeration_cap)
    return skip("order exceeds the enumeration cap");
  return std::nullopt;
}

// theta_1 as a map, for monoid instances.
ElementMap identity_row(const LabContext& c) {
  return ElementMap(c.sg->size(), c.row(*c.sg->identity()));
}

bool theta1_hom_into_idempotents(const LabContext& c) {
  const auto& s = *c.sg;
  int one = *s.identity();
  auto mu = [&](int x) { return c.th(one, x); };
  if (mu(one) != one) return false;
  for (int x = 0; x < s.size(); ++x) {
    if (!s.is_idempotent(mu(x))) return false;
    for (int y = 0; y < s.size(); ++y)
      if (mu(s.mul(x, y)) != s.mul(mu(x), mu(y))) return false;
  }
  return true;
}

std::vector<int> identity_theta(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = y;
  return t;
}

// The 3-element monoid {1,a,b} with ab = ba = a, a^2 = a and b^2 = a; the
// squaring of b is pinned to the idempotent a, the reading under which the
// uniqueness statement below is consistent.
const FiniteSemigroup& reference_order3_monoid() {
  static const FiniteSemigroup m =
      FiniteSemigroup::from_rows({{0, 1, 2}, {1, 1, 1}, {2, 1, 1}}, 0);
  return m;
}

CaseOutcome expect_unique(const FiniteSemigroup& s,
                          const SearchOptions& opts,
                          const std::vector<int>& expected,
                          const char* what) {
  auto sols = enumerate_solutions(s, opts);
  if (sols.size() != 1)
    return fail(std::string(what) + ": found " +
                std::to_string(sols.size()) + " solutions, expected 1");
  if (sols.front().theta_table() != expected)
    return fail(std::string(what) + ": unique solution has unexpected theta");
  return pass();
}

std::vector<PropertyCase> build_catalog() {
  std::vector<PropertyCase> cases;
  auto add = [&](std::string id, std::string scope, std::string statement,
                 std::function<CaseOutcome(const LabContext&)> check) {
    cases.push_back({std::move(id), std::move(scope), std::move(statement),
                     std::move(check)});
  };

  // ---- maps at idempotents, arbitrary solutions ----

  add("comparable-idempotents-map-to-idempotents", "solution",
      "e <= f in E(X) implies theta_e(f) in E(X)", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int f : s.idempotents()) {
            if (!idempotent_leq(s, e, f)) continue;
            if (!s.is_idempotent(c.th(e, f)))
              return fail("theta_e(f) not idempotent at e=" +
                          std::to_string(e) + ",f=" + std::to_string(f));
          }
        return pass();
      });

  add("theta-e-monotone", "solution",
      "e <= f in E(X) implies theta_e(e) <= theta_e(f)",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int f : s.idempotents()) {
            if (!idempotent_leq(s, e, f)) continue;
            int a = c.th(e, e), b = c.th(e, f);
            if (!s.is_idempotent(a) || !s.is_idempotent(b))
              return fail("non-idempotent comparand at e=" +
                          std::to_string(e) + ",f=" + std::to_string(f));
            if (!idempotent_leq(s, a, b))
              return fail("theta_e(e) <= theta_e(f) fails at e=" +
                          std::to_string(e) + ",f=" + std::to_string(f));
          }
        return pass();
      });

  add("theta-f-factors-through-theta-e", "solution",
      "e <= f implies theta_f = theta_{theta_e(f)} theta_e",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int f : s.idempotents()) {
            if (!idempotent_leq(s, e, f)) continue;
            for (int x = 0; x < s.size(); ++x)
              if (c.th(f, x) != c.th(c.th(e, f), c.th(e, x)))
                return fail("factorization fails at e=" + std::to_string(e) +
                            ",f=" + std::to_string(f) +
                            ",x=" + std::to_string(x));
          }
        return pass();
      });

  add("right-fixed-theta-idempotent", "solution",
      "xe = x implies theta_x(e) in E(X)", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x) {
            if (s.mul(x, e) != x) continue;
            if (!s.is_idempotent(c.th(x, e)))
              return fail("theta_x(e) not idempotent at " + at2(x, e));
          }
        return pass();
      });

  add("left-fixed-image-in-ideal", "solution",
      "ex = x implies theta_e(x) in theta_e(e)X", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x) {
            if (s.mul(e, x) != x) continue;
            if (s.mul(c.th(e, e), c.th(e, x)) != c.th(e, x))
              return fail("membership fails at " + at2(e, x));
          }
        return pass();
      });

  add("involutive-implies-commutative-cocommutative", "solution",
      "s^2 = id implies s commutative and cocommutative",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (c.flags.involutive &&
            !(c.flags.commutative && c.flags.cocommutative))
          return fail("involutive solution with flags " +
                      c.flags.to_string());
        return pass();
      });

  add("classification-routes-agree", "theta table",
      "elementwise flags equal the compositional flags for any theta",
      [](const LabContext& c) {
        if (auto g = need_semigroup(c)) return *g;
        if (!c.raw->theta) return skip("no theta attached");
        if (!c.theta_shape_ok) return skip("theta malformed");
        auto comp = classify_compositional(*c.sg, *c.raw->theta);
        if (!(comp == c.flags))
          return fail("elementwise " + c.flags.to_string() +
                      " vs compositional " + comp.to_string());
        return pass();
      });

  // ---- arbitrary solutions on monoids ----

  add("theta-at-identity-idempotent", "monoid solution",
      "theta_x(1) in E(M)", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int x = 0; x < c.sg->size(); ++x)
          if (!c.sg->is_idempotent(c.th(x, one)))
            return fail("theta_x(1) not idempotent at x=" +
                        std::to_string(x));
        return pass();
      });

  add("identity-row-factorization", "monoid solution",
      "theta_1 = theta_{theta_x(1)} theta_x", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int x = 0; x < c.sg->size(); ++x)
          for (int y = 0; y < c.sg->size(); ++y)
            if (c.th(one, y) != c.th(c.th(x, one), c.th(x, y)))
              return fail("factorization fails at " + at2(x, y));
        return pass();
      });

  add("identity-row-image-in-ideal", "monoid solution",
      "theta_1(x) in theta_1(1)M", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int x = 0; x < c.sg->size(); ++x)
          if (c.sg->mul(c.th(one, one), c.th(one, x)) != c.th(one, x))
            return fail("membership fails at x=" + std::to_string(x));
        return pass();
      });

  add("row-self-factorization", "monoid solution",
      "theta_x = theta_{theta_1(x)} theta_x", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int x = 0; x < c.sg->size(); ++x)
          for (int y = 0; y < c.sg->size(); ++y)
            if (c.th(x, y) != c.th(c.th(one, x), c.th(x, y)))
              return fail("factorization fails at " + at2(x, y));
        return pass();
      });

  add("unique-nondegenerate-on-monoid", "monoid",
      "the identity theta is the only non-degenerate solution",
      [](const LabContext& c) {
        if (auto g = need_bare(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        SearchOptions opts;
        opts.filter.nondegenerate = true;
        opts.hard_cap = c.enumeration_cap;
        return expect_unique(*c.sg, opts, identity_theta(c.sg->size()),
                             "non-degenerate");
      });

  add("unique-cocommutative-on-monoid", "monoid",
      "s(x,y) = (xy, y) is the only cocommutative solution",
      [](const LabContext& c) {
        if (auto g = need_bare(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        SearchOptions opts;
        opts.filter.cocommutative = true;
        opts.hard_cap = c.enumeration_cap;
        return expect_unique(*c.sg, opts, identity_theta(c.sg->size()),
                             "cocommutative");
      });

  add("commutative-characterization", "monoid solution",
      "commutative iff M commutative and every theta_x is one idempotent "
      "endomorphism",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        const auto& s = *c.sg;
        bool m_comm = true;
        for (int x = 0; x < s.size() && m_comm; ++x)
          for (int y = 0; y < s.size(); ++y)
            if (s.mul(x, y) != s.mul(y, x)) m_comm = false;
        bool rows_equal = true;
        auto first = c.row(0);
        for (int x = 1; x < s.size() && rows_equal; ++x)
          rows_equal = c.row(x) == first;
        bool rhs = m_comm && rows_equal;
        if (rhs) {
          ElementMap gamma(s.size(), first);
          rhs = is_endomorphism(s, gamma) && is_idempotent_map(gamma);
        }
        if (c.flags.commutative != rhs)
          return fail(std::string("characterization mismatch: flag=") +
                      (c.flags.commutative ? "yes" : "no"));
        return pass();
      });

  // ---- local groups under central idempotents ----

  add("local-order-relation", "central-idempotent solution",
      "x in H_e implies theta_e(e) <= theta_x(e)", [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        if (!has_central_idempotents(s))
          return skip("idempotents not central");
        for (int e : s.idempotents()) {
          auto h = local_group(s, e);
          for (int x : h.elements) {
            int a = c.th(e, e), b = c.th(x, e);
            if (!s.is_idempotent(a) || !s.is_idempotent(b))
              return fail("non-idempotent comparand at " + at2(e, x));
            if (!idempotent_leq(s, a, b))
              return fail("order fails at e=" + std::to_string(e) +
                          ",x=" + std::to_string(x));
          }
        }
        return pass();
      });

  add("local-image-and-inverse", "central-idempotent solution",
      "x in H_e implies theta_e(x) in H_{theta_e(e)} with inverse "
      "theta_x(x^-)",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        if (!has_central_idempotents(s))
          return skip("idempotents not central");
        for (int e : s.idempotents()) {
          auto h = local_group(s, e);
          for (int x : h.elements) {
            int ee = c.th(e, e);
            if (!s.is_idempotent(ee))
              return fail("theta_e(e) not idempotent at e=" +
                          std::to_string(e));
            auto target = local_group(s, ee);
            int img = c.th(e, x);
            if (target.inverse[img] < 0)
              return fail("theta_e(x) escapes the local group at " +
                          at2(e, x));
            if (target.inverse[img] != c.th(x, h.inverse[x]))
              return fail("inverse formula fails at " + at2(e, x));
          }
        }
        return pass();
      });

  add("local-division-formula", "central-idempotent solution",
      "f <= e, x in H_e, y in H_f imply theta_x(y) = "
      "theta_e(x)^- theta_e(xy)",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        const auto& s = *c.sg;
        if (!has_central_idempotents(s))
          return skip("idempotents not central");
        for (int e : s.idempotents()) {
          auto he = local_group(s, e);
          for (int x : he.elements) {
            int ee = c.th(e, e);
            if (!s.is_idempotent(ee))
              return fail("theta_e(e) not idempotent at e=" +
                          std::to_string(e));
            auto target = local_group(s, ee);
            if (target.inverse[c.th(e, x)] < 0)
              return fail("theta_e(x) has no local inverse at " + at2(e, x));
            int inv_img = target.inverse[c.th(e, x)];
            for (int f : s.idempotents()) {
              if (!idempotent_leq(s, f, e)) continue;
              for (int y : local_group(s, f).elements)
                if (c.th(x, y) != s.mul(inv_img, c.th(e, s.mul(x, y))))
                  return fail("division formula fails at e=" +
                              std::to_string(e) + ",x=" + std::to_string(x) +
                              ",f=" + std::to_string(f) +
                              ",y=" + std::to_string(y));
            }
          }
        }
        return pass();
      });

  // ---- idempotent solutions on arbitrary semigroups ----

  add("theta-collapse", "idempotent solution",
      "theta_{theta_x(y)} = theta_y", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        int n = c.sg->size();
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
              if (c.th(c.th(x, y), z) != c.th(y, z))
                return fail("collapse fails at " + at3(x, y, z));
        return pass();
      });

  add("theta-right-absorption", "idempotent solution",
      "theta_y = theta_y theta_{xy}", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        int n = c.sg->size();
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
              if (c.th(y, c.th(c.sg->mul(x, y), z)) != c.th(y, z))
                return fail("absorption fails at " + at3(x, y, z));
        return pass();
      });

  add("product-image-right-stable", "idempotent solution",
      "theta_x(yz) = theta_x(yz) theta_y(z)", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        int n = c.sg->size();
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
              int v = c.th(x, c.sg->mul(y, z));
              if (c.sg->mul(v, c.th(y, z)) != v)
                return fail("stability fails at " + at3(x, y, z));
            }
        return pass();
      });

  add("right-fixed-self-stabilized", "idempotent solution",
      "xe = x implies x theta_x(e) = x", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x)
            if (s.mul(x, e) == x && s.mul(x, c.th(x, e)) != x)
              return fail("stability fails at " + at2(x, e));
        return pass();
      });

  add("right-fixed-universal-stabilized", "idempotent solution",
      "xe = x implies theta_y(x) theta_x(e) = theta_y(x)",
      [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x) {
            if (s.mul(x, e) != x) continue;
            for (int y = 0; y < s.size(); ++y)
              if (s.mul(c.th(y, x), c.th(x, e)) != c.th(y, x))
                return fail("stability fails at " + at3(x, e, y));
          }
        return pass();
      });

  add("right-fixed-row-absorption", "idempotent solution",
      "xe = x implies theta_e = theta_e theta_x", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x) {
            if (s.mul(x, e) != x) continue;
            for (int y = 0; y < s.size(); ++y)
              if (c.th(e, c.th(x, y)) != c.th(e, y))
                return fail("absorption fails at " + at3(e, x, y));
          }
        return pass();
      });

  add("left-fixed-image-idempotent", "idempotent solution",
      "ex = x implies theta_e(x) in E(X)", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x)
            if (s.mul(e, x) == x && !s.is_idempotent(c.th(e, x)))
              return fail("image not idempotent at " + at2(e, x));
        return pass();
      });

  add("left-fixed-self-stabilized", "idempotent solution",
      "ex = x implies x theta_e(x) = x", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x)
            if (s.mul(e, x) == x && s.mul(x, c.th(e, x)) != x)
              return fail("stability fails at " + at2(e, x));
        return pass();
      });

  add("left-fixed-universal-stabilized", "idempotent solution",
      "ex = x implies theta_y(x) theta_e(x) = theta_y(x)",
      [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x) {
            if (s.mul(e, x) != x) continue;
            for (int y = 0; y < s.size(); ++y)
              if (s.mul(c.th(y, x), c.th(e, x)) != c.th(y, x))
                return fail("stability fails at " + at3(e, x, y));
          }
        return pass();
      });

  add("left-fixed-row-idempotent", "idempotent solution",
      "ex = x implies theta_x theta_x = theta_x", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x) {
            if (s.mul(e, x) != x) continue;
            for (int y = 0; y < s.size(); ++y)
              if (c.th(x, c.th(x, y)) != c.th(x, y))
                return fail("row not idempotent at " + at2(x, y));
          }
        return pass();
      });

  add("two-sided-fixed-consequences", "idempotent solution",
      "ex = xe = x bundles: theta_e(x) idempotent, x stabilized, "
      "theta_e absorbs theta_x, theta_x idempotent",
      [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        const auto& s = *c.sg;
        for (int e : s.idempotents())
          for (int x = 0; x < s.size(); ++x) {
            if (s.mul(e, x) != x || s.mul(x, e) != x) continue;
            if (!s.is_idempotent(c.th(e, x)))
              return fail("image not idempotent at " + at2(e, x));
            if (s.mul(x, c.th(e, x)) != x || s.mul(x, c.th(x, e)) != x)
              return fail("stability fails at " + at2(e, x));
            for (int y = 0; y < s.size(); ++y) {
              if (c.th(e, c.th(x, y)) != c.th(e, y))
                return fail("absorption fails at " + at3(e, x, y));
              if (c.th(x, c.th(x, y)) != c.th(x, y))
                return fail("row not idempotent at " + at2(x, y));
              if (s.mul(c.th(y, x), c.th(e, x)) != c.th(y, x) ||
                  s.mul(c.th(y, x), c.th(x, e)) != c.th(y, x))
                return fail("universal stability fails at " + at3(e, x, y));
            }
          }
        return pass();
      });

  // ---- idempotent solutions on monoids ----

  add("identity-cell-fixed", "monoid idempotent solution",
      "theta_1(1) = 1", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        if (c.th(one, one) != one) return fail("theta_1(1) != 1");
        return pass();
      });

  add("rows-determined-by-identity-row", "monoid idempotent solution",
      "theta_x = theta_{theta_1(x)}", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int x = 0; x < c.sg->size(); ++x)
          if (c.row(x) != c.row(c.th(one, x)))
            return fail("row mismatch at x=" + std::to_string(x));
        return pass();
      });

  add("identity-row-below-column", "monoid idempotent solution",
      "theta_1(x) <= theta_x(1)", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        const auto& s = *c.sg;
        int one = *s.identity();
        for (int x = 0; x < s.size(); ++x) {
          int a = c.th(one, x), b = c.th(x, one);
          if (!s.is_idempotent(a) || !s.is_idempotent(b))
            return fail("non-idempotent comparand at x=" + std::to_string(x));
          if (!idempotent_leq(s, a, b))
            return fail("order fails at x=" + std::to_string(x));
        }
        return pass();
      });

  add("rows-idempotent-maps", "monoid idempotent solution",
      "every theta_x is an idempotent map", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        for (int x = 0; x < c.sg->size(); ++x)
          for (int y = 0; y < c.sg->size(); ++y)
            if (c.th(x, c.th(x, y)) != c.th(x, y))
              return fail("row not idempotent at " + at2(x, y));
        return pass();
      });

  add("right-unit-cell", "monoid idempotent solution",
      "rr' = 1 implies theta_r(r') = 1", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int r = 0; r < c.sg->size(); ++r)
          for (int rp = 0; rp < c.sg->size(); ++rp)
            if (c.sg->mul(r, rp) == one && c.th(r, rp) != one)
              return fail("theta_r(r') != 1 at " + at2(r, rp));
        return pass();
      });

  add("right-unit-kernel", "monoid idempotent solution",
      "r a right unit implies theta_1(r) = 1", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int r : right_units(*c.sg))
          if (c.th(one, r) != one)
            return fail("theta_1(r) != 1 at r=" + std::to_string(r));
        return pass();
      });

  add("right-unit-row-collapse", "monoid idempotent solution",
      "r a right unit implies theta_r = theta_1", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        int one = *c.sg->identity();
        for (int r : right_units(*c.sg))
          if (c.row(r) != c.row(one))
            return fail("theta_r != theta_1 at r=" + std::to_string(r));
        return pass();
      });

  add("unit-image-observation", "monoid idempotent solution",
      "whether theta_x maps the unit group into itself; recorded, not "
      "asserted",
      [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        const auto& s = *c.sg;
        int one = *s.identity();
        std::vector<int> units;
        for (int u = 0; u < s.size(); ++u)
          for (int v = 0; v < s.size(); ++v)
            if (s.mul(u, v) == one && s.mul(v, u) == one) {
              units.push_back(u);
              break;
            }
        for (int x = 0; x < s.size(); ++x)
          for (int u : units)
            if (std::find(units.begin(), units.end(), c.th(x, u)) ==
                units.end())
              return pass_with("unit image escapes at " + at2(x, u));
        return pass_with("unit image preserved");
      });

  // ---- idempotent solutions, central idempotents, kernels ----

  add("identity-row-homomorphism", "central-idempotent monoid idempotent solution",
      "theta_1 is an idempotent monoid homomorphism into E(M)",
      [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        if (!has_central_idempotents(*c.sg))
          return skip("idempotents not central");
        if (!theta1_hom_into_idempotents(c))
          return fail("theta_1 is not a monoid homomorphism into E(M)");
        if (!is_idempotent_map(identity_row(c)))
          return fail("theta_1 is not an idempotent map");
        return pass();
      });

  add("idempotency-reduces-to-i2", "central-idempotent monoid solution",
      "with theta_1 an idempotent homomorphism into E(M) and x theta_1(x) "
      "= x, idempotency is equivalent to condition (I2)",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        const auto& s = *c.sg;
        if (!has_central_idempotents(s))
          return skip("idempotents not central");
        if (!theta1_hom_into_idempotents(c) ||
            !is_idempotent_map(identity_row(c)))
          return skip("theta-1 not an idempotent homomorphism into E(M)");
        int one = *s.identity();
        for (int x = 0; x < s.size(); ++x)
          if (s.mul(x, c.th(one, x)) != x)
            return skip("x theta_1(x) = x fails");
        bool i2 = true;
        for (int x = 0; x < s.size() && i2; ++x)
          for (int y = 0; y < s.size() && i2; ++y) {
            int t = c.th(x, y);
            i2 = c.th(s.mul(x, y), t) == t;
          }
        if (i2 != c.flags.idempotent)
          return fail(std::string("(I2) is ") + (i2 ? "true" : "false") +
                      " but idempotency is " +
                      (c.flags.idempotent ? "true" : "false"));
        return pass();
      });

  add("kernel-representatives", "monoid idempotent solution with theta_1 a homomorphism",
      "theta_1(M) represents M/ker theta_1 exactly once and contains 1",
      [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        if (!theta1_hom_into_idempotents(c))
          return skip("theta-1 not a homomorphism into E(M)");
        const auto& s = *c.sg;
        int one = *s.identity();
        try {
          kernel_congruence(s, identity_row(c));
        } catch (const std::exception& e) {
          return fail(std::string("kernel is not a congruence: ") + e.what());
        }
        std::set<int> image;
        for (int x = 0; x < s.size(); ++x) image.insert(c.th(one, x));
        if (!image.count(one)) return fail("image omits the identity");
        for (int x = 0; x < s.size(); ++x) {
          int hits = 0;
          for (int r : image)
            if (c.th(one, r) == c.th(one, x)) ++hits;
          if (hits != 1)
            return fail("class of " + std::to_string(x) + " has " +
                        std::to_string(hits) + " representatives");
        }
        return pass();
      });

  add("kernel-pairs", "monoid idempotent solution with theta_1 a homomorphism",
      "(theta_x(y), y) lies in ker theta_1", [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        if (!theta1_hom_into_idempotents(c))
          return skip("theta-1 not a homomorphism into E(M)");
        int one = *c.sg->identity();
        for (int x = 0; x < c.sg->size(); ++x)
          for (int y = 0; y < c.sg->size(); ++y)
            if (c.th(one, c.th(x, y)) != c.th(one, y))
              return fail("kernel pair fails at " + at2(x, y));
        return pass();
      });

  add("kernel-representatives-central", "central-idempotent monoid idempotent solution",
      "without assuming the homomorphism: theta_1(M) represents "
      "M/ker theta_1 and (theta_x(y), y) in ker theta_1",
      [](const LabContext& c) {
        if (auto g = need_idempotent_solution(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        if (!has_central_idempotents(*c.sg))
          return skip("idempotents not central");
        int one = *c.sg->identity();
        std::set<int> image;
        for (int x = 0; x < c.sg->size(); ++x) image.insert(c.th(one, x));
        if (!image.count(one)) return fail("image omits the identity");
        for (int x = 0; x < c.sg->size(); ++x) {
          int hits = 0;
          for (int r : image)
            if (c.th(one, r) == c.th(one, x)) ++hits;
          if (hits != 1)
            return fail("class of " + std::to_string(x) + " has " +
                        std::to_string(hits) + " representatives");
        }
        for (int x = 0; x < c.sg->size(); ++x)
          for (int y = 0; y < c.sg->size(); ++y)
            if (c.th(one, c.th(x, y)) != c.th(one, y))
              return fail("kernel pair fails at " + at2(x, y));
        return pass();
      });

  // ---- uniqueness and characterization sweeps ----

  add("unique-idempotent-on-group", "group",
      "the constant identity theta is the only idempotent solution",
      [](const LabContext& c) {
        if (auto g = need_bare(c)) return *g;
        if (!is_group(*c.sg)) return skip("not a group");
        int n = c.sg->size();
        int one = c.sg->identity() ? *c.sg->identity()
                                   : *find_identity(n, c.sg->table());
        SearchOptions opts;
        opts.filter.idempotent = true;
        opts.hard_cap = c.enumeration_cap;
        return expect_unique(*c.sg, opts, std::vector<int>(n * n, one),
                             "idempotent");
      });

  add("unique-idempotent-on-cancellative-monoid", "cancellative monoid",
      "the constant identity theta is the only idempotent solution",
      [](const LabContext& c) {
        if (auto g = need_bare(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        if (!is_cancellative(*c.sg)) return skip("not cancellative");
        int n = c.sg->size();
        SearchOptions opts;
        opts.filter.idempotent = true;
        opts.hard_cap = c.enumeration_cap;
        return expect_unique(*c.sg, opts,
                             std::vector<int>(n * n, *c.sg->identity()),
                             "idempotent");
      });

  add("endomorphism-solution-criterion", "semigroup",
      "(xy, gamma(y)) is a solution iff gamma is an idempotent "
      "endomorphism",
      [](const LabContext& c) {
        if (auto g = need_bare(c)) return *g;
        const auto& s = *c.sg;
        int n = s.size();
        std::vector<int> gamma(n, 0);
        while (true) {
          std::vector<int> theta(n * n);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) theta[x * n + y] = gamma[y];
          ElementMap m(n, gamma);
          bool lhs = verify_solution(s, theta, 1).ok;
          bool rhs = is_endomorphism(s, m) && is_idempotent_map(m);
          if (lhs != rhs) {
            std::string g_str;
            for (int v : gamma) g_str += std::to_string(v);
            return fail("criterion mismatch for gamma=" + g_str);
          }
          int i = 0;
          while (i < n && ++gamma[i] == n) gamma[i++] = 0;
          if (i == n) break;
        }
        return pass();
      });

  add("constant-row-idempotency-criterion", "monoid",
      "(xy, gamma(y)) is an idempotent solution iff gamma is an idempotent "
      "endomorphism with x gamma(x) = x",
      [](const LabContext& c) {
        if (auto g = need_bare(c)) return *g;
        if (auto g = need_monoid(c)) return *g;
        const auto& s = *c.sg;
        int n = s.size();
        std::vector<int> gamma(n, 0);
        while (true) {
          std::vector<int> theta(n * n);
          for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) theta[x * n + y] = gamma[y];
          ElementMap m(n, gamma);
          bool lhs = verify_solution(s, theta, 1).ok &&
                     classify_raw(s, theta).idempotent;
          bool rhs = is_endomorphism(s, m) && is_idempotent_map(m);
          for (int x = 0; x < n && rhs; ++x) rhs = s.mul(x, gamma[x]) == x;
          if (lhs != rhs) {
            std::string g_str;
            for (int v : gamma) g_str += std::to_string(v);
            return fail("criterion mismatch for gamma=" + g_str);
          }
          int i = 0;
          while (i < n && ++gamma[i] == n) gamma[i++] = 0;
          if (i == n) break;
        }
        return pass();
      });

  add("reference-monoid-unique-idempotent", "the 3-element monoid with ab = a and b^2 = a",
      "its only idempotent solution is the constant identity "
      "(b^2 read as the idempotent a; the other reading contradicts "
      "uniqueness)",
      [](const LabContext& c) {
        if (auto g = need_bare(c)) return *g;
        if (!are_isomorphic(*c.sg, reference_order3_monoid()))
          return skip("not the reference order-3 monoid");
        int n = c.sg->size();
        int one = c.sg->identity() ? *c.sg->identity()
                                   : *find_identity(n, c.sg->table());
        SearchOptions opts;
        opts.filter.idempotent = true;
        opts.hard_cap = c.enumeration_cap;
        return expect_unique(*c.sg, opts, std::vector<int>(n * n, one),
                             "idempotent");
      });

  add("group-solution-normal-form", "group solution",
      "theta_x(y) = theta_1(x)^-1 theta_1(xy), the kernel of theta_1 is a "
      "normal subgroup and im theta_1 represents its cosets",
      [](const LabContext& c) {
        if (auto g = need_solution(c)) return *g;
        if (!is_group(*c.sg)) return skip("not a group");
        const auto& s = *c.sg;
        int n = s.size();
        int one =
            s.identity() ? *s.identity() : *find_identity(n, s.table());
        auto inv = group_inverses(s);
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            if (c.th(x, y) !=
                s.mul(inv[c.th(one, x)], c.th(one, s.mul(x, y))))
              return fail("normal form fails at " + at2(x, y));
        std::vector<int> kernel;
        for (int x = 0; x < n; ++x)
          if (c.th(one, x) == one) kernel.push_back(x);
        if (!is_normal_subgroup(s, kernel))
          return fail("kernel is not a normal subgroup");
        std::set<int> image;
        for (int x = 0; x < n; ++x) image.insert(c.th(one, x));
        if (!image.count(one)) return fail("image omits the identity");
        for (int x = 0; x < n; ++x) {
          int hits = 0;
          for (int k : kernel)
            if (image.count(s.mul(k, x))) ++hits;
          if (hits != 1)
            return fail("coset of " + std::to_string(x) + " has " +
                        std::to_string(hits) + " representatives");
          if (!std::count(kernel.begin(), kernel.end(),
                          s.mul(c.th(one, x), inv[x])))
            return fail("theta_1(x) escapes Kx at x=" + std::to_string(x));
        }
        return pass();
      });

  return cases;
}

}  // namespace

std::vector<int> LabContext::row(int x) const {
  int n = sg->size();
  return std::vector<int>(raw->theta->begin() + x * n,
                          raw->theta->begin() + (x + 1) * n);
}

LabInstance instance_of(const FiniteSemigroup& s, std::string label) {
  return {std::move(label), s.size(), s.identity(), s.table(), std::nullopt};
}

LabInstance instance_of(const PentagonSolution& sol, std::string label) {
  return {std::move(label), sol.size(), sol.semigroup().identity(),
          sol.semigroup().table(), sol.theta_table()};
}

const std::vector<PropertyCase>& catalog() {
  static const std::vector<PropertyCase> cases = build_catalog();
  return cases;
}

namespace {

LabContext make_context(const LabInstance& inst, const LabOptions& opts) {
  LabContext ctx;
  ctx.raw = &inst;
  ctx.enumeration_cap = opts.enumeration_cap;
  try {
    ctx.sg.emplace(inst.n, inst.mul, inst.identity);
  } catch (const std::exception& e) {
    ctx.sg_skip_reason = e.what();
    return ctx;
  }
  if (inst.theta) {
    const auto& t = *inst.theta;
    ctx.theta_shape_ok = static_cast<int>(t.size()) == inst.n * inst.n;
    if (ctx.theta_shape_ok)
      for (int v : t)
        if (v < 0 || v >= inst.n) ctx.theta_shape_ok = false;
    if (ctx.theta_shape_ok) {
      ctx.flags = classify_raw(*ctx.sg, t);
      ctx.is_solution =
          !opts.verify_solutions || verify_solution(*ctx.sg, t, 1).ok;
    }
  }
  return ctx;
}

std::vector<int> active_cases(const LabOptions& opts) {
  const auto& cases = catalog();
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(cases.size()); ++i) {
    if (opts.only_cases.empty() ||
        std::count(opts.only_cases.begin(), opts.only_cases.end(),
                   cases[i].id))
      idx.push_back(i);
  }
  return idx;
}

}  // namespace

LabReport run_catalog(const std::vector<LabInstance>& instances,
                      const LabOptions& options) {
  const auto& cases = catalog();
  auto active = active_cases(options);

  std::vector<std::vector<CaseOutcome>> outcomes(instances.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next.fetch_add(1); i < instances.size();
         i = next.fetch_add(1)) {
      LabContext ctx = make_context(instances[i], options);
      outcomes[i].reserve(active.size());
      for (int j : active) outcomes[i].push_back(cases[j].check(ctx));
    }
  };
  int workers = std::max(1, options.worker_count);
  if (workers == 1 || instances.size() < 2) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  LabReport report;
  report.instance_count = static_cast<long long>(instances.size());
  for (size_t a = 0; a < active.size(); ++a) {
    const auto& pc = cases[active[a]];
    CaseReport cr{pc.id, pc.scope, pc.statement, 0, 0, 0, 0, {}};
    for (size_t i = 0; i < instances.size(); ++i) {
      const auto& out = outcomes[i][a];
      ++cr.instances;
      switch (out.status) {
        case CaseStatus::pass:
          ++cr.passes;
          break;
        case CaseStatus::fail:
          ++cr.fails;
          if (cr.fail_witnesses.size() < 8)
            cr.fail_witnesses.push_back(instances[i].label + ": " +
                                        out.detail);
          break;
        case CaseStatus::skip:
          ++cr.skips;
          break;
      }
    }
    report.cases.push_back(std::move(cr));
  }
  return report;
}

std::vector<LabInstance> standard_instances(int max_order) {
  std::vector<LabInstance> out;
  for (int n = 1; n <= max_order; ++n) {
    SemigroupEnumOptions senum;
    senum.up_to_iso = true;
    senum.hard_cap = std::max(4, max_order);
    auto classes = enumerate_semigroups(n, senum);
    for (size_t i = 0; i < classes.size(); ++i) {
      std::string label =
          "order" + std::to_string(n) + "/class" + std::to_string(i);
      out.push_back(instance_of(classes[i], label));
      SearchOptions so;
      so.hard_cap = std::max(4, max_order);
      auto sols = enumerate_solutions(classes[i], so);
      for (size_t j = 0; j < sols.size(); ++j)
        out.push_back(
            instance_of(sols[j], label + "/sol" + std::to_string(j)));
    }
  }
  return out;
}

LabReport check_nondegenerate_monoid(const FiniteSemigroup& m,
                                     const LabOptions& options) {
  LabOptions opts = options;
  opts.only_cases = {"unique-nondegenerate-on-monoid"};
  return run_catalog({instance_of(m, "input")}, opts);
}

LabReport check_involutive_implies_cc(
    const std::vector<LabInstance>& instances, const LabOptions& options) {
  LabOptions opts = options;
  opts.only_cases = {"involutive-implies-commutative-cocommutative"};
  return run_catalog(instances, opts);
}

MutationReport mutation_scan(const std::vector<LabInstance>& bases,
                             const LabOptions& options) {
  LabOptions opts = options;
  opts.verify_solutions = false;  // keep conclusion violations reachable
  const auto& cases = catalog();
  auto active = active_cases(opts);

  MutationReport report;
  for (int j : active) {
    const auto& pc = cases[j];
    MutationCaseResult res{pc.id, false, "no passing base produced a flip"};
    for (const auto& base : bases) {
      LabContext ctx = make_context(base, opts);
      if (pc.check(ctx).status != CaseStatus::pass) continue;

      auto hunt = [&](bool in_theta) -> bool {
        const std::vector<int>& target = in_theta ? *base.theta : base.mul;
        for (size_t cell = 0; cell < target.size(); ++cell)
          for (int v = 0; v < base.n; ++v) {
            if (v == target[cell]) continue;
            LabInstance mutant = base;
            (in_theta ? *mutant.theta : mutant.mul)[cell] = v;
            LabContext mctx = make_context(mutant, opts);
            auto out = pc.check(mctx);
            if (out.status != CaseStatus::pass) {
              res.flipped = true;
              res.detail =
                  base.label + " " + (in_theta ? "theta" : "mul") + "[" +
                  std::to_string(cell) + "]:=" + std::to_string(v) + " -> " +
                  (out.status == CaseStatus::fail ? "fail: " : "skip: ") +
                  out.detail;
              return true;
            }
          }
        return false;
      };
      if (hunt(false)) break;
      if (base.theta && hunt(true)) break;
    }
    report.cases.push_back(std::move(res));
  }
  return report;
}

std::string format_lab_report(const LabReport& report) {
  std::ostringstream out;
  out << "theorem-lab cases=" << report.cases.size()
      << " instances=" << report.instance_count << '\n';
  for (const auto& c : report.cases) {
    out << "case id=" << c.id << " scope=\"" << c.scope << "\""
        << " instances=" << c.instances << " passes=" << c.passes
        << " fails=" << c.fails << " skips=" << c.skips << '\n';
    for (const auto& w : c.fail_witnesses) out << "  witness " << w << '\n';
  }
  out << "RESULT=" << (report.all_passed() ? "pass" : "fail") << '\n';
  return out.str();
}

std::string format_mutation_report(const MutationReport& report) {
  std::ostringstream out;
  out << "mutation-scan cases=" << report.cases.size() << '\n';
  for (const auto& c : report.cases)
    out << "flip id=" << c.case_id << " "
        << (c.flipped ? "yes" : "NO") << " " << c.detail << '\n';
  out << "RESULT=" << (report.all_flipped() ? "pass" : "fail") << '\n';
  return out.str();
}

}  // namespace pentasol
