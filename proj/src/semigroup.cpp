#include "pentasol/semigroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace pentasol {

namespace {

void require_well_formed(int n, const std::vector<int>& table) {
  if (n <= 0) throw std::invalid_argument("element count must be positive");
  if (static_cast<int>(table.size()) != n * n)
    throw std::invalid_argument("table has " + std::to_string(table.size()) +
                                " entries, expected " + std::to_string(n * n));
  for (int i = 0; i < n * n; ++i)
    if (table[i] < 0 || table[i] >= n)
      throw std::invalid_argument(
          "entry " + std::to_string(table[i]) + " at cell (" +
          std::to_string(i / n) + "," + std::to_string(i % n) +
          ") out of range [0," + std::to_string(n) + ")");
}

}  // namespace

AssociativityCheck check_associativity(int n, const std::vector<int>& table) {
  require_well_formed(n, table);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int xy = table[x * n + y];
        int yz = table[y * n + z];
        if (table[xy * n + z] != table[x * n + yz])
          return {false, {x, y, z}};
      }
  return {};
}

std::optional<int> find_identity(int n, const std::vector<int>& table) {
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e * n + x] == x && table[x * n + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

FiniteSemigroup::FiniteSemigroup(int n, std::vector<int> table,
                                 std::optional<int> identity)
    : n_(n), table_(std::move(table)), identity_(identity) {
  auto check = check_associativity(n_, table_);
  if (!check.ok)
    throw std::invalid_argument(
        "table is not associative at (" + std::to_string(check.witness[0]) +
        "," + std::to_string(check.witness[1]) + "," +
        std::to_string(check.witness[2]) + ")");
  if (identity_) {
    int e = *identity_;
    if (e < 0 || e >= n_)
      throw std::invalid_argument("identity index out of range");
    for (int x = 0; x < n_; ++x)
      if (mul(e, x) != x || mul(x, e) != x)
        throw std::invalid_argument("declared identity " + std::to_string(e) +
                                    " is not a two-sided identity");
  }
  for (int e = 0; e < n_; ++e)
    if (mul(e, e) == e) idempotents_.push_back(e);
}

FiniteSemigroup FiniteSemigroup::from_rows(
    const std::vector<std::vector<int>>& rows, std::optional<int> identity) {
  int n = static_cast<int>(rows.size());
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("ragged row in Cayley table");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return FiniteSemigroup(n, std::move(flat), identity);
}

bool FiniteSemigroup::is_idempotent(int e) const {
  return e >= 0 && e < n_ && mul(e, e) == e;
}

ElementMap::ElementMap(int n, std::vector<int> t)
    : n(n), table(std::move(t)) {
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("map table has wrong length");
  for (int v : table)
    if (v < 0 || v >= n)
      throw std::invalid_argument("map image out of range");
}

bool is_endomorphism(const FiniteSemigroup& s, const ElementMap& m) {
  if (m.n != s.size()) return false;
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y)
      if (m(s.mul(x, y)) != s.mul(m(x), m(y))) return false;
  return true;
}

bool is_idempotent_map(const ElementMap& m) {
  for (int x = 0; x < m.n; ++x)
    if (m(m(x)) != m(x)) return false;
  return true;
}

ElementMap compose(const ElementMap& outer, const ElementMap& inner) {
  if (outer.n != inner.n)
    throw std::invalid_argument("composing maps over different carriers");
  std::vector<int> t(inner.n);
  for (int x = 0; x < inner.n; ++x) t[x] = outer(inner(x));
  return ElementMap(inner.n, std::move(t));
}

ElementMap identity_map(int n) {
  std::vector<int> t(n);
  for (int x = 0; x < n; ++x) t[x] = x;
  return ElementMap(n, std::move(t));
}

bool idempotent_leq(const FiniteSemigroup& s, int e, int f) {
  if (!s.is_idempotent(e) || !s.is_idempotent(f))
    throw std::domain_error("idempotent_leq requires idempotent arguments");
  return s.mul(e, f) == e && s.mul(f, e) == e;
}

PrincipalIdeals principal_structures(const FiniteSemigroup& s, int e) {
  if (!s.is_idempotent(e))
    throw std::domain_error("principal_structures requires an idempotent");
  PrincipalIdeals out;
  for (int x = 0; x < s.size(); ++x) {
    bool r = s.mul(e, x) == x;
    bool l = s.mul(x, e) == x;
    if (r) out.right_ideal.push_back(x);
    if (l) out.left_ideal.push_back(x);
    if (r && l) out.two_sided.push_back(x);
  }
  return out;
}

LocalGroup local_group(const FiniteSemigroup& s, int e) {
  if (!s.is_idempotent(e))
    throw std::domain_error("local_group requires an idempotent");
  int n = s.size();
  std::vector<int> xe;
  for (int x = 0; x < n; ++x)
    if (s.mul(x, e) == x) xe.push_back(x);

  LocalGroup out;
  out.inverse.assign(n, -1);
  for (int x : xe)
    for (int y : xe)
      if (s.mul(x, y) == e && s.mul(y, x) == e) {
        out.elements.push_back(x);
        out.inverse[x] = y;
        break;
      }

  // Sanity: H_e is a group with identity e.
  if (out.inverse[e] != e)
    throw std::logic_error("local group does not contain its idempotent");
  for (int a : out.elements)
    for (int b : out.elements)
      if (out.inverse[s.mul(a, b)] < 0)
        throw std::logic_error("local group is not closed");
  return out;
}

bool has_central_idempotents(const FiniteSemigroup& s) {
  for (int e : s.idempotents())
    for (int x = 0; x < s.size(); ++x)
      if (s.mul(e, x) != s.mul(x, e)) return false;
  return true;
}

std::optional<std::vector<int>> is_clifford(const FiniteSemigroup& s) {
  int n = s.size();
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y &&
          s.mul(x, y) == s.mul(y, x)) {
        if (inv[x] >= 0) return std::nullopt;  // two distinct inverses
        inv[x] = y;
      }
    }
    if (inv[x] < 0) return std::nullopt;
  }
  return inv;
}

bool is_cancellative(const FiniteSemigroup& s) {
  int n = s.size();
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (s.mul(x, a) == s.mul(x, b) || s.mul(a, x) == s.mul(b, x))
          return false;
  return true;
}

std::vector<int> right_units(const FiniteSemigroup& m) {
  if (!m.is_monoid())
    throw std::domain_error("units require an identity");
  int one = *m.identity();
  std::vector<int> out;
  for (int r = 0; r < m.size(); ++r)
    for (int rp = 0; rp < m.size(); ++rp)
      if (m.mul(r, rp) == one) {
        out.push_back(r);
        break;
      }
  return out;
}

std::vector<int> left_units(const FiniteSemigroup& m) {
  if (!m.is_monoid())
    throw std::domain_error("units require an identity");
  int one = *m.identity();
  std::vector<int> out;
  for (int l = 0; l < m.size(); ++l)
    for (int lp = 0; lp < m.size(); ++lp)
      if (m.mul(lp, l) == one) {
        out.push_back(l);
        break;
      }
  return out;
}

bool in_variety_s(const FiniteSemigroup& s) {
  int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (s.mul(a, s.mul(b, c)) != s.mul(b, c)) return false;
  return true;
}

bool is_group(const FiniteSemigroup& s) {
  if (!s.is_monoid()) {
    auto e = find_identity(s.size(), s.table());
    if (!e) return false;
    // Treat an undeclared identity as group structure all the same.
    for (int x = 0; x < s.size(); ++x) {
      bool inv = false;
      for (int y = 0; y < s.size() && !inv; ++y)
        inv = s.mul(x, y) == *e && s.mul(y, x) == *e;
      if (!inv) return false;
    }
    return true;
  }
  int one = *s.identity();
  for (int x = 0; x < s.size(); ++x) {
    bool inv = false;
    for (int y = 0; y < s.size() && !inv; ++y)
      inv = s.mul(x, y) == one && s.mul(y, x) == one;
    if (!inv) return false;
  }
  return true;
}

std::vector<int> group_inverses(const FiniteSemigroup& g) {
  auto e = g.identity() ? g.identity() : find_identity(g.size(), g.table());
  if (!e || !is_group(g)) throw std::domain_error("not a group");
  std::vector<int> inv(g.size(), -1);
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (g.mul(x, y) == *e && g.mul(y, x) == *e) {
        inv[x] = y;
        break;
      }
  return inv;
}

bool is_subgroup(const FiniteSemigroup& g, const std::vector<int>& subset) {
  auto e = g.identity() ? g.identity() : find_identity(g.size(), g.table());
  if (!e) return false;
  std::vector<bool> in(g.size(), false);
  for (int x : subset) {
    if (x < 0 || x >= g.size()) return false;
    in[x] = true;
  }
  if (!in[*e]) return false;
  auto inv = group_inverses(g);
  for (int x : subset) {
    if (!in[inv[x]]) return false;
    for (int y : subset)
      if (!in[g.mul(x, y)]) return false;
  }
  return true;
}

bool is_normal_subgroup(const FiniteSemigroup& g,
                        const std::vector<int>& subset) {
  if (!is_subgroup(g, subset)) return false;
  std::vector<bool> in(g.size(), false);
  for (int x : subset) in[x] = true;
  auto inv = group_inverses(g);
  for (int x = 0; x < g.size(); ++x)
    for (int k : subset)
      if (!in[g.mul(g.mul(x, k), inv[x])]) return false;
  return true;
}

}  // namespace pentasol
