#include "pentasol/families.hpp"

#include <stdexcept>

namespace pentasol {

FiniteSemigroup null_semigroup(int n) {
  return FiniteSemigroup(n, std::vector<int>(n * n, 0));
}

FiniteSemigroup left_zero_semigroup(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = x;
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup right_zero_semigroup(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = y;
  return FiniteSemigroup(n, std::move(t));
}

FiniteSemigroup chain_semilattice(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = std::max(x, y);
  return FiniteSemigroup(n, std::move(t), 0);
}

FiniteSemigroup cyclic_group(int n) {
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = (x + y) % n;
  return FiniteSemigroup(n, std::move(t), 0);
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  int na = a.size(), nb = b.size(), n = na * nb;
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
      t[x * n + y] = a.mul(xa, ya) * nb + b.mul(xb, yb);
    }
  std::optional<int> identity;
  if (a.identity() && b.identity())
    identity = *a.identity() * nb + *b.identity();
  return FiniteSemigroup(n, std::move(t), identity);
}

FiniteSemigroup dihedral_group(int sides) {
  if (sides < 1) throw std::invalid_argument("need at least one side");
  int n = 2 * sides;
  // element i + sides*j = rotation^i * reflection^j
  std::vector<int> t(n * n);
  for (int i1 = 0; i1 < sides; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < sides; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = j1 ? (i1 - i2 + sides) % sides : (i1 + i2) % sides;
          int j = j1 ^ j2;
          t[(i1 + sides * j1) * n + (i2 + sides * j2)] = i + sides * j;
        }
  return FiniteSemigroup(n, std::move(t), 0);
}

FiniteSemigroup quaternion_group() {
  // index = sign*4 + unit, units ordered e, i, j, k
  static const int unit_mul[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  // unit_sign[i][j]: i*i=j*j=k*k=-e, i*j=k, j*k=i, k*i=j, reversed negated
  int n = 8;
  std::vector<int> t(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int sx = x / 4, ux = x % 4, sy = y / 4, uy = y % 4;
      int s = sx ^ sy ^ unit_sign[ux][uy];
      t[x * n + y] = s * 4 + unit_mul[ux][uy];
    }
  return FiniteSemigroup(n, std::move(t), 0);
}

FiniteSemigroup zero_adjoined(const FiniteSemigroup& s) {
  int n = s.size() + 1, zero = s.size();
  std::vector<int> t(n * n, zero);
  for (int x = 0; x < s.size(); ++x)
    for (int y = 0; y < s.size(); ++y) t[x * n + y] = s.mul(x, y);
  return FiniteSemigroup(n, std::move(t), s.identity());
}

std::vector<FiniteSemigroup> groups_up_to_order(int max_order) {
  std::vector<FiniteSemigroup> out;
  auto c2 = cyclic_group(2);
  for (int n = 1; n <= max_order; ++n) {
    out.push_back(cyclic_group(n));
    switch (n) {
      case 4:
        out.push_back(direct_product(c2, c2));
        break;
      case 6:
        out.push_back(dihedral_group(3));
        break;
      case 8:
        out.push_back(direct_product(cyclic_group(4), c2));
        out.push_back(direct_product(direct_product(c2, c2), c2));
        out.push_back(dihedral_group(4));
        out.push_back(quaternion_group());
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace pentasol
