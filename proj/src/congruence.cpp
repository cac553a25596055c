#include "pentasol/congruence.hpp"

#include <stdexcept>

namespace pentasol {

namespace {

std::vector<int> normalize_blocks(const std::vector<int>& raw, int* count) {
  std::vector<int> remap(raw.size(), -1);
  std::vector<int> out(raw.size());
  int next = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    int b = raw[i];
    if (b < 0 || b >= static_cast<int>(raw.size()))
      throw std::invalid_argument("block id out of range");
    if (remap[b] < 0) remap[b] = next++;
    out[i] = remap[b];
  }
  *count = next;
  return out;
}

}  // namespace

Congruence::Congruence(const FiniteSemigroup& s, std::vector<int> class_of) {
  if (static_cast<int>(class_of.size()) != s.size())
    throw std::invalid_argument("partition size mismatch");
  class_of_ = normalize_blocks(class_of, &blocks_);
  int n = s.size();
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2) {
      if (class_of_[a] != class_of_[a2]) continue;
      for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2) {
          if (class_of_[b] != class_of_[b2]) continue;
          if (class_of_[s.mul(a, b)] != class_of_[s.mul(a2, b2)])
            throw std::invalid_argument(
                "not a congruence: blocks of (" + std::to_string(a) + "," +
                std::to_string(b) + ") and (" + std::to_string(a2) + "," +
                std::to_string(b2) + ") multiply into different blocks");
        }
    }
}

Congruence kernel_congruence(const FiniteSemigroup& s, const ElementMap& m) {
  if (m.n != s.size())
    throw std::invalid_argument("map carrier size mismatch");
  return Congruence(s, m.table);
}

QuotientResult quotient(const FiniteSemigroup& s, const Congruence& c) {
  int k = c.block_count();
  std::vector<int> rep(k, -1);
  for (int x = 0; x < s.size(); ++x)
    if (rep[c.block_of(x)] < 0) rep[c.block_of(x)] = x;
  std::vector<int> table(k * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      table[a * k + b] = c.block_of(s.mul(rep[a], rep[b]));
  std::optional<int> identity;
  if (s.identity()) identity = c.block_of(*s.identity());
  return {FiniteSemigroup(k, std::move(table), identity), c.classes()};
}

}  // namespace pentasol
