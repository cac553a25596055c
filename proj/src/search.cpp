#include "pentasol/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

namespace pentasol {

namespace {

using Mask = uint32_t;

inline bool single(Mask m) { return m && (m & (m - 1)) == 0; }
inline int value_of(Mask m) { return std::countr_zero(m); }

// One (P1) instance: val(a) * val(b) = val(c), cells indexed into theta.
struct ProductRule {
  int a, b, c;
};

// One (P2) instance: theta[val(a)][val(b)] must equal val(e).
struct LinkRule {
  int a, b, e;
};

// Backtracking search over theta cells with bitmask domains. Decisions run
// over the identity row first (when there is one) so that, on monoids, the
// remaining rows collapse by propagation; the result set is order
// independent anyway, and the final list is sorted.
class SolutionSearch {
 public:
  SolutionSearch(const FiniteSemigroup& s, const SearchOptions& opts)
      : s_(s), opts_(opts), n_(s.size()), cells_(n_ * n_) {
    build_rules();
    build_order();
    infeasible_ = !build_base_domains();
  }

  std::vector<std::vector<int>> run() {
    std::vector<std::vector<int>> found;
    if (infeasible_) return found;
    std::vector<Mask> dom = base_dom_;
    if (!propagate(dom)) return found;

    int branch = next_cell(dom);
    if (branch < 0 || opts_.worker_count <= 1) {
      search(dom, found);
    } else {
      // Partition the tree by the first undecided cell; each task is an
      // independent subtree, merged in value order.
      std::vector<int> values;
      for (int v = 0; v < n_; ++v)
        if (dom[branch] & (Mask(1) << v)) values.push_back(v);
      std::vector<std::vector<std::vector<int>>> buckets(values.size());
      std::atomic<size_t> next{0};
      auto work = [&] {
        for (size_t i = next.fetch_add(1); i < values.size();
             i = next.fetch_add(1)) {
          std::vector<Mask> local = dom;
          local[branch] = Mask(1) << values[i];
          if (propagate(local)) search(local, buckets[i]);
        }
      };
      int workers = std::min<int>(opts_.worker_count,
                                  static_cast<int>(values.size()));
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
      for (auto& b : buckets)
        for (auto& theta : b) found.push_back(std::move(theta));
    }
    std::sort(found.begin(), found.end());
    return found;
  }

 private:
  const FiniteSemigroup& s_;
  SearchOptions opts_;
  int n_, cells_;
  bool infeasible_ = false;

  std::vector<ProductRule> p1_;
  std::vector<LinkRule> p2_;
  std::vector<std::pair<int, int>> row_links_;  // (C2) cell equalities
  std::vector<int> order_;
  std::vector<Mask> base_dom_;
  std::vector<Mask> left_div_;   // [a*n+c] = {t | a*t = c}
  std::vector<Mask> right_div_;  // [b*n+c] = {t | t*b = c}

  int cell(int x, int y) const { return x * n_ + y; }

  void build_rules() {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        for (int z = 0; z < n_; ++z) {
          int xy = s_.mul(x, y);
          p1_.push_back({cell(x, y), cell(xy, z), cell(x, s_.mul(y, z))});
          p2_.push_back({cell(x, y), cell(xy, z), cell(y, z)});
        }
    left_div_.assign(n_ * n_, 0);
    right_div_.assign(n_ * n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int t = 0; t < n_; ++t) {
        left_div_[a * n_ + s_.mul(a, t)] |= Mask(1) << t;
        right_div_[a * n_ + s_.mul(t, a)] |= Mask(1) << t;
      }
    if (opts_.filter.commutative) {
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y) {
          int xy = s_.mul(x, y);
          if (xy == x) continue;
          for (int t = 0; t < n_; ++t)
            row_links_.emplace_back(cell(x, t), cell(xy, t));
        }
    }
  }

  void build_order() {
    order_.reserve(cells_);
    if (s_.identity()) {
      int e = *s_.identity();
      for (int y = 0; y < n_; ++y) order_.push_back(cell(e, y));
      for (int x = 0; x < n_; ++x) {
        if (x == e) continue;
        for (int y = 0; y < n_; ++y) order_.push_back(cell(x, y));
      }
    } else {
      for (int c = 0; c < cells_; ++c) order_.push_back(c);
    }
  }

  // Static per-cell restrictions implied by the active filters.
  bool build_base_domains() {
    Mask full = (Mask(1) << n_) - 1;
    base_dom_.assign(cells_, full);
    const auto& f = opts_.filter;

    if (f.commutative) {
      // (C1) constrains the semigroup alone.
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          for (int z = 0; z < n_; ++z)
            if (s_.mul(s_.mul(x, z), y) != s_.mul(s_.mul(x, y), z))
              return false;
    }

    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        int xy = s_.mul(x, y);
        Mask m = base_dom_[cell(x, y)];
        if (f.idempotent) m &= mask_where([&](int t) {
            return s_.mul(xy, t) == xy;
          });
        if (f.involutive) m &= mask_where([&](int t) {
            return s_.mul(xy, t) == x;
          });
        if (f.cocommutative) m &= mask_where([&](int t) {
            for (int w = 0; w < n_; ++w)
              if (s_.mul(w, t) != s_.mul(w, y)) return false;
            return true;
          });
        if (!m) return false;
        base_dom_[cell(x, y)] = m;
      }
    return true;
  }

  template <typename Pred>
  Mask mask_where(Pred&& pred) const {
    Mask m = 0;
    for (int t = 0; t < n_; ++t)
      if (pred(t)) m |= Mask(1) << t;
    return m;
  }

  // Fixpoint domain filtering; false on a wiped-out cell. Only removes
  // values that no completion to a (filtered) solution can take.
  bool propagate(std::vector<Mask>& dom) const {
    bool changed = true;
    auto shrink = [&](int c, Mask m) {
      Mask nm = dom[c] & m;
      if (nm != dom[c]) {
        dom[c] = nm;
        changed = true;
      }
      return nm != 0;
    };
    while (changed) {
      changed = false;
      for (const auto& r : p1_) {
        Mask a = dom[r.a], b = dom[r.b], c = dom[r.c];
        if (single(a) && single(b)) {
          int prod = s_.mul(value_of(a), value_of(b));
          if (!shrink(r.c, Mask(1) << prod)) return false;
        } else if (single(a) && single(c)) {
          if (!shrink(r.b, left_div_[value_of(a) * n_ + value_of(c)]))
            return false;
        } else if (single(b) && single(c)) {
          if (!shrink(r.a, right_div_[value_of(b) * n_ + value_of(c)]))
            return false;
        }
      }
      for (const auto& r : p2_) {
        Mask a = dom[r.a], b = dom[r.b];
        if (!(single(a) && single(b))) continue;
        int d = cell(value_of(a), value_of(b));
        Mask m = dom[d] & dom[r.e];
        if (!m) return false;
        if (!shrink(d, m) || !shrink(r.e, m)) return false;
      }
      if (opts_.filter.idempotent || opts_.filter.involutive) {
        for (int x = 0; x < n_; ++x)
          for (int y = 0; y < n_; ++y) {
            Mask m = dom[cell(x, y)];
            if (!single(m)) continue;
            int v = value_of(m);
            int target = cell(s_.mul(x, y), v);
            // (I2): theta_{xy}(theta_x(y)) = theta_x(y); involutive wants y.
            if (opts_.filter.idempotent &&
                !shrink(target, Mask(1) << v))
              return false;
            if (opts_.filter.involutive &&
                !shrink(target, Mask(1) << y))
              return false;
          }
      }
      if (opts_.filter.nondegenerate) {
        for (int x = 0; x < n_; ++x) {
          Mask seen = 0;
          for (int y = 0; y < n_; ++y) {
            Mask m = dom[cell(x, y)];
            if (single(m)) {
              for (int z = 0; z < n_; ++z)
                if (z != y && (dom[cell(x, z)] & m)) {
                  if (!shrink(cell(x, z), ~m)) return false;
                }
            }
            seen |= m;
          }
          if (seen != (Mask(1) << n_) - 1) return false;  // row can't cover
        }
      }
      for (const auto& [u, v] : row_links_) {
        Mask m = dom[u] & dom[v];
        if (!m) return false;
        if (!shrink(u, m) || !shrink(v, m)) return false;
      }
    }
    return true;
  }

  int next_cell(const std::vector<Mask>& dom) const {
    for (int c : order_)
      if (!single(dom[c])) return c;
    return -1;
  }

  void search(const std::vector<Mask>& dom,
              std::vector<std::vector<int>>& out) const {
    int c = next_cell(dom);
    if (c < 0) {
      std::vector<int> theta(cells_);
      for (int i = 0; i < cells_; ++i) theta[i] = value_of(dom[i]);
      if (accept(theta)) out.push_back(std::move(theta));
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (!(dom[c] & (Mask(1) << v))) continue;
      std::vector<Mask> child = dom;
      child[c] = Mask(1) << v;
      if (propagate(child)) search(child, out);
    }
  }

  // Full post-hoc re-check; propagation already guarantees (P1)/(P2) at a
  // leaf, but the filters must agree with the elementwise definitions.
  bool accept(const std::vector<int>& theta) const {
    if (!verify_solution(s_, theta, 1).ok) return false;
    auto flags = classify_raw(s_, theta);
    const auto& f = opts_.filter;
    if (f.idempotent && !flags.idempotent) return false;
    if (f.involutive && !flags.involutive) return false;
    if (f.nondegenerate && !flags.nondegenerate) return false;
    if (f.commutative && !flags.commutative) return false;
    if (f.cocommutative && !flags.cocommutative) return false;
    return true;
  }
};

}  // namespace

std::vector<PentagonSolution> enumerate_solutions(
    const FiniteSemigroup& s, const SearchOptions& options) {
  if (s.size() > options.hard_cap)
    throw std::invalid_argument(
        "order " + std::to_string(s.size()) + " exceeds the search cap " +
        std::to_string(options.hard_cap) +
        "; raise hard_cap explicitly to acknowledge the runtime");

  SolutionSearch engine(s, options);
  auto tables = engine.run();

  if (options.up_to_iso) {
    std::vector<std::vector<int>> reps;
    for (auto& t : tables)
      if (canonical_theta(s, t) == t) reps.push_back(std::move(t));
    tables = std::move(reps);
  }

  std::vector<PentagonSolution> out;
  out.reserve(tables.size());
  for (auto& t : tables) out.emplace_back(s, std::move(t));
  return out;
}

std::map<uint32_t, long long> count_by_flags(const FiniteSemigroup& s,
                                             bool up_to_iso,
                                             int worker_count) {
  SearchOptions opts;
  opts.up_to_iso = up_to_iso;
  opts.worker_count = worker_count;
  opts.hard_cap = std::max(opts.hard_cap, s.size());
  std::map<uint32_t, long long> counts;
  for (const auto& sol : enumerate_solutions(s, opts))
    ++counts[classify(sol).bits()];
  return counts;
}

}  // namespace pentasol
