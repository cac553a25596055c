#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pentasol {

/// Result of an exhaustive associativity scan over a Cayley table.
/// When ok is false, witness holds the lexicographically first triple
/// (x, y, z) with (xy)z != x(yz).
struct AssociativityCheck {
  bool ok = true;
  std::array<int, 3> witness{0, 0, 0};
};

/// Scans every triple of an n x n Cayley table. Throws std::invalid_argument
/// on a malformed table (wrong size or out-of-range entry).
AssociativityCheck check_associativity(int n, const std::vector<int>& table);

/// Index of the two-sided identity of the table, if one exists.
std::optional<int> find_identity(int n, const std::vector<int>& table);

/// A finite semigroup on elements {0, .., n-1}, given by its Cayley table.
///
/// The constructor rejects non-associative tables. An identity index may be
/// declared to put the value in "monoid mode"; it is stored explicitly and
/// is never re-derived, so a table that happens to have a unit can still be
/// handled as a bare semigroup. Instances are immutable and safe to share
/// across threads.
class FiniteSemigroup {
 public:
  FiniteSemigroup(int n, std::vector<int> table,
                  std::optional<int> identity = std::nullopt);

  /// Builds from explicit rows; convenient for literals in tests and tools.
  static FiniteSemigroup from_rows(const std::vector<std::vector<int>>& rows,
                                   std::optional<int> identity = std::nullopt);

  int size() const noexcept { return n_; }
  int mul(int x, int y) const { return table_[x * n_ + y]; }
  const std::vector<int>& table() const noexcept { return table_; }
  std::optional<int> identity() const noexcept { return identity_; }
  bool is_monoid() const noexcept { return identity_.has_value(); }

  /// Sorted list of e with ee = e; never empty for a finite semigroup.
  const std::vector<int>& idempotents() const noexcept { return idempotents_; }
  bool is_idempotent(int e) const;

  friend bool operator==(const FiniteSemigroup&,
                         const FiniteSemigroup&) = default;

 private:
  int n_;
  std::vector<int> table_;
  std::optional<int> identity_;
  std::vector<int> idempotents_;
};

/// A total map {0,..,n-1} -> {0,..,n-1}; carrier size is fixed at n.
struct ElementMap {
  ElementMap(int n, std::vector<int> table);

  int operator()(int x) const { return table[x]; }
  int size() const noexcept { return n; }

  int n;
  std::vector<int> table;

  friend bool operator==(const ElementMap&, const ElementMap&) = default;
};

bool is_endomorphism(const FiniteSemigroup& s, const ElementMap& m);
bool is_idempotent_map(const ElementMap& m);
ElementMap compose(const ElementMap& outer, const ElementMap& inner);
ElementMap identity_map(int n);

/// Natural partial order on idempotents: e <= f iff ef = fe = e.
/// Throws std::domain_error when either argument fails ee = e.
bool idempotent_leq(const FiniteSemigroup& s, int e, int f);

/// The fixed sets eX = {x | ex = x}, Xe = {x | xe = x} and eXe = eX n Xe
/// of an idempotent e (the principal right/left/two-sided pieces).
struct PrincipalIdeals {
  std::vector<int> right_ideal;  // eX
  std::vector<int> left_ideal;   // Xe
  std::vector<int> two_sided;    // eXe
};
PrincipalIdeals principal_structures(const FiniteSemigroup& s, int e);

/// The maximal subgroup at an idempotent e:
/// H_e = {x in Xe | exists y in Xe with xy = yx = e}, a group with
/// identity e. inverse[x] is the group inverse for x in H_e and -1 outside.
struct LocalGroup {
  std::vector<int> elements;
  std::vector<int> inverse;
};
LocalGroup local_group(const FiniteSemigroup& s, int e);

/// True iff ex = xe for every idempotent e and every x.
bool has_central_idempotents(const FiniteSemigroup& s);

/// When every x has a unique y with xyx = x, yxy = y and xy = yx, returns
/// the table x -> y; otherwise nullopt.
std::optional<std::vector<int>> is_clifford(const FiniteSemigroup& s);

bool is_cancellative(const FiniteSemigroup& s);

/// Elements r with rr' = 1 for some r' (and dually). Require an identity;
/// throw std::domain_error on a bare semigroup.
std::vector<int> right_units(const FiniteSemigroup& m);
std::vector<int> left_units(const FiniteSemigroup& m);

/// Membership in the variety [abc = bc].
bool in_variety_s(const FiniteSemigroup& s);

/// True iff the set is a subsemigroup containing the identity and closed
/// under group inverse; used by the group construction validators.
bool is_subgroup(const FiniteSemigroup& g, const std::vector<int>& subset);
bool is_normal_subgroup(const FiniteSemigroup& g,
                        const std::vector<int>& subset);

/// True iff the table is a group (identity present and every element
/// two-sided invertible).
bool is_group(const FiniteSemigroup& s);

/// Inverse table of a group; throws std::domain_error otherwise.
std::vector<int> group_inverses(const FiniteSemigroup& g);

}  // namespace pentasol
