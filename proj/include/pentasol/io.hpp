#pragma once

#include <map>
#include <stdexcept>

#include "pentasol/construct.hpp"
#include "pentasol/solution.hpp"

namespace pentasol {

/// Parse failure with 1-based line and column; col 0 means whole-line.
class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int col, const std::string& message)
      : std::runtime_error(col > 0 ? "line " + std::to_string(line) +
                                         ", col " + std::to_string(col) +
                                         ": " + message
                                   : "line " + std::to_string(line) + ": " +
                                         message),
        line_(line),
        col_(col) {}
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_, col_;
};

/// Cayley table text: line 1 is `n [identity-index]`, then n rows of n
/// space-separated 0-based entries. Ragged rows and out-of-range entries
/// are rejected with line/column diagnostics; associativity failures
/// surface as std::invalid_argument from the semigroup constructor.
FiniteSemigroup parse_cayley(const std::string& text);
std::string format_cayley(const FiniteSemigroup& s);

/// Theta table: n rows of n entries, n fixed by the semigroup it pairs
/// with.
std::vector<int> parse_theta(const std::string& text, int n);

/// Solution file: fields in fixed order
///   n <count>
///   identity <index>     (only for monoids)
///   mul                  (n rows)
///   theta                (n rows)
///   flags <names...>     (optional on input; always written)
/// Flags are recomputed on load and a mismatching flags line is rejected.
/// Round trips are byte exact.
PentagonSolution parse_solution(const std::string& text);
std::string format_solution(const PentagonSolution& sol);

/// Construction data: a `kind <name>` header followed by the blocks that
/// construction needs (table, subset lines `K 0 2`, map blocks of lines
/// `x -> y`, theta blocks per idempotent).
struct ConstructionRequest {
  std::string kind;
  std::optional<FiniteSemigroup> table;
  int set_size = 0;  // militaru carrier
  std::optional<ElementMap> f, g, gamma, mu;
  std::optional<int> constant;
  std::vector<int> subgroup;
  std::vector<int> representatives;
  std::map<int, ElementMap> theta_family;
};

ConstructionRequest parse_construction(const std::string& text);

/// Runs the requested construction; hypothesis failures carry the violated
/// condition name.
PentagonSolution build_construction(const ConstructionRequest& request);

}  // namespace pentasol
