#pragma once

#include <functional>

#include "pentasol/solution.hpp"

namespace pentasol {

/// A raw lab instance: a table plus an optional theta, deliberately kept
/// unvalidated so that the lab itself decides what is in scope and what is
/// skipped (and so the mutation scan can feed it broken data).
struct LabInstance {
  std::string label;
  int n = 0;
  std::optional<int> identity;
  std::vector<int> mul;
  std::optional<std::vector<int>> theta;
};

LabInstance instance_of(const FiniteSemigroup& s, std::string label);
LabInstance instance_of(const PentagonSolution& sol, std::string label);

enum class CaseStatus { pass, fail, skip };

struct CaseOutcome {
  CaseStatus status;
  std::string detail;  // fail witness or skip reason
};

/// Everything a checker may want, derived once per instance. sg is absent
/// when the table is malformed or non-associative; solution truth respects
/// LabOptions::verify_solutions.
struct LabContext {
  const LabInstance* raw = nullptr;
  std::optional<FiniteSemigroup> sg;
  std::string sg_skip_reason;
  bool theta_shape_ok = false;
  bool is_solution = false;
  ClassificationFlags flags;  // elementwise, meaningful when theta_shape_ok
  int enumeration_cap = 4;

  int th(int x, int y) const { return (*raw->theta)[x * sg->size() + y]; }
  std::vector<int> row(int x) const;
};

struct PropertyCase {
  std::string id;         // stable key, decoupled from any numbering
  std::string scope;      // human description of the hypothesis class
  std::string statement;  // the property, in ascii
  std::function<CaseOutcome(const LabContext&)> check;
};

/// The full property catalog; order is fixed and ids are unique.
const std::vector<PropertyCase>& catalog();

struct LabOptions {
  bool verify_solutions = true;
  int worker_count = 1;
  int enumeration_cap = 4;
  std::vector<std::string> only_cases;  // empty = all
};

struct CaseReport {
  std::string id, scope, statement;
  long long instances = 0, passes = 0, fails = 0, skips = 0;
  std::vector<std::string> fail_witnesses;  // capped
};

struct LabReport {
  std::vector<CaseReport> cases;
  long long instance_count = 0;
  bool all_passed() const {
    for (const auto& c : cases)
      if (c.fails) return false;
    return true;
  }
};

LabReport run_catalog(const std::vector<LabInstance>& instances,
                      const LabOptions& options = {});

/// All semigroups of order 1..max_order up to isomorphism, each once bare
/// and once per solution on it.
std::vector<LabInstance> standard_instances(int max_order);

/// Confirms by enumeration that the identity theta is the one and only
/// non-degenerate solution on the monoid.
LabReport check_nondegenerate_monoid(const FiniteSemigroup& m,
                                     const LabOptions& options = {});

/// Runs the involutive => commutative and cocommutative case alone.
LabReport check_involutive_implies_cc(const std::vector<LabInstance>& instances,
                                      const LabOptions& options = {});

struct MutationCaseResult {
  std::string case_id;
  bool flipped = false;
  std::string detail;  // which base/cell flipped it, or why none did
};

struct MutationReport {
  std::vector<MutationCaseResult> cases;
  bool all_flipped() const {
    for (const auto& c : cases)
      if (!c.flipped) return false;
    return true;
  }
};

/// For every catalog case, hunts for a single-cell corruption of some base
/// instance that turns a pass into a fail or a reasoned skip. Solution
/// verification is disabled during the hunt so conclusion violations stay
/// reachable.
MutationReport mutation_scan(const std::vector<LabInstance>& bases,
                             const LabOptions& options = {});

std::string format_lab_report(const LabReport& report);
std::string format_mutation_report(const MutationReport& report);

}  // namespace pentasol
