#pragma once

#include <map>

#include "pentasol/search.hpp"
#include "pentasol/semigroup_enum.hpp"

namespace pentasol {

struct CensusEntry {
  FiniteSemigroup semigroup;           // canonical class representative
  long long raw_count = 0;             // all solutions on the representative
  long long iso_count = 0;             // Aut-orbit representatives
  std::map<uint32_t, long long> flag_histogram;  // over orbit reps
  std::vector<PentagonSolution> representatives;
};

struct CensusReport {
  int order = 0;
  std::vector<CensusEntry> entries;
  long long total_raw = 0;
  long long total_iso = 0;
  double seconds = 0.0;  // diagnostic only; never printed to the report
};

/// Enumerates the isomorphism classes of semigroups of the given order and
/// all pentagon solutions on each, both raw and up to solution isomorphism.
CensusReport census(int order, int worker_count = 1, int hard_cap = 4);

inline CensusReport census_order3() { return census(3); }

/// Stable text form: one section per class and the trailing
/// TOTAL_ISO_CLASSES line. Byte-identical across runs and worker counts.
std::string format_census_report(const CensusReport& report);

}  // namespace pentasol
