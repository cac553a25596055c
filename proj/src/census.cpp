#include "pentasol/census.hpp"

#include <chrono>
#include <sstream>

namespace pentasol {

CensusReport census(int order, int worker_count, int hard_cap) {
  auto start = std::chrono::steady_clock::now();
  CensusReport report;
  report.order = order;

  SemigroupEnumOptions senum;
  senum.up_to_iso = true;
  senum.hard_cap = hard_cap;
  auto classes = enumerate_semigroups(order, senum);

  for (auto& s : classes) {
    CensusEntry entry{std::move(s), 0, 0, {}, {}};
    SearchOptions raw;
    raw.worker_count = worker_count;
    raw.hard_cap = hard_cap;
    auto all = enumerate_solutions(entry.semigroup, raw);
    entry.raw_count = static_cast<long long>(all.size());
    for (const auto& sol : all) {
      if (canonical_theta(entry.semigroup, sol.theta_table()) ==
          sol.theta_table()) {
        ++entry.iso_count;
        ++entry.flag_histogram[classify(sol).bits()];
        entry.representatives.push_back(sol);
      }
    }
    report.total_raw += entry.raw_count;
    report.total_iso += entry.iso_count;
    report.entries.push_back(std::move(entry));
  }

  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::string format_census_report(const CensusReport& report) {
  std::ostringstream out;
  out << "census order=" << report.order << '\n';
  out << "semigroup_classes=" << report.entries.size() << "\n\n";
  int idx = 0;
  for (const auto& e : report.entries) {
    ++idx;
    out << "class " << idx << '/' << report.entries.size() << '\n';
    out << "table " << e.semigroup.size();
    if (e.semigroup.identity()) out << " identity=" << *e.semigroup.identity();
    out << '\n';
    int n = e.semigroup.size();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y)
        out << (y ? " " : "") << e.semigroup.mul(x, y);
      out << '\n';
    }
    out << "solutions_raw " << e.raw_count << '\n';
    out << "solutions_up_to_iso " << e.iso_count << '\n';
    for (const auto& [bits, count] : e.flag_histogram)
      out << "flags " << ClassificationFlags::from_bits(bits).to_string()
          << " " << count << '\n';
    out << '\n';
  }
  out << "TOTAL_RAW=" << report.total_raw << '\n';
  out << "TOTAL_ISO_CLASSES=" << report.total_iso << '\n';
  return out.str();
}

}  // namespace pentasol
