#ifndef STDID_VERIFY_HPP
#define STDID_VERIFY_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "stdid/digraph.hpp"
#include "stdid/integer.hpp"
#include "stdid/trails.hpp"

namespace stdid {

/// Closed form of S(G_n, B): ((mbar+1)!)^2 for n = 2 and
/// (2/3) mbar (mbar+n-1)! mbar! for n >= 3.
Integer gn_closed_form(std::size_t n, std::size_t mbar);

/// |P(G_2)| = ((mbar+1)!)^2 (mbar+1).
Integer gn2_trail_count(std::size_t mbar);

struct SwanSides {
  Integer lhs;  // S(G,B)
  Integer rhs;  // sum_c S(G_{a,c}) - sum_d S(G^{a,d}) over the extended graph
};

/// Both sides of the loop-surgery identity for a non-loop edge a (0-based),
/// computed by enumeration. c ranges over edges of G* ending at a^- and d over
/// edges of G* starting at a^+, virtual edges included.
SwanSides swan_sides(const MarkedDigraph& g, std::size_t a, const TrailOptions& options = {});

struct VerificationCase {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<VerificationCase> cases;
  std::chrono::nanoseconds elapsed{0};

  std::size_t passed() const;
  bool ok() const { return passed() == cases.size(); }
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  TrailOptions trails;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite. Throws std::invalid_argument for unknown names and
/// BudgetExceeded when an enumeration runs out of budget.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// One "case=... expected=... computed=... result=pass|FAIL" line per case and
/// a closing summary line. Contains no timing, so identical runs print
/// identical text.
void print_report(std::ostream& out, const VerificationReport& report);

}  // namespace stdid

#endif  // STDID_VERIFY_HPP
