#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bfi/mass.hpp"

namespace bfi {

/// Embedded golden fixture: every printed cell of the three reference
/// tables, with per-cell status (match / published-typo-suspected /
/// published-omission) and, for flagged cells, the exact oracle value.
const char* golden_tables_json();

struct ReproCell {
  std::string column;
  std::string focal;                // rendered set
  std::optional<double> printed;    // absent for omissions
  std::optional<double> oracle;     // exact value, flagged cells only
  double computed = 0.0;
  std::string status;               // match | published-typo-suspected | published-omission
  std::string note;
  bool flagged = false;
  bool pass = false;
};

struct ReproReport {
  int table = 0;
  std::vector<ReproCell> cells;
  std::vector<std::string> notes;
  bool ok = false;

  int matched() const;
  int flagged_count() const;
  int failed() const;
};

/// Recomputes table `table` (1, 2 or 3) and compares every printed cell
/// within 1e-3 absolute; flagged cells are compared against their oracle
/// (1e-9) and reported separately.
ReproReport run_repro(int table);

std::string format_repro_report(const ReproReport& report);

}  // namespace bfi
