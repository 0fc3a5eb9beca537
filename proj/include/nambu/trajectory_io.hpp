#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nambu/dynamics.hpp"

namespace nambu {

// 17 significant digits, "%.17g".
std::string format_double(double value);

// Header `t,<coord names>,<invariant names>`, one row per step. When
// `coord_names` is empty the state columns are named x1..xN.
void write_csv(const Trajectory& trajectory,
               const std::vector<std::string>& coord_names, std::ostream& out);

// One JSON object per step:
//   {"t":..,"state":{"<coord>":..,...},"invariants":{"<name>":..,...}}
void write_jsonl(const Trajectory& trajectory,
                 const std::vector<std::string>& coord_names,
                 std::ostream& out);

struct CsvTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Numeric CSV with a header line. Throws DomainError on ragged or
// non-numeric rows.
CsvTable read_csv(std::istream& in);

// Inverse of write_csv for a known state dimension.
Trajectory trajectory_from_csv(const CsvTable& table, std::size_t state_dim);

}  // namespace nambu
