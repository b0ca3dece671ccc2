#pragma once
// Golden-table regression harness: build the paper tables from the engine
// and diff them against the shipped data files, cell by cell.

#include <optional>
#include <string>
#include <vector>

#include "liederiv/engine.hpp"
#include "liederiv/parallel.hpp"

namespace liederiv {

enum class CellTag { paper, derived, seeded, discrepancy };

struct TableRow {
  std::string key;        // e.g. "m=6 i=2 k=9"
  std::string printed;    // golden (paper) value
  std::string computed;   // engine value
  std::string recorded;   // pinned computed value for discrepancy cells
  CellTag tag = CellTag::paper;
  bool ok = false;
  std::string note;
};

struct TableReport {
  std::string name;
  std::vector<TableRow> rows;
  long long failures() const;  // rows that violate their tag's contract
  std::string str(bool only_bad = false) const;
};

// Locate a data file: explicit dir > LIEDERIV_DATA_DIR env var > built-in path.
std::string data_file(const std::string& rel, const std::string& dir_override = "");

std::vector<std::string> table_names();
TableReport run_table(const Engine& eng, const std::string& name,
                      ExecMode mode = ExecMode::serial,
                      const std::string& data_dir = "");

}  // namespace liederiv
