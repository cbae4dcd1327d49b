#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fermat/invariants.hpp"

namespace fermat {

enum class CellStatus { Ok, Skipped, Disagreement, Failed };
std::string to_string(CellStatus status);

struct TableCell {
  int n = 0;
  int m = 0;
  std::optional<int> alpha;
  int predicted = 0;
  bool match = false;
  /// The closed form deviates from n*m here (I_4^(5) has alpha 21, not 20).
  bool exceptional = false;
  AlphaMethod method = AlphaMethod::Groebner;
  double seconds = 0;
  CellStatus status = CellStatus::Ok;
  std::string detail;
};

struct TableConfig {
  int n_min = 2;
  int max_n = 3;
  int max_m = 6;
  AlphaMethod method = AlphaMethod::Groebner;
  /// Per cell; zero or negative means unlimited.
  std::chrono::milliseconds timeout{300'000};
  int workers = 1;
  std::shared_ptr<const GbCache> cache;
};

struct TableResult {
  std::vector<TableCell> cells;
  /// One per n, built from the cells that finished.
  std::vector<WaldschmidtSample> waldschmidt;

  bool all_match() const;
};

bool is_exceptional_cell(int n, int m);

/// Runs the n x m grid, cells ordered by (n, m). Cells are scheduled on up to
/// `workers` threads; a timed-out cell is marked Skipped and has no alpha.
TableResult run_table(const TableConfig& config);

}  // namespace fermat
