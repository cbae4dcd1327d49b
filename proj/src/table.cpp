#include "fermat/table.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "fermat/budget.hpp"

namespace fermat {

std::string to_string(CellStatus status) {
  switch (status) {
    case CellStatus::Ok:
      return "ok";
    case CellStatus::Skipped:
      return "skipped";
    case CellStatus::Disagreement:
      return "disagreement";
    case CellStatus::Failed:
      return "failed";
  }
  return "failed";
}

bool TableResult::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const TableCell& c) { return c.match; });
}

bool is_exceptional_cell(int n, int m) { return n >= 4 && m >= 3 && predicted_alpha(n, m) != n * m; }

TableResult run_table(const TableConfig& config) {
  TableResult result;
  std::map<int, std::unique_ptr<FermatWorkspace>> workspaces;
  for (int n = config.n_min; n <= config.max_n; ++n) {
    workspaces.emplace(n, std::make_unique<FermatWorkspace>(n, config.cache));
    for (int m = 1; m <= config.max_m; ++m) {
      TableCell cell;
      cell.n = n;
      cell.m = m;
      cell.predicted = predicted_alpha(n, m);
      cell.exceptional = is_exceptional_cell(n, m);
      cell.method = config.method;
      result.cells.push_back(cell);
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < result.cells.size(); i = next++) {
      TableCell& cell = result.cells[i];
      auto start = std::chrono::steady_clock::now();
      try {
        budget::Scope scope(config.timeout);
        cell.alpha = compute_alpha(*workspaces.at(cell.n), cell.m, config.method).alpha;
        cell.match = *cell.alpha == cell.predicted;
      } catch (const Timeout&) {
        cell.status = CellStatus::Skipped;
      } catch (const OracleDisagreement& e) {
        cell.status = CellStatus::Disagreement;
        cell.detail = e.what();
      } catch (const std::exception& e) {
        cell.status = CellStatus::Failed;
        cell.detail = e.what();
      }
      cell.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  int workers = std::clamp<int>(config.workers, 1, static_cast<int>(std::max<std::size_t>(1, result.cells.size())));
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();

  for (int n = config.n_min; n <= config.max_n; ++n) {
    std::vector<std::pair<int, int>> m_alpha;
    for (const auto& c : result.cells) {
      if (c.n == n && c.alpha) m_alpha.emplace_back(c.m, *c.alpha);
    }
    result.waldschmidt.push_back(waldschmidt_from(n, m_alpha));
  }
  return result;
}

}  // namespace fermat
