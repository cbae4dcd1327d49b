#pragma once

#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "fermat/budget.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/rational.hpp"

namespace fermat {

/// Cost used to choose among candidate pivots: smaller is cheaper to divide by.
inline std::size_t pivot_cost(const Rational& a) { return a.bit_size(); }
inline std::size_t pivot_cost(const CycloNumber& a) {
  return static_cast<std::size_t>(a.term_count()) * 4096 + a.bit_size();
}

template <class Field>
using Row = std::vector<Field>;

struct EchelonInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Exact Gaussian elimination in place over a field. Pivots are chosen per column
/// by the fewest nonzero coefficient terms, then fewest nonzeros in the row.
/// On return the first `rank` rows are in echelon form with unit pivots; with
/// `reduced` they are in reduced row echelon form. All rows must share a length.
template <class Field>
EchelonInfo row_echelon(std::vector<Row<Field>>& rows, bool reduced) {
  EchelonInfo info;
  if (rows.empty()) return info;
  const std::size_t ncols = rows.front().size();
  std::vector<std::size_t> nonzeros(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& v : rows[r]) nonzeros[r] += v.is_zero() ? 0 : 1;
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    budget::check();
    std::size_t best = rows.size();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = top; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      std::size_t cost = pivot_cost(rows[r][col]) * (ncols + 1) + nonzeros[r];
      if (cost < best_cost) {
        best_cost = cost;
        best = r;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[top], rows[best]);
    std::swap(nonzeros[top], nonzeros[best]);
    Row<Field>& pivot = rows[top];
    if (!pivot[col].is_one()) {
      Field inv = pivot[col].inverse();
      for (std::size_t c = col; c < ncols; ++c) {
        if (!pivot[c].is_zero()) pivot[c] *= inv;
      }
    }
    std::vector<std::size_t> support;
    for (std::size_t c = col + 1; c < ncols; ++c) {
      if (!pivot[c].is_zero()) support.push_back(c);
    }
    auto eliminate = [&](std::size_t r) {
      Row<Field>& row = rows[r];
      if (row[col].is_zero()) return;
      Field factor = row[col];
      for (std::size_t c : support) {
        bool was_zero = row[c].is_zero();
        row[c] -= factor * pivot[c];
        bool now_zero = row[c].is_zero();
        if (was_zero && !now_zero) ++nonzeros[r];
        if (!was_zero && now_zero) --nonzeros[r];
      }
      row[col] -= factor;
      --nonzeros[r];
    };
    for (std::size_t r = top + 1; r < rows.size(); ++r) eliminate(r);
    if (reduced) {
      for (std::size_t r = 0; r < top; ++r) eliminate(r);
    }
    info.pivot_columns.push_back(col);
    ++top;
  }
  info.rank = top;
  return info;
}

template <class Field>
std::size_t rank(std::vector<Row<Field>> rows) {
  return row_echelon(rows, false).rank;
}

}  // namespace fermat
