#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include "fermat/fermat.hpp"
#include "fermat/linalg.hpp"

namespace fermat {

struct InterpolationOptions {
  /// Use every derivative of order < m instead of only order exactly m - 1.
  bool all_orders = false;
  /// Evaluate on the affine representative (first nonzero coordinate 1); when
  /// false the coordinates are used as given.
  bool normalize_points = true;
  /// alpha_interp gives up above this degree; 0 means m * (number of points).
  int alpha_cap = 0;
  /// Optional sink for one `rank ...` line per elimination.
  std::ostream* trace = nullptr;
};

/// Vanishing conditions for degree-t forms: one row per (point, derivative
/// multi-index), one column per degree-t monomial in decreasing lex order.
struct ConditionMatrix {
  std::vector<Monomial> columns;
  std::vector<Row<CycloNumber>> rows;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return columns.size(); }
};

/// Multi-indices (a, b, c) with a + b + c == order.
std::vector<std::array<int, 3>> derivative_indices(int order);

ConditionMatrix build_condition_matrix(const FatPointScheme& scheme, int t, const InterpolationOptions& options = {});

/// dim of the degree-t forms vanishing to order >= m at every point (0 for t < 0).
long fatpoint_dim(const FatPointScheme& scheme, int t, const InterpolationOptions& options = {});

/// Least t with fatpoint_dim > 0, scanning upward from 0. Throws ScanCapExceeded
/// past the cap.
int alpha_interp(const FatPointScheme& scheme, const InterpolationOptions& options = {});

}  // namespace fermat
