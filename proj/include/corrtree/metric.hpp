#pragma once

#include <cstddef>

#include "corrtree/common.hpp"
#include "corrtree/panel.hpp"

namespace corrtree {

/// Pearson cross-correlations C_ij of return series. Diagonal is exactly 1,
/// entries are clamped into [-1, 1].
struct CorrelationMatrix {
  Symbols symbols;
  SquareMatrix values;
  /// Pairs whose raw coefficient left [-1, 1] by more than 1e-9 before clamping.
  std::size_t clamped_pairs = 0;
};

/// d_ij = sqrt(2 (1 - C_ij)); zero diagonal, entries in [0, 2].
struct DistanceMatrix {
  Symbols symbols;
  SquareMatrix values;
};

inline constexpr double kClampReportThreshold = 1e-9;

/// Population-moment Pearson matrix. Throws ValidationError naming the first
/// zero-variance column.
CorrelationMatrix correlation_matrix(const ReturnPanel& returns, Execution exec = Execution::parallel);

/// Same as correlation_matrix, but over the rows selected by `row_index`
/// (with repetition). Used by the bootstrap to avoid materializing replicas.
/// Returns false (leaving `out` unspecified) if some column is constant.
bool try_correlation_matrix(const ReturnPanel& returns, const std::vector<std::size_t>& row_index,
                            CorrelationMatrix& out);

/// sqrt(2 (1 - c)) for a single coefficient.
double correlation_distance(double c);

DistanceMatrix distance_matrix(const CorrelationMatrix& corr);

}  // namespace corrtree
