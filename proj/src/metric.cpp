#include "corrtree/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace corrtree {

namespace {

// Column-major centered copy of the selected rows, with per-column
// population variance. Sums run left to right in row order so the result
// does not depend on thread scheduling.
struct CenteredColumns {
  std::size_t rows = 0;
  std::vector<double> data;  // column i occupies [i * rows, (i + 1) * rows)
  std::vector<double> variance;
  std::ptrdiff_t constant_column = -1;
};

CenteredColumns center_columns(const ReturnPanel& returns, const std::vector<std::size_t>* row_index) {
  CenteredColumns cc;
  const std::size_t n = returns.entities();
  cc.rows = row_index ? row_index->size() : returns.rows();
  cc.data.resize(n * cc.rows);
  cc.variance.resize(n);
  const double inv_rows = 1.0 / static_cast<double>(cc.rows);
  for (std::size_t i = 0; i < n; ++i) {
    double* col = cc.data.data() + i * cc.rows;
    bool constant = true;
    double sum = 0.0;
    for (std::size_t t = 0; t < cc.rows; ++t) {
      col[t] = returns.value(row_index ? (*row_index)[t] : t, i);
      constant = constant && col[t] == col[0];
      sum += col[t];
    }
    const double mean = sum * inv_rows;
    double sq = 0.0;
    for (std::size_t t = 0; t < cc.rows; ++t) {
      col[t] -= mean;
      sq += col[t] * col[t];
    }
    cc.variance[i] = sq * inv_rows;
    if ((constant || !(cc.variance[i] > 0.0)) && cc.constant_column < 0) {
      cc.constant_column = static_cast<std::ptrdiff_t>(i);
    }
  }
  return cc;
}

double pair_coefficient(const CenteredColumns& cc, std::size_t i, std::size_t j) {
  const double* x = cc.data.data() + i * cc.rows;
  const double* y = cc.data.data() + j * cc.rows;
  double cross = 0.0;
  for (std::size_t t = 0; t < cc.rows; ++t) cross += x[t] * y[t];
  const double cov = cross * (1.0 / static_cast<double>(cc.rows));
  return cov / std::sqrt(cc.variance[i] * cc.variance[j]);
}

// Returns 1 when the clamp exceeded the reporting threshold.
std::size_t clamp_coefficient(double& c) {
  const double overshoot = std::abs(c) - 1.0;
  if (overshoot <= 0.0) return 0;
  c = std::clamp(c, -1.0, 1.0);
  return overshoot > kClampReportThreshold ? 1 : 0;
}

void fill_matrix(const CenteredColumns& cc, Execution exec, CorrelationMatrix& out) {
  const std::size_t n = cc.variance.size();
  out.values = SquareMatrix(n);
  std::size_t clamped = 0;
  const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(n * (n - 1) / 2);
  std::vector<std::size_t> row_of(static_cast<std::size_t>(pairs));
  std::vector<std::size_t> col_of(static_cast<std::size_t>(pairs));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j, ++p) {
      row_of[p] = i;
      col_of[p] = j;
    }
  }
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : clamped)
    for (std::ptrdiff_t q = 0; q < pairs; ++q) {
      const std::size_t i = row_of[q];
      const std::size_t j = col_of[q];
      double c = pair_coefficient(cc, i, j);
      clamped += clamp_coefficient(c);
      out.values.set_symmetric(i, j, c);
    }
  } else {
    for (std::ptrdiff_t q = 0; q < pairs; ++q) {
      const std::size_t i = row_of[q];
      const std::size_t j = col_of[q];
      double c = pair_coefficient(cc, i, j);
      clamped += clamp_coefficient(c);
      out.values.set_symmetric(i, j, c);
    }
  }
  for (std::size_t i = 0; i < n; ++i) out.values(i, i) = 1.0;
  out.clamped_pairs = clamped;
}

}  // namespace

CorrelationMatrix correlation_matrix(const ReturnPanel& returns, Execution exec) {
  if (returns.rows() < 2) {
    throw ValidationError("correlation needs at least 2 return rows, got " + std::to_string(returns.rows()));
  }
  const auto cc = center_columns(returns, nullptr);
  if (cc.constant_column >= 0) {
    throw ValidationError("zero-variance return series for symbol \"" +
                          returns.symbols()[static_cast<std::size_t>(cc.constant_column)] +
                          "\": correlation undefined");
  }
  CorrelationMatrix out;
  out.symbols = returns.symbols();
  fill_matrix(cc, exec, out);
  return out;
}

bool try_correlation_matrix(const ReturnPanel& returns, const std::vector<std::size_t>& row_index,
                            CorrelationMatrix& out) {
  const auto cc = center_columns(returns, &row_index);
  if (cc.rows < 2 || cc.constant_column >= 0) return false;
  out.symbols = returns.symbols();
  fill_matrix(cc, Execution::serial, out);
  return true;
}

double correlation_distance(double c) { return std::sqrt(2.0 * (1.0 - c)); }

DistanceMatrix distance_matrix(const CorrelationMatrix& corr) {
  const std::size_t n = corr.values.size();
  DistanceMatrix out{corr.symbols, SquareMatrix(n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.values.set_symmetric(i, j, correlation_distance(corr.values(i, j)));
    }
  }
  return out;
}

}  // namespace corrtree
