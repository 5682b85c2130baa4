#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrtree {

/// Input data violates a domain invariant (bad cell, duplicate symbol,
/// zero-variance series, ...). The CLI maps it to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Selects the serial reference path or the OpenMP kernel. Both produce
/// bit-identical results.
enum class Execution { serial, parallel };

using Symbols = std::vector<std::string>;

/// Dense symmetric N x N matrix, row-major.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  void set_symmetric(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  const std::vector<double>& raw() const { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// Fixed 6-decimal rendering (round-half-even on exact binary ties),
/// locale independent. Negative zero is printed as "0.000000".
std::string format_fixed6(double value);

}  // namespace corrtree
