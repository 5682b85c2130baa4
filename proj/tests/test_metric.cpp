#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "corrtree/metric.hpp"
#include "oracles.hpp"

using namespace corrtree;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

ReturnPanel two_columns(std::vector<double> x, std::vector<double> y) {
  std::vector<double> v;
  for (std::size_t t = 0; t < x.size(); ++t) {
    v.push_back(x[t]);
    v.push_back(y[t]);
  }
  return ReturnPanel({"X", "Y"}, x.size(), std::move(v));
}

}  // namespace

TEST_CASE("correlation of hand-computed pairs", "[metric]") {
  CHECK(correlation_matrix(two_columns({0.1, -0.2, 0.3}, {0.1, -0.2, 0.3})).values(0, 1) == 1.0);
  CHECK(correlation_matrix(two_columns({0.1, -0.2, 0.3}, {-0.1, 0.2, -0.3})).values(0, 1) == -1.0);
  // Means 2 and 2; centered (-1,0,1), (-1,1,0): cov 1/3, variances 2/3.
  CHECK_THAT(correlation_matrix(two_columns({1, 2, 3}, {1, 3, 2})).values(0, 1), WithinAbs(0.5, 1e-15));
}

TEST_CASE("correlation matrix invariants", "[metric]") {
  std::mt19937_64 rng(3);
  const auto r = testing::random_returns(9, 30, rng);
  const auto c = correlation_matrix(r);
  for (std::size_t i = 0; i < 9; ++i) {
    CHECK(c.values(i, i) == 1.0);
    for (std::size_t j = 0; j < 9; ++j) {
      CHECK(c.values(i, j) == c.values(j, i));
      CHECK(c.values(i, j) >= -1.0);
      CHECK(c.values(i, j) <= 1.0);
    }
  }
  CHECK(c.clamped_pairs == 0);
}

TEST_CASE("correlation agrees with the raw-moment formula", "[metric][oracle]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = testing::random_returns(6, 25, rng);
    const auto c = correlation_matrix(r);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = i + 1; j < 6; ++j) {
        std::vector<double> x, y;
        for (std::size_t t = 0; t < r.rows(); ++t) {
          x.push_back(r.value(t, i));
          y.push_back(r.value(t, j));
        }
        CHECK_THAT(c.values(i, j), WithinAbs(testing::raw_moment_pearson(x, y), 1e-10));
      }
    }
  }
}

TEST_CASE("serial and parallel correlation are bit-identical", "[metric]") {
  std::mt19937_64 rng(23);
  const auto r = testing::random_returns(28, 47, rng);
  CHECK(correlation_matrix(r, Execution::serial).values == correlation_matrix(r, Execution::parallel).values);
}

TEST_CASE("zero-variance column is rejected by name", "[metric]") {
  const ReturnPanel r({"AT", "BE", "CY"}, 3, {0.1, 0.0, 0.2, -0.1, 0.0, 0.3, 0.2, 0.0, -0.1});
  REQUIRE_THROWS_AS(correlation_matrix(r), ValidationError);
  REQUIRE_THROWS_WITH(correlation_matrix(r), ContainsSubstring("\"BE\""));
}

TEST_CASE("too few rows for a correlation", "[metric]") {
  REQUIRE_THROWS_AS(correlation_matrix(ReturnPanel({"A", "B"}, 1, {0.1, 0.2})), ValidationError);
}

TEST_CASE("try_correlation_matrix flags constant resamples", "[metric]") {
  const ReturnPanel r({"A", "B"}, 3, {0.1, 0.3, 0.2, 0.1, 0.4, 0.5});
  CorrelationMatrix out;
  CHECK_FALSE(try_correlation_matrix(r, {1, 1, 1}, out));
  REQUIRE(try_correlation_matrix(r, {0, 1, 2}, out));
  CHECK(out.values == correlation_matrix(r, Execution::serial).values);
}

TEST_CASE("distance endpoints", "[metric]") {
  CHECK(correlation_distance(1.0) == 0.0);
  CHECK(correlation_distance(-1.0) == 2.0);
  CHECK_THAT(correlation_distance(0.5), WithinAbs(1.0, 1e-15));
  CHECK_THAT(correlation_distance(0.0), WithinAbs(std::sqrt(2.0), 1e-15));
}

TEST_CASE("distance matrix invariants", "[metric]") {
  std::mt19937_64 rng(29);
  const auto d = distance_matrix(correlation_matrix(testing::random_returns(7, 20, rng)));
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(d.values(i, i) == 0.0);
    for (std::size_t j = 0; j < 7; ++j) {
      CHECK(d.values(i, j) == d.values(j, i));
      CHECK(d.values(i, j) >= 0.0);
      CHECK(d.values(i, j) <= 2.0);
    }
  }
}

TEST_CASE("distance is strictly decreasing in correlation", "[metric][property]") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 10000; ++k) {
    double a = u(rng), b = u(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(correlation_distance(a) > correlation_distance(b));
  }
}

TEST_CASE("triangle inequality on Gaussian panels", "[metric][property]") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = distance_matrix(correlation_matrix(testing::random_returns(10, 15, rng))).values;
    for (std::size_t i = 0; i < 10; ++i) {
      for (std::size_t j = 0; j < 10; ++j) {
        for (std::size_t k = 0; k < 10; ++k) CHECK(d(i, j) <= d(i, k) + d(k, j) + 1e-12);
      }
    }
  }
}

TEST_CASE("scaling levels leaves correlations unchanged", "[metric][property]") {
  std::mt19937_64 rng(41);
  const auto returns = testing::random_returns(5, 30, rng);
  const auto levels = testing::levels_from_returns(returns);
  std::vector<double> scaled = levels.values();
  for (auto& v : scaled) v *= 3.7;
  const TimeSeriesPanel scaled_panel(levels.symbols(), levels.time_labels(), scaled);
  const auto c1 = correlation_matrix(log_returns(levels));
  const auto c2 = correlation_matrix(log_returns(scaled_panel));
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) CHECK_THAT(c1.values(i, j), WithinAbs(c2.values(i, j), 1e-12));
  }
}
