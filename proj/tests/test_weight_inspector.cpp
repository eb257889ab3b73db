#include <doctest.h>

#include <cmath>

#include "wdlmp/errors.hpp"
#include "wdlmp/weight_inspector.hpp"

using namespace wdlmp;

TEST_CASE("record honours the stride") {
  const Eigen::MatrixXd w = Eigen::MatrixXd::Constant(1, 4, 0.25);
  WeightTrace every{1, {}};
  for (std::size_t i = 0; i < 5; ++i) record(every, i, w);
  CHECK(every.snapshots.size() == 5);

  WeightTrace sparse{100, {}};
  for (std::size_t i = 0; i < 50; ++i) record(sparse, i, w);
  REQUIRE(sparse.snapshots.size() == 1);
  CHECK(sparse.snapshots[0].iteration == 0);
}

TEST_CASE("snapshots copy the live weights") {
  Eigen::MatrixXd w(1, 2);
  w << 0.3, 0.7;
  WeightTrace t{1, {}};
  record(t, 0, w);
  w << 0.6, 0.4;
  CHECK(t.snapshots[0].weights(0, 0) == 0.3);
  CHECK_THROWS_AS(record(t, 1, Eigen::MatrixXd::Constant(1, 2, 0.6)), Error);
}

TEST_CASE("averaged traces stay row-stochastic") {
  WeightTrace a{2, {}}, b{2, {}};
  Eigen::Matrix2d wa, wb;
  wa << 0.1, 0.9, 0.5, 0.5;
  wb << 0.3, 0.7, 0.2, 0.8;
  record(a, 0, wa);
  record(b, 0, wb);
  const std::vector<WeightTrace> both{a, b};
  const auto avg = average_traces(both);
  CHECK(avg.snapshots[0].weights(0, 0) == doctest::Approx(0.2));
  for (int r = 0; r < 2; ++r) CHECK(std::abs(avg.snapshots[0].weights.row(r).sum() - 1.0) <= 1e-12);
}

TEST_CASE("average ranks") {
  const std::vector<double> v{0.01, 0.001, 0.02, 0.03, 0.002, 0.003, 0.02, 0.05, 0.005, 0.1};
  const std::vector<double> expected{5, 1, 6.5, 8, 2, 3, 6.5, 9, 4, 10};
  CHECK(average_ranks(v) == expected);
}

TEST_CASE("rank correlation") {
  const std::vector<double> stds{0.1, 0.2, 0.3, 0.4};
  CHECK(final_weight_noise_rank_correlation(std::vector<double>{0.4, 0.3, 0.2, 0.1}, stds) == doctest::Approx(-1.0));
  CHECK(final_weight_noise_rank_correlation(std::vector<double>{0.1, 0.2, 0.3, 0.4}, stds) == doctest::Approx(1.0));

  const std::vector<double> disp{0.01, 0.001, 0.02, 0.03, 0.002, 0.003, 0.02, 0.05, 0.005, 0.1};
  std::vector<double> inverse;
  for (double g : disp) inverse.push_back(1.0 / g);
  CHECK(final_weight_noise_rank_correlation(inverse, disp) == doctest::Approx(-1.0).epsilon(1e-14));

  // Strictly monotone transforms leave the correlation unchanged.
  std::vector<double> w{0.3, 0.05, 0.2, 0.15, 0.1, 0.2};
  const std::vector<double> s{0.5, 1.0, 0.7, 0.2, 3.0, 0.9};
  std::vector<double> tw, ts;
  for (double x : w) tw.push_back(std::log(x) * 3.0 + 1.0);
  for (double x : s) ts.push_back(std::exp(x));
  CHECK(final_weight_noise_rank_correlation(tw, ts) ==
        doctest::Approx(final_weight_noise_rank_correlation(w, s)).epsilon(1e-14));

  CHECK_THROWS_AS(final_weight_noise_rank_correlation(std::vector<double>{1, 1, 1}, std::vector<double>{1, 2, 3}),
                  Error);
  CHECK_THROWS_AS(final_weight_noise_rank_correlation(std::vector<double>{1, 2}, std::vector<double>{1, 2}), Error);
  CHECK_THROWS_AS(final_weight_noise_rank_correlation(std::vector<double>{1, NAN, 2}, std::vector<double>{1, 2, 3}),
                  Error);
}
