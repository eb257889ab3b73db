#include <doctest.h>

#include <Eigen/Dense>

#include "wdlmp/errors.hpp"
#include "wdlmp/signal.hpp"

using namespace wdlmp;

TEST_CASE("ground truth") {
  Rng a(3), b(3);
  const auto g = generate_ground_truth(50, a);
  CHECK(g.dimension() == 50);
  CHECK(g.w_o == generate_ground_truth(50, b).w_o);

  Rng one(4);
  CHECK(generate_ground_truth(1, one).dimension() == 1);
  CHECK_THROWS_AS(generate_ground_truth(0, one), Error);

  // Entry variance over many regenerations.
  Rng rng(5);
  double sq = 0.0;
  const int reps = 2000;
  for (int r = 0; r < reps; ++r) sq += generate_ground_truth(50, rng).w_o.squaredNorm();
  CHECK(sq / (50.0 * reps) == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("regressor statistics") {
  Rng rng(6);
  double sq = 0.0;
  const int draws = 10'000;
  for (int r = 0; r < draws; ++r) sq += generate_regressor(50, 1.0, rng).squaredNorm();
  CHECK(sq / (50.0 * draws) == doctest::Approx(1.0).epsilon(0.05));

  Rng a(8), b(8);
  CHECK(generate_regressor(7, 2.0, a) == generate_regressor(7, 2.0, b));
  CHECK_THROWS_AS(generate_regressor(5, 0.0, rng), Error);
}

TEST_CASE("measurement model") {
  GroundTruth e1{Eigen::VectorXd::Unit(4, 0)};
  CHECK(measure(e1, Eigen::VectorXd::Unit(4, 0), 0.0) == 1.0);

  Rng rng(9);
  const auto g = generate_ground_truth(4, rng);
  CHECK(measure(g, Eigen::VectorXd::Zero(4), 0.3) == 0.3);

  GroundTruth w{Eigen::Vector2d(1.0, 2.0)};
  CHECK(measure(w, Eigen::Vector2d(3.0, 4.0), -1.0) == 10.0);
  CHECK_THROWS_AS(measure(w, Eigen::Vector3d(1, 2, 3), 0.0), Error);
}

TEST_CASE("measure is linear in the regressor") {
  Rng rng(10);
  const auto g = generate_ground_truth(6, rng);
  for (int i = 0; i < 100; ++i) {
    const auto u = generate_regressor(6, 1.0, rng);
    const auto v = generate_regressor(6, 1.0, rng);
    CHECK(measure(g, u, 0.0) + measure(g, v, 0.0) == doctest::Approx(measure(g, u + v, 0.0)).epsilon(1e-13));
  }
}

TEST_CASE("noiseless data recovers w_o by least squares") {
  Rng rng(11);
  const std::size_t m = 8;
  const auto g = generate_ground_truth(m, rng);
  Eigen::MatrixXd U(m, m);
  Eigen::VectorXd d(m);
  for (std::size_t r = 0; r < m; ++r) {
    const auto u = generate_regressor(m, 1.0, rng);
    U.row(static_cast<Eigen::Index>(r)) = u.transpose();
    d(static_cast<Eigen::Index>(r)) = measure(g, u, 0.0);
  }
  const Eigen::VectorXd w = U.colPivHouseholderQr().solve(d);
  CHECK((w - g.w_o).norm() <= 1e-8);
}
