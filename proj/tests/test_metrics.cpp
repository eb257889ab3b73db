#include <doctest.h>

#include <algorithm>
#include <random>

#include "wdlmp/errors.hpp"
#include "wdlmp/metrics.hpp"

using namespace wdlmp;

namespace {

GroundTruth origin(Eigen::Index m) { return {Eigen::VectorXd::Zero(m)}; }

DiffusionState nodes_at_distances(const std::vector<double>& dist) {
  DiffusionState s(dist.size());
  for (std::size_t k = 0; k < dist.size(); ++k) s[k].w = Eigen::VectorXd::Unit(3, 1) * dist[k];
  return s;
}

}  // namespace

TEST_CASE("msd in dB") {
  CHECK(msd_db(Eigen::Vector3d(0, 1, 0), origin(3)) == doctest::Approx(0.0));
  CHECK(msd_db(Eigen::Vector3d(6, 8, 0), origin(3)) == doctest::Approx(20.0));
  CHECK(msd_db(Eigen::Vector3d::Zero(), origin(3)) == -300.0);
  CHECK_THROWS_AS(msd_db(Eigen::Vector2d::Zero(), origin(3)), Error);
}

TEST_CASE("network msd") {
  const auto one = nodes_at_distances({3.5});
  CHECK(network_msd_db(one, origin(3)) == doctest::Approx(msd_db(one[0].w, origin(3))).epsilon(1e-14));
  CHECK(network_msd_db(nodes_at_distances({1, 1, 1, 1}), origin(3)) == doctest::Approx(0.0));
  CHECK(network_msd_db(nodes_at_distances({1, 3}), origin(3)) == doctest::Approx(6.989700043360188).epsilon(1e-14));
  CHECK(network_msd_db(nodes_at_distances({0, 0}), origin(3)) == -300.0);
}

TEST_CASE("curve averaging") {
  SUBCASE("one trial is the identity") {
    const std::vector<TrialCurve> t{{{4.0, 1.0, 0.01}, false}};
    const auto c = average_curves(t, "x");
    CHECK(c.msd_linear == t[0].squared_deviation);
    CHECK(c.msd_db[2] == doctest::Approx(-20.0));
  }
  SUBCASE("mean in the linear domain") {
    const std::vector<TrialCurve> t{{{1.0}, false}, {{3.0}, false}};
    CHECK(average_curves(t, "x").msd_db[0] == doctest::Approx(3.010299956639812).epsilon(1e-14));
  }
  SUBCASE("diverged trials are excluded and counted") {
    const std::vector<TrialCurve> t{{{1.0}, false}, {{}, true}, {{3.0}, false}};
    const auto c = average_curves(t, "x");
    CHECK(c.trials_used == 2);
    CHECK(c.diverged_trials == 1);
    CHECK(c.msd_linear[0] == 2.0);
  }
  SUBCASE("errors") {
    const std::vector<TrialCurve> none{{{}, true}};
    CHECK_THROWS_AS(average_curves(none, "x"), Error);
    const std::vector<TrialCurve> ragged{{{1.0}, false}, {{1.0, 2.0}, false}};
    CHECK_THROWS_AS(average_curves(ragged, "x"), Error);
  }
  SUBCASE("permutation invariance") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 5.0);
    std::vector<TrialCurve> t(20);
    for (auto& c : t) {
      for (int i = 0; i < 8; ++i) c.squared_deviation.push_back(u(rng));
    }
    const auto base = average_curves(t, "x");
    std::shuffle(t.begin(), t.end(), rng);
    const auto shuffled = average_curves(t, "x");
    for (int i = 0; i < 8; ++i) CHECK(shuffled.msd_db[i] == doctest::Approx(base.msd_db[i]).epsilon(1e-13));
  }
}

TEST_CASE("steady-state msd uses the trailing tenth") {
  LearningCurve c;
  c.msd_linear.assign(100, 100.0);
  for (int i = 90; i < 100; ++i) c.msd_linear[i] = 0.01;
  CHECK(steady_state_msd_db(c) == doctest::Approx(-20.0));
  c.msd_linear[89] = 1e6;
  CHECK(steady_state_msd_db(c) == doctest::Approx(-20.0));
}
