#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "wdlmp/errors.hpp"
#include "wdlmp/noise.hpp"

using namespace wdlmp;

namespace {

std::vector<double> draw(const NoiseModel& model, std::size_t node, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = sample_noise(model, node, rng);
  return v;
}

double quantile(std::vector<double> v, double q) {
  const auto idx = static_cast<std::size_t>(q * static_cast<double>(v.size() - 1));
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx), v.end());
  return v[idx];
}

}  // namespace

TEST_CASE("empirical characteristic function") {
  const std::vector<double> zeros(5, 0.0);
  CHECK(empirical_char_function(zeros, 3.7) == 1.0);
  const std::vector<double> pm{1.0, -1.0};
  CHECK(empirical_char_function(pm, std::numbers::pi) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_THROWS_AS(empirical_char_function({}, 1.0), Error);

  Rng rng(7);
  std::normal_distribution<double> normal;
  std::vector<double> g(1'000'000);
  for (auto& x : g) x = normal(rng);
  CHECK(std::abs(empirical_char_function(g, 1.0) - std::exp(-0.5)) <= 0.005);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(NoiseModel(GaussianNoise{{0.1, 0.0}}), Error);
  CHECK_THROWS_AS(NoiseModel(AlphaStableNoise{2.5, {0.1}}), Error);
  CHECK_THROWS_AS(NoiseModel(AlphaStableNoise{0.0, {0.1}}), Error);
  CHECK_THROWS_AS(NoiseModel(AlphaStableNoise{1.5, {-0.1}}), Error);
  CHECK(NoiseModel(AlphaStableNoise{2.0, {0.1, 0.2}}).num_nodes() == 2);
}

TEST_CASE("alpha = 2 is Gaussian with variance 2 gamma") {
  const NoiseModel m(AlphaStableNoise{2.0, {0.5}});
  const auto v = draw(m, 0, 1'000'000, 11);
  double mean = 0.0, sq = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  for (double x : v) sq += (x - mean) * (x - mean);
  const double var = sq / static_cast<double>(v.size() - 1);
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("alpha = 1 is standard Cauchy") {
  const NoiseModel m(AlphaStableNoise{1.0, {1.0}});
  const auto v = draw(m, 0, 1'000'000, 12);
  CHECK(std::abs(quantile(v, 0.5)) <= 0.02);
  CHECK(quantile(v, 0.75) - quantile(v, 0.25) == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("alpha-stable characteristic function at alpha = 1.25") {
  const NoiseModel m(AlphaStableNoise{1.25, {0.01}});
  const auto v = draw(m, 0, 1'000'000, 13);
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    CAPTURE(t);
    CHECK(std::abs(empirical_char_function(v, t) - std::exp(-0.01 * std::pow(t, 1.25))) <= 0.01);
  }
}

TEST_CASE("Gaussian branch moments and per-node scale") {
  const NoiseModel m(GaussianNoise{{0.1, 2.0}});
  const std::size_t n = 200'000;
  for (std::size_t node : {0u, 1u}) {
    const double sigma = node == 0 ? 0.1 : 2.0;
    const auto v = draw(m, node, n, 21 + node);
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(n);
    double sq = 0.0;
    for (double x : v) sq += (x - mean) * (x - mean);
    const double sd = std::sqrt(sq / static_cast<double>(n - 1));
    CHECK(std::abs(mean) <= 3.0 * sigma / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(sd - sigma) <= 3.0 * sigma / std::sqrt(static_cast<double>(n)));
  }
}

TEST_CASE("draws are symmetric about zero") {
  const std::size_t n = 200'000;
  const double bound = 3.0 / std::sqrt(static_cast<double>(n));
  for (const auto& m : {NoiseModel(GaussianNoise{{0.3}}), NoiseModel(AlphaStableNoise{1.25, {0.05}}),
                        NoiseModel(AlphaStableNoise{1.0, {1.0}}), NoiseModel(AlphaStableNoise{0.7, {1.0}})}) {
    const auto v = draw(m, 0, n, 31);
    double s = 0.0;
    for (double x : v) s += (x > 0.0) - (x < 0.0);
    CHECK(std::abs(s / static_cast<double>(n)) <= bound);
  }
}

TEST_CASE("same seed, same draws") {
  const NoiseModel m(AlphaStableNoise{1.25, {0.02}});
  CHECK(draw(m, 0, 100, 5) == draw(m, 0, 100, 5));
}
