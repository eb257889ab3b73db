#include <doctest.h>

#include "wdlmp/errors.hpp"
#include "wdlmp/topology.hpp"

using namespace wdlmp;

namespace {

NetworkTopology ring(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < n; ++k) edges.emplace_back(k, (k + 1) % n);
  return NetworkTopology(n, edges);
}

}  // namespace

TEST_CASE("smallest connected graph") {
  NetworkTopology t(2, {{0, 1}});
  CHECK(t.adjacent(0, 1));
  CHECK(t.adjacent(1, 0));
  CHECK(t.adjacent(0, 0));
  CHECK(t.neighbors(1) == std::vector<std::size_t>{0, 1});
}

TEST_CASE("ring neighborhoods have three members") {
  const auto t = ring(10);
  for (std::size_t k = 0; k < 10; ++k) CHECK(t.neighbors(k).size() == 3);
  CHECK(t.neighbors(0) == std::vector<std::size_t>{0, 1, 9});
}

TEST_CASE("fully connected neighborhoods") {
  NetworkTopology t(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(t.neighbors(1) == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("construction errors") {
  CHECK_THROWS_WITH_AS(NetworkTopology(3, {{0, 1}}), "disconnected topology", TopologyError);
  CHECK_THROWS_AS(NetworkTopology(3, {{0, 3}}), TopologyError);
  CHECK_THROWS_AS(NetworkTopology(0, {}), TopologyError);
  CHECK_THROWS_AS(ring(4).neighbors(4), TopologyError);
}

TEST_CASE("single node is its own neighborhood") {
  NetworkTopology t(1, {});
  CHECK(t.neighbors(0) == std::vector<std::size_t>{0});
  CHECK(uniform_combination(t)(0, 0) == 1.0);
}

TEST_CASE("uniform combination weights") {
  SUBCASE("path of two") {
    const auto c = uniform_combination(NetworkTopology(2, {{0, 1}}));
    CHECK((c.weights().array() == 0.5).all());
  }
  SUBCASE("ring of ten") {
    const auto t = ring(10);
    const auto c = uniform_combination(t);
    for (std::size_t k = 0; k < 10; ++k) {
      for (std::size_t l = 0; l < 10; ++l) CHECK(c(k, l) == (t.adjacent(k, l) ? 1.0 / 3.0 : 0.0));
    }
  }
  SUBCASE("complete graph of four") {
    NetworkTopology t(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK((uniform_combination(t).weights().array() == 0.25).all());
  }
}

TEST_CASE("combination matrix validation") {
  NetworkTopology t(3, {{0, 1}, {1, 2}});
  Eigen::MatrixXd bad_support = Eigen::MatrixXd::Constant(3, 3, 1.0 / 3.0);
  CHECK_THROWS_AS(CombinationMatrix(t, bad_support), TopologyError);
  Eigen::MatrixXd bad_sum = uniform_combination(t).weights();
  bad_sum(0, 0) += 1e-9;
  CHECK_THROWS_AS(CombinationMatrix(t, bad_sum), TopologyError);
  Eigen::MatrixXd negative = Eigen::MatrixXd::Identity(3, 3);
  negative(0, 0) = 1.5;
  negative(0, 1) = -0.5;
  CHECK_THROWS_AS(CombinationMatrix(t, negative), TopologyError);
}

TEST_CASE("default topology properties") {
  const auto t = default_topology();
  CHECK(t.num_nodes() == 10);
  CHECK(t.edges().size() == 13);
  const auto c = uniform_combination(t);
  for (std::size_t k = 0; k < 10; ++k) {
    CHECK(std::abs(c.weights().row(static_cast<Eigen::Index>(k)).sum() - 1.0) <= 1e-12);
    const auto& hood = t.neighbors(k);
    CHECK(std::find(hood.begin(), hood.end(), k) != hood.end());
    CHECK(std::is_sorted(hood.begin(), hood.end()));
    for (auto l : hood) {
      const auto& back = t.neighbors(l);
      CHECK(std::find(back.begin(), back.end(), k) != back.end());
    }
    for (std::size_t l = 0; l < 10; ++l) CHECK((c(k, l) > 0.0) == t.adjacent(k, l));
  }
}
