#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "septensor/grid.hpp"

using namespace septensor;

TEST_CASE("make_interval validates its bounds") {
  const Interval iv = make_interval(-1.5, 2.0);
  CHECK(iv.lo == -1.5);
  CHECK(iv.hi == 2.0);
  CHECK(iv.length() == 3.5);
  CHECK(iv.contains(-1.5));
  CHECK(iv.contains(2.0));
  CHECK(!iv.contains(2.0000001));

  CHECK_THROWS_AS(make_interval(1.0, 1.0), InvalidGrid);
  CHECK_THROWS_AS(make_interval(2.0, 1.0), InvalidGrid);
  CHECK_THROWS_AS(make_interval(0.0, std::numeric_limits<double>::infinity()), InvalidGrid);
  CHECK_THROWS_AS(make_interval(std::nan(""), 1.0), InvalidGrid);
}

TEST_CASE("uniform grids hit both endpoints exactly") {
  const Interval iv = make_interval(0.25, 0.75);
  for (std::size_t n : {2u, 3u, 401u, 1001u}) {
    const Grid g = make_uniform_grid(iv, n);
    CHECK(g.size() == n);
    CHECK(g.front() == 0.25);
    CHECK(g.back() == 0.75);
    for (std::size_t i = 1; i < n; ++i) CHECK(g[i] > g[i - 1]);
  }
  CHECK_THROWS_AS(make_uniform_grid(iv, 0), InvalidGrid);
  CHECK_THROWS_AS(make_uniform_grid(iv, 1), InvalidGrid);
}

TEST_CASE("uniform grid spacing is affine in the index") {
  const Grid g = make_uniform_grid(make_interval(0.0, 1.0), 11);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(g[i] == doctest::Approx(0.1 * static_cast<double>(i)).epsilon(1e-15));
  }
}

TEST_CASE("grid construction rejects malformed point sets") {
  const Interval iv = make_interval(0.0, 1.0);
  CHECK_NOTHROW(Grid(iv, {0.0, 0.5, 1.0}));
  CHECK_THROWS_AS(Grid(iv, {0.0}), InvalidGrid);                  // too few
  CHECK_THROWS_AS(Grid(iv, {0.0, 0.5, 0.5, 1.0}), InvalidGrid);  // not increasing
  CHECK_THROWS_AS(Grid(iv, {0.0, 0.7, 0.5, 1.0}), InvalidGrid);
  CHECK_THROWS_AS(Grid(iv, {0.1, 0.5, 1.0}), InvalidGrid);  // endpoint mismatch
  CHECK_THROWS_AS(Grid(iv, {0.0, 0.5, 0.9}), InvalidGrid);
  CHECK_THROWS_AS(Grid(iv, {0.0, std::nan(""), 1.0}), InvalidGrid);
}

TEST_CASE("find_node locates nodes and rejects interior points") {
  const Grid g = make_uniform_grid(make_interval(0.0, 1.0), 5);
  CHECK(g.find_node(0.0) == 0);
  CHECK(g.find_node(0.25) == 1);
  CHECK(g.find_node(1.0) == 4);
  CHECK(g.find_node(0.25 + 5e-15) == 1);   // within tolerance
  CHECK(!g.find_node(0.3).has_value());    // between nodes
  CHECK(!g.find_node(-0.1).has_value());   // outside
  CHECK(!g.find_node(1.1).has_value());
  CHECK(g.find_node(0.3, 0.06) == 1);      // caller-widened tolerance
}

TEST_CASE("find_node with a wide tolerance returns the first node in range") {
  const Grid g(make_interval(0.0, 1.0), {0.0, 0.5, 1.0});
  const auto hit = g.find_node(0.49, 0.1);
  REQUIRE(hit.has_value());
  CHECK(*hit == 1);
}
