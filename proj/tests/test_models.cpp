#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steiner/models.hpp"
#include "steiner/steiner.hpp"
#include "support.hpp"

using namespace steiner;

TEST_CASE("descriptor parsing") {
  const auto grid = GeneratorDescriptor::parse("grid:3,4");
  CHECK(grid.family == GraphFamily::grid);
  CHECK(grid.params == std::vector<std::uint64_t>{3, 4});
  CHECK(grid.to_string() == "grid:3,4");
  CHECK(grid.order() == 12);
  CHECK(GeneratorDescriptor::parse("hypercube:4").order() == 16);
  CHECK(GeneratorDescriptor::parse("tree:7,10").order() == 10);

  for (const char* bad : {"grid:3", "grid", "torus:3", "path:0", "cycle:2", "path:x", "grid:3,,4", "hypercube:17",
                          "complete:5000", "grid:300,300", "path:-3"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GeneratorDescriptor::parse(bad), std::invalid_argument);
  }
}

TEST_CASE("generated graphs have the expected shape") {
  struct Case {
    const char* spec;
    std::size_t n;
    std::size_t m;
  };
  for (const Case& c : {Case{"path:1", 1, 0}, Case{"path:5", 5, 4}, Case{"cycle:7", 7, 7}, Case{"complete:6", 6, 15},
                        Case{"hypercube:4", 16, 32}, Case{"grid:3,5", 15, 22}, Case{"tree:3,12", 12, 11}}) {
    CAPTURE(c.spec);
    const Graph g = testing::gen(c.spec);
    CHECK(g.order() == c.n);
    CHECK(g.size() == c.m);
    CHECK(is_connected(g));
  }
  const Graph grid = testing::gen("grid:3,4");
  CHECK(grid.has_edge(0, 1));
  CHECK(grid.has_edge(0, 4));
  CHECK_FALSE(grid.has_edge(3, 4));
  const Graph cube = testing::gen("hypercube:3");
  CHECK(cube.has_edge(5, 7));
  CHECK_FALSE(cube.has_edge(3, 4));
}

TEST_CASE("seeded trees are deterministic") {
  const Graph a = random_tree(42, 30);
  const Graph b = random_tree(42, 30);
  const Graph c = random_tree(43, 30);
  CHECK(format_edge_list(a) == format_edge_list(b));
  CHECK(format_edge_list(a) != format_edge_list(c));
  CHECK(a.size() == 29);
  CHECK(is_connected(a));
  CHECK(random_tree(1, 1).size() == 0);
  CHECK(random_tree(1, 2).size() == 1);
}

TEST_CASE("family median status") {
  CHECK(family_median_status(GeneratorDescriptor::parse("grid:3,3")) == MedianStatus::median);
  CHECK(family_median_status(GeneratorDescriptor::parse("tree:1,9")) == MedianStatus::median);
  CHECK(family_median_status(GeneratorDescriptor::parse("hypercube:5")) == MedianStatus::median);
  CHECK_FALSE(family_median_status(GeneratorDescriptor::parse("cycle:6")).has_value());
  CHECK_FALSE(family_median_status(GeneratorDescriptor::parse("complete:4")).has_value());
}

TEST_CASE("complete and path formulas match enumeration") {
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto dk = all_pairs_distances(testing::gen(("complete:" + std::to_string(n)).c_str()));
    const auto dp = all_pairs_distances(testing::gen(("path:" + std::to_string(n)).c_str()));
    for (std::int64_t k = 2; k <= std::min<std::int64_t>(n, 5); ++k) {
      CAPTURE(n);
      CAPTURE(k);
      const auto kk = static_cast<std::size_t>(k);
      const auto ck = complete_formulas(n, k);
      CHECK(ck.hosoya == steiner_hosoya(dk, kk));
      CHECK(SteinerIndices{ck.sw, Rational(ck.sww)} == steiner_k_indices_brute(dk, kk));
      const auto cp = path_formulas(n, k);
      CHECK(cp.hosoya == steiner_hosoya(dp, kk));
      CHECK(SteinerIndices{cp.sw, Rational(cp.sww)} == steiner_k_indices_brute(dp, kk));
    }
  }
  CHECK(complete_formulas(5, 3).hosoya.to_string() == "2:10");
  CHECK(complete_formulas(5, 3).sww == 30);
  CHECK(path_formulas(4, 3).hosoya.to_string() == "2:2 3:2");
  CHECK_THROWS_AS(path_formulas(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(complete_formulas(4, 5), std::invalid_argument);
}

TEST_CASE("grid formulas match enumeration") {
  for (std::int64_t m = 2; m <= 5; ++m) {
    for (std::int64_t n = 2; n <= 5; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto d = all_pairs_distances(testing::gen(("grid:" + std::to_string(m) + "," + std::to_string(n)).c_str()));
      const auto brute = steiner_k_indices_brute(d, 3);
      CHECK(grid_sw3(m, n) == brute.sw);
      if (m == 2 && n == 2) continue;
      CHECK(Rational(grid_sww3(m, n)) == brute.sww);
    }
  }
  CHECK(grid_sw3(3, 3) == 252);
  CHECK(grid_sww3(2, 3) == 90);
  CHECK(grid_sww3(3, 2) == 90);
  CHECK(grid_sww3(2, 4) == 352);
  CHECK(grid_sww3(2, 5) == 1004);
  CHECK(grid_sww3(2, 6) == 2364);
  CHECK(grid_sww3(3, 3) == 526);
  CHECK_THROWS_AS(grid_sww3(2, 2), PreconditionError);
  CHECK_THROWS_AS(grid_sw3(1, 4), PreconditionError);
  CHECK_THROWS_AS(grid_sww3(1, 4), PreconditionError);
}
