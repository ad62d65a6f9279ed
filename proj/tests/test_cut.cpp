#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steiner/cut_method.hpp"
#include "steiner/steiner.hpp"
#include "support.hpp"

using namespace steiner;

namespace {

struct Prepared {
  Graph g;
  DistanceMatrix d;
  ThetaClasses tc;
  PairCountTable pc;
  GraphClassification cls;
};

Prepared prepare(Graph g) {
  auto d = all_pairs_distances(g);
  auto tc = theta_classes(g, d);
  auto pc = pair_counts(tc);
  auto cls = median_classification(g, d);
  return {std::move(g), std::move(d), std::move(tc), std::move(pc), std::move(cls)};
}

std::vector<Graph> median_corpus() {
  std::vector<Graph> out;
  for (const char* spec : {"grid:2,2", "grid:2,5", "grid:3,3", "grid:4,5", "grid:5,5", "hypercube:2", "hypercube:3",
                           "hypercube:4", "path:7", "cycle:4"}) {
    out.push_back(testing::gen(spec));
  }
  out.push_back(testing::prism(4));
  for (std::uint64_t seed = 0; seed < 50; ++seed) out.push_back(random_tree(seed, 3 + seed % 12));
  return out;
}

// p / q after checking divisibility, for the grid sum tables.
std::int64_t exact(std::int64_t p, std::int64_t q) {
  REQUIRE(p % q == 0);
  return p / q;
}

}  // namespace

TEST_CASE("per-class and per-pair contributions") {
  CHECK(cut_f1(2, 3) == 6);
  CHECK(cut_f2(2, 3) == 18);
  CHECK(cut_f2(1, 1) == 0);
  CHECK(cut_g1({1, 2, 3, 4}) == 10);
  CHECK(cut_g1({2, 0, 1, 3}) == 6);
}

TEST_CASE("cut sums reproduce the distance moments on median graphs") {
  for (const Graph& g : median_corpus()) {
    const auto p = prepare(g);
    REQUIRE(p.cls.median_status == MedianStatus::median);
    const auto naive = testing::naive_moments(p.d);
    CHECK(wiener_cut(p.tc) == naive.wiener);
    CHECK(wwbar_cut(p.tc, p.pc) == naive.sum_sq);
    CHECK(wwhat_cut(p.tc, p.pc) == naive.cross);

    const auto brute = steiner_k_indices_brute(p.d, 3);
    CHECK(sw3_cut(p.tc, p.cls) == brute.sw);
    CHECK(Rational(sww3_cut(p.tc, p.pc, p.cls)) == brute.sww);

    const auto report = cut_report(p.tc, p.pc);
    CHECK(report.s1 + 2 * report.s3 == naive.sum_sq);
    CHECK(report.s2 + 2 * report.s4 == naive.cross);
    CHECK(sww3_from_report(report, g.order(), p.cls) == sww3_cut(p.tc, p.pc, p.cls));
  }
}

TEST_CASE("the first two moments need only a partial cube") {
  const auto c6 = prepare(testing::gen("cycle:6"));
  const auto naive = testing::naive_moments(c6.d);
  CHECK(wiener_cut(c6.tc) == naive.wiener);
  CHECK(wwbar_cut(c6.tc, c6.pc) == naive.sum_sq);
  CHECK(wwhat_cut(c6.tc, c6.pc) == naive.cross);
}

TEST_CASE("non-modular partial cubes are refused") {
  const auto c6 = prepare(testing::gen("cycle:6"));
  try {
    sww3_cut(c6.tc, c6.pc, c6.cls);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()) == "graph is not modular (witness triple 0,2,4)");
  }
  CHECK_THROWS_AS(sw3_cut(c6.tc, c6.cls), PreconditionError);

  const auto k2 = prepare(testing::gen("path:2"));
  CHECK_THROWS_AS(sw3_cut(k2.tc, k2.cls), PreconditionError);
}

TEST_CASE("classes without sides are refused") {
  const Graph c5 = testing::gen("cycle:5");
  const auto d = all_pairs_distances(c5);
  const auto tc = theta_classes(c5, d);
  CHECK_FALSE(tc.has_sides());
  CHECK_THROWS_AS(wiener_cut(tc), NotPartialCubeClass);
}

TEST_CASE("known values") {
  const auto g23 = prepare(testing::gen("grid:2,3"));
  CHECK(wiener_cut(g23.tc) == 25);
  CHECK(wwbar_cut(g23.tc, g23.pc) == 49);
  CHECK(wwhat_cut(g23.tc, g23.pc) == 324);
  CHECK(sw3_cut(g23.tc, g23.cls) == 50);
  CHECK(sww3_cut(g23.tc, g23.pc, g23.cls) == 90);

  const auto c4 = prepare(testing::gen("cycle:4"));
  CHECK(sww3_cut(c4.tc, c4.pc, c4.cls) == 12);
  const auto g33 = prepare(testing::gen("grid:3,3"));
  CHECK(sw3_cut(g33.tc, g33.cls) == 252);
  CHECK(sww3_cut(g33.tc, g33.pc, g33.cls) == 526);
}

TEST_CASE("grid cut sums follow the row and column tables") {
  for (std::int64_t m = 2; m <= 6; ++m) {
    for (std::int64_t n = 2; n <= 6; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto p = prepare(testing::gen(("grid:" + std::to_string(m) + "," + std::to_string(n)).c_str()));
      REQUIRE(p.tc.size() == static_cast<std::size_t>(m + n - 2));
      // column cuts separate horizontal edges (u, u + 1)
      std::vector<bool> column(p.tc.size());
      for (std::size_t i = 0; i < p.tc.size(); ++i) column[i] = p.tc.edges(i)[0].v == p.tc.edges(i)[0].u + 1;

      std::int64_t f1c = 0, f1d = 0, f2c = 0, f2d = 0;
      for (std::size_t i = 0; i < p.tc.size(); ++i) {
        const auto n0 = p.tc.side0_count(i);
        const auto n1 = p.tc.side1_count(i);
        (column[i] ? f1c : f1d) += cut_f1(n0, n1);
        (column[i] ? f2c : f2d) += cut_f2(n0, n1);
      }
      CHECK(f1c == exact(m * m * n * n * n - m * m * n, 6));
      CHECK(f1d == exact(n * n * m * m * m - n * n * m, 6));
      CHECK(f2c == exact(m * m * m * n * n * n * n - m * m * m * n * n - 2 * m * m * n * n * n + 2 * m * m * n, 6));
      CHECK(f2d == exact(n * n * n * m * m * m * m - n * n * n * m * m - 2 * n * n * m * m * m + 2 * n * n * m, 6));

      std::int64_t g1cc = 0, g1dd = 0, g1cd = 0, g2cc = 0, g2dd = 0, g2cd = 0;
      for (std::size_t i = 0; i < p.tc.size(); ++i) {
        for (std::size_t j = i + 1; j < p.tc.size(); ++j) {
          const auto& c = p.pc.at(i, j);
          if (column[i] && column[j]) {
            g1cc += cut_g1(c);
            g2cc += cut_g2(c);
          } else if (!column[i] && !column[j]) {
            g1dd += cut_g1(c);
            g2dd += cut_g2(c);
          } else {
            g1cd += cut_g1(c);
            g2cd += cut_g2(c);
          }
        }
      }
      const std::int64_t m2 = m * m, m3 = m2 * m, m4 = m3 * m, m5 = m4 * m;
      const std::int64_t n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
      if (n >= 3) {
        CHECK(g1cc == exact(m2 * n4 - 2 * m2 * n3 - m2 * n2 + 2 * m2 * n, 24));
        CHECK(g2cc == exact(7 * m3 * n5 - 10 * m3 * n4 - 15 * m3 * n3 - 10 * m2 * n4 + 10 * m3 * n2 +
                                20 * m2 * n3 + 8 * m3 * n + 10 * m2 * n2 - 20 * m2 * n,
                            120));
      }
      if (m >= 3) {
        CHECK(g1dd == exact(m4 * n2 - 2 * m3 * n2 - m2 * n2 + 2 * m * n2, 24));
        CHECK(g2dd == exact(7 * m5 * n3 - 10 * m4 * n3 - 15 * m3 * n3 - 10 * m4 * n2 + 10 * m2 * n3 +
                                20 * m3 * n2 + 8 * m * n3 + 10 * m2 * n2 - 20 * m * n2,
                            120));
      }
      CHECK(g1cd == exact(m3 * n3 - m3 * n - m * n3 + m * n, 18));
      CHECK(g2cd == exact(m4 * n4 - m4 * n2 - m3 * n3 - m2 * n4 + m3 * n + m2 * n2 + m * n3 - m * n, 9));
    }
  }
}

TEST_CASE("cut sums grow with the grid") {
  for (std::int64_t m = 2; m <= 5; ++m) {
    for (std::int64_t n = 2; n <= 5; ++n) {
      const auto a = prepare(testing::gen(("grid:" + std::to_string(m) + "," + std::to_string(n)).c_str()));
      const auto b = prepare(testing::gen(("grid:" + std::to_string(m) + "," + std::to_string(n + 1)).c_str()));
      const auto ra = cut_report(a.tc, a.pc);
      const auto rb = cut_report(b.tc, b.pc);
      CHECK(ra.s1 < rb.s1);
      CHECK(ra.s2 < rb.s2);
      CHECK(ra.s3 < rb.s3);
      CHECK(ra.s4 < rb.s4);
    }
  }
}
