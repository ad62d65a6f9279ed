#pragma once

// Shared fixtures and slow reference implementations for the test binaries.
// Steiner distances come from exhaustive search over connected vertex subsets
// and distance sums from plain loops over the BFS matrix.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "steiner/graph.hpp"
#include "steiner/models.hpp"

namespace testing {

using steiner::DistanceMatrix;
using steiner::Graph;
using steiner::Vertex;

inline Graph make_graph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
  return Graph(n, std::move(edges));
}

inline Graph gen(const char* spec) { return steiner::generate(steiner::GeneratorDescriptor::parse(spec)); }

// Hubs 0 and 1, leaves 2, 3, 4.
inline Graph k23() { return make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
inline Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

// Two copies of C_n joined by a perfect matching.
inline Graph prism(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) {
    const auto j = static_cast<Vertex>((i + 1) % n);
    edges.emplace_back(i, j);
    edges.emplace_back(static_cast<Vertex>(i + n), static_cast<Vertex>(j + n));
    edges.emplace_back(i, static_cast<Vertex>(i + n));
  }
  return Graph(2 * n, std::move(edges));
}

// Random spanning tree plus `extra` random chords; connected by construction.
inline Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::set<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.insert({parent(rng), v});
  }
  const std::size_t max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (extra > 0 && edges.size() < max_edges) {
    Vertex a = pick(rng);
    Vertex b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (edges.insert({a, b}).second) --extra;
  }
  return Graph(n, {edges.begin(), edges.end()});
}

// 30 seeded connected graphs with 3..9 vertices and varying density.
inline std::vector<Graph> random_corpus(std::size_t count = 30, std::uint64_t seed = 20240611) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 3 + i % 7;
    const std::size_t extra = (i * 7) % (n + 2);
    out.push_back(random_connected(rng, n, extra));
  }
  return out;
}

// Exhaustive Steiner distances: the smallest connected vertex subset that
// contains the terminals has |X| - 1 edges in its spanning tree.
class SubsetOracle {
 public:
  explicit SubsetOracle(const Graph& g) : n_(g.order()), connected_(std::size_t{1} << n_, false) {
    std::vector<std::uint32_t> adj(n_, 0);
    for (const auto& e : g.edges()) {
      adj[e.u] |= 1U << e.v;
      adj[e.v] |= 1U << e.u;
    }
    for (std::uint32_t mask = 1; mask < (1U << n_); ++mask) {
      std::uint32_t seen = mask & (~mask + 1);
      std::uint32_t frontier = seen;
      while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= mask & ~seen;
        seen |= next;
        frontier = next;
      }
      connected_[mask] = seen == mask;
    }
  }

  std::int64_t distance(const std::vector<Vertex>& terminals) const {
    std::uint32_t need = 0;
    for (Vertex t : terminals) need |= 1U << t;
    int best = static_cast<int>(n_);
    for (std::uint32_t mask = 1; mask < (1U << n_); ++mask) {
      if ((mask & need) == need && connected_[mask]) best = std::min(best, std::popcount(mask));
    }
    return best - 1;
  }

  // (SW_k, 2 * SWW_k) summed over every k-subset.
  std::pair<std::int64_t, std::int64_t> indices(std::size_t k) const {
    std::int64_t sum = 0;
    std::int64_t sum_sq = 0;
    for (std::uint32_t mask = 0; mask < (1U << n_); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
      std::vector<Vertex> s;
      for (std::uint32_t f = mask; f != 0; f &= f - 1) s.push_back(static_cast<Vertex>(std::countr_zero(f)));
      const std::int64_t dist = distance(s);
      sum += dist;
      sum_sq += dist * dist;
    }
    return {sum, sum + sum_sq};
  }

 private:
  std::size_t n_;
  std::vector<bool> connected_;
};

struct NaiveMoments {
  std::int64_t wiener = 0;
  std::int64_t sum_sq = 0;
  // Σ d(u,v)·d(u,w) over ordered triples of distinct vertices.
  std::int64_t cross = 0;
  // Σ d(u,v)² over ordered triples of distinct vertices.
  std::int64_t ordered_sq = 0;
};

inline NaiveMoments naive_moments(const DistanceMatrix& d) {
  NaiveMoments m;
  const auto n = static_cast<Vertex>(d.order());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      m.wiener += d(u, v);
      m.sum_sq += std::int64_t{d(u, v)} * d(u, v);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w = 0; w < n; ++w) {
        if (u == v || u == w || v == w) continue;
        m.cross += std::int64_t{d(u, v)} * d(u, w);
        m.ordered_sq += std::int64_t{d(u, v)} * d(u, v);
      }
    }
  }
  return m;
}

}  // namespace testing
