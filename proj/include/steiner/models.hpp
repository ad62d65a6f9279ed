#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "steiner/graph.hpp"
#include "steiner/steiner.hpp"
#include "steiner/theta.hpp"

namespace steiner {

enum class GraphFamily { path, cycle, complete, hypercube, grid, tree };

/// Parameters: path:n, cycle:n, complete:n, hypercube:k, grid:m,n, tree:seed,n.
struct GeneratorDescriptor {
  GraphFamily family = GraphFamily::path;
  std::vector<std::uint64_t> params;

  /// Parses "grid:3,3" style strings; throws std::invalid_argument.
  static GeneratorDescriptor parse(std::string_view text);
  std::string to_string() const;
  /// Vertex count of the generated graph.
  std::uint64_t order() const;
};

/// Canonical numbering: grid (i,j) -> i*n + j with rows 0..m-1; hypercube
/// vertices are their binary codes; trees come from a seeded Prufer sequence.
Graph generate(const GeneratorDescriptor& desc);

/// Uniform random labelled tree on n vertices, identical for a given seed on
/// every platform.
Graph random_tree(std::uint64_t seed, std::size_t n);

/// Median status known from the family alone: paths, trees, hypercubes and
/// grids are median graphs. Empty for the other families.
std::optional<MedianStatus> family_median_status(const GeneratorDescriptor& desc);

struct ClosedForm {
  SteinerHosoya hosoya;
  std::int64_t sw = 0;
  std::int64_t sww = 0;
};

/// K_n: SH_k = C(n,k) x^{k-1}. Requires 1 <= k <= n.
ClosedForm complete_formulas(std::int64_t n, std::int64_t k);

/// P_n: d_k(P_n, j) = (n-j) C(j-1, k-2). Requires 2 <= k <= n.
ClosedForm path_formulas(std::int64_t n, std::int64_t k);

/// SW_3 of the m x n grid, m, n >= 2.
std::int64_t grid_sw3(std::int64_t m, std::int64_t n);

/// SWW_3 of the m x n grid for m, n >= 3, or for one side 2 and the other >= 3.
std::int64_t grid_sww3(std::int64_t m, std::int64_t n);

}  // namespace steiner
