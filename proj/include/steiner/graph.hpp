#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "steiner/exact.hpp"

namespace steiner {

using Vertex = std::uint32_t;
using Distance = std::uint16_t;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Malformed edge-list input; carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called on an input that does not satisfy its precondition
/// (disconnected graph, non-modular graph for a modular formula, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  /// Edges sorted lexicographically, each with u < v.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  /// Indices into edges() aligned with neighbors(v).
  std::span<const std::size_t> incident_edges(Vertex v) const { return incident_[v]; }
  bool has_edge(Vertex a, Vertex b) const;
  /// Index of edge {a,b} in edges(); throws std::out_of_range if absent.
  std::size_t edge_index(Vertex a, Vertex b) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Reads the "n m" + m x "u v" edge-list format ('#' starts a comment line).
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Writes `g` in the edge-list format accepted by parse_edge_list.
std::string format_edge_list(const Graph& g);

/// All-pairs shortest-path distances of a connected graph, row-major.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<Distance> data);

  std::size_t order() const { return n_; }
  Distance operator()(Vertex a, Vertex b) const { return data_[static_cast<std::size_t>(a) * n_ + b]; }
  std::span<const Distance> row(Vertex a) const {
    return {data_.data() + static_cast<std::size_t>(a) * n_, n_};
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> data_;
};

/// BFS from every vertex. Throws PreconditionError naming an unreachable pair
/// if `g` is disconnected, and std::length_error if the order exceeds 65535.
DistanceMatrix all_pairs_distances(const Graph& g);

/// True iff every vertex is reachable from vertex 0 (vacuously true for n = 0).
bool is_connected(const Graph& g);

/// W (sum of d over unordered pairs), the sum of d^2 over unordered pairs, and
/// the sum of d(u,v)·d(u,w) over ordered triples of distinct vertices.
struct DistanceMoments {
  std::int64_t wiener = 0;
  std::int64_t sum_sq = 0;
  std::int64_t sum_cross = 0;

  friend bool operator==(const DistanceMoments&, const DistanceMoments&) = default;
};

/// Uses the per-vertex identity sum_cross = Σ_u [(Σ_v d(u,v))² − Σ_v d(u,v)²].
DistanceMoments distance_moments(const DistanceMatrix& d);

/// Hyper-Wiener index ½(W + Σd²).
Rational hyper_wiener(const DistanceMoments& m);

}  // namespace steiner
