#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steiner/exact.hpp"
#include "steiner/graph.hpp"
#include "steiner/theta.hpp"

namespace steiner {

/// Largest terminal set the exact subset dynamic program accepts.
inline constexpr std::size_t kMaxTerminals = 12;

/// Default cap on the number of k-subsets a brute-force enumeration visits.
inline constexpr std::uint64_t kDefaultSubsetGuard = 5'000'000;

/// Sorted set of distinct terminal vertices.
class TerminalSet {
 public:
  /// Throws std::invalid_argument on duplicates, an empty set, or ids >= order.
  TerminalSet(std::vector<Vertex> vertices, std::size_t order);
  TerminalSet(std::initializer_list<Vertex> vertices, std::size_t order)
      : TerminalSet(std::vector<Vertex>(vertices), order) {}

  std::size_t size() const { return vertices_.size(); }
  std::span<const Vertex> vertices() const { return vertices_; }

 private:
  std::vector<Vertex> vertices_;
};

/// The terminal set exceeds kMaxTerminals, or an enumeration exceeds its guard.
class TooLargeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Minimum number of edges of a connected subgraph containing every terminal.
/// k <= 2 and k = 3 use closed forms over the distance matrix; larger sets run
/// the subset dynamic program.
std::int64_t steiner_distance(const DistanceMatrix& d, const TerminalSet& s);

/// Subset dynamic program over (terminal subset, root vertex) on the metric
/// closure. Valid for every k in [1, kMaxTerminals].
std::int64_t steiner_distance_dp(const DistanceMatrix& d, std::span<const Vertex> terminals);

/// min over all vertices x of d(u,x) + d(v,x) + d(w,x).
std::int64_t steiner_distance_3(const DistanceMatrix& d, Vertex u, Vertex v, Vertex w);

/// d_k(G, m) for m = 0..n-1.
class SteinerHosoya {
 public:
  SteinerHosoya() = default;
  SteinerHosoya(std::size_t k, std::vector<std::int64_t> coeffs);

  std::size_t k() const { return k_; }
  /// Coefficient of x^m; zero outside the stored range.
  std::int64_t coefficient(std::size_t m) const { return m < coeffs_.size() ? coeffs_[m] : 0; }
  std::span<const std::int64_t> coefficients() const { return coeffs_; }
  std::int64_t total() const;

  /// "m:count" pairs with nonzero count, ascending in m, space separated.
  std::string to_string() const;

  friend bool operator==(const SteinerHosoya& a, const SteinerHosoya& b);

 private:
  std::size_t k_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// Enumerates every k-subset. Throws TooLargeError when C(n,k) exceeds
/// `max_subsets` (no limit when unset) or k > kMaxTerminals.
SteinerHosoya steiner_hosoya(const DistanceMatrix& d, std::size_t k,
                             std::optional<std::uint64_t> max_subsets = std::nullopt);

struct SteinerIndices {
  std::int64_t sw = 0;
  Rational sww;

  friend bool operator==(const SteinerIndices&, const SteinerIndices&) = default;
};

/// SW_k = SH'(1) and SWW_k = SH'(1) + ½ SH''(1).
SteinerIndices indices_from_hosoya(const SteinerHosoya& p);

/// Direct sum of d(S) and d(S)² over all k-subsets.
SteinerIndices steiner_k_indices_brute(const DistanceMatrix& d, std::size_t k,
                                       std::optional<std::uint64_t> max_subsets = std::nullopt);

/// SW_3 and SWW_3 of a modular graph from W, Σd² and Σ d(u,v)d(u,w). Throws
/// PreconditionError for not_modular graphs or fewer than three vertices.
struct IntegerIndices {
  std::int64_t sw = 0;
  std::int64_t sww = 0;

  friend bool operator==(const IntegerIndices&, const IntegerIndices&) = default;
};

IntegerIndices modular_indices_3(std::size_t order, const DistanceMoments& m, MedianStatus status);

}  // namespace steiner
