#pragma once

// Djokovic-Winkler relation, its transitive closure, and the structure a
// partial cube carries: per-class sides, pair-count tables, hypercube labels,
// and median / modular classification.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

/// Bitmap over the vertices 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const { return words_; }

  friend std::size_t intersection_count(const VertexSet& a, const VertexSet& b);
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// The two components of G - E for a class E of a partial cube. side0 holds
/// the smallest vertex id.
struct SidePartition {
  VertexSet side0;
  VertexSet side1;
};

/// G - E did not split into exactly two components.
class NotPartialCubeClass : public PreconditionError {
 public:
  explicit NotPartialCubeClass(std::size_t components);
  std::size_t component_count() const { return components_; }

 private:
  std::size_t components_;
};

class ThetaClasses {
 public:
  ThetaClasses(std::size_t order, std::vector<std::vector<Edge>> classes,
               std::vector<SidePartition> sides, std::optional<std::size_t> failed_class,
               std::size_t failed_components);

  std::size_t order() const { return order_; }
  std::size_t size() const { return classes_.size(); }
  std::span<const Edge> edges(std::size_t i) const { return classes_[i]; }

  /// True when every class produced a valid two-sided partition.
  bool has_sides() const { return sides_.size() == classes_.size(); }
  /// Throws NotPartialCubeClass unless has_sides().
  const SidePartition& sides(std::size_t i) const;
  std::int64_t side0_count(std::size_t i) const { return counts_.at(i)[0]; }
  std::int64_t side1_count(std::size_t i) const { return counts_.at(i)[1]; }

  /// First class whose removal did not give two components, if any.
  std::optional<std::size_t> failed_class() const { return failed_class_; }
  std::size_t failed_component_count() const { return failed_components_; }

 private:
  std::size_t order_;
  std::vector<std::vector<Edge>> classes_;
  std::vector<SidePartition> sides_;
  std::vector<std::array<std::int64_t, 2>> counts_;
  std::optional<std::size_t> failed_class_;
  std::size_t failed_components_ = 0;
};

/// n^{00}, n^{01}, n^{10}, n^{11} for each class pair i < j, where the first
/// digit is the side of class i and the second the side of class j.
class PairCountTable {
 public:
  using Counts = std::array<std::int64_t, 4>;

  PairCountTable() = default;
  PairCountTable(std::size_t classes, std::vector<Counts> counts);

  std::size_t class_count() const { return classes_; }
  /// Requires i < j.
  const Counts& at(std::size_t i, std::size_t j) const;

 private:
  std::size_t classes_ = 0;
  std::vector<Counts> counts_;
};

/// e1 Θ e2 iff d(u1,u2) + d(v1,v2) != d(u1,v2) + d(v1,u2).
bool theta_related(const DistanceMatrix& d, Edge e1, Edge e2);

/// Θ* classes ordered by their smallest edge; sides are filled in when every
/// class splits the graph into exactly two components.
ThetaClasses theta_classes(const Graph& g, const DistanceMatrix& d);

/// Components of G - cls. Throws NotPartialCubeClass when there are not exactly two.
SidePartition side_partition(const Graph& g, std::span<const Edge> cls);

/// Throws NotPartialCubeClass if the classes have no sides.
PairCountTable pair_counts(const ThetaClasses& tc);

/// Vertex labels in {0,1}^dimension, one bit per Θ-class.
class HypercubeLabels {
 public:
  HypercubeLabels() = default;
  HypercubeLabels(std::size_t vertices, std::size_t dimension);

  std::size_t dimension() const { return dimension_; }
  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t words_per_label() const { return words_; }
  std::span<const std::uint64_t> label(Vertex v) const { return {bits_.data() + v * words_, words_}; }
  bool bit(Vertex v, std::size_t i) const { return (bits_[v * words_ + (i >> 6)] >> (i & 63)) & 1U; }
  void set(Vertex v, std::size_t i) { bits_[v * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63); }
  std::size_t hamming(Vertex a, Vertex b) const;

 private:
  std::size_t vertex_count_ = 0;
  std::size_t dimension_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class PartialCubeFailure { none, non_bipartite, bad_class, non_isometric };

struct PartialCubeCheck {
  bool partial_cube = false;
  PartialCubeFailure reason = PartialCubeFailure::none;
  /// Isometric embedding; populated only when partial_cube is true.
  HypercubeLabels labels;
};

bool is_bipartite(const Graph& g, const DistanceMatrix& d);
/// Two-colouring check that also handles disconnected graphs.
bool is_bipartite(const Graph& g);

PartialCubeCheck is_partial_cube(const Graph& g, const DistanceMatrix& d, const ThetaClasses& tc);

/// Vertices on shortest paths between each pair of the three. Throws
/// std::invalid_argument unless u, v, w are distinct.
std::size_t count_medians(const DistanceMatrix& d, Vertex u, Vertex v, Vertex w);

enum class MedianStatus { median, modular_not_median, not_modular };

struct Triple {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// How median_status was established.
enum class ClassificationSource { scan, family };

struct GraphClassification {
  bool connected = false;
  bool bipartite = false;
  bool partial_cube = false;
  MedianStatus median_status = MedianStatus::not_modular;
  /// not_modular: a triple with no median; modular_not_median: one with several.
  std::optional<Triple> witness;
  std::size_t theta_class_count = 0;
  ClassificationSource source = ClassificationSource::scan;

  bool modular() const { return connected && median_status != MedianStatus::not_modular; }
  bool modular_partial_cube() const { return modular() && partial_cube; }
};

/// Scans every triple. Graphs with fewer than three vertices are median by
/// convention. On partial cubes the median of a triple is looked up through the
/// coordinate-wise majority of the hypercube labels; otherwise medians are counted
/// from the distance matrix. The witness is the lexicographically smallest
/// qualifying triple.
GraphClassification median_classification(const Graph& g, const DistanceMatrix& d);

/// Same as median_classification, reusing already computed Θ-classes and
/// partial-cube check.
GraphClassification median_classification(const Graph& g, const DistanceMatrix& d,
                                          const ThetaClasses& tc, const PartialCubeCheck& pc);

/// Median-status scan that counts medians directly from distances, ignoring
/// any hypercube labels. Exposed as the reference route.
MedianStatus median_status_by_distances(const DistanceMatrix& d, std::optional<Triple>* witness);

/// Median-status scan for partial cubes: a triple's only possible median is the
/// vertex whose label is the coordinate-wise majority of the three labels.
MedianStatus median_status_by_labels(const HypercubeLabels& labels, std::optional<Triple>* witness);

std::string to_string(MedianStatus status);
std::string to_string(PartialCubeFailure reason);

}  // namespace steiner
