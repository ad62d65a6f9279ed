#include "steiner/theta.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "steiner/parallel.hpp"

namespace steiner {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < universe_; ++v) {
    if (contains(static_cast<Vertex>(v))) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t intersection_count(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) throw std::invalid_argument("vertex sets over different universes");
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
  }
  return total;
}

NotPartialCubeClass::NotPartialCubeClass(std::size_t components)
    : PreconditionError("not a partial-cube class: removing it leaves " + std::to_string(components) +
                        " components"),
      components_(components) {}

ThetaClasses::ThetaClasses(std::size_t order, std::vector<std::vector<Edge>> classes,
                           std::vector<SidePartition> sides, std::optional<std::size_t> failed_class,
                           std::size_t failed_components)
    : order_(order),
      classes_(std::move(classes)),
      sides_(std::move(sides)),
      failed_class_(failed_class),
      failed_components_(failed_components) {
  if (!sides_.empty() && sides_.size() != classes_.size()) {
    throw std::invalid_argument("side partitions must cover every class");
  }
  for (const auto& s : sides_) {
    counts_.push_back({static_cast<std::int64_t>(s.side0.count()),
                       static_cast<std::int64_t>(s.side1.count())});
  }
}

const SidePartition& ThetaClasses::sides(std::size_t i) const {
  if (!has_sides()) throw NotPartialCubeClass(failed_components_);
  return sides_.at(i);
}

PairCountTable::PairCountTable(std::size_t classes, std::vector<Counts> counts)
    : classes_(classes), counts_(std::move(counts)) {
  if (counts_.size() != classes_ * (classes_ > 0 ? classes_ - 1 : 0) / 2) {
    throw std::invalid_argument("pair-count table size mismatch");
  }
}

const PairCountTable::Counts& PairCountTable::at(std::size_t i, std::size_t j) const {
  if (!(i < j && j < classes_)) throw std::out_of_range("pair-count index requires i < j < classes");
  const std::size_t offset = i * classes_ - i * (i + 1) / 2;
  return counts_[offset + (j - i - 1)];
}

bool theta_related(const DistanceMatrix& d, Edge e1, Edge e2) {
  return d(e1.u, e2.u) + d(e1.v, e2.v) != d(e1.u, e2.v) + d(e1.v, e2.u);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // smaller index stays root, so a root is its class's smallest edge
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

SidePartition side_partition(const Graph& g, std::span<const Edge> cls) {
  const std::size_t n = g.order();
  std::vector<char> removed(g.size(), 0);
  for (const Edge& e : cls) removed[g.edge_index(e.u, e.v)] = 1;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> component(n, kNone);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] != kNone) continue;
    component[start] = components;
    stack.push_back(static_cast<Vertex>(start));
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      auto nbrs = g.neighbors(x);
      auto ids = g.incident_edges(x);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (removed[ids[k]] || component[nbrs[k]] != kNone) continue;
        component[nbrs[k]] = components;
        stack.push_back(nbrs[k]);
      }
    }
    ++components;
  }
  if (components != 2) throw NotPartialCubeClass(components);

  SidePartition out{VertexSet(n), VertexSet(n)};
  for (std::size_t v = 0; v < n; ++v) {
    (component[v] == 0 ? out.side0 : out.side1).insert(static_cast<Vertex>(v));
  }
  return out;
}

ThetaClasses theta_classes(const Graph& g, const DistanceMatrix& d) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();

  unsigned workers = 1;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> related(planned_workers(m));
  parallel_for(
      m,
      [&](unsigned worker, std::size_t i) {
        const auto ru = d.row(edges[i].u);
        const auto rv = d.row(edges[i].v);
        for (std::size_t j = i + 1; j < m; ++j) {
          const Edge f = edges[j];
          if (ru[f.u] + rv[f.v] != ru[f.v] + rv[f.u]) related[worker].emplace_back(i, j);
        }
      },
      &workers);

  DisjointSets sets(m);
  for (const auto& list : related) {
    for (auto [i, j] : list) sets.unite(i, j);
  }

  // Roots are the smallest edge of each class, so increasing root order is the
  // lexicographic order of the classes' smallest edges.
  std::vector<std::size_t> class_of_root(m, static_cast<std::size_t>(-1));
  std::vector<std::vector<Edge>> classes;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t root = sets.find(i);
    if (class_of_root[root] == static_cast<std::size_t>(-1)) {
      class_of_root[root] = classes.size();
      classes.emplace_back();
    }
    classes[class_of_root[root]].push_back(edges[i]);
  }

  std::vector<SidePartition> sides(classes.size());
  std::vector<std::size_t> failures(classes.size(), 0);
  parallel_for(classes.size(), [&](unsigned, std::size_t c) {
    try {
      sides[c] = side_partition(g, classes[c]);
    } catch (const NotPartialCubeClass& e) {
      failures[c] = e.component_count();
    }
  });

  std::optional<std::size_t> failed;
  std::size_t failed_components = 0;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (failures[c] != 0) {
      failed = c;
      failed_components = failures[c];
      break;
    }
  }
  if (failed) sides.clear();
  return ThetaClasses(g.order(), std::move(classes), std::move(sides), failed, failed_components);
}

PairCountTable pair_counts(const ThetaClasses& tc) {
  if (!tc.has_sides()) throw NotPartialCubeClass(tc.failed_component_count());
  const std::size_t classes = tc.size();
  const auto n = static_cast<std::int64_t>(tc.order());
  std::vector<PairCountTable::Counts> counts(classes * (classes > 0 ? classes - 1 : 0) / 2);

  parallel_for(classes, [&](unsigned, std::size_t i) {
    const std::size_t offset = i * classes - i * (i + 1) / 2;
    for (std::size_t j = i + 1; j < classes; ++j) {
      const auto n11 = static_cast<std::int64_t>(intersection_count(tc.sides(i).side1, tc.sides(j).side1));
      const std::int64_t n10 = tc.side1_count(i) - n11;
      const std::int64_t n01 = tc.side1_count(j) - n11;
      const std::int64_t n00 = n - n11 - n10 - n01;
      counts[offset + (j - i - 1)] = {n00, n01, n10, n11};
    }
  });
  return PairCountTable(classes, std::move(counts));
}

HypercubeLabels::HypercubeLabels(std::size_t vertices, std::size_t dimension)
    : vertex_count_(vertices),
      dimension_(dimension),
      words_(std::max<std::size_t>(1, (dimension + 63) / 64)),
      bits_(vertices * words_, 0) {}

std::size_t HypercubeLabels::hamming(Vertex a, Vertex b) const {
  const auto la = label(a);
  const auto lb = label(b);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_; ++i) total += static_cast<std::size_t>(std::popcount(la[i] ^ lb[i]));
  return total;
}

bool is_bipartite(const Graph& g, const DistanceMatrix& d) {
  // In a connected graph, an edge inside one BFS layer closes an odd cycle.
  if (g.order() == 0) return true;
  const auto from_root = d.row(0);
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return from_root[e.u] == from_root[e.v]; });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  std::vector<Vertex> queue;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    queue.assign(1, static_cast<Vertex>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          queue.push_back(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

PartialCubeCheck is_partial_cube(const Graph& g, const DistanceMatrix& d, const ThetaClasses& tc) {
  PartialCubeCheck out;
  if (!is_bipartite(g, d)) {
    out.reason = PartialCubeFailure::non_bipartite;
    return out;
  }
  if (!tc.has_sides()) {
    out.reason = PartialCubeFailure::bad_class;
    return out;
  }

  const std::size_t n = g.order();
  HypercubeLabels labels(n, tc.size());
  for (std::size_t i = 0; i < tc.size(); ++i) {
    const auto& side1 = tc.sides(i).side1;
    for (std::size_t v = 0; v < n; ++v) {
      if (side1.contains(static_cast<Vertex>(v))) labels.set(static_cast<Vertex>(v), i);
    }
  }

  std::atomic<bool> isometric{true};
  parallel_for(n, [&](unsigned, std::size_t u) {
    if (!isometric.load(std::memory_order_relaxed)) return;
    const auto row = d.row(static_cast<Vertex>(u));
    for (std::size_t v = u + 1; v < n; ++v) {
      if (labels.hamming(static_cast<Vertex>(u), static_cast<Vertex>(v)) != row[v]) {
        isometric.store(false, std::memory_order_relaxed);
        return;
      }
    }
  });
  if (!isometric) {
    out.reason = PartialCubeFailure::non_isometric;
    return out;
  }
  out.partial_cube = true;
  out.labels = std::move(labels);
  return out;
}

namespace {

std::size_t count_medians_capped(const DistanceMatrix& d, Vertex u, Vertex v, Vertex w,
                                 std::size_t cap) {
  const auto ru = d.row(u);
  const auto rv = d.row(v);
  const auto rw = d.row(w);
  const unsigned duv = ru[v];
  const unsigned duw = ru[w];
  const unsigned dvw = rv[w];
  std::size_t found = 0;
  for (std::size_t z = 0; z < d.order(); ++z) {
    if (ru[z] + rv[z] == duv && ru[z] + rw[z] == duw && rv[z] + rw[z] == dvw) {
      if (++found == cap) break;
    }
  }
  return found;
}

/// Scans triples (a,b,c), a<b<c, in lexicographic order per first vertex.
/// `medians(a,b,c)` returns the median count capped at 2.
template <typename MedianCounter>
MedianStatus scan_triples(std::size_t n, MedianCounter&& medians, std::optional<Triple>* witness) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::atomic<std::size_t> first_zero_a{kNone};
  std::vector<std::optional<Triple>> zero(n);
  std::vector<std::optional<Triple>> multi(n);

  parallel_for(n, [&](unsigned, std::size_t a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (a > first_zero_a.load(std::memory_order_relaxed)) return;
      for (std::size_t c = b + 1; c < n; ++c) {
        const Triple t{static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)};
        const std::size_t count = medians(t);
        if (count == 0) {
          zero[a] = t;
          std::size_t current = first_zero_a.load();
          while (a < current && !first_zero_a.compare_exchange_weak(current, a)) {
          }
          return;
        }
        if (count >= 2 && !multi[a]) multi[a] = t;
      }
    }
  });

  // Every first vertex below the smallest zero-median one was scanned in full.
  const std::size_t za = first_zero_a.load();
  if (za != kNone) {
    if (witness != nullptr) *witness = zero[za];
    return MedianStatus::not_modular;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (multi[a]) {
      if (witness != nullptr) *witness = multi[a];
      return MedianStatus::modular_not_median;
    }
  }
  if (witness != nullptr) witness->reset();
  return MedianStatus::median;
}

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

/// Open-addressing map from hypercube label to vertex.
class LabelIndex {
 public:
  explicit LabelIndex(const HypercubeLabels& labels) : labels_(labels) {
    std::size_t capacity = 16;
    while (capacity < 2 * labels.vertex_count()) capacity <<= 1;
    slots_.assign(capacity, kEmpty);
    mask_ = capacity - 1;
    for (std::size_t v = 0; v < labels.vertex_count(); ++v) {
      std::size_t s = hash(labels.label(static_cast<Vertex>(v))) & mask_;
      while (slots_[s] != kEmpty) s = (s + 1) & mask_;
      slots_[s] = static_cast<Vertex>(v);
    }
  }

  bool contains(std::span<const std::uint64_t> key) const {
    for (std::size_t s = hash(key) & mask_; slots_[s] != kEmpty; s = (s + 1) & mask_) {
      if (std::ranges::equal(labels_.label(slots_[s]), key)) return true;
    }
    return false;
  }

 private:
  static constexpr Vertex kEmpty = static_cast<Vertex>(-1);

  static std::uint64_t hash(std::span<const std::uint64_t> key) {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : key) h = mix(h ^ w) + 0x9e3779b97f4a7c15ULL;
    return h;
  }

  const HypercubeLabels& labels_;
  std::vector<Vertex> slots_;
  std::size_t mask_ = 0;
};

}  // namespace

std::size_t count_medians(const DistanceMatrix& d, Vertex u, Vertex v, Vertex w) {
  if (u == v || u == w || v == w) throw std::invalid_argument("median requires three distinct vertices");
  const std::size_t n = d.order();
  if (u >= n || v >= n || w >= n) throw std::out_of_range("vertex out of range");
  return count_medians_capped(d, u, v, w, n + 1);
}

MedianStatus median_status_by_distances(const DistanceMatrix& d, std::optional<Triple>* witness) {
  return scan_triples(
      d.order(), [&](const Triple& t) { return count_medians_capped(d, t.a, t.b, t.c, 2); }, witness);
}

MedianStatus median_status_by_labels(const HypercubeLabels& labels, std::optional<Triple>* witness) {
  const LabelIndex index(labels);
  const std::size_t words = labels.words_per_label();
  return scan_triples(
      labels.vertex_count(),
      [&](const Triple& t) -> std::size_t {
        thread_local std::vector<std::uint64_t> majority;
        majority.resize(words);
        const auto x = labels.label(t.a);
        const auto y = labels.label(t.b);
        const auto z = labels.label(t.c);
        for (std::size_t i = 0; i < words; ++i) majority[i] = (x[i] & y[i]) | (x[i] & z[i]) | (y[i] & z[i]);
        return index.contains(majority) ? 1 : 0;
      },
      witness);
}

GraphClassification median_classification(const Graph& g, const DistanceMatrix& d,
                                          const ThetaClasses& tc, const PartialCubeCheck& pc) {
  GraphClassification out;
  out.connected = true;
  out.bipartite = is_bipartite(g, d);
  out.partial_cube = pc.partial_cube;
  out.theta_class_count = tc.size();
  out.source = ClassificationSource::scan;
  if (g.order() < 3) {
    out.median_status = MedianStatus::median;
    return out;
  }
  out.median_status = pc.partial_cube ? median_status_by_labels(pc.labels, &out.witness)
                                      : median_status_by_distances(d, &out.witness);
  return out;
}

GraphClassification median_classification(const Graph& g, const DistanceMatrix& d) {
  const ThetaClasses tc = theta_classes(g, d);
  const PartialCubeCheck pc = is_partial_cube(g, d, tc);
  return median_classification(g, d, tc, pc);
}

std::string to_string(MedianStatus status) {
  switch (status) {
    case MedianStatus::median:
      return "median";
    case MedianStatus::modular_not_median:
      return "modular_not_median";
    case MedianStatus::not_modular:
      return "not_modular";
  }
  return "unknown";
}

std::string to_string(PartialCubeFailure reason) {
  switch (reason) {
    case PartialCubeFailure::none:
      return "none";
    case PartialCubeFailure::non_bipartite:
      return "non_bipartite";
    case PartialCubeFailure::bad_class:
      return "bad_class";
    case PartialCubeFailure::non_isometric:
      return "non_isometric";
  }
  return "unknown";
}

}  // namespace steiner
