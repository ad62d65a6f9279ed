#include "steiner/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "steiner/parallel.hpp"

namespace steiner {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges)
    : adjacency_(vertex_count) {
  edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " +
                                  std::to_string(b));
    }
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    edges_.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) + " " +
                                std::to_string(dup->v));
  }
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incidence(vertex_count);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incidence[edges_[i].u].emplace_back(edges_[i].v, i);
    incidence[edges_[i].v].emplace_back(edges_[i].u, i);
  }
  incident_.resize(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(incidence[v].begin(), incidence[v].end());
    for (auto [w, id] : incidence[v]) {
      adjacency_[v].push_back(w);
      incident_[v].push_back(id);
    }
  }
}

std::size_t Graph::edge_index(Vertex a, Vertex b) const {
  if (a < order()) {
    const auto& list = adjacency_[a];
    auto it = std::lower_bound(list.begin(), list.end(), b);
    if (it != list.end() && *it == b) return incident_[a][static_cast<std::size_t>(it - list.begin())];
  }
  throw std::out_of_range("no edge " + std::to_string(a) + " " + std::to_string(b));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order() || b >= order()) return false;
  const auto& list = adjacency_[a];
  return std::binary_search(list.begin(), list.end(), b);
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto parts = tokens(line);
    if (parts.empty() || parts.front().front() == '#') continue;
    if (parts.size() != 2) throw ParseError(line_no, "expected two integers");
    const std::uint64_t a = parse_number(parts[0], line_no);
    const std::uint64_t b = parse_number(parts[1], line_no);

    if (!have_header) {
      if (a > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edges than declared in header");
    if (a >= n || b >= n) throw ParseError(line_no, "endpoint out of range");
    if (a == b) throw ParseError(line_no, "self-loop");
    if (!seen.emplace(static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))).second) {
      throw ParseError(line_no, "duplicate edge");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw ParseError(line_no + 1, "missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " +
                                      std::to_string(edges.size()));
  }

  return Graph(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<Distance> data)
    : n_(n), data_(std::move(data)) {
  if (data_.size() != n_ * n_) throw std::invalid_argument("distance matrix size mismatch");
}

namespace {

constexpr Distance kUnreached = std::numeric_limits<Distance>::max();

void bfs(const Graph& g, Vertex source, std::span<Distance> dist, std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    const Distance next = static_cast<Distance>(dist[x] + 1);
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreached) {
        dist[y] = next;
        queue.push_back(y);
      }
    }
  }
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  queue.push_back(0);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex y : g.neighbors(queue[head])) {
      if (!seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return queue.size() == g.order();
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  if (n >= kUnreached) throw std::length_error("graph too large for a 16-bit distance matrix");
  std::vector<Distance> data(n * n);

  const unsigned workers = planned_workers(n);
  std::vector<std::vector<Vertex>> queues(workers);
  for (auto& q : queues) q.reserve(n);
  parallel_for(n, [&](unsigned worker, std::size_t s) {
    bfs(g, static_cast<Vertex>(s), std::span<Distance>(data.data() + s * n, n), queues[worker]);
  });

  if (n > 0) {
    for (std::size_t v = 0; v < n; ++v) {
      if (data[v] == kUnreached) {
        throw PreconditionError("graph is disconnected: vertices 0 and " + std::to_string(v) +
                                " are mutually unreachable");
      }
    }
  }
  return DistanceMatrix(n, std::move(data));
}

DistanceMoments distance_moments(const DistanceMatrix& d) {
  const std::size_t n = d.order();
  DistanceMoments m;
  for (std::size_t u = 0; u < n; ++u) {
    std::int64_t row_sum = 0;
    std::int64_t row_sq = 0;
    for (Distance x : d.row(static_cast<Vertex>(u))) {
      row_sum += x;
      row_sq += static_cast<std::int64_t>(x) * x;
    }
    m.wiener += row_sum;
    m.sum_sq += row_sq;
    m.sum_cross += row_sum * row_sum - row_sq;
  }
  // each unordered pair was visited from both ends
  m.wiener /= 2;
  m.sum_sq /= 2;
  return m;
}

Rational hyper_wiener(const DistanceMoments& m) { return Rational(m.wiener + m.sum_sq, 2); }

}  // namespace steiner
