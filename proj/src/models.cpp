#include "steiner/models.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <stdexcept>

#include "steiner/exact.hpp"

namespace steiner {

namespace {

constexpr std::uint64_t kMaxOrder = 65534;

struct FamilyInfo {
  GraphFamily family;
  std::string_view name;
  std::size_t arity;
};

constexpr FamilyInfo kFamilies[] = {
    {GraphFamily::path, "path", 1},         {GraphFamily::cycle, "cycle", 1},
    {GraphFamily::complete, "complete", 1}, {GraphFamily::hypercube, "hypercube", 1},
    {GraphFamily::grid, "grid", 2},         {GraphFamily::tree, "tree", 2},
};

const FamilyInfo& info(GraphFamily f) {
  for (const auto& i : kFamilies) {
    if (i.family == f) return i;
  }
  throw std::logic_error("unknown graph family");
}

void validate(const GeneratorDescriptor& desc) {
  const auto& p = desc.params;
  if (p.size() != info(desc.family).arity) throw std::invalid_argument("wrong parameter count");
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (desc.family) {
    case GraphFamily::path:
      require(p[0] >= 1 && p[0] <= kMaxOrder, "path:n needs 1 <= n <= 65534");
      break;
    case GraphFamily::cycle:
      require(p[0] >= 3 && p[0] <= kMaxOrder, "cycle:n needs 3 <= n <= 65534");
      break;
    case GraphFamily::complete:
      require(p[0] >= 1 && p[0] <= 4096, "complete:n needs 1 <= n <= 4096");
      break;
    case GraphFamily::hypercube:
      require(p[0] >= 1 && p[0] <= 16, "hypercube:k needs 1 <= k <= 16");
      break;
    case GraphFamily::grid:
      require(p[0] >= 1 && p[1] >= 1 && p[0] * p[1] <= kMaxOrder, "grid:m,n needs m, n >= 1 and m*n <= 65534");
      break;
    case GraphFamily::tree:
      require(p[1] >= 1 && p[1] <= kMaxOrder, "tree:seed,n needs 1 <= n <= 65534");
      break;
  }
}

/// SplitMix64; fully specified, so sequences match across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace

GeneratorDescriptor GeneratorDescriptor::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("generator descriptor must look like kind:params, got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  GeneratorDescriptor desc;
  bool known = false;
  for (const auto& f : kFamilies) {
    if (f.name == kind) {
      desc.family = f.family;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown generator kind '" + std::string(kind) + "'");

  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad generator parameter '" + std::string(token) + "'");
    }
    desc.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  validate(desc);
  return desc;
}

std::string GeneratorDescriptor::to_string() const {
  std::string out(info(family).name);
  out += ':';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(params[i]);
  }
  return out;
}

std::uint64_t GeneratorDescriptor::order() const {
  switch (family) {
    case GraphFamily::hypercube:
      return std::uint64_t{1} << params[0];
    case GraphFamily::grid:
      return params[0] * params[1];
    case GraphFamily::tree:
      return params[1];
    default:
      return params[0];
  }
}

Graph random_tree(std::uint64_t seed, std::size_t n) {
  if (n == 0) throw std::invalid_argument("tree needs at least one vertex");
  if (n <= 2) return Graph(n, n == 2 ? std::vector<std::pair<Vertex, Vertex>>{{0, 1}} : std::vector<std::pair<Vertex, Vertex>>{});

  SplitMix64 rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));

  // Prufer decoding: repeatedly join the smallest current leaf to the next code entry.
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(static_cast<Vertex>(v));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n - 1);
  for (Vertex c : code) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Graph(n, std::move(edges));
}

Graph generate(const GeneratorDescriptor& desc) {
  validate(desc);
  const auto& p = desc.params;
  std::vector<std::pair<Vertex, Vertex>> edges;
  switch (desc.family) {
    case GraphFamily::path: {
      for (std::uint64_t v = 0; v + 1 < p[0]; ++v) edges.emplace_back(v, v + 1);
      return Graph(p[0], std::move(edges));
    }
    case GraphFamily::cycle: {
      for (std::uint64_t v = 0; v < p[0]; ++v) edges.emplace_back(v, (v + 1) % p[0]);
      return Graph(p[0], std::move(edges));
    }
    case GraphFamily::complete: {
      for (std::uint64_t a = 0; a < p[0]; ++a) {
        for (std::uint64_t b = a + 1; b < p[0]; ++b) edges.emplace_back(a, b);
      }
      return Graph(p[0], std::move(edges));
    }
    case GraphFamily::hypercube: {
      const std::uint64_t n = std::uint64_t{1} << p[0];
      for (std::uint64_t v = 0; v < n; ++v) {
        for (std::uint64_t bit = 0; bit < p[0]; ++bit) {
          const std::uint64_t w = v ^ (std::uint64_t{1} << bit);
          if (v < w) edges.emplace_back(v, w);
        }
      }
      return Graph(n, std::move(edges));
    }
    case GraphFamily::grid: {
      const std::uint64_t rows = p[0];
      const std::uint64_t cols = p[1];
      for (std::uint64_t i = 0; i < rows; ++i) {
        for (std::uint64_t j = 0; j < cols; ++j) {
          const std::uint64_t v = i * cols + j;
          if (j + 1 < cols) edges.emplace_back(v, v + 1);
          if (i + 1 < rows) edges.emplace_back(v, v + cols);
        }
      }
      return Graph(rows * cols, std::move(edges));
    }
    case GraphFamily::tree:
      return random_tree(p[0], p[1]);
  }
  throw std::logic_error("unreachable");
}

std::optional<MedianStatus> family_median_status(const GeneratorDescriptor& desc) {
  switch (desc.family) {
    case GraphFamily::path:
    case GraphFamily::hypercube:
    case GraphFamily::grid:
    case GraphFamily::tree:
      return MedianStatus::median;
    default:
      return std::nullopt;
  }
}

ClosedForm complete_formulas(std::int64_t n, std::int64_t k) {
  if (k < 1 || k > n) throw std::invalid_argument("complete-graph formulas need 1 <= k <= n");
  const Wide subsets = binomial(n, k);
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k), 0);
  coeffs[static_cast<std::size_t>(k - 1)] = narrow(subsets, "C(n,k)");
  ClosedForm out;
  out.hosoya = SteinerHosoya(static_cast<std::size_t>(k), std::move(coeffs));
  out.sw = narrow((k - 1) * subsets, "SW_k(K_n)");
  out.sww = narrow(binomial(k, 2) * subsets, "SWW_k(K_n)");
  return out;
}

ClosedForm path_formulas(std::int64_t n, std::int64_t k) {
  if (k < 2 || k > n) throw std::invalid_argument("path formulas need 2 <= k <= n");
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), 0);
  for (std::int64_t j = k - 1; j <= n - 1; ++j) {
    coeffs[static_cast<std::size_t>(j)] = narrow((n - j) * binomial(j - 1, k - 2), "d_k(P_n, j)");
  }
  ClosedForm out;
  out.hosoya = SteinerHosoya(static_cast<std::size_t>(k), std::move(coeffs));
  out.sw = narrow((k - 1) * binomial(n + 1, k + 1), "SW_k(P_n)");
  out.sww = narrow(binomial(k, 2) * binomial(n + 2, k + 2), "SWW_k(P_n)");
  return out;
}

std::int64_t grid_sw3(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2) {
    throw PreconditionError("grid SW_3 formula needs m, n >= 2; a 1 x n grid is a path, use the path formulas");
  }
  const Wide a = m;
  const Wide b = n;
  const Wide poly = a * a * a * a * b * b * b + a * a * a * b * b * b * b - 3 * a * a * a * b * b -
                    3 * a * a * b * b * b + 2 * a * a * b + 2 * a * b * b;
  return narrow(exact_div(poly, 12, "grid SW_3"), "grid SW_3");
}

std::int64_t grid_sww3(std::int64_t m, std::int64_t n) {
  const std::int64_t lo = std::min(m, n);
  const std::int64_t hi = std::max(m, n);
  if (lo == 2 && hi >= 3) {
    const Wide x = hi;
    const Wide poly = 3 * x * x * x * x * x + 10 * x * x * x * x - 25 * x * x + 12 * x;
    return narrow(exact_div(poly, 15, "grid SWW_3 (2 x n)"), "grid SWW_3");
  }
  if (lo >= 3) {
    const Wide a = m;
    const Wide b = n;
    auto p = [](Wide base, int e) {
      Wide r = 1;
      for (int i = 0; i < e; ++i) r *= base;
      return r;
    };
    const Wide poly = 9 * p(a, 5) * p(b, 3) + 15 * p(a, 4) * p(b, 4) + 9 * p(a, 3) * p(b, 5) +
                      15 * p(a, 4) * p(b, 3) + 15 * p(a, 3) * p(b, 4) - 30 * p(a, 4) * p(b, 2) -
                      50 * p(a, 3) * p(b, 3) - 30 * p(a, 2) * p(b, 4) + 26 * p(a, 3) * b -
                      45 * p(a, 3) * p(b, 2) - 45 * p(a, 2) * p(b, 3) + 45 * p(a, 2) * p(b, 2) +
                      26 * a * p(b, 3) + 30 * p(a, 2) * b + 30 * a * p(b, 2) - 20 * a * b;
    return narrow(exact_div(poly, 360, "grid SWW_3"), "grid SWW_3");
  }
  throw PreconditionError("grid SWW_3 closed form covers m, n >= 3 and 2 x n with n >= 3; "
                          "use the cut method for 2 x 2 and the path formulas for 1 x n");
}

}  // namespace steiner
