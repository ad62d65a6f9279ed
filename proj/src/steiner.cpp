#include "steiner/steiner.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "steiner/parallel.hpp"

namespace steiner {

TerminalSet::TerminalSet(std::vector<Vertex> vertices, std::size_t order) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("terminal set must be nonempty");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("terminal set has repeated vertices");
  }
  if (vertices_.back() >= order) throw std::invalid_argument("terminal out of range");
}

std::int64_t steiner_distance_3(const DistanceMatrix& d, Vertex u, Vertex v, Vertex w) {
  const auto ru = d.row(u);
  const auto rv = d.row(v);
  const auto rw = d.row(w);
  unsigned best = std::numeric_limits<unsigned>::max();
  for (std::size_t x = 0; x < d.order(); ++x) {
    best = std::min(best, static_cast<unsigned>(ru[x]) + rv[x] + rw[x]);
  }
  return best;
}

std::int64_t steiner_distance_dp(const DistanceMatrix& d, std::span<const Vertex> terminals) {
  const std::size_t k = terminals.size();
  if (k == 0) throw std::invalid_argument("terminal set must be nonempty");
  if (k > kMaxTerminals) {
    throw TooLargeError("terminal set too large for exact computation (k = " + std::to_string(k) +
                        ", limit " + std::to_string(kMaxTerminals) + ")");
  }
  if (k == 1) return 0;

  // dp[mask][v]: smallest tree spanning the terminals in mask plus v; the last
  // terminal is the root and never enters a mask.
  const std::size_t n = d.order();
  const std::size_t q = k - 1;
  const std::size_t full = (std::size_t{1} << q) - 1;
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;
  std::vector<std::uint32_t> dp((full + 1) * n, kInf);
  auto at = [&](std::size_t mask) { return dp.data() + mask * n; };

  for (std::size_t i = 0; i < q; ++i) {
    const auto row = d.row(terminals[i]);
    std::copy(row.begin(), row.end(), at(std::size_t{1} << i));
  }

  std::vector<std::uint32_t> merged(n);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::has_single_bit(mask)) continue;
    std::fill(merged.begin(), merged.end(), kInf);
    const std::size_t low = mask & (~mask + 1);
    // each split {A, mask\A} visited once: A always holds the lowest bit
    for (std::size_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
      if (!(sub & low)) continue;
      const std::uint32_t* a = at(sub);
      const std::uint32_t* b = at(mask ^ sub);
      for (std::size_t v = 0; v < n; ++v) merged[v] = std::min(merged[v], a[v] + b[v]);
    }
    std::uint32_t* out = at(mask);
    for (std::size_t v = 0; v < n; ++v) {
      const auto row = d.row(static_cast<Vertex>(v));
      std::uint32_t best = merged[v];
      for (std::size_t u = 0; u < n; ++u) best = std::min(best, merged[u] + row[u]);
      out[v] = best;
    }
  }
  return at(full)[terminals[q]];
}

std::int64_t steiner_distance(const DistanceMatrix& d, const TerminalSet& s) {
  const auto t = s.vertices();
  if (t.back() >= d.order()) throw std::invalid_argument("terminal out of range");
  switch (t.size()) {
    case 1:
      return 0;
    case 2:
      return d(t[0], t[1]);
    case 3:
      return steiner_distance_3(d, t[0], t[1], t[2]);
    default:
      return steiner_distance_dp(d, t);
  }
}

SteinerHosoya::SteinerHosoya(std::size_t k, std::vector<std::int64_t> coeffs)
    : k_(k), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (std::any_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c < 0; })) {
    throw std::invalid_argument("negative Hosoya coefficient");
  }
}

std::int64_t SteinerHosoya::total() const { return std::accumulate(coeffs_.begin(), coeffs_.end(), std::int64_t{0}); }

std::string SteinerHosoya::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t m = 0; m < coeffs_.size(); ++m) {
    if (coeffs_[m] == 0) continue;
    if (!first) out << ' ';
    out << m << ':' << coeffs_[m];
    first = false;
  }
  return out.str();
}

bool operator==(const SteinerHosoya& a, const SteinerHosoya& b) {
  return a.k_ == b.k_ && a.coeffs_ == b.coeffs_;
}

namespace {

void check_subset_request(std::size_t n, std::size_t k, std::optional<std::uint64_t> max_subsets) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("subset size k = " + std::to_string(k) + " must be in [1, " +
                                std::to_string(n) + "]");
  }
  if (k > kMaxTerminals) {
    throw TooLargeError("terminal set too large for exact computation (k = " + std::to_string(k) +
                        ", limit " + std::to_string(kMaxTerminals) + ")");
  }
  const Wide subsets = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  if (max_subsets && subsets > static_cast<Wide>(*max_subsets)) {
    throw TooLargeError("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + to_string(subsets) +
                        " subsets exceeds the enumeration guard of " + std::to_string(*max_subsets) +
                        "; use the cut method or a closed formula, or raise the guard");
  }
}

/// Calls `visit(worker, steiner_distance)` for every k-subset. Work is split by
/// the subset's smallest vertex.
template <typename Visit>
unsigned for_each_subset_distance(const DistanceMatrix& d, std::size_t k, Visit&& visit) {
  const std::size_t n = d.order();
  unsigned workers = 1;
  if (k == 1) {
    for (std::size_t v = 0; v < n; ++v) visit(0u, std::int64_t{0});
    return 1;
  }
  if (k == 3) {
    parallel_for(
        n,
        [&](unsigned worker, std::size_t a) {
          std::vector<std::uint32_t> pair_sum(n);
          const auto ra = d.row(static_cast<Vertex>(a));
          for (std::size_t b = a + 1; b < n; ++b) {
            const auto rb = d.row(static_cast<Vertex>(b));
            for (std::size_t x = 0; x < n; ++x) pair_sum[x] = static_cast<std::uint32_t>(ra[x]) + rb[x];
            for (std::size_t c = b + 1; c < n; ++c) {
              const auto rc = d.row(static_cast<Vertex>(c));
              std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
              for (std::size_t x = 0; x < n; ++x) best = std::min(best, pair_sum[x] + rc[x]);
              visit(worker, static_cast<std::int64_t>(best));
            }
          }
        },
        &workers);
    return workers;
  }

  parallel_for(
      n,
      [&](unsigned worker, std::size_t a) {
        // remaining k-1 members drawn from (a, n)
        const std::size_t rest = k - 1;
        if (n - a - 1 < rest) return;
        std::vector<Vertex> subset(k);
        subset[0] = static_cast<Vertex>(a);
        std::vector<std::size_t> idx(rest);
        std::iota(idx.begin(), idx.end(), a + 1);
        while (true) {
          for (std::size_t i = 0; i < rest; ++i) subset[i + 1] = static_cast<Vertex>(idx[i]);
          const std::int64_t value = (k == 2) ? d(subset[0], subset[1]) : steiner_distance_dp(d, subset);
          visit(worker, value);
          std::size_t i = rest;
          while (i > 0 && idx[i - 1] == n - rest + (i - 1)) --i;
          if (i == 0) break;
          ++idx[i - 1];
          for (std::size_t j = i; j < rest; ++j) idx[j] = idx[j - 1] + 1;
        }
      },
      &workers);
  return workers;
}

}  // namespace

SteinerHosoya steiner_hosoya(const DistanceMatrix& d, std::size_t k, std::optional<std::uint64_t> max_subsets) {
  const std::size_t n = d.order();
  check_subset_request(n, k, max_subsets);
  std::vector<std::vector<std::int64_t>> partial(planned_workers(n), std::vector<std::int64_t>(n, 0));
  const unsigned used = for_each_subset_distance(d, k, [&](unsigned w, std::int64_t m) { ++partial[w][m]; });
  std::vector<std::int64_t> coeffs(n, 0);
  for (unsigned w = 0; w < used; ++w) {
    for (std::size_t m = 0; m < n; ++m) coeffs[m] += partial[w][m];
  }
  return SteinerHosoya(k, std::move(coeffs));
}

SteinerIndices indices_from_hosoya(const SteinerHosoya& p) {
  // SH'(1) = Σ m c_m and SH''(1) = Σ m(m-1) c_m
  Wide first = 0;
  Wide second = 0;
  const auto c = p.coefficients();
  for (std::size_t m = 0; m < c.size(); ++m) {
    const Wide mm = static_cast<Wide>(m);
    first += mm * c[m];
    second += mm * (mm - 1) * c[m];
  }
  SteinerIndices out;
  out.sw = narrow(first, "SW_k from Hosoya polynomial");
  out.sww = Rational(narrow(2 * first + second, "SWW_k from Hosoya polynomial"), 2);
  return out;
}

SteinerIndices steiner_k_indices_brute(const DistanceMatrix& d, std::size_t k,
                                       std::optional<std::uint64_t> max_subsets) {
  const std::size_t n = d.order();
  check_subset_request(n, k, max_subsets);
  struct alignas(64) Sums {
    Wide sum = 0;
    Wide sum_sq = 0;
  };
  std::vector<Sums> partial(planned_workers(n));
  const unsigned used = for_each_subset_distance(d, k, [&](unsigned w, std::int64_t value) {
    partial[w].sum += value;
    partial[w].sum_sq += static_cast<Wide>(value) * value;
  });
  Wide sum = 0;
  Wide sum_sq = 0;
  for (unsigned w = 0; w < used; ++w) {
    sum += partial[w].sum;
    sum_sq += partial[w].sum_sq;
  }
  SteinerIndices out;
  out.sw = narrow(sum, "brute SW_k");
  out.sww = Rational(narrow(sum + sum_sq, "brute SWW_k"), 2);
  return out;
}

IntegerIndices modular_indices_3(std::size_t order, const DistanceMoments& m, MedianStatus status) {
  if (order < 3) throw PreconditionError("the modular-graph formulas need at least three vertices");
  if (status == MedianStatus::not_modular) {
    throw PreconditionError("graph is not modular; the distance-moment formulas for SW_3 and SWW_3 do not apply");
  }
  const Wide n2 = static_cast<Wide>(order) - 2;
  IntegerIndices out;
  out.sw = narrow(exact_div(n2 * m.wiener, 2, "SW_3 = (n-2)/2 W"), "SW_3");
  // (n-2)/4 W + (n-2)/8 Σd² + 1/8 ŴW over the common denominator 8
  const Wide scaled = 2 * n2 * m.wiener + n2 * m.sum_sq + static_cast<Wide>(m.sum_cross);
  out.sww = narrow(exact_div(scaled, 8, "SWW_3 from distance moments"), "SWW_3");
  return out;
}

}  // namespace steiner
