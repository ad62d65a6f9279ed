#pragma once

// Distance indices of partial cubes from Θ-class side counts, without
// enumerating vertex pairs or triples.

#include <cstdint>
#include <vector>

#include "steiner/theta.hpp"

namespace steiner {

/// Per-class and per-pair contributions and their sums.
///   f1 = n0·n1                       f2 = n0·n1·(n1-1) + n1·n0·(n0-1)
///   g1 = n00·n11 + n01·n10           g2 = 3·(four triple products)
///                                         + n00·n11·(n11-1) + n01·n10·(n10-1)
///                                         + n10·n01·(n01-1) + n11·n00·(n00-1)
struct CutReport {
  std::size_t class_count = 0;
  std::vector<std::int64_t> f1;
  std::vector<std::int64_t> f2;
  /// Pair contributions in the same (i < j) order as PairCountTable.
  std::vector<std::int64_t> g1;
  std::vector<std::int64_t> g2;
  std::int64_t s1 = 0;
  std::int64_t s2 = 0;
  std::int64_t s3 = 0;
  std::int64_t s4 = 0;
};

std::int64_t cut_f1(std::int64_t n0, std::int64_t n1);
std::int64_t cut_f2(std::int64_t n0, std::int64_t n1);
std::int64_t cut_g1(const PairCountTable::Counts& c);
std::int64_t cut_g2(const PairCountTable::Counts& c);

/// Throws NotPartialCubeClass when `tc` has no side partitions.
CutReport cut_report(const ThetaClasses& tc, const PairCountTable& pc);

/// W = Σ n0·n1.
std::int64_t wiener_cut(const ThetaClasses& tc);
/// Σ d(u,v)² over unordered pairs = S1 + 2·S3.
std::int64_t wwbar_cut(const ThetaClasses& tc, const PairCountTable& pc);
/// Σ d(u,v)·d(u,w) over ordered triples of distinct vertices = S2 + 2·S4.
std::int64_t wwhat_cut(const ThetaClasses& tc, const PairCountTable& pc);

/// SW_3 = (n-2)/2 · W. Throws PreconditionError unless `cls` marks the graph
/// as a modular partial cube with at least three vertices.
std::int64_t sw3_cut(const ThetaClasses& tc, const GraphClassification& cls);

/// SWW_3 = (3n-6)/8·S1 + (n-2)/4·S3 + 1/8·S2 + 1/4·S4, combined exactly. Same
/// gate as sw3_cut.
std::int64_t sww3_cut(const ThetaClasses& tc, const PairCountTable& pc, const GraphClassification& cls);

/// Sums from an already computed report; same gate and formula as sww3_cut.
std::int64_t sww3_from_report(const CutReport& report, std::size_t order, const GraphClassification& cls);

}  // namespace steiner
