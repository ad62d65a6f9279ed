#include "steiner/cut_method.hpp"

#include <string>

#include "steiner/exact.hpp"
#include "steiner/parallel.hpp"

namespace steiner {

std::int64_t cut_f1(std::int64_t n0, std::int64_t n1) { return narrow(static_cast<Wide>(n0) * n1, "f1"); }

std::int64_t cut_f2(std::int64_t n0, std::int64_t n1) {
  const Wide a = n0;
  const Wide b = n1;
  return narrow(a * b * (b - 1) + b * a * (a - 1), "f2");
}

std::int64_t cut_g1(const PairCountTable::Counts& c) {
  const auto [n00, n01, n10, n11] = c;
  return narrow(static_cast<Wide>(n00) * n11 + static_cast<Wide>(n01) * n10, "g1");
}

std::int64_t cut_g2(const PairCountTable::Counts& c) {
  const Wide n00 = c[0];
  const Wide n01 = c[1];
  const Wide n10 = c[2];
  const Wide n11 = c[3];
  const Wide triples = n00 * n01 * n10 + n00 * n01 * n11 + n00 * n10 * n11 + n01 * n10 * n11;
  const Wide diagonal = n00 * n11 * (n11 - 1) + n01 * n10 * (n10 - 1) + n10 * n01 * (n01 - 1) +
                        n11 * n00 * (n00 - 1);
  return narrow(3 * triples + diagonal, "g2");
}

CutReport cut_report(const ThetaClasses& tc, const PairCountTable& pc) {
  if (!tc.has_sides()) throw NotPartialCubeClass(tc.failed_component_count());
  if (pc.class_count() != tc.size()) throw std::invalid_argument("pair-count table does not match the classes");

  const std::size_t d = tc.size();
  CutReport r;
  r.class_count = d;
  Wide s1 = 0;
  Wide s2 = 0;
  for (std::size_t i = 0; i < d; ++i) {
    r.f1.push_back(cut_f1(tc.side0_count(i), tc.side1_count(i)));
    r.f2.push_back(cut_f2(tc.side0_count(i), tc.side1_count(i)));
    s1 += r.f1.back();
    s2 += r.f2.back();
  }

  const std::size_t pairs = d * (d > 0 ? d - 1 : 0) / 2;
  r.g1.resize(pairs);
  r.g2.resize(pairs);
  parallel_for(d, [&](unsigned, std::size_t i) {
    const std::size_t offset = i * d - i * (i + 1) / 2;
    for (std::size_t j = i + 1; j < d; ++j) {
      const auto& counts = pc.at(i, j);
      r.g1[offset + (j - i - 1)] = cut_g1(counts);
      r.g2[offset + (j - i - 1)] = cut_g2(counts);
    }
  });
  Wide s3 = 0;
  Wide s4 = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    s3 += r.g1[p];
    s4 += r.g2[p];
  }
  r.s1 = narrow(s1, "S1");
  r.s2 = narrow(s2, "S2");
  r.s3 = narrow(s3, "S3");
  r.s4 = narrow(s4, "S4");
  return r;
}

std::int64_t wiener_cut(const ThetaClasses& tc) {
  if (!tc.has_sides()) throw NotPartialCubeClass(tc.failed_component_count());
  Wide total = 0;
  for (std::size_t i = 0; i < tc.size(); ++i) total += cut_f1(tc.side0_count(i), tc.side1_count(i));
  return narrow(total, "Wiener index (cut method)");
}

std::int64_t wwbar_cut(const ThetaClasses& tc, const PairCountTable& pc) {
  const CutReport r = cut_report(tc, pc);
  return narrow(static_cast<Wide>(r.s1) + 2 * static_cast<Wide>(r.s3), "sum of squared distances (cut method)");
}

std::int64_t wwhat_cut(const ThetaClasses& tc, const PairCountTable& pc) {
  const CutReport r = cut_report(tc, pc);
  return narrow(static_cast<Wide>(r.s2) + 2 * static_cast<Wide>(r.s4), "cross distance sum (cut method)");
}

namespace {

void require_modular_partial_cube(std::size_t order, const GraphClassification& cls) {
  if (order < 3) throw PreconditionError("the cut-method formulas for k = 3 need at least three vertices");
  if (!cls.partial_cube) throw PreconditionError("graph is not a partial cube");
  if (!cls.modular()) {
    std::string message = "graph is not modular";
    if (cls.witness) {
      message += " (witness triple " + std::to_string(cls.witness->a) + "," + std::to_string(cls.witness->b) +
                 "," + std::to_string(cls.witness->c) + ")";
    }
    throw PreconditionError(message);
  }
}

}  // namespace

std::int64_t sw3_cut(const ThetaClasses& tc, const GraphClassification& cls) {
  require_modular_partial_cube(tc.order(), cls);
  const Wide n2 = static_cast<Wide>(tc.order()) - 2;
  return narrow(exact_div(n2 * wiener_cut(tc), 2, "SW_3 (cut method)"), "SW_3 (cut method)");
}

std::int64_t sww3_from_report(const CutReport& r, std::size_t order, const GraphClassification& cls) {
  require_modular_partial_cube(order, cls);
  const Wide n = static_cast<Wide>(order);
  // 8·SWW_3 = (3n-6)·S1 + 2(n-2)·S3 + S2 + 2·S4
  const Wide scaled = (3 * n - 6) * r.s1 + 2 * (n - 2) * r.s3 + static_cast<Wide>(r.s2) + 2 * static_cast<Wide>(r.s4);
  return narrow(exact_div(scaled, 8, "SWW_3 (cut method)"), "SWW_3 (cut method)");
}

std::int64_t sww3_cut(const ThetaClasses& tc, const PairCountTable& pc, const GraphClassification& cls) {
  require_modular_partial_cube(tc.order(), cls);
  return sww3_from_report(cut_report(tc, pc), tc.order(), cls);
}

}  // namespace steiner
