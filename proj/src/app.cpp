#include "steiner/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "steiner/cut_method.hpp"
#include "steiner/exact.hpp"
#include "steiner/graph.hpp"
#include "steiner/models.hpp"
#include "steiner/steiner.hpp"
#include "steiner/theta.hpp"

namespace steiner::app {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A method cannot serve the request; auto selection moves on to the next one.
class NotApplicable : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

/// Line-oriented "key = value" report that can also be emitted as one JSON object.
class Report {
 public:
  void add(std::string key, json value, std::string suffix = {}) {
    entries_.push_back({std::move(key), std::move(value), std::move(suffix)});
  }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      json object = json::object();
      for (const auto& e : entries_) object[e.key] = e.value;
      out << object.dump(2) << '\n';
      return;
    }
    for (const auto& e : entries_) {
      out << e.key << " = " << (e.value.is_string() ? e.value.get<std::string>() : e.value.dump());
      if (!e.suffix.empty()) out << ' ' << e.suffix;
      out << '\n';
    }
  }

 private:
  struct Entry {
    std::string key;
    json value;
    std::string suffix;
  };
  std::vector<Entry> entries_;
};

json timing(double ms) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << ms;
  return json::parse(s.str());
}

struct Input {
  Graph graph;
  std::string name;
  std::optional<GeneratorDescriptor> descriptor;
};

Input load_input(const std::string& file, const std::string& gen) {
  if (file.empty() == gen.empty()) throw UsageError("give exactly one of --input FILE or --gen DESCRIPTOR");
  Input in;
  try {
    if (!gen.empty()) {
      in.descriptor = GeneratorDescriptor::parse(gen);
      in.graph = generate(*in.descriptor);
      in.name = in.descriptor->to_string();
    } else {
      std::ifstream stream(file);
      if (!stream) throw UsageError("cannot read input file '" + file + "'");
      in.graph = parse_edge_list(stream);
      in.name = file;
    }
  } catch (const ParseError& e) {
    throw UsageError(file + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return in;
}

struct Limits {
  std::uint64_t max_brute = kDefaultSubsetGuard;
  bool force = false;

  std::optional<std::uint64_t> guard() const {
    return force ? std::nullopt : std::optional<std::uint64_t>(max_brute);
  }
  bool allows(Wide subsets) const { return force || subsets <= static_cast<Wide>(max_brute); }
};

/// Lazily computed structure of one input graph.
class Analysis {
 public:
  Analysis(const Input& input, Limits limits) : input_(input), limits_(limits) {}

  const Graph& graph() const { return input_.graph; }
  std::size_t order() const { return input_.graph.order(); }

  const DistanceMatrix& distances() {
    if (!distances_) distances_ = all_pairs_distances(graph());
    return *distances_;
  }
  const DistanceMoments& moments() {
    if (!moments_) moments_ = distance_moments(distances());
    return *moments_;
  }
  const ThetaClasses& theta() {
    if (!theta_) theta_ = std::make_unique<ThetaClasses>(theta_classes(graph(), distances()));
    return *theta_;
  }
  const PartialCubeCheck& cube() {
    if (!cube_) cube_ = is_partial_cube(graph(), distances(), theta());
    return *cube_;
  }
  const PairCountTable& pairs() {
    if (!pairs_) pairs_ = pair_counts(theta());
    return *pairs_;
  }
  bool has_theta() const { return theta_ != nullptr; }

  /// Null when the triple scan exceeds the guard and the family gives no answer.
  const GraphClassification* classification() {
    if (classification_ || classification_skipped_) return classification_ ? &*classification_ : nullptr;
    const auto family = input_.descriptor ? family_median_status(*input_.descriptor) : std::nullopt;
    const bool scan_allowed = limits_.allows(binomial(static_cast<std::int64_t>(order()), 3));
    if (scan_allowed) {
      classification_ = median_classification(graph(), distances(), theta(), cube());
    } else if (family) {
      GraphClassification c;
      c.connected = true;
      c.bipartite = is_bipartite(graph(), distances());
      c.partial_cube = cube().partial_cube;
      c.theta_class_count = theta().size();
      c.median_status = *family;
      c.source = ClassificationSource::family;
      if (!c.partial_cube) throw InternalError("generated median-family graph failed the partial-cube check");
      classification_ = c;
    } else {
      classification_skipped_ = true;
      return nullptr;
    }
    return &*classification_;
  }

 private:
  const Input& input_;
  Limits limits_;
  std::optional<DistanceMatrix> distances_;
  std::optional<DistanceMoments> moments_;
  std::unique_ptr<ThetaClasses> theta_;
  std::optional<PartialCubeCheck> cube_;
  std::optional<PairCountTable> pairs_;
  std::optional<GraphClassification> classification_;
  bool classification_skipped_ = false;
};

enum class IndexKind { w, ww, sw, sww, hosoya };

struct Request {
  IndexKind index = IndexKind::sw;
  std::size_t k = 3;
};

std::string index_key(const Request& r) {
  switch (r.index) {
    case IndexKind::w:
      return "w";
    case IndexKind::ww:
      return "ww";
    case IndexKind::sw:
      return "sw" + std::to_string(r.k);
    case IndexKind::sww:
      return "sww" + std::to_string(r.k);
    case IndexKind::hosoya:
      return "hosoya" + std::to_string(r.k);
  }
  return "?";
}

bool wants_sw(const Request& r) { return r.index == IndexKind::w || r.index == IndexKind::sw; }

json integral(const Rational& r, const char* what) { return r.to_integer(what); }

json pick(const Request& r, std::int64_t sw, std::int64_t sww, const SteinerHosoya* hosoya) {
  if (r.index == IndexKind::hosoya) {
    if (hosoya == nullptr) throw NotApplicable("no Hosoya polynomial for this method");
    return hosoya->to_string();
  }
  return wants_sw(r) ? json(sw) : json(sww);
}

json by_formula(const Input& in, const Request& r) {
  if (!in.descriptor) throw NotApplicable("closed formulas need a --gen input");
  const auto& desc = *in.descriptor;
  const auto k = static_cast<std::int64_t>(r.k);
  auto from = [&](const ClosedForm& cf) { return pick(r, cf.sw, cf.sww, &cf.hosoya); };
  switch (desc.family) {
    case GraphFamily::complete:
      return from(complete_formulas(static_cast<std::int64_t>(desc.params[0]), k));
    case GraphFamily::path:
      if (k < 2) throw NotApplicable("path formulas need k >= 2");
      return from(path_formulas(static_cast<std::int64_t>(desc.params[0]), k));
    case GraphFamily::grid: {
      const auto m = static_cast<std::int64_t>(desc.params[0]);
      const auto n = static_cast<std::int64_t>(desc.params[1]);
      if (m == 1 || n == 1) {
        if (k < 2) throw NotApplicable("path formulas need k >= 2");
        return from(path_formulas(m * n, k));
      }
      if (k != 3 || r.index == IndexKind::hosoya) throw NotApplicable("grid closed forms exist only for SW_3 and SWW_3");
      if (wants_sw(r)) return grid_sw3(m, n);
      try {
        return grid_sww3(m, n);
      } catch (const PreconditionError& e) {
        throw NotApplicable(e.what());
      }
    }
    default:
      throw NotApplicable("no closed formula for " + desc.to_string());
  }
}

json by_cut(Analysis& a, const Request& r) {
  if (r.index == IndexKind::hosoya) throw NotApplicable("the cut method does not produce Hosoya polynomials");
  if (r.k != 2 && r.k != 3) throw NotApplicable("the cut method covers k = 2 and k = 3 only");
  if (!a.cube().partial_cube) {
    throw NotApplicable("graph is not a partial cube (" + to_string(a.cube().reason) + ")");
  }
  if (r.k == 2) {
    const std::int64_t w = wiener_cut(a.theta());
    if (wants_sw(r)) return w;
    return integral(Rational(w + wwbar_cut(a.theta(), a.pairs()), 2), "hyper-Wiener index (cut method)");
  }
  const GraphClassification* cls = a.classification();
  if (cls == nullptr) throw NotApplicable("modularity not established: triple scan exceeds the guard (use --force)");
  try {
    if (wants_sw(r)) return sw3_cut(a.theta(), *cls);
    return sww3_cut(a.theta(), a.pairs(), *cls);
  } catch (const PreconditionError& e) {
    throw NotApplicable(e.what());
  }
}

json by_modular(Analysis& a, const Request& r) {
  if (r.k != 3 || r.index == IndexKind::hosoya) throw NotApplicable("the modular-graph formulas cover SW_3 and SWW_3 only");
  const GraphClassification* cls = a.classification();
  if (cls == nullptr) throw NotApplicable("modularity not established: triple scan exceeds the guard (use --force)");
  if (!cls->modular()) {
    std::string message = "graph is not modular";
    if (cls->witness) {
      message += " (witness triple " + std::to_string(cls->witness->a) + "," + std::to_string(cls->witness->b) +
                 "," + std::to_string(cls->witness->c) + ")";
    }
    throw NotApplicable(message);
  }
  const IntegerIndices v = modular_indices_3(a.order(), a.moments(), cls->median_status);
  return wants_sw(r) ? json(v.sw) : json(v.sww);
}

json by_hosoya(Analysis& a, const Request& r, const Limits& limits) {
  const SteinerHosoya p = steiner_hosoya(a.distances(), r.k, limits.guard());
  if (r.index == IndexKind::hosoya) return p.to_string();
  const SteinerIndices v = indices_from_hosoya(p);
  return wants_sw(r) ? json(v.sw) : integral(v.sww, "SWW_k from Hosoya polynomial");
}

json by_brute(Analysis& a, const Request& r, const Limits& limits) {
  if (r.index == IndexKind::hosoya) return steiner_hosoya(a.distances(), r.k, limits.guard()).to_string();
  if (r.index == IndexKind::w || r.index == IndexKind::ww) {
    const DistanceMoments& m = a.moments();
    return r.index == IndexKind::w ? json(m.wiener) : integral(hyper_wiener(m), "hyper-Wiener index");
  }
  const SteinerIndices v = steiner_k_indices_brute(a.distances(), r.k, limits.guard());
  return wants_sw(r) ? json(v.sw) : integral(v.sww, "SWW_k");
}

json evaluate(const std::string& method, const Input& in, Analysis& a, const Request& r, const Limits& limits) {
  if (method == "formula") return by_formula(in, r);
  if (method == "cut") return by_cut(a, r);
  if (method == "modular") return by_modular(a, r);
  if (method == "hosoya") return by_hosoya(a, r, limits);
  if (method == "brute") return by_brute(a, r, limits);
  throw UsageError("unknown method '" + method + "'");
}

std::pair<std::string, json> evaluate_auto(const Input& in, Analysis& a, const Request& r, const Limits& limits) {
  std::vector<std::string> order = {"formula"};
  if (r.index != IndexKind::hosoya) {
    order.push_back("cut");
    order.push_back("modular");
  }
  order.push_back(r.k >= 4 && r.index != IndexKind::hosoya ? "hosoya" : "brute");
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    try {
      return {order[i], evaluate(order[i], in, a, r, limits)};
    } catch (const NotApplicable&) {
    }
  }
  return {order.back(), evaluate(order.back(), in, a, r, limits)};
}

void add_header(Report& report, const Input& in) {
  report.add("graph", in.name);
  report.add("n", in.graph.order());
  report.add("edges", in.graph.size());
}

struct ComputeOptions {
  std::string input;
  std::string gen;
  std::string index = "sw";
  std::size_t k = 3;
  std::string method = "auto";
  bool verify = false;
  std::string format = "text";
  Limits limits;
};

int run_compute(const ComputeOptions& opt, std::ostream& out) {
  const Input in = load_input(opt.input, opt.gen);
  Request r;
  static const std::map<std::string, IndexKind> kinds = {
      {"w", IndexKind::w}, {"ww", IndexKind::ww}, {"sw", IndexKind::sw}, {"sww", IndexKind::sww}, {"hosoya", IndexKind::hosoya}};
  r.index = kinds.at(opt.index);
  r.k = (r.index == IndexKind::w || r.index == IndexKind::ww) ? 2 : opt.k;
  if (r.k < 1 || r.k > in.graph.order()) {
    throw PreconditionError("k = " + std::to_string(r.k) + " must lie in [1, n] with n = " + std::to_string(in.graph.order()));
  }
  if (!is_connected(in.graph)) throw PreconditionError("graph is disconnected; Steiner indices need a connected graph");

  Analysis analysis(in, opt.limits);
  Report report;
  add_header(report, in);
  const std::string key = index_key(r);

  const auto start = Clock::now();
  std::string method = opt.method;
  json value;
  if (method == "auto") {
    std::tie(method, value) = evaluate_auto(in, analysis, r, opt.limits);
  } else {
    value = evaluate(method, in, analysis, r, opt.limits);
  }
  const double ms = elapsed_ms(start);

  if (analysis.has_theta()) report.add("classes", analysis.theta().size());
  if (const auto* cls = analysis.has_theta() ? analysis.classification() : nullptr) {
    report.add("classification", to_string(cls->median_status));
  }
  report.add(key, value, "(method=" + method + ")");
  report.add(key + ".method", method);
  report.add(key + ".elapsed_ms", timing(ms));

  bool mismatch = false;
  if (opt.verify) {
    const bool hosoya_brute = r.index == IndexKind::hosoya && method == "brute";
    if (hosoya_brute) {
      report.add(key + ".check", "none (already brute)");
    } else {
      const std::string check_method = method == "brute" ? "hosoya" : "brute";
      const auto check_start = Clock::now();
      const json check = evaluate(check_method, in, analysis, r, opt.limits);
      report.add(key + ".check", check, "(method=" + check_method + ")");
      report.add(key + ".check_method", check_method);
      report.add(key + ".check_elapsed_ms", timing(elapsed_ms(check_start)));
      mismatch = check != value;
      report.add(key + ".equal", !mismatch);
    }
  }
  report.print(out, opt.format == "json");
  if (mismatch) throw VerificationFailure("cross-check mismatch for " + key);
  return kSuccess;
}

struct SourceOptions {
  std::string input;
  std::string gen;
  std::string format = "text";
  Limits limits;
};

int run_classify(const SourceOptions& opt, std::ostream& out) {
  const Input in = load_input(opt.input, opt.gen);
  Report report;
  add_header(report, in);
  if (!is_connected(in.graph)) {
    report.add("connected", false);
    report.add("bipartite", is_bipartite(in.graph));
    report.add("partial_cube", false);
    report.add("median_status", to_string(MedianStatus::not_modular));
    report.print(out, opt.format == "json");
    return kSuccess;
  }
  Analysis analysis(in, opt.limits);
  const GraphClassification* cls = analysis.classification();
  report.add("connected", true);
  report.add("bipartite", is_bipartite(in.graph, analysis.distances()));
  report.add("partial_cube", analysis.cube().partial_cube);
  if (!analysis.cube().partial_cube) report.add("partial_cube_failure", to_string(analysis.cube().reason));
  report.add("classes", analysis.theta().size());
  if (cls == nullptr) {
    report.add("median_status", "skipped: guard");
  } else {
    report.add("median_status", to_string(cls->median_status));
    report.add("median_source", cls->source == ClassificationSource::scan ? "scan" : "family");
    if (cls->witness) {
      report.add("witness", std::to_string(cls->witness->a) + "," + std::to_string(cls->witness->b) + "," +
                                std::to_string(cls->witness->c));
    }
  }
  report.print(out, opt.format == "json");
  return kSuccess;
}

int run_bench(const SourceOptions& opt, std::ostream& out) {
  const Input in = load_input(opt.input, opt.gen);
  if (!is_connected(in.graph)) throw PreconditionError("graph is disconnected");
  Analysis analysis(in, opt.limits);
  Report report;
  add_header(report, in);

  const auto dist_start = Clock::now();
  const DistanceMatrix& d = analysis.distances();
  report.add("distances.elapsed_ms", timing(elapsed_ms(dist_start)));

  const GraphClassification* cls = analysis.classification();
  if (cls == nullptr) throw PreconditionError("modularity not established: triple scan exceeds the guard (use --force)");
  if (!cls->modular_partial_cube()) {
    throw PreconditionError("bench needs a modular partial cube; graph is " + to_string(cls->median_status) +
                            (cls->partial_cube ? "" : " and not a partial cube"));
  }
  report.add("classification", to_string(cls->median_status));

  const auto cut_start = Clock::now();
  const ThetaClasses tc = theta_classes(in.graph, d);
  const PairCountTable pc = pair_counts(tc);
  const auto formula_start = Clock::now();
  const std::int64_t cut_value = sww3_cut(tc, pc, *cls);
  const double formula_ms = elapsed_ms(formula_start);
  const double cut_ms = elapsed_ms(cut_start);
  report.add("classes", tc.size());
  report.add("sww3.cut", cut_value);
  report.add("cut.elapsed_ms", timing(cut_ms));
  report.add("cut.formula_elapsed_ms", timing(formula_ms));

  bool mismatch = false;
  if (opt.limits.allows(binomial(static_cast<std::int64_t>(in.graph.order()), 3))) {
    const auto brute_start = Clock::now();
    const SteinerIndices brute = steiner_k_indices_brute(d, 3);
    const double brute_ms = elapsed_ms(brute_start);
    const std::int64_t brute_value = brute.sww.to_integer("brute SWW_3");
    report.add("sww3.brute", brute_value);
    report.add("brute.elapsed_ms", timing(brute_ms));
    report.add("speedup", timing(cut_ms > 0 ? brute_ms / cut_ms : 0.0));
    mismatch = brute_value != cut_value;
    report.add("equal", !mismatch);
  } else {
    report.add("brute", "skipped: guard");
  }
  report.print(out, opt.format == "json");
  if (mismatch) throw VerificationFailure("cut method and brute force disagree");
  return kSuccess;
}

void add_source_options(CLI::App* cmd, std::string& input, std::string& gen, std::string& format, Limits& limits) {
  cmd->add_option("--input", input, "edge-list file");
  cmd->add_option("--gen", gen, "generator: path:N cycle:N complete:N hypercube:K grid:M,N tree:SEED,N");
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--max-brute", limits.max_brute, "largest subset count enumerated without --force");
  cmd->add_flag("--force", limits.force, "ignore the enumeration guard");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steiner Wiener, hyper-Wiener and Hosoya indices of graphs"};
  app.require_subcommand(1);

  ComputeOptions compute_opt;
  auto* compute = app.add_subcommand("compute", "compute an index");
  add_source_options(compute, compute_opt.input, compute_opt.gen, compute_opt.format, compute_opt.limits);
  compute->add_option("--index", compute_opt.index, "w, ww, sw, sww or hosoya")
      ->check(CLI::IsMember({"w", "ww", "sw", "sww", "hosoya"}));
  compute->add_option("--k", compute_opt.k, "subset size (default 3)");
  compute->add_option("--method", compute_opt.method, "auto, brute, cut, modular, formula or hosoya")
      ->check(CLI::IsMember({"auto", "brute", "cut", "modular", "formula", "hosoya"}));
  compute->add_flag("--verify", compute_opt.verify, "also run brute force and require equality");

  SourceOptions classify_opt;
  auto* classify = app.add_subcommand("classify", "partial-cube and median/modular classification");
  add_source_options(classify, classify_opt.input, classify_opt.gen, classify_opt.format, classify_opt.limits);

  SourceOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "time the cut method against brute force for SWW_3");
  add_source_options(bench, bench_opt.input, bench_opt.gen, bench_opt.format, bench_opt.limits);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (compute->parsed()) return run_compute(compute_opt, out);
    if (classify->parsed()) return run_classify(classify_opt, out);
    return run_bench(bench_opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationMismatch;
  } catch (const InternalError& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationMismatch;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace steiner::app
