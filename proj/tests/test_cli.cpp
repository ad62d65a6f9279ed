#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "steiner/app.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = steiner::app::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(STEINER_TEST_DATA) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("compute picks the closed formula when one exists") {
  const auto r = run({"compute", "--gen", "grid:3,3", "--index", "sw", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "sw3 = 252 (method=formula)"));
}

TEST_CASE("compute falls back to the cut method, then to enumeration") {
  auto r = run({"compute", "--gen", "hypercube:3", "--index", "sww"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "sww3.method = cut"));

  r = run({"compute", "--input", data("k23.txt"), "--index", "sww"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "sww3 = 33 (method=modular)"));

  r = run({"compute", "--gen", "cycle:6", "--index", "sw"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "sw3 = 56 (method=brute)"));

  r = run({"compute", "--gen", "cycle:6", "--index", "sw", "--k", "4"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "sw4.method = hosoya"));
}

TEST_CASE("verification cross-checks against enumeration") {
  for (const char* method : {"cut", "modular", "hosoya", "brute"}) {
    CAPTURE(method);
    const auto r = run({"compute", "--gen", "grid:3,4", "--index", "sww", "--method", method, "--verify"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "sww3 = 1828 (method=" + std::string(method) + ")"));
    CHECK(has_line(r.out, "sww3.equal = true"));
  }
}

TEST_CASE("Wiener, hyper-Wiener and Hosoya output") {
  auto r = run({"compute", "--gen", "cycle:6", "--index", "w", "--method", "cut"});
  CHECK(has_line(r.out, "w = 27 (method=cut)"));
  r = run({"compute", "--gen", "cycle:6", "--index", "ww", "--verify"});
  CHECK(has_line(r.out, "ww = 42 (method=cut)"));
  CHECK(has_line(r.out, "ww.equal = true"));
  r = run({"compute", "--gen", "path:4", "--index", "hosoya", "--k", "3"});
  CHECK(has_line(r.out, "hosoya3 = 2:2 3:2 (method=formula)"));
  r = run({"compute", "--gen", "cycle:4", "--index", "hosoya", "--k", "3", "--method", "brute"});
  CHECK(has_line(r.out, "hosoya3 = 2:4 (method=brute)"));
}

TEST_CASE("json output") {
  const auto r = run({"compute", "--gen", "grid:2,3", "--index", "sww", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["sww3"] == 90);
  CHECK(j["sww3.method"] == "formula");
  CHECK(j["n"] == 6);
  CHECK(j["graph"] == "grid:2,3");
}

TEST_CASE("precondition failures exit with code 2") {
  auto r = run({"compute", "--gen", "cycle:6", "--index", "sww", "--method", "cut"});
  CHECK(r.code == 2);
  CHECK(r.err.find("graph is not modular (witness triple 0,2,4)") != std::string::npos);

  r = run({"compute", "--gen", "cycle:6", "--index", "sww", "--method", "modular"});
  CHECK(r.code == 2);

  r = run({"compute", "--input", data("c5.txt"), "--index", "sw", "--method", "cut"});
  CHECK(r.code == 2);
  CHECK(r.err.find("not a partial cube") != std::string::npos);

  r = run({"compute", "--gen", "complete:4", "--index", "sw", "--method", "formula", "--k", "5"});
  CHECK(r.code == 2);

  r = run({"compute", "--input", data("disconnected.txt")});
  CHECK(r.code == 2);

  r = run({"compute", "--gen", "path:400", "--index", "sw", "--method", "brute"});
  CHECK(r.code == 2);
  CHECK(r.err.find("guard") != std::string::npos);

  r = run({"compute", "--gen", "path:30", "--index", "sw", "--method", "brute", "--max-brute", "4000"});
  CHECK(r.code == 2);
  r = run({"compute", "--gen", "path:30", "--index", "sw", "--method", "brute", "--max-brute", "5000"});
  CHECK(r.code == 0);
  r = run({"compute", "--gen", "path:30", "--index", "sw", "--method", "brute", "--max-brute", "10", "--force"});
  CHECK(r.code == 0);
}

TEST_CASE("usage and input errors exit with code 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"compute"}).code == 1);
  CHECK(run({"compute", "--gen", "grid:3,3", "--input", data("k3.txt")}).code == 1);
  CHECK(run({"compute", "--gen", "torus:3"}).code == 1);
  CHECK(run({"compute", "--gen", "grid:3,3", "--method", "magic"}).code == 1);
  CHECK(run({"compute", "--input", data("missing.txt")}).code == 1);
  const auto r = run({"compute", "--input", data("bad_endpoint.txt")});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify") {
  auto r = run({"classify", "--input", data("k23.txt")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "median_status = modular_not_median"));
  CHECK(has_line(r.out, "witness = 2,3,4"));
  CHECK(has_line(r.out, "partial_cube = false"));

  r = run({"classify", "--gen", "cycle:6"});
  CHECK(has_line(r.out, "median_status = not_modular"));
  CHECK(has_line(r.out, "witness = 0,2,4"));

  r = run({"classify", "--input", data("prism4.txt")});
  CHECK(has_line(r.out, "median_status = median"));
  CHECK(has_line(r.out, "classes = 3"));

  r = run({"classify", "--input", data("k3.txt")});
  CHECK(has_line(r.out, "partial_cube = false"));
  CHECK(has_line(r.out, "bipartite = false"));

  r = run({"classify", "--input", data("disconnected.txt")});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "connected = false"));

  r = run({"classify", "--gen", "grid:30,30"});
  CHECK(has_line(r.out, "median_source = family"));
  CHECK(has_line(r.out, "classes = 58"));
}

TEST_CASE("bench") {
  auto r = run({"bench", "--gen", "grid:6,7"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "equal = true"));
  CHECK(has_line(r.out, "classes = 11"));

  r = run({"bench", "--gen", "grid:30,30"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "brute = skipped: guard"));

  r = run({"bench", "--gen", "cycle:6"});
  CHECK(r.code == 2);
}
