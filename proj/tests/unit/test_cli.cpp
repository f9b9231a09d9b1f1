#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "ricci/cli.hpp"
#include "ricci/coxeter.hpp"
#include "ricci/graph.hpp"

using namespace ricci;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(RICCI_DATA_DIR) + "/" + name; }

std::set<std::string> keys(const json& j) {
  std::set<std::string> out;
  for (const auto& [k, v] : j.items()) out.insert(k);
  return out;
}

}  // namespace

TEST_CASE("curvature verb") {
  const Run r = run({"curvature", data("bruhat_s3.edges"), "--format", "structured"});
  REQUIRE(r.status == kExitOk);
  const json j = json::parse(r.out);
  CHECK(keys(j) == std::set<std::string>{"command", "vertex_count", "edge_count", "vertices", "global", "bounds", "notes"});
  CHECK(j["global"] == 2.0);
  CHECK(j["vertices"][0]["matrix"][0] == json::array({"8/3", "-1/3", "-1/3"}));

  const json c6 = json::parse(run({"curvature", data("c6.edges"), "--oracle", "--format", "structured"}).out);
  CHECK(c6["global"] == 0.0);
  CHECK(c6["oracle"]["max_deviation"].get<double>() <= 1e-6);
  CHECK(c6["oracle"]["agrees"] == true);
  CHECK_FALSE(c6["notes"].empty());
}

TEST_CASE("exit statuses") {
  CHECK(run({"curvature", data("bad.edges")}).status == kExitValidation);
  CHECK(run({"curvature", data("missing.edges")}).status == kExitParse);
  CHECK(run({"coxeter", "Q7"}).status == kExitValidation);
  CHECK(run({"coxeter", "I2:99"}).status == kExitOk);
  CHECK(run({"verify", "nonsense"}).status == kExitParse);
  CHECK(run({}).status == kExitParse);
  CHECK(run({"--help"}).status == kExitOk);

  const auto tmp = std::filesystem::temp_directory_path() / "ricci_malformed.edges";
  std::ofstream(tmp) << "a b\nc\n";
  const Run r = run({"curvature", tmp.string()});
  CHECK(r.status == kExitParse);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("coxeter verb") {
  const json a3 = json::parse(run({"coxeter", "A3", "--format", "structured"}).out);
  CHECK(a3["ricci_spectral"] == -1.0);
  CHECK(a3["closed_forms"][0]["value"] == -1.0);
  CHECK(a3["cayley"]["agrees"] == true);
  CHECK(a3["cayley"]["vertices"] == 24);

  const json d4 = json::parse(run({"coxeter", "~D4", "--format", "structured"}).out);
  CHECK(d4["ricci_spectral"] == -3.0);
  CHECK(d4["eigenvalues"] == json::array({5.0, 1.0, 1.0, 1.0, 0.0}));
  CHECK(d4["isoperimetry"].is_null());

  const json prod = json::parse(run({"coxeter", "A2xA3", "--format", "structured"}).out);
  CHECK(prod["product_ricci"] == -1.0);

  const json d3 = json::parse(run({"coxeter", "D3", "--format", "structured"}).out);
  CHECK(d3["ricci_spectral"] == -1.0);
  CHECK(d3["notes"][0].get<std::string>().find("D3") != std::string::npos);

  const json e6 = json::parse(run({"coxeter", "E6", "--format", "structured"}).out);
  CHECK(e6["closed_forms"][0]["consistent"] == false);
  CHECK(e6["notes"][0].get<std::string>().find("E6") != std::string::npos);
}

TEST_CASE("structured output is byte-identical across runs and honours RICCI_SEED") {
  const auto tmp = std::filesystem::temp_directory_path() / "ricci_weak_a3.edges";
  std::ofstream(tmp) << to_edge_list(coxeter::weak_order_graph(coxeter::group_model(coxeter::ModelKind::Symmetric, 3)));

  ::unsetenv("RICCI_SEED");
  const Run a = run({"spectral", tmp.string(), "--format", "structured", "--seed", "9"});
  const Run b = run({"spectral", tmp.string(), "--format", "structured", "--seed", "9"});
  REQUIRE(a.status == kExitOk);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["isoperimetry"]["mode"] == "sampled");
  CHECK(j["isoperimetry"]["seed"] == 9);
  CHECK(j["isoperimetry"]["verdict"] == "pass");

  ::setenv("RICCI_SEED", "123", 1);
  const json k = json::parse(run({"spectral", tmp.string(), "--format", "structured", "--seed", "9"}).out);
  CHECK(k["isoperimetry"]["seed"] == 123);
  ::setenv("RICCI_SEED", "abc", 1);
  CHECK(run({"spectral", tmp.string()}).status == kExitValidation);
  ::unsetenv("RICCI_SEED");
}

TEST_CASE("bounds and verify verbs") {
  const json b = json::parse(run({"bounds", data("c6.edges"), "--format", "structured"}).out);
  CHECK(b["gershgorin_contained"] == true);
  CHECK(b["bounds"].size() == 4);

  const Run v = run({"verify", "coxeter", "--format", "structured"});
  CHECK(v.status == kExitOk);
  CHECK(json::parse(v.out)["passed"] == true);
}

TEST_CASE("table output") {
  const Run r = run({"coxeter", "~D4"});
  CHECK(r.out.find("eigenvalues: [5, 1, 1, 1, 0]") != std::string::npos);
  CHECK(r.out.find("ricci_spectral: -3") != std::string::npos);
}
