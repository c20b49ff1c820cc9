#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "necklace/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "necklace");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = necklace::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("formal mode 0") {
  const Run r = run({"formal", "--mode", "0", "--degree", "6"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["result"]["dims"] == json::array({1, 2, 1}));
  CHECK(j.contains("conventions"));
  CHECK(j["assumptions"].is_array());
}

TEST_CASE("area") {
  const Run r = run({"area", "--c", "3", "--quad-points", "8192"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(std::abs(j["result"]["area"]["value"].get<double>() - 2 * std::numbers::pi * std::log(2.0)) < 1e-6);
  CHECK(run({"area", "--c", "1/2"}).code == 2);
}

TEST_CASE("jacobi on the SU(2) structure") {
  const Run r = run({"jacobi", "--structure", "su2-r4"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"]["schouten_square"] == "0");
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify-paper"}, {"global", "--c", "-9/10"}, {"transform", "--chart", "st", "--seed", "7"}}) {
    const Run a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify-paper branches") {
  const Run def = run({"verify-paper"});
  CHECK(def.code == 0);
  const json j = json::parse(def.out);
  CHECK(j["result"]["global"]["dims"] == json::array({1, 1, 2}));
  CHECK(j["result"]["summary"]["failed"] == 0);

  const Run sym = run({"verify-paper", "--c", "2"});
  CHECK(sym.code == 0);
  CHECK(json::parse(sym.out)["result"]["global"]["dims"] == json::array({1, 0, 1}));

  const Run bruhat = run({"verify-paper", "--c", "1", "--format", "text"});
  CHECK(bruhat.code == 0);
  CHECK(bruhat.out.find("SKIPPED") != std::string::npos);
  CHECK(bruhat.out.find("Bruhat case: computed by Ginzburg, not reproduced here") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"global", "--c", "0.5"}).code == 2);
  CHECK(run({"global", "--bogus"}).code == 2);
  CHECK(run({"formal", "--degree", "1"}).code == 2);
  CHECK(run({"transform", "--chart", "nowhere"}).code == 2);
  CHECK(run({"global", "--c", "3/2", "--format", "yaml"}).code == 2);
  const Run dec = run({"area", "--c", "1.5"});
  CHECK(dec.code == 2);
  CHECK_FALSE(dec.err.empty());
}

TEST_CASE("commands cover every operation") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"bracket", "--structure", "su2-r4"},
           {"transform", "--chart", "w"},
           {"modular", "--c", "1/3"},
           {"zero-mode-split", "--degree", "4"},
           {"annulus", "--modes", "2", "--degree", "4"},
           {"deformation", "--c", "0", "--c-prime", "1/2"},
           {"atlas"}}) {
    CAPTURE(args[0]);
    const Run r = run(args);
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["command"] == args[0]);
  }
}

TEST_CASE("text format and --out") {
  const Run t = run({"global", "--c", "1/2", "--format", "text"});
  CHECK(t.code == 0);
  CHECK_FALSE(t.out.empty());
  CHECK_THROWS(json::parse(t.out));

  const auto path = std::filesystem::temp_directory_path() / "necklace_cli_test.json";
  std::filesystem::remove(path);
  const Run f = run({"global", "--c", "1/4", "--out", path.string()});
  CHECK(f.code == 0);
  std::ifstream in(path);
  REQUIRE(in);
  const json j = json::parse(in);
  CHECK(j["result"]["dims"] == json::array({1, 1, 2}));
  CHECK(j["result"].contains("evidence"));
  std::filesystem::remove(path);
}

}  // TEST_SUITE
