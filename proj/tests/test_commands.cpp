#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "badladder/commands.hpp"

using namespace badladder;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"ladder-exact", "--N", "12"}).code == kExitOk);
  CHECK(run({"ladder-exact", "--N", "1"}).code == kExitUsage);
  CHECK(run({"ladder-exact", "--x", "SIDE:3"}).code == kExitUsage);
  CHECK(run({"cayley", "--radius", "2", "--bogus"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"cayley", "--radius", "6", "--cap", "1000"}).code == kExitResource);
  CHECK(run({"delta", "--graph", "moebius"}).code == kExitUsage);
}

TEST_CASE("ladder-exact JSON report") {
  const auto r = run({"ladder-exact", "--N", "20", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["tool"] == "badladder");
  CHECK(j["version"] == kVersion);
  CHECK(j["config"]["truncation"] == 20);
  REQUIRE(j["variants"].size() == 2);
  const auto& plain = j["variants"][0];
  CHECK(plain["cubulated"] == false);
  CHECK(plain["end_symmetric"] == true);
  const auto counts = plain["symdiff_counts"];
  for (std::size_t n = 0; n < counts.size(); ++n) CHECK(counts[n][1] == n);
  const auto& cub = j["variants"][1];
  CHECK(cub["symdiff"].empty());
  CHECK(j["status"] == "ok");
}

TEST_CASE("ladder-exact CSV columns") {
  const auto r = run({"ladder-exact", "--N", "8", "--variant", "plain", "--format", "csv"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.starts_with("# tool=badladder"));
  CHECK(r.out.find("\nindex,level,in_bundle_x,in_bundle_y,in_symdiff\n") != std::string::npos);
  CHECK(r.out.find("\n1,MID,1,0,1\n") != std::string::npos);
}

TEST_CASE("cayley JSON report") {
  const auto r = run({"cayley", "--radius", "8", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["radius"] == 8);
  CHECK(j["vertices"] == 453717);
  CHECK(j["violations"].empty());
  CHECK(j["cross_model_mismatches"].empty());
  CHECK(j["margins"] == Json::array({6, 6}));
  CHECK(j["symdiff_counts"] ==
        Json::parse("[[0,0],[1,0],[2,1],[3,2],[4,3],[5,4]]"));
  CHECK(j["status"] == "ok");
}

TEST_CASE("small radius has nothing certified but still succeeds") {
  const auto r = run({"cayley", "--radius", "1", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["vertices"] == 7);
  CHECK(j["ladder"]["coordinates"] == 4);
  CHECK(j["symdiff_counts"].empty());
}

TEST_CASE("reports are deterministic") {
  for (std::vector<std::string> args :
       {std::vector<std::string>{"cayley", "--radius", "5", "--format", "csv"},
        {"delta", "--graph", "cayley", "--radius", "6", "--samples", "200", "--seed", "5"},
        {"export-ball", "--radius", "3"}}) {
    const auto a = run(args), b = run(args);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("delta report line") {
  const auto r = run({"delta", "--graph", "ladder", "--N", "10", "--exhaustive"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("\ndelta_hat=2 triples=") != std::string::npos);
  CHECK(r.out.find("mode=exhaustive seed=none") != std::string::npos);
}

TEST_CASE("--out writes to a file") {
  const auto path = std::filesystem::temp_directory_path() / "badladder_out_test.json";
  std::filesystem::remove(path);
  const auto r = run({"ladder-exact", "--N", "6", "--format", "json", "--out", path.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = Json::parse(in);
  CHECK(j["config"]["truncation"] == 6);
  std::filesystem::remove(path);
}

TEST_CASE("presentation files") {
  const auto path = std::filesystem::temp_directory_path() / "badladder_free.txt";
  std::ofstream(path) << "free_basis: p s\ngens: p s\n";
  const auto r = run({"delta", "--graph", "cayley", "--radius", "3", "--exhaustive",
                      "--presentation", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("delta_hat=0 ") != std::string::npos);
  std::ofstream(path) << "free_basis: p s\ngens: p q\n";
  CHECK(run({"export-ball", "--radius", "1", "--presentation", path.string()}).code == kExitUsage);
  std::filesystem::remove(path);
}
