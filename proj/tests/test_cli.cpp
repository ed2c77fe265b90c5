#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rank6/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = rank6::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream f(fs::path(RANK6_GOLDEN_DIR) / name, std::ios::binary);
  REQUIRE(f);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "rank6_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string atlas_file() {
  static const std::string path = [] {
    const fs::path p = scratch("atlas.tsv");
    REQUIRE(cli({"atlas", "build", "-o", p.string()}).code == 0);
    return p.string();
  }();
  return path;
}

}  // namespace

TEST_CASE("rank of a single edge") {
  const Outcome r = cli({"rank", "A_"});
  CHECK(r.code == 0);
  CHECK(r.out == "A_\trank 2\tnullity 0\n");
  CHECK(r.err.empty());
}

TEST_CASE("golden transcripts") {
  CHECK(cli({"rank", "--trace", "E@U_", "EBj?", "E@Q?"}).out == golden("rank_trace.out"));
  CHECK(cli({"reduce", "EFz_", "C]", "EhEG"}).out == golden("reduce.out"));
  CHECK(cli({"enumerate", "6", "--family", "trees"}).out == golden("enumerate_trees_6.out"));
  const Outcome built = cli({"atlas", "build"});
  CHECK(built.code == 0);
  CHECK(built.out == golden("atlas.tsv"));
  CHECK(cli({"atlas", "show", atlas_file()}).out == golden("atlas_show.out"));
  const Outcome c = cli({"classify", "--atlas", atlas_file(), "--json", "-"}, "EhEG\nEFz_\nGhCGKC\nDhc\nBw\nA?\n");
  CHECK(c.code == 1);
  CHECK(c.out == golden("classify.json"));
}

TEST_CASE("json reports carry the schema and exit code") {
  const Outcome r = cli({"rank", "--json", "A_", "A?"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "rank6.report/1");
  CHECK(j["command"] == "rank");
  CHECK(j["inputs"] == nlohmann::json::array({"A_", "A?"}));
  CHECK(j["results"][1]["rank"] == 0);
  CHECK(j["exit_code"] == 0);

  const auto e = nlohmann::json::parse(cli({"enumerate", "5", "--family", "bipartite", "--json"}).out);
  CHECK(e["results"]["count"] == 13);

  const auto s = nlohmann::json::parse(cli({"atlas", "show", "--json", atlas_file()}).out);
  CHECK(s["results"]["host_count"] == 4);
  CHECK(s["results"]["members"] == 40);
}

TEST_CASE("graph inputs from stdin and edge lists") {
  const Outcome in = cli({"rank", "-"}, "A_\n\nBw\n");
  CHECK(in.out == "A_\trank 2\tnullity 0\nBw\trank 3\tnullity 0\n");

  const fs::path edges = scratch("c6.edges");
  std::ofstream(edges) << "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
  const Outcome e = cli({"classify", "--atlas", atlas_file(), "--edges", edges.string()});
  CHECK(e.code == 0);
  CHECK(e.out.find("rank 6") != std::string::npos);

  const fs::path odd = scratch("odd.edges");
  std::ofstream(odd) << "3\n0 1\n2\n";
  CHECK(cli({"rank", "--edges", odd.string()}).code == 2);
  const fs::path loop = scratch("loop.edges");
  std::ofstream(loop) << "3\n1 1\n";
  CHECK(cli({"rank", "--edges", loop.string()}).code == 2);
  CHECK(cli({"rank", "--edges", scratch("absent.edges").string()}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"rank"}).code == 2);          // no graphs
  CHECK(cli({"rank", "zz"}).code == 2);    // bad graph6
  CHECK(cli({"rank", "A_", "--bogus"}).code == 2);
  CHECK(cli({"reduce", "C]"}).code == 0);
  CHECK(cli({"enumerate", "11"}).code == 2);
  CHECK(cli({"enumerate", "4", "--family", "planar"}).code == 2);
  CHECK(cli({"classify", "C]"}).code == 2);  // --atlas is required
  CHECK(cli({"classify", "--atlas", scratch("absent.tsv").string(), "C]"}).code == 2);
  CHECK(cli({"classify", "--atlas", atlas_file(), "EhEG"}).code == 0);
  CHECK(cli({"classify", "--atlas", atlas_file(), "Dhc"}).code == 1);
  CHECK(cli({"classify", "--atlas", atlas_file(), "?"}).code == 1);  // empty graph
  CHECK(cli({"atlas"}).code == 2);
  CHECK(cli({"atlas", "build", "--max-order", "9"}).code == 1);
  CHECK(cli({"atlas", "build", "--max-order", "15"}).code == 2);
  CHECK(cli({"verify"}).code == 2);
  CHECK(cli({"verify", "--all", "tree-rank-matching"}).code == 2);
  CHECK(cli({"verify", "no-such-check"}).code == 2);
  CHECK(cli({"verify", "--all", "--cross-check-order", "10"}).code == 2);
  CHECK(cli({"verify", "bipartite-nullity", "--atlas", atlas_file()}).code == 0);
}

TEST_CASE("tampered atlas is a usage error") {
  std::ifstream f(atlas_file());
  std::stringstream text;
  text << f.rdbuf();
  std::string body = text.str();
  body.replace(body.find("\t6\t6\t"), 5, "\t6\t5\t");
  const fs::path bad = scratch("bad.tsv");
  std::ofstream(bad) << body;
  const Outcome r = cli({"atlas", "show", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
}

TEST_CASE("batch classification is independent of the worker count") {
  std::string input;
  for (const char* g : {"EhEG", "EFz_", "GhCGKC", "Dhc", "Bw", "A?", "H?CGjEc", "I???@\\Ue_", "G??ZT_"}) input += std::string(g) + "\n";
  const Outcome one = cli({"classify", "--json", "--atlas", atlas_file(), "--threads", "1", "-"}, input);
  const Outcome four = cli({"classify", "--json", "--atlas", atlas_file(), "--threads", "4", "-"}, input);
  CHECK(one.out == four.out);
  CHECK(one.code == four.code);
}

TEST_CASE("verify output is deterministic and timing-free by default") {
  const std::vector<std::string> args{"verify", "--json", "--atlas", atlas_file(), "tree-rank-matching", "nonbipartite-contains-f", "hosts-antichain"};
  const Outcome a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("wall_ms") == std::string::npos);
  std::vector<std::string> timed = args;
  timed.push_back("--timings");
  CHECK(cli(timed).out.find("wall_ms") != std::string::npos);
}
