#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "seaweed/cli.hpp"

using namespace seaweed;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("index command") {
  auto r = cli_run({"index", "C14:7|7/11", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "seaweed.index/1");
  CHECK(j["index"] == 0);
  CHECK(j["agree"] == true);
  CHECK(cli_run({"index", "B5:3|2/4"}).out.find("index: 0\n") != std::string::npos);
  r = cli_run({"index", "D5:1|4/2", "--method", "oracle", "--format", "json"});
  CHECK(nlohmann::json::parse(r.out)["index"] == 2);
  r = cli_run({"index", "--type", "A", "--n", "5", "--top", "4,1", "--bottom", "2|1|2", "--explain"});
  CHECK(r.code == 0);
  CHECK(r.out.find("path: 3 2 1 4 5") != std::string::npos);
  CHECK(cli_run({"index", "A5:4/5"}).code == cli::kUsage);
  CHECK(cli_run({"index", "A5:4|1/2|1|2", "--type", "A"}).code == cli::kUsage);
  CHECK(cli_run({"index", "D9:4|3|2/2|3|1", "--method", "formula"}).code == cli::kPrecondition);
  CHECK(cli_run({"bogus"}).code == cli::kUsage);
}

TEST_CASE("meander command") {
  auto r = cli_run({"meander", "A5:4|1/2|1|2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["top_edges"] == nlohmann::json::parse("[[1,4],[2,3]]"));
  CHECK(cli_run({"meander", "X9:1/1"}).code == cli::kUsage);
  CHECK(cli_run({"meander", "A2:2/2", "--format", "png"}).code == cli::kUsage);
  CHECK(cli_run({"meander", "A2:2/2", "--out", "/nonexistent/dir/x.json"}).code == cli::kIo);
}

TEST_CASE("delta command") {
  auto r = cli_run({"delta", "A10:6|4/7|3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("delta: 9\n") != std::string::npos);
  CHECK(cli_run({"delta", "A8:4|4/8"}).code == cli::kPrecondition);
  CHECK(cli_run({"delta", "C5:1|4/3"}).code == cli::kUsage);
}

TEST_CASE("spectrum command") {
  auto r = cli_run({"spectrum", "A4:2|2/1|3"});
  CHECK(r.code == 0);
  CHECK(r.out == "-1:1 0:3 1:3 2:1 unbroken symmetric\n");
  CHECK(cli_run({"spectrum", "A8:4|4/8"}).code == cli::kPrecondition);

  const std::string path = "seaweed_cli_test_table.txt";
  {
    std::ofstream f(path);
    f << "# z = -2\n1 4 -> 1:-1\n2 3 -> 1:-1\n2 4 -> 3:-1\n3 4 -> 2:-2,3:-1\n";
  }
  r = cli_run({"spectrum", "--file", path, "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["integral"] == true);
  std::remove(path.c_str());
  CHECK(cli_run({"spectrum", "--file", "/nonexistent/table.txt"}).code == cli::kIo);
}

TEST_CASE("structure-constant parser") {
  const auto lie = cli::parse_structure_constants("dim 3\n1 2 -> 3:1/2  # comment\n\n");
  CHECK(lie.dimension == 3);
  CHECK(lie.bracket(1, 0) == SparseVector{{2, mpq_class(-1, 2)}});
  CHECK_THROWS_AS(cli::parse_structure_constants("1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_structure_constants("1 2 -> 3:x\n"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_structure_constants("1 2 -> 3:1\n2 3 -> 1:1\n1 3 -> 3:1\n"), JacobiError);
}

TEST_CASE("sweep command") {
  auto r = cli_run({"sweep", "--type", "A", "--n-max", "5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == "seaweed.sweep/1");
  CHECK(j["mismatches"].empty());
  CHECK(j["per_n"][4]["specs"] == 256);
  r = cli_run({"sweep", "--type", "D", "--n-max", "5"});
  CHECK(r.code == 0);
  CHECK(cli_run({"sweep", "--type", "C", "--n-max", "4"}).code == 0);
  CHECK(cli_run({"sweep", "--type", "Q", "--n-max", "4"}).code == cli::kUsage);
  CHECK(cli_run({"sweep", "--type", "A", "--n-max", "99"}).code == cli::kUsage);
}
