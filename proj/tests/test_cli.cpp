#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "nesto/cli.hpp"

using namespace nesto;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("nesto_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

const std::string kL4Sets = R"({"n":4,"sets":[[1,2],[2,3],[3,4],[1,2,3],[2,3,4],[1,2,3,4]]})";
const std::string kAs3 = "4*M[1,2,1] + 6*M[2,1,1] + 24*M[1,1,1,1]";

}  // namespace

TEST_CASE("invariant") {
  auto r = cli({"invariant", "--graph", "path:4"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "recurrence: " + kAs3));

  r = cli({"invariant", "--graph", "path:4", "--route", "all"});
  CHECK(r.code == kExitOk);
  for (const char* route : {"splitting: ", "trees: ", "colorings: ", "recurrence: "})
    CHECK(contains(r.out, route + kAs3));
  CHECK(contains(r.out, "routes agree"));

  r = cli({"invariant", "--graph", "path:4", "--route", "splitting", "--basis", "L"});
  CHECK(contains(r.out, "splitting: 4*L[1,2,1] + 6*L[2,1,1] + 14*L[1,1,1,1]"));

  r = cli({"invariant", "--graph", "path:4", "--route", "trees", "--chi", "3"});
  CHECK(contains(r.out, "ps(3) = 10"));
  r = cli({"invariant", "--graph", "path:4", "--route", "colorings", "--chi", "-1"});
  CHECK(contains(r.out, "ps(-1) = 14"));

  r = cli({"--json", "invariant", "--graph", R"({"n":4,"edges":[[1,2],[2,3],[3,4]]})", "--route", "all"});
  CHECK(r.code == kExitOk);
  const json j = json::parse(r.out);
  CHECK(j["agree"] == true);
  CHECK(j["routes"].size() == 4);
  CHECK(j["routes"]["splitting"]["terms"][2]["coeff"] == 24);

  const std::string g6 = write_temp("star.g6", ">>graph6<<\nD?{\n");
  r = cli({"invariant", "--graph", g6});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "edges 15,25,35,45"));
  r = cli({"invariant", "--graph", "g6:D?{"});
  CHECK(contains(r.out, "edges 15,25,35,45"));
  const std::string gj = write_temp("k3.json", R"({"n":3,"edges":[[1,2],[1,3],[2,3]]})");
  r = cli({"invariant", "--graph", gj});
  CHECK(contains(r.out, "6*M[1,1,1]"));
}

TEST_CASE("invariant input errors") {
  CHECK(cli({"invariant"}).code == kExitInputError);
  CHECK(cli({"invariant", "--graph", "nope:3"}).code == kExitInputError);
  CHECK(cli({"invariant", "--graph", "/nonexistent/file.json"}).code == kExitInputError);
  CHECK(cli({"invariant", "--graph", R"({"n":3,"edges":[[1,1]]})"}).code == kExitInputError);
  CHECK(cli({"invariant", "--graph", "path:4", "--route", "fast"}).code == kExitInputError);
  CHECK(cli({"invariant", "--graph", "path:4", "--basis", "Q"}).code == kExitInputError);
  const auto r = cli({"invariant", "--graph", "complete:12"});
  CHECK(r.code == kExitCapacity);
  CHECK(contains(r.err, "capacity"));
  CHECK(cli({"invariant", "--graph", "complete:9", "--route", "colorings"}).code == kExitCapacity);
}

TEST_CASE("buildset") {
  auto r = cli({"buildset", "--sets", kL4Sets});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "{1,2,3,4,12,23,34,123,234,1234}"));
  CHECK(contains(r.out, "connected: yes"));

  const std::string file = write_temp("l4.json", kL4Sets);
  r = cli({"buildset", "--sets", file, "--restrict", "123"});
  CHECK(contains(r.out, "restriction to 123: {1,2,3,12,23,123}"));
  r = cli({"buildset", "--sets", file, "--contract", "2"});
  CHECK(contains(r.out, "contraction of 2: {1,2,3,12,23,123}"));
  r = cli({"buildset", "--sets", file, "--validate"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "valid"));

  r = cli({"--json", "buildset", "--sets", file, "--contract", "2"});
  const json j = json::parse(r.out);
  CHECK(j["valid"] == true);
  CHECK(j["result"]["buildset"]["n"] == 3);

  r = cli({"buildset", "--sets", R"({"n":4,"sets":[[1,2],[3,4]]})"});
  CHECK(contains(r.out, "connected: no"));
  CHECK(contains(r.out, "components: 12 34"));
}

TEST_CASE("buildset errors") {
  auto r = cli({"buildset", "--sets", R"({"n":3,"sets":[[1,2],[2,3]]})", "--validate"});
  CHECK(r.code == kExitInputError);
  CHECK(contains(r.err, "12 and 23 intersect but their union 123 is missing"));
  r = cli({"buildset", "--sets", R"({"n":2,"sets":[[1,2]]})", "--strict", "--validate"});
  CHECK(r.code == kExitInputError);
  CHECK(contains(r.err, "singleton"));
  CHECK(cli({"buildset", "--sets", R"({"n":2,"sets":[[1,2]]})", "--validate"}).code == kExitOk);
  CHECK(cli({"buildset", "--sets", kL4Sets, "--restrict", "12", "--contract", "3"}).code == kExitInputError);
  CHECK(cli({"buildset", "--sets", kL4Sets, "--restrict", "5"}).code == kExitInputError);
  CHECK(cli({"buildset"}).code == kExitInputError);
  CHECK(cli({"buildset", "--sets", "{"}).code == kExitInputError);
}

TEST_CASE("polytope") {
  CHECK(cli({"polytope", "--family", "as", "--n", "4", "--vertices"}).out == "14\n");
  CHECK(cli({"polytope", "--family", "as", "--n", "4", "--fvector"}).out == "(14,21,9,1)\n");
  CHECK(cli({"polytope", "--family", "pe", "--n", "4"}).code == kExitOk);
  const auto r = cli({"polytope", "--family", "pe", "--n", "3", "--coords"});
  CHECK(contains(r.out, "{1,12} (1,2,4)"));
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
  const json j = json::parse(cli({"--json", "polytope", "--family", "cy", "--n", "4", "--vertices"}).out);
  CHECK(j["vertices"] == 20);
  CHECK(cli({"polytope", "--family", "st", "--n", "4", "--vertices"}).out == "16\n");
  CHECK(cli({"polytope", "--family", "as", "--n", "4", "--vertices", "--fvector"}).code == kExitInputError);
  CHECK(cli({"polytope", "--family", "zz", "--n", "4"}).code == kExitInputError);
  CHECK(cli({"polytope", "--family", "as", "--n", "0"}).code == kExitInputError);
  CHECK(cli({"polytope", "--family", "pe", "--n", "9", "--fvector"}).code == kExitCapacity);
}

TEST_CASE("chromatic") {
  CHECK(cli({"chromatic", "--graph", "complete:2"}).out == "2*m[1,1]\n");
  const json j = json::parse(cli({"--json", "chromatic", "--graph", "complete:2"}).out);
  CHECK(j["terms"][0]["coeff"] == 2);
  CHECK(cli({"chromatic"}).code == kExitInputError);
  CHECK(cli({"chromatic", "--graph", "path:9"}).code == kExitCapacity);
}

TEST_CASE("antipode") {
  CHECK(cli({"antipode", "--graph", "path:4"}).out == "14*L[4] + 4*L[2,2] + 6*L[3,1]\n");
  CHECK(cli({"antipode", "--qsym", "L[1,1,1,1]"}).out == "L[4]\n");
  CHECK(cli({"antipode", "--qsym", "M[1]"}).out == "-M[1]\n");
  const auto m = cli({"antipode", "--graph", "path:4", "--basis", "M"});
  CHECK(contains(m.out, "14*M[4]"));
  const std::string file = write_temp("q.json", R"({"basis":"L","terms":[{"comp":[1,1],"coeff":1}]})");
  CHECK(cli({"antipode", "--qsym", file}).out == "L[2]\n");
  const json j = json::parse(cli({"--json", "antipode", "--qsym", "L[1,1]"}).out);
  CHECK(j["basis"] == "L");
  CHECK(cli({"antipode", "--qsym", "L[1]", "--graph", "path:2"}).code == kExitInputError);
  CHECK(cli({"antipode"}).code == kExitInputError);
  const auto bad = cli({"antipode", "--qsym", "M[1,0]"});
  CHECK(bad.code == kExitInputError);
  CHECK(contains(bad.err, "position"));
  CHECK(cli({"antipode", "--qsym", "9223372036854775807*M[1,1]"}).code == kExitOk);
  CHECK(cli({"antipode", "--qsym", "4611686018427387904*M[1,1] - 4611686018427387904*M[2]"}).code == kExitCapacity);
}

TEST_CASE("fvector") {
  CHECK(cli({"fvector", "--graph", "path:4"}).out == "(14,21,9,1)\n");
  CHECK(cli({"fvector", "--sets", kL4Sets}).out == "(14,21,9,1)\n");
  CHECK(cli({"fvector", "--sets", R"({"n":4,"sets":[[1,2],[1,2,3]]})"}).out == "(4,4,1)\n");
  CHECK(cli({"fvector"}).code == kExitInputError);
  CHECK(cli({"fvector", "--graph", "path:4", "--sets", kL4Sets}).code == kExitInputError);
  CHECK(cli({"fvector", "--graph", "path:9"}).code == kExitCapacity);
}

TEST_CASE("collide") {
  auto r = cli({"collide", "--n", "5"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "classes: 34"));
  CHECK(contains(r.out, "collisions: 0"));
  r = cli({"collide", "--n", "5", "--invariant", "X"});
  CHECK(contains(r.out, "X collisions separated by F: 1"));
  const json j = json::parse(cli({"--json", "collide", "--n", "4", "--invariant", "F", "--connected"}).out);
  CHECK(j["classes"] == 6);
  CHECK(j["distinct_values"] == 6);
  CHECK(cli({"collide", "--n", "5", "--invariant", "Y"}).code == kExitInputError);
  CHECK(cli({"collide", "--n", "8"}).code == kExitCapacity);
}

TEST_CASE("output does not depend on the thread count") {
  const auto a = cli({"--jobs", "1", "collide", "--n", "5", "--invariant", "X"});
  const auto b = cli({"--jobs", "8", "collide", "--n", "5", "--invariant", "X"});
  const auto c = cli({"--jobs", "3", "collide", "--n", "5", "--invariant", "X"});
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(cli({"--jobs", "0", "collide", "--n", "4"}).code == kExitInputError);
}

TEST_CASE("trees") {
  auto r = cli({"trees", "--n", "4"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  CHECK(contains(r.out, "(((()))) M[1,1,1,1]"));
  r = cli({"trees", "--n", "5", "--kernel"});
  CHECK(contains(r.out, "rank: 8"));
  CHECK(contains(r.out, "kernel dimension: 1"));
  const json j = json::parse(cli({"--json", "trees", "--n", "5", "--kernel"}).out);
  CHECK(j["kernel"].size() == 1);
  CHECK(j["shapes"].size() == 9);
  CHECK(cli({"trees", "--n", "10"}).code == kExitCapacity);
  CHECK(cli({"trees", "--n", "8", "--kernel"}).code == kExitCapacity);
}

TEST_CASE("verify") {
  auto r = cli({"verify", "--criterion", "3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "[PASS] 3"));
  r = cli({"verify", "--criterion", "2"});
  CHECK(r.code == kExitVerificationFailed);
  CHECK(contains(r.out, "[FAIL] 2"));
  const json j = json::parse(cli({"--json", "verify", "--suite", "acceptance", "--criterion", "1"}).out);
  CHECK(j[0]["id"] == 1);
  CHECK(j[0]["pass"] == true);
  CHECK(cli({"verify", "--criterion", "12"}).code == kExitInputError);
  CHECK(cli({"verify", "--suite", "other"}).code == kExitInputError);
}

TEST_CASE("usage errors") {
  CHECK(cli({}).code == kExitInputError);
  CHECK(cli({"bogus"}).code == kExitInputError);
  CHECK(cli({"invariant", "--graph", "path:3", "--unknown"}).code == kExitInputError);
  const auto help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(contains(help.out, "invariant"));
}

TEST_CASE("repeated runs are byte identical") {
  for (const std::vector<std::string> args :
       {std::vector<std::string>{"invariant", "--graph", "cycle:5", "--route", "all"},
        std::vector<std::string>{"--json", "trees", "--n", "6", "--kernel"},
        std::vector<std::string>{"polytope", "--family", "st", "--n", "4", "--coords"}}) {
    CHECK(cli(args).out == cli(args).out);
  }
}
