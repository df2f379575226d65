#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "check_error.hpp"
#include "coamoeba/cli.hpp"

using coamoeba::ErrorCode;
using Json = nlohmann::json;
namespace cli = coamoeba::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kCubic = "1 0\n-2 1\n1 -2\n0 1\n";
const std::string kParallel = R"({"b": [[1,0],[0,1],[-2,-2],[1,1]]})";

}  // namespace

TEST_CASE("plain text input") {
  const cli::InputDocument d = cli::parse_input("# comment\n1 0\n\n-2, 1  # trailing\n1 -2\n0 1\n");
  REQUIRE(d.b);
  CHECK(d.b->size() == 4);
  CHECK((*d.b)[1] == coamoeba::Vec2{-2, 1});
  CHECK(!d.pivot);
  CHECK(d.normalize);
  CHECK(code_of([] { cli::parse_input("1 0\n2 x\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { cli::parse_input("1 0 3\n"); }) == ErrorCode::ParseError);
}

TEST_CASE("JSON input") {
  const cli::InputDocument d = cli::parse_input(R"({"b": [[1,0],[0,1],[-1,-1]], "pivot": 2, "normalize": false, "note": "x"})");
  REQUIRE(d.b);
  CHECK(d.pivot == 2u);
  CHECK(!d.normalize);
  const cli::InputDocument f = cli::parse_input(R"({"forms": [[1,0],[-1,1],[0,1]]})");
  REQUIRE(f.forms);
  CHECK(f.forms->at(1) == coamoeba::AffineForm{-1, 1});
  CHECK(code_of([] { cli::parse_input(R"({"b": [[1,0]], "forms": [[1,0]]})"); }) != ErrorCode::Overflow);
  CHECK(code_of([] { cli::parse_input(R"({"b": [[1,0],)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { cli::parse_input(R"({"pivot": 0, "b": [[1,0],[0,1],[-1,-1]]})"); }) != ErrorCode::Overflow);
}

TEST_CASE("exit codes") {
  CHECK(run({"validate"}, kCubic).code == cli::kOk);
  CHECK(run({"verify"}, kCubic).code == cli::kOk);
  const Result few = run({"validate"}, "1 0\n-1 0\n");
  CHECK(few.code == cli::kInputError);
  CHECK(few.json()["error"]["code"] == "TooFew");
  CHECK(run({"validate"}, "1 0\n0 1\n").json()["error"]["code"] == "TooFew");
  CHECK(run({"db"}, "1 0\n1 1\n-1 -1\n").code == cli::kInputError);
  CHECK(run({"validate", "--pivot", "9"}, kCubic).json()["error"]["code"] == "InvalidPivot");
  CHECK(run({"nonsense"}, kCubic).code == cli::kInputError);
  CHECK(run({"degree", "--theta", "0,0"}, kCubic).json()["error"]["code"] == "PointOnBoundary");
  CHECK(run({"validate", "/nonexistent/input.txt"}).code == cli::kInputError);
}

TEST_CASE("subcommand outputs") {
  CHECK(run({"db"}, kParallel).json()["d_B"] == 2);
  CHECK(run({"db"}, kCubic).json()["chambers"].size() == 8);
  const Json cls = run({"class"}, kCubic).json();
  CHECK(cls["pushed"] == 3);
  CHECK(cls["class"][0]["i"] == 2);
  CHECK(cls["class"][0]["j"] == 3);
  CHECK(run({"dual"}, kCubic).json()["points"] == Json::parse("[[0],[1],[2],[3]]"));
  const Json deg = run({"degree", "--theta", "-7/17,-1/17"}, kCubic).json();
  CHECK(deg["coamoeba"] == 2);
  CHECK(deg["cycle"] == 3);
  const Json s = run({"sample", "--count", "50", "--seed", "3"}, kCubic).json();
  CHECK(s["violations"].empty());
  CHECK(s["checked"].get<int>() + s["skipped"].get<int>() == 50);
}

TEST_CASE("pivot and normalization flags") {
  const Json p2 = run({"chains", "--pivot", "2"}, kParallel).json();
  CHECK(p2["line"]["forms"] == Json::parse("[[1,1],[-2,-2],[1,0],[0,1]]"));
  CHECK(p2["line"]["perm"] == Json::parse("[4,3,1,2]"));
  // Either position of the flag works.
  CHECK(run({"--pivot", "2", "chains"}, kParallel).out == run({"chains", "--pivot", "2"}, kParallel).out);
  const std::string signs = R"({"forms": [[-3,0],[1,0],[0,1]]})";
  CHECK(run({"chains"}, signs).json()["line"]["forms"][0] == Json::parse("[1,0]"));
  CHECK(run({"chains", "--no-normalize"}, signs).json()["line"]["forms"][0] == Json::parse("[-3,0]"));
}

TEST_CASE("chains output can be fed back in") {
  for (const std::vector<std::string>& flags :
       {std::vector<std::string>{}, {"--pivot", "2"}, {"--pivot", "1"}, {"--no-normalize"}}) {
    std::vector<std::string> args{"chains"};
    args.insert(args.end(), flags.begin(), flags.end());
    const Result first = run(args, kParallel);
    REQUIRE(first.code == 0);
    const Result second = run({"chains"}, first.out);
    REQUIRE(second.code == 0);
    Json a = first.json(), b = second.json();
    // The re-ingested vectors are already in line order.
    CHECK(b["line"]["perm"] == Json::parse("[1,2,3,4]"));
    a["line"].erase("perm");
    b["line"].erase("perm");
    for (const char* key : {"line", "vertices", "f", "g", "h", "path", "triangles"}) CHECK(a[key] == b[key]);
    CHECK(run({"verify"}, first.out).code == 0);
    CHECK(run({"class"}, first.out).json()["pushed"] == run(std::vector<std::string>{"class"}, kParallel).json()["pushed"]);
  }
}

TEST_CASE("forms input") {
  const std::string forms = R"({"forms": [[1,0],[-2,1],[1,-2],[0,1]]})";
  CHECK(run({"chains"}, forms).code == 0);
  CHECK(run({"class"}, forms).json()["class"].size() == 1);
  CHECK(run({"db"}, forms).code == cli::kInputError);
  const std::string plane = R"({"forms": [[-1,0],[0,-1],[0,1]]})";
  CHECK(run({"degree", "--theta", "1/3,1/5"}, plane).json()["cycle"] == 1);
  CHECK(run({"verify"}, plane).code == 0);
}

TEST_CASE("render writes a file") {
  const auto dir = std::filesystem::temp_directory_path() / "coamoeba_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "t.svg").string();
  CHECK(run({"render", "--out", path, "--resolution", "16"}, kCubic).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str().find("</svg>") != std::string::npos);
  CHECK(run({"render", "--out", path, "--palette", "nope"}, kCubic).code == cli::kInputError);
  CHECK(run({"cover", "--out", path, "--resolution", "16"}, kParallel).code == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("bundled data files") {
  CHECK(run({"verify", std::string(DATA_DIR) + "/rational_cubic.txt"}).code == 0);
  CHECK(run({"db", std::string(DATA_DIR) + "/parallel.json"}).json()["d_B"] == 2);
}
