#include <doctest.h>

#include <cli/cli.hpp>
#include <json.hpp>
#include <polylie/error.hpp>
#include <polylie/relations/reduce.hpp>
#include <polylie/relations/schema.hpp>
#include <polylie/symbolic/parse.hpp>

#include <sstream>

using namespace polylie;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "polylie");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_expression") {
  CHECK(cli::parse_expression("[x,y;1,1]").size() == 1);
  CHECK(cli::parse_expression("2*[x;2] - [x*y;3]").size() == 2);
  CHECK_THROWS_AS(cli::parse_expression("[x,x^-1;1,1]"), AdmissibilityError);
  try {
    cli::parse_expression("[x;2");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("cobracket of [x;2]") {
  auto r = run({"cobracket", "[x;2]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[x;1] ^ [x;0]\n");
  auto j = nlohmann::json::parse(run({"cobracket", "[x;2]", "--format", "json"}).out);
  CHECK(j["result"] == "[x;1] ^ [x;0]");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"cobracket", "[x;2"}).code == 2);
  CHECK(run({"cobracket", "[x,x^-1;1,1]"}).code == 2);
  CHECK(run({"verify", "delta2", "--depth", "9"}).code == 2);
  CHECK(run({"verify", "delta2", "--weight", "0"}).code == 2);
  CHECK(run({"verify", "nonsense"}).code == 2);
  CHECK(run({"bloch", "--q", "6"}).code == 2);
  CHECK(run({"numeric", "check", "five_term", "--tol", "-1"}).code == 2);
  CHECK(run({"numeric", "check", "five_term", "--format", "xml"}).code == 2);
  CHECK(run({"relations", "check", "nine_term"}).code == 2);
}

TEST_CASE("verify suites pass") {
  auto r = run({"verify", "delta2", "--depth", "3", "--weight", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\tPASS\t") != std::string::npos);
  for (const char* suite : {"deltaprime2", "coassoc", "cor13"}) {
    CAPTURE(suite);
    CHECK(run({"verify", suite, "--depth", "2", "--weight", "4"}).code == 0);
  }
  auto j = nlohmann::json::parse(run({"verify", "cor13", "--format", "json"}).out);
  CHECK(j["verdict"] == "PASS");
  for (const char* key : {"name", "points", "max_abs_value", "tolerance", "verdict"}) CHECK(j["reports"][0].contains(key));
}

TEST_CASE("verification failures exit with 1") {
  CHECK(run({"numeric", "check", "[x;2]"}).code == 1);
  CHECK(run({"numeric", "check", "five_term", "--mutate"}).code == 1);
  CHECK(run({"relations", "check", "[4;2]", "--mode", "exact-wedge"}).code == 1);
  CHECK(run({"numeric", "check", "five_term"}).code == 0);
  CHECK(run({"relations", "check", "five_term", "--mode", "exact-wedge", "--at", "x=2,y=3"}).code == 0);
}

TEST_CASE("bloch table") {
  auto r = run({"bloch", "--q", "5,7,11,13"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line.rfind("q\t", 0) == 0);
  int rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::vector<std::string> c;
    std::string cell;
    while (std::getline(cells, cell, '\t')) c.push_back(cell);
    REQUIRE(c.size() >= 6);
    CHECK(c[4] == std::to_string(std::stoi(c[0]) + 1));
    ++rows;
  }
  CHECK(rows == 4);
  auto j = nlohmann::json::parse(run({"bloch", "--q", "4..9", "--format", "json"}).out);
  CHECK(j["rows"].size() == 5);
}

TEST_CASE("same seed gives byte-identical JSON") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"numeric", "check", "weight3_21", "--seed", "11", "--format", "json"},
           {"numeric", "constancy", "five_term", "--seed", "11", "--format", "json"},
           {"relations", "check", "depth_reduction_11", "--mode", "specialize", "--seed", "4", "--format", "json"},
           {"bloch", "--q", "5,7", "--format", "json"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
  auto a = run({"numeric", "check", "weight3_21", "--seed", "11", "--format", "json"});
  auto b = run({"numeric", "check", "weight3_21", "--seed", "12", "--format", "json"});
  CHECK(a.out != b.out);
}

TEST_CASE("printed combinations round-trip") {
  for (const char* text : {"[x,y;1,2]", "[x,y,z;1,1,1]", "[x,y;2,1] - 3*[y;3]"}) {
    auto r = run({"relations", "reduce", text});
    REQUIRE(r.code == 0);
    std::string printed = r.out.substr(0, r.out.size() - 1);
    CHECK(symbolic::to_string(symbolic::parse_lincomb(printed)) == printed);
  }
  for (const auto& s : relations::catalog()) {
    std::string printed = symbolic::to_string(s.element());
    CHECK(symbolic::to_string(symbolic::parse_lincomb(printed)) == printed);
  }
  auto gr = run({"gr-translate", "{x,y;3,1}"});
  CHECK(gr.code == 0);
  CHECK(symbolic::parse_lincomb(gr.out.substr(0, gr.out.size() - 1)) ==
        symbolic::parse_lincomb("-[x*y^-1,y;3,1] - [x;4] + [y;4]"));
}
