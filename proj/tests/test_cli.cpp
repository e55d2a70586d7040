#include <catch_amalgamated.hpp>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "garside/garside.hpp"

using namespace garside;
using braid::BraidContext;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("nf prints the left normal form") {
  const auto r = run({"nf", "-n", "3", "1 2 1 1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "D^1 (1)\n");
}

TEST_CASE("conj finds a verifying witness") {
  const auto r = run({"conj", "-n", "3", "1", "2", "--json"});
  REQUIRE(r.code == cli::kSuccess);
  const Json doc = Json::parse(r.out);
  CHECK(doc["result"] == true);
  BraidContext b3(3);
  const auto c = braid::parse_element(b3, doc["witness"].get<std::string>());
  CHECK(conjugate(braid::parse_element(b3, "1"), c) == braid::parse_element(b3, "2"));
}

TEST_CASE("conj reports non-conjugate pairs with exit code 1") {
  const auto r = run({"conj", "-n", "3", "1", "-1"});
  CHECK(r.code == cli::kNotConjugate);
  CHECK(r.out.find("not conjugate") != std::string::npos);
  const auto j = run({"conj", "-n", "3", "1", "-1", "--json"});
  CHECK(j.code == cli::kNotConjugate);
  CHECK(Json::parse(j.out)["result"] == false);
  CHECK(Json::parse(j.out)["witness"].is_null());
}

TEST_CASE("circuit reports the period of the B5 example") {
  const auto r = run({"circuit", "-n", "5", "D 2 1 4 3 4 . 1"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("period: 6") != std::string::npos);
  const auto j = run({"circuit", "-n", "5", "D 2 1 4 3 4 . 1", "--json"});
  CHECK(Json::parse(j.out)["stats"]["N"] == 6);
}

TEST_CASE("slide applies the requested number of steps") {
  const auto r = run({"slide", "-n", "3", "1 2", "--steps", "3"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out == "D^0 (1 2)\nD^0 (2 1)\nD^0 (1 2)\nD^0 (2 1)\n");
}

TEST_CASE("json envelope has the documented fields in order") {
  const auto r = run({"sc", "-n", "4", "1 2 -3", "--json"});
  REQUIRE(r.code == cli::kSuccess);
  const Json doc = Json::parse(r.out);
  std::vector<std::string> keys;
  for (const auto& [k, v] : doc.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"input", "n", "result", "witness", "stats"});
  std::vector<std::string> stat_keys;
  for (const auto& [k, v] : doc["stats"].items()) stat_keys.push_back(k);
  CHECK(stat_keys ==
        std::vector<std::string>{"T", "N", "M", "R_max", "pullback_max", "sc_size", "contract_calls"});
  CHECK(doc["stats"]["sc_size"].get<int>() >= 1);
}

TEST_CASE("json output is byte-stable") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"scg", "-n", "5", "D 2 1 4 3 4 1", "--json"},
        std::vector<std::string>{"conj", "-n", "4", "1 2 -3 2", "3 2 -1 2", "--json"},
        std::vector<std::string>{"oracle-check", "-n", "4", "--seed", "5", "--count", "10", "--json"},
        std::vector<std::string>{"stats", "-n", "4", "1 2 -3", "--json"}}) {
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == cli::kSuccess);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("dot output has one node per vertex and one edge per arrow") {
  for (const auto& [n, word] : std::vector<std::pair<std::string, std::string>>{
           {"5", "D 2 1 4 3 4 1"}, {"4", "1 2 -3"}, {"4", "1 1 2 -3 -3"}, {"3", "D"}}) {
    const auto dot = run({"scg", "-n", n, word, "--dot"});
    const auto json = run({"scg", "-n", n, word, "--json"});
    REQUIRE(dot.code == cli::kSuccess);
    REQUIRE(json.code == cli::kSuccess);
    const Json doc = Json::parse(json.out);
    CHECK(count_of(dot.out, " -> ") == doc["result"]["arrows"].size());
    CHECK(count_of(dot.out, "[label=\"D^") == doc["result"]["vertices"].size());
    CHECK(doc["stats"]["sc_size"] == doc["result"]["vertices"].size());
  }
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == cli::kUsageError);
  CHECK(run({"nf", "1 2"}).code == cli::kUsageError);
  CHECK(run({"nf", "-n", "1", "1"}).code == cli::kUsageError);
  CHECK(run({"conj", "-n", "3", "1"}).code == cli::kUsageError);
  CHECK(run({"scg", "-n", "3", "1", "--dot", "--json"}).code == cli::kUsageError);
  CHECK(run({"bogus"}).code == cli::kUsageError);
}

TEST_CASE("parse errors name the position") {
  const auto r = run({"nf", "-n", "3", "1 x"});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("position 2") != std::string::npos);
  const auto range = run({"nf", "-n", "3", "1 2 3"});
  CHECK(range.code == cli::kUsageError);
  CHECK(range.err.find("position 4") != std::string::npos);
}

TEST_CASE("oversized oracle requests are refused") {
  const auto r = run({"conj", "-n", "7", "1", "2", "--oracle"});
  CHECK(r.code == cli::kUsageError);
  CHECK(r.err.find("refused") != std::string::npos);
  CHECK(run({"oracle-check", "-n", "8"}).code == cli::kUsageError);
  CHECK(run({"conj", "-n", "7", "1", "2"}).code == cli::kSuccess);
}

TEST_CASE("oracle cross-checks agree") {
  const auto r = run({"conj", "-n", "4", "1 2", "2 3", "--oracle", "--json"});
  REQUIRE(r.code == cli::kSuccess);
  CHECK(Json::parse(r.out)["oracle_agrees"] == true);
  const auto c = run({"oracle-check", "-n", "3", "--seed", "1", "--count", "20", "--json"});
  REQUIRE(c.code == cli::kSuccess);
  const Json doc = Json::parse(c.out);
  CHECK(doc["result"]["pairs"] == 20);
  CHECK(doc["result"]["agreed"] == 20);
  CHECK(doc["result"]["failures"].empty());
}
