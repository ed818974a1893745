#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fibdig/cli.hpp"

using nlohmann::json;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int status = fibdig::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::set<std::string> keys_of(const json& j) {
  std::set<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.insert(it.key());
  return out;
}

const std::set<std::string> kScanKeys = {"set",       "base",
                                         "n_digits",  "scan_length",
                                         "verdict",   "exceptions",
                                         "witness",   "elapsed_seconds"};

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FIBDIG_FIXTURE_DIR) + "/" + name,
                   std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("fib prints the exact value") {
  CliResult r = run_cli({"fib", "21"});
  CHECK(r.status == 0);
  CHECK(r.out == "10946\n");

  CliResult json_r = run_cli({"fib", "21", "--format", "json"});
  json parsed = json::parse(json_r.out);
  CHECK(parsed["n"] == 21);
  CHECK(parsed["value"] == "10946");
}

TEST_CASE("pisano emits csv with no trailing separator") {
  CliResult r = run_cli({"pisano", "10"});
  CHECK(r.status == 0);
  CHECK(r.out == "modulus,period\n10,60\n");

  CliResult multi = run_cli({"pisano", "2", "3", "1000"});
  CHECK(multi.out == "modulus,period\n2,3\n3,8\n1000,1500\n");

  CliResult as_json = run_cli({"pisano", "10", "--format", "json"});
  json parsed = json::parse(as_json.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed[0]["modulus"] == 10);
  CHECK(parsed[0]["period"] == 60);
}

TEST_CASE("scan report carries the fixed field set") {
  CliResult r = run_cli({"scan", "--omit", "6", "--digits", "5",
                         "--format", "json"});
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(keys_of(parsed) == kScanKeys);
  CHECK(parsed["verdict"] == "covered");
  CHECK(parsed["set"] == json::array({0, 1, 2, 3, 4, 5, 7, 8, 9}));
  CHECK(parsed["base"] == 10);
  CHECK(parsed["n_digits"] == 5);
  CHECK(parsed["scan_length"] == 150000);
  CHECK(parsed["exceptions"].empty());
  CHECK(parsed["witness"].is_null());
  CHECK(parsed["elapsed_seconds"].is_number());
}

TEST_CASE("scan records small exceptions") {
  CliResult r = run_cli({"scan", "--omit", "2", "--digits", "3",
                         "--format", "json"});
  json parsed = json::parse(r.out);
  CHECK(parsed["verdict"] == "covered");
  REQUIRE(parsed["exceptions"].size() == 1);
  CHECK(parsed["exceptions"][0]["index"] == 3);
  CHECK(parsed["exceptions"][0]["value"] == "2");
}

TEST_CASE("scan reports inconclusive witnesses") {
  CliResult r = run_cli({"scan", "--omit", "7", "--digits", "3",
                         "--format", "json"});
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(parsed["verdict"] == "inconclusive");
  CHECK(parsed["exceptions"].empty());
  REQUIRE(parsed["witness"].is_object());
  CHECK(keys_of(parsed["witness"]) == std::set<std::string>{"index", "tail"});
  CHECK(parsed["witness"]["tail"] == "777");

  CliResult fib_set = run_cli({"scan", "--set", "12358", "--digits", "3",
                               "--format", "json"});
  json fib_parsed = json::parse(fib_set.out);
  CHECK(fib_parsed["witness"]["index"] == 21);
  CHECK(fib_parsed["witness"]["tail"] == "946");
}

TEST_CASE("omit is sugar for the complement set") {
  CliResult omit = run_cli({"scan", "--omit", "6", "--digits", "3",
                            "--format", "json"});
  CliResult full = run_cli({"scan", "--set", "0,1,2,3,4,5,7,8,9",
                            "--digits", "3", "--format", "json"});
  json a = json::parse(omit.out);
  json b = json::parse(full.out);
  a.erase("elapsed_seconds");
  b.erase("elapsed_seconds");
  CHECK(a == b);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"scan", "--omit", "6", "--digits", "3"}).status == 0);
  CHECK(run_cli({"scan", "--omit", "6", "--digits", "5",
                 "--require-covered"}).status == 0);
  CHECK(run_cli({"scan", "--omit", "7", "--digits", "3",
                 "--require-covered"}).status == 1);
  CHECK(run_cli({"scan", "--omit", "7", "--digits", "3"}).status == 0);
  // Usage errors.
  CHECK(run_cli({"scan", "--omit", "7"}).status == 2);
  CHECK(run_cli({"scan", "--omit", "7", "--digits", "3",
                 "--frobnicate"}).status == 2);
  CHECK(run_cli({"nonsense"}).status == 2);
  CHECK(run_cli({}).status == 2);
  CHECK(run_cli({"scan", "--set", "x", "--digits", "3"}).status == 2);
  CHECK(run_cli({"scan", "--set", "12358", "--omit", "6",
                 "--digits", "3"}).status == 2);
  CHECK(run_cli({"fib", "21", "--format", "tsv"}).status == 2);
  CHECK(run_cli({"repdigit", "--digit", "6", "--prime", "7"}).status == 2);
}

TEST_CASE("help exits zero") {
  CliResult r = run_cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("scan") != std::string::npos);
}

TEST_CASE("table1 tsv matches the checked-in fixture") {
  CliResult r = run_cli({"table1"});
  CHECK(r.status == 0);
  CHECK(r.out == read_fixture("table1_maxn5.tsv"));
  // The three rows certified at full depth, byte for byte.
  CHECK(r.out.find("{0,1,3,4,5,6,7,8,9}\tyes\tF_3=2\t3\n") != std::string::npos);
  CHECK(r.out.find("{0,1,2,3,5,6,7,8,9}\tyes\t-\t3\n") != std::string::npos);
  CHECK(r.out.find("{0,1,2,3,4,5,7,8,9}\tyes\t-\t5\n") != std::string::npos);
  // Rows capped below their full depth announce it on stderr.
  CHECK(r.err.find("--max-n") != std::string::npos);
}

TEST_CASE("table1 json mirrors the scan reports") {
  CliResult r = run_cli({"table1", "--max-n", "3", "--format", "json"});
  json parsed = json::parse(r.out);
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 11);
  for (const json& row : parsed) {
    CHECK(keys_of(row) == std::set<std::string>{"omitted", "n_digits", "full_n",
                                                "capped", "disregarded",
                                                "scan"});
    CHECK(keys_of(row["scan"]) == kScanKeys);
    CHECK(row["n_digits"] == 3);
  }
  // Row for omitting 5: both 5 and 55 are disregarded.
  const json& row5 = parsed[4];
  CHECK(row5["omitted"] == json::array({5}));
  REQUIRE(row5["disregarded"].size() == 2);
  CHECK(row5["disregarded"][0]["value"] == "5");
  CHECK(row5["disregarded"][1]["value"] == "55");
}

TEST_CASE("depth report") {
  CliResult r = run_cli({"depth", "--set", "12358", "--max-index", "21",
                         "--format", "json"});
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(keys_of(parsed) == std::set<std::string>{"set", "base", "max_index",
                                                 "records", "no_hit_indices"});
  REQUIRE(parsed["records"].size() == 4);
  CHECK(parsed["records"][3]["index"] == 21);
  CHECK(parsed["records"][3]["depth"] == 5);
}

TEST_CASE("repdigit transcript and report") {
  CliResult human = run_cli({"repdigit", "--digit", "6"});
  CHECK(human.status == 0);
  CHECK(human.out.find("2^5 = 32") != std::string::npos);
  CHECK(human.out.find("congruent to 10 mod 32") != std::string::npos);
  CHECK(human.out.find("6666 is not a Fibonacci number") != std::string::npos);

  CliResult r = run_cli({"repdigit", "--digit", "6", "--format", "json"});
  json parsed = json::parse(r.out);
  CHECK(keys_of(parsed) == std::set<std::string>{
                               "digit", "base", "prime", "exponent", "modulus",
                               "excluded_residue", "long_case_excluded",
                               "short_cases"});
  CHECK(parsed["modulus"] == 32);
  CHECK(parsed["excluded_residue"] == 10);
  CHECK(parsed["long_case_excluded"] == true);
  REQUIRE(parsed["short_cases"].size() == 4);
  CHECK(parsed["short_cases"][0]["is_fibonacci"] == false);

  CliResult search = run_cli({"repdigit", "--digit", "6", "--search",
                              "--format", "json"});
  json searched = json::parse(search.out);
  CHECK(searched["modulus"] == 16);
  CHECK(searched["long_case_excluded"] == true);

  // A search that excludes nothing is a reported outcome, not an error.
  CliResult none = run_cli({"repdigit", "--digit", "5", "--search",
                            "--format", "json"});
  CHECK(none.status == 0);
  json none_parsed = json::parse(none.out);
  CHECK(none_parsed["found"] == false);
}

TEST_CASE("freq report") {
  CliResult r = run_cli({"freq", "--digit", "5", "--max-index", "10",
                         "--format", "json"});
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(keys_of(parsed) == std::set<std::string>{
                               "digit", "max_index", "contain_count",
                               "contain_fraction", "per_length",
                               "heuristic_avoidance_sum"});
  CHECK(parsed["contain_count"] == 2);
  CHECK(parsed["contain_fraction"] == doctest::Approx(0.2));
}

TEST_CASE("model report") {
  CliResult r = run_cli({"model", "--digit", "6", "--lengths", "1,19",
                         "--trials", "20000", "--seed", "42",
                         "--format", "json"});
  CHECK(r.status == 0);
  json parsed = json::parse(r.out);
  CHECK(keys_of(parsed) == std::set<std::string>{"digit", "lengths", "trials",
                                                 "seed", "workers", "results"});
  CHECK(parsed["seed"] == 42);
  REQUIRE(parsed["results"].size() == 2);
  CHECK(keys_of(parsed["results"][0]) ==
        std::set<std::string>{"length", "avoided", "fraction",
                              "model_probability"});
  // Reproducible under the same seed and worker count.
  CliResult again = run_cli({"model", "--digit", "6", "--lengths", "1,19",
                             "--trials", "20000", "--seed", "42",
                             "--format", "json"});
  CHECK(again.out == r.out);
}

}  // TEST_SUITE
