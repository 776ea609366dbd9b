#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ppc/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = ppc::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

void check_round_trip(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  CHECK(j.dump(2) + "\n" == text);
}

}  // namespace

TEST_CASE("cli examples") {
  const auto d = run({"density", "--n", "5", "--p", "2"});
  CHECK(d.status == 0);
  CHECK(d.out == "1/4\n");
  const auto s = run({"bounds", "--sample-count", "--epsilon", "0.01", "--c0", "0.0526315789"});
  CHECK(s.status == 0);
  CHECK(s.out == "86\n");
  CHECK(run({"bounds", "--sample-count", "--epsilon", "1/100", "--c0", "1/19"}).out == "86\n");
  const auto r2 = run({"verify-r2", "--max", "20000", "--threads", "2"});
  CHECK(r2.status == 0);
  CHECK(r2.out.find("exceptions: {5,6,7}") != std::string::npos);
}

TEST_CASE("cli usage errors exit 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"density", "--n", "5", "--bogus"}).status == 2);
  CHECK(run({"density", "--n", "five", "--p", "2"}).status == 2);
  CHECK(run({"density", "--n", "5/2", "--p", "2"}).status == 2);
  CHECK(run({"density", "--n", "5", "--p", "4"}).status == 2);
  CHECK(run({"density", "--n", "5"}).status == 2);
  CHECK(run({"density", "--n", "500", "--lo", "2", "--hi", "7"}).status == 2);
  CHECK(run({"bounds", "--sample-count", "--epsilon", "0"}).status == 2);
  CHECK(run({"estimate", "--n", "5", "--lo", "1", "--hi", "2", "--format", "xml"}).status == 2);
  CHECK(run({"recognize", "--n", "5"}).status == 2);
  const auto e = run({"avoid", "--n", "4", "--set", "9"});
  CHECK(e.status == 2);
  CHECK(!e.err.empty());
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("cli json reports round-trip") {
  const std::vector<std::vector<std::string>> commands{
      {"density", "--n", "9", "--lo", "2", "--hi", "7", "--tu", "--group", "alt"},
      {"density", "--n", "9", "--sigma", "--p", "3"},
      {"density", "--n", "7", "--cycle"},
      {"avoid", "--n", "10", "--set", "1,3-4"},
      {"verify-primes", "--limit", "3000", "--grid", "200", "--pairs", "50"},
      {"verify-r2", "--max", "3000"},
      {"bounds", "--n", "162755"},
      {"bounds", "--log-n", "22026.465794806718", "--delta", "2"},
      {"bounds", "--n", "1000000", "--a", "13.8", "--d", "2.6"},
      {"bounds", "--mu", "3/2"},
      {"bounds", "--a", "12", "--b", "100"},
      {"bounds", "--harmonic", "1000"},
      {"bounds", "--sample-count", "--epsilon", "0.01", "--c0", "1/19"},
      {"estimate", "--n", "10", "--lo", "1", "--hi", "7", "--trials", "5000", "--exact"},
      {"estimate", "--n", "10", "--event", "avoid", "--set", "1", "--trials", "5000", "--exact"},
      {"recognize", "--n", "20", "--seed", "4"},
      {"recognize", "--n", "20", "--runs", "5"},
  };
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    const auto r = run(args);
    INFO(args.front() << " " << args[1] << " " << r.err);
    CHECK(r.status == 0);
    check_round_trip(r.out);
  }
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> est{"estimate", "--n", "15", "--event", "u", "--lo", "1", "--hi", "13",
                                     "--trials", "20000", "--seed", "9", "--format", "json"};
  auto threaded = est;
  threaded.insert(threaded.end(), {"--threads", "4"});
  CHECK(run(est).out == run(threaded).out);
  const std::vector<std::string> rec{"recognize", "--n", "30", "--group", "alt", "--runs", "20", "--seed", "2"};
  CHECK(run(rec).out == run(rec).out);
}

TEST_CASE("cli csv and output files") {
  const auto csv = run({"avoid", "--n", "10", "--set", "1", "--format", "csv"});
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("name,n,mu,group,lhs,rhs,rhs_hi,holds,margin\n", 0) == 0);
  const auto flat = run({"density", "--n", "5", "--p", "2", "--format", "csv"});
  CHECK(flat.out.rfind("name,value\n", 0) == 0);

  const auto path = std::filesystem::temp_directory_path() / "ppc_test_cli_out.json";
  const auto r = run({"bounds", "--mu", "2", "--format", "json", "--output", path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  check_round_trip(buffer.str());
  std::filesystem::remove(path);
}

TEST_CASE("cli sieve cache from the environment") {
  const auto path = std::filesystem::temp_directory_path() / "ppc_test_env_cache.bin";
  std::filesystem::remove(path);
  ::setenv(ppc::cli::kSieveCacheEnv, path.string().c_str(), 1);
  const auto first = run({"verify-r2", "--max", "5000"});
  CHECK(std::filesystem::exists(path));
  const auto second = run({"verify-r2", "--max", "5000"});
  ::unsetenv(ppc::cli::kSieveCacheEnv);
  CHECK(first.status == 0);
  CHECK(first.out == second.out);
  std::filesystem::remove(path);
}

TEST_CASE("cli replay input") {
  const auto path = std::filesystem::temp_directory_path() / "ppc_test_cli_replay.txt";
  {
    std::ofstream f(path);
    f << "2 3 1 4 5 6 7 8\n";
  }
  const auto r = run({"recognize", "--input", path.string(), "--epsilon", "0.5", "--c0", "1/2"});
  CHECK(r.status == 0);
  CHECK(r.out == "found a pre-3-cycle after 1 draws\n");
  std::filesystem::remove(path);
}
