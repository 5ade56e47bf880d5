#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "exchange/cli.hpp"
#include "exchange/family_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = exchange::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("exchange_cli_" + name);
}

}  // namespace

TEST_CASE("construct writes a family file") {
  const auto path = temp_file("aak22.txt");
  const Run r = run({"construct", "--family", "aak", "--s", "2", "--t", "2", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "constructed aak(s=2,t=2) n=4 members=15 out=" + path.string() + "\n");
  const auto family = exchange::read_family_file(path.string());
  CHECK(family.ground_size() == 4);
  CHECK(family.count() == 15);
  std::filesystem::remove(path);
}

TEST_CASE("construct to stdout round-trips") {
  const Run r = run({"construct", "--family", "thm3", "--n", "6", "--k", "3"});
  CHECK(r.code == 0);
  const auto family = exchange::parse_family(r.out);
  CHECK(family.count() == 48);
}

TEST_CASE("verify exit codes and witness lines") {
  const Run bad = run({"verify", "--family", "aak", "--s", "5", "--t", "2", "--condition", "ordered"});
  CHECK(bad.code == 1);
  CHECK(bad.out.rfind("VIOLATION ordered A={1,2,6} B={7,8,9,10}", 0) == 0);
  const Run good = run({"verify", "--family", "aak", "--s", "3", "--t", "3", "--condition", "cond3"});
  CHECK(good.code == 0);
  CHECK(good.out == "PASS cond3 aak(s=3,t=3) members=256\n");
  CHECK(run({"verify", "--family", "aak", "--s", "3", "--t", "3", "--condition", "nope"}).code == 2);
  CHECK(run({"verify", "--family", "aak", "--s", "3", "--t", "3"}).code == 2);
}

TEST_CASE("verify reads family files") {
  const auto path = temp_file("singletons.txt");
  {
    std::ofstream f(path);
    f << "# empty set and singletons\nn 3\n-\n1\n2\n3\n";
  }
  const Run r = run({"verify", "--in", path.string(), "--condition", "weak"});
  CHECK(r.code == 1);
  const Run both = run({"verify", "--in", path.string(), "--condition", "both"});
  CHECK(both.code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("parse errors exit 2 with the line number") {
  const auto path = temp_file("broken.txt");
  {
    std::ofstream f(path);
    f << "n 3\n1 2\n2 1\n";
  }
  const Run r = run({"verify", "--in", path.string(), "--condition", "weak"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 3") != std::string::npos);
  CHECK(run({"verify", "--in", "/nonexistent/file", "--condition", "weak"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("count and rank") {
  const Run c = run({"count", "--family", "aak", "--s", "2", "--t", "2"});
  CHECK(c.code == 0);
  CHECK(c.out == "enumerated=15 formula=15\n");
  const Run c3 = run({"count", "--family", "thm3", "--n", "6", "--k", "3"});
  CHECK(c3.out == "enumerated=48 formula=48\n");
  const Run rk = run({"rank", "--family", "thm3", "--n", "12", "--k", "3"});
  CHECK(rk.code == 0);
  CHECK(rk.out == "rank=6 formula=6\n");
}

TEST_CASE("search") {
  const Run r = run({"search", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("minimum=4\n", 0) == 0);
  const Run rk = run({"search", "--n", "4", "--objective", "rank"});
  CHECK(rk.out.rfind("minimum_rank=3\n", 0) == 0);
  CHECK(run({"search", "--n", "7"}).code == 2);
  CHECK(run({"search", "--n", "4", "--budget", "3"}).code == 2);
}

TEST_CASE("extract success and failure") {
  const Run ok = run({"extract", "--family", "thm3", "--n", "12", "--k", "3", "--tree-s", "2", "--tree-t", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("members=7 s=2 t=2\n", 0) == 0);
  const auto path = temp_file("singletons3.txt");
  {
    std::ofstream f(path);
    f << "n 3\n-\n1\n2\n3\n";
  }
  const Run fail = run({"extract", "--in", path.string(), "--tree-s", "2", "--tree-t", "2"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("FAILURE path=") != std::string::npos);
  CHECK(run({"extract", "--in", path.string(), "--tree-s", "2"}).code == 2);
  std::filesystem::remove(path);
}

TEST_CASE("bounds") {
  const Run r = run({"bounds", "--n", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("thm1_size_lower_log2=14.2 (heuristic: o(1) dropped)\n") != std::string::npos);
}

TEST_CASE("json output") {
  const Run v = run({"--json", "verify", "--family", "aak", "--s", "5", "--t", "2", "--condition", "ordered"});
  CHECK(v.code == 1);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["result"] == "violation");
  CHECK(j["A"] == nlohmann::json::array({1, 2, 6}));
  CHECK(j["B"] == nlohmann::json::array({7, 8, 9, 10}));
  const Run c = run({"--json", "count", "--family", "aak", "--s", "2", "--t", "2"});
  const auto jc = nlohmann::json::parse(c.out);
  CHECK(jc["enumerated"] == 15);
}

TEST_CASE("usage and scale guards") {
  CHECK(run({}).code == 2);
  CHECK(run({"verify", "--bogus"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--family", "powerset", "--n", "40"}).code == 2);
  CHECK(run({"count", "--family", "aak"}).code == 2);
}

TEST_CASE("repeat runs are byte-identical") {
  const std::vector<std::string> args{"verify", "--family", "aak", "--s", "5", "--t", "2", "--condition", "cond3"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  const std::vector<std::string> threaded{"--threads", "3", "verify", "--family", "aak", "--s",
                                          "5",         "--t", "2",    "--condition", "ordered"};
  CHECK(run(threaded).out == run({"verify", "--family", "aak", "--s", "5", "--t", "2", "--condition", "ordered"}).out);
}
