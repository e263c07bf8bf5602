#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "doctest.h"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "sdst");
  std::ostringstream out, err;
  const int code = sdst::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Scratch {
  fs::path dir;
  Scratch() : dir(fs::temp_directory_path() / ("sdst_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string trim(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

}  // namespace

TEST_CASE("build reports F1 statistics") {
  Scratch tmp;
  const auto input = tmp.write("f1.txt", "1 2\n1 2 3\n2 3 4\n");
  auto r = run({"build", "--input", input, "--output", tmp.path("f1.sd")});
  CHECK(r.code == 0);
  CHECK(r.out.find("s=3 n=8 u=4 delta=3 ell=1") != std::string::npos);

  r = run({"build", "--input", input, "--mode", "insertion", "--output", tmp.path("f1.ins")});
  CHECK(r.code == 0);
  CHECK(r.out.find("I=6") != std::string::npos);
}

TEST_CASE("build failures") {
  Scratch tmp;
  auto r = run({"build", "--input", tmp.path("missing.txt"), "--output", tmp.path("x.sd")});
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot open") != std::string::npos);

  const auto bad = tmp.write("bad.txt", "1 2\n\n3\n");
  r = run({"build", "--input", bad, "--output", tmp.path("x.sd")});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);

  r = run({"build", "--input", bad, "--mode", "lossy", "--output", tmp.path("x.sd")});
  CHECK(r.code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("queries answer in token space") {
  Scratch tmp;
  const auto input = tmp.write("f1.txt", "1 2\n1 2 3\n2 3 4\n");
  const auto store = tmp.path("f1.sd");
  REQUIRE(run({"build", "--input", input, "--output", store}).code == 0);
  auto q = [&](const std::string& set, const std::string& op, const std::string& arg) {
    const auto r = run({"query", "--store", store, "--set", set, "--op", op, "--arg", arg});
    return r.code == 0 ? trim(r.out) : "exit " + std::to_string(r.code);
  };
  CHECK(q("3", "member", "1") == "false");
  CHECK(q("3", "access", "2") == "3");
  CHECK(q("3", "rank", "3") == "2");
  CHECK(q("3", "pred", "1") == "none");
  CHECK(q("3", "succ", "1") == "2");
  CHECK(q("1", "succ", "4") == "none");
  CHECK(q("3", "member", "99") == "false");
  CHECK(q("3", "rank", "99") == "3");
  CHECK(q("3", "rank", "0") == "0");
  CHECK(q("1", "pred", "99") == "2");
  CHECK(q("3", "succ", "0") == "2");
  CHECK(q("3", "access", "4") == "exit 2");
  CHECK(q("3", "access", "x") == "exit 2");
  CHECK(q("4", "member", "1") == "exit 2");
  CHECK(q("0", "member", "1") == "exit 2");
}

TEST_CASE("sparse tokens map back to their original values") {
  Scratch tmp;
  const auto input = tmp.write("sparse.txt", "# ids\n100 5000\n5000 70 100\n");
  const auto store = tmp.path("sparse.sd");
  REQUIRE(run({"build", "--input", input, "--output", store}).code == 0);
  auto r = run({"query", "--store", store, "--set", "2", "--op", "access", "--arg", "1"});
  CHECK(trim(r.out) == "70");
  r = run({"query", "--store", store, "--set", "1", "--op", "pred", "--arg", "4999"});
  CHECK(trim(r.out) == "100");
  r = run({"query", "--store", store, "--set", "1", "--op", "succ", "--arg", "101"});
  CHECK(trim(r.out) == "5000");
}

TEST_CASE("stats prints node counts") {
  Scratch tmp;
  const auto input = tmp.write("f1.txt", "1 2\n1 2 3\n2 3 4\n");
  REQUIRE(run({"build", "--input", input, "--output", tmp.path("f1.sd")}).code == 0);
  REQUIRE(run({"build", "--input", input, "--mode", "insertion", "--output", tmp.path("f1.ins")}).code == 0);
  auto r = run({"stats", "--store", tmp.path("f1.sd")});
  CHECK(r.code == 0);
  CHECK(r.out.find("nodes=5\n") != std::string::npos);
  CHECK(r.out.find("node_identity=ok") != std::string::npos);
  r = run({"stats", "--store", tmp.path("f1.ins")});
  CHECK(r.out.find("nodes=7\n") != std::string::npos);

  tmp.write("junk.sd", "not a store");
  r = run({"stats", "--store", tmp.path("junk.sd")});
  CHECK(r.code == 2);
  CHECK(r.err.find("unsupported format") != std::string::npos);
}

TEST_CASE("verify passes, and fails loudly under the injected fault") {
  auto r = run({"verify", "--trials", "20"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);

  r = run({"verify", "--trials", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS trials=0", 0) == 0);

  r = run({"verify", "--trials", "20", "--inject-fault"});
  CHECK(r.code == 3);
  CHECK(r.out.rfind("FAIL", 0) == 0);
  CHECK(r.out.find("family") != std::string::npos);
}

TEST_CASE("bench runs small workloads") {
  auto r = run({"bench", "--gen", "clustered", "--s", "60", "--u", "500", "--queries", "2000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("advances measured=") != std::string::npos);
  CHECK(r.out.find("query access") != std::string::npos);

  r = run({"bench", "--gen", "nested", "--s", "0", "--u", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("nothing to measure") != std::string::npos);

  r = run({"bench", "--gen", "random", "--s", "30", "--u", "200", "--threads", "2", "--queries", "1000",
           "--mode", "insertion"});
  CHECK(r.code == 0);
}
