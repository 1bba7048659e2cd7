#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli/cli.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kSixThree = "L^-2 + 3 + L^2 - M^2L^-2 - 3M^2 - M^2L^2 + M^4";
const std::string kSixThreeEgc = "a1-b2-b3+a4-b5-b6+b7-b1-a2-b8+a9+a3+b10+a5-a6+a7-a8+b9+b4-a10+";
const std::string kSixThreeFile = std::string(KNOTID_DATA_DIR) + "/examples/6.3.txt";

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = knotid::cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("knotid_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter_++))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name, const std::string& contents) const {
    const auto p = (path_ / name).string();
    std::ofstream(p) << contents;
    return p;
  }
  std::string path(const std::string& name) const { return (path_ / name).string(); }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("coords2egc to stdout and to a file") {
  TempDir dir;
  const auto r = run({"coords2egc", kSixThreeFile});
  CHECK(r.status == 0);
  CHECK(r.out == kSixThreeEgc + "\n");
  const auto egc = dir.path("6.3.egc");
  const auto f = run({"knotid", "coords2egc", kSixThreeFile, egc});
  CHECK(f.status == 0);
  CHECK(f.out.empty());
  CHECK(slurp(egc) == r.out);
  CHECK(run({"coords2egc", "--"}, slurp(kSixThreeFile)).out == r.out);
}

TEST_CASE("coords2egc missing file") {
  const auto r = run({"coords2egc", "/nonexistent/6.3.txt"});
  CHECK(r.status != 0);
  CHECK(r.out.empty());
  CHECK(r.err.find("/nonexistent/6.3.txt") != std::string::npos);
}

TEST_CASE("xinger") {
  const auto r = run({"xinger", "+r", "--"}, "b1-b2+b3-a3-a2+a1-\n" + kSixThreeEgc + "\n");
  CHECK(r.status == 0);
  CHECK(r.out == "b1-a1-\na1-b2-b3+a4-b5-b1-a2-b6+a7+a3+b8+a5-a6+b7+b4-a8+\n");
  CHECK(run({"xinger", "+r", "--"}, "").out.empty());
  CHECK(run({"xinger", "--"}, "b1-a1-\n").status == 2);
  const auto bad = run({"xinger", "+r", "--"}, "b1-a1-\na1+b2+\n");
  CHECK(bad.status == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("jhomfly") {
  const auto r = run({"jhomfly", "--"}, "b1-a1-\na1-b2-b3+a4-b5-b1-a2-b6+a7+a3+b8+a5-a6+b7+b4-a8+\n");
  CHECK(r.out == "1\n" + kSixThree + "\n");
  CHECK(run({"jhomfly", "--"}, kSixThreeEgc + "\n").out == kSixThree + "\n");
  std::string big;
  for (int i = 1; i <= 60; ++i) big += "b" + std::to_string(i) + "-a" + std::to_string(i) + "-";
  const auto capped = run({"jhomfly", "--"}, "b1-a1-\n" + big + "\n");
  CHECK(capped.status == 1);
  CHECK(capped.err.find("line 2") != std::string::npos);
  CHECK(run({"jhomfly", "--jobs", "4", "--"}, "b1-a1-\n" + kSixThreeEgc + "\nb1-a1-,b2-a2-\n").out ==
        run({"jhomfly", "--"}, "b1-a1-\n" + kSixThreeEgc + "\nb1-a1-,b2-a2-\n").out);
}

TEST_CASE("jidknot") {
  CHECK(run({"jidknot", "-k", "--"}, "1\n" + kSixThree + "\n").out == "a0.1\na6.3\n");
  CHECK(run({"jidknot", "-k", "-j", "--"}, "M^100\n").out == "unknown\n");
  CHECK(run({"jidknot", "--"}, "1\n").status == 2);
  CHECK(run({"jidknot", "-k", "-j", "-f", "x", "--"}, "1\n").status == 2);
  TempDir dir;
  const auto table = dir.file("one.txt", "1,a0.1\n");
  CHECK(run({"jidknot", "-k", "-f", table, "--"}, "1\n" + kSixThree + "\n").out == "a0.1\nunknown\n");
  CHECK(run({"jidknot", "-k", "-f", dir.path("missing.txt"), "--"}, "1\n").status == 1);
  CHECK(run({"jidknot", "-k", "--"}, "1\nL +\n").status == 1);
}

TEST_CASE("stdin and file input agree, stdout and file output agree") {
  TempDir dir;
  const std::string egcs = "b1-b2+b3-a3-a2+a1-\n" + kSixThreeEgc + "\n";
  const auto in = dir.file("egcs.txt", egcs);
  for (const std::vector<std::string>& cmd : {std::vector<std::string>{"xinger", "+r"}, {"jhomfly"}, {"egc2knottypes"}}) {
    auto with_file = cmd;
    with_file.push_back(in);
    auto with_stdin = cmd;
    with_stdin.push_back("--");
    auto to_file = with_file;
    to_file.push_back(dir.path("out.txt"));
    const auto a = run(with_file), b = run(with_stdin, egcs), c = run(to_file);
    CHECK(a.out == b.out);
    CHECK(c.out.empty());
    CHECK(slurp(dir.path("out.txt")) == a.out);
  }
}

TEST_CASE("pipeline commands") {
  CHECK(run({"coords2knottype", kSixThreeFile}).out == "a6.3\n");
  CHECK(run({"knotid", "coords2knottype", "-n", kSixThreeFile}).out == "a6.3\n");
  CHECK(run({"egc2knottypes", "--"}, "b1+b2-a3-a1+a4+b5+a6+b7+a2-b3-a8+b6+a7+b8+a9+b4+a5+b9+\n").out == "p8.21\n");
  CHECK(run({"egc2knottypes", "-n", "--"}, "a1+b2+a3+b1+a2+b3+\n").out ==
        run({"egc2knottypes", "--"}, "a1+b2+a3+b1+a2+b3+\n").out);
}

TEST_CASE("batch commands keep order and continue past failures") {
  TempDir dir;
  const auto tri = dir.file("triangle.txt", "0 0 0\n1 0 0\n0 1 0\n");
  const auto list = dir.file("files.txt", kSixThreeFile + "\n" + tri + "\n" + dir.path("missing.txt") + "\n" + tri + "\n");
  const auto r = run({"batch_coords2knottypes", "--jobs", "3", list});
  CHECK(r.status == 1);
  CHECK(r.out == "a6.3\na0.1\nerror\na0.1\n");
  CHECK(r.err.find("missing.txt") != std::string::npos);
  const auto e = run({"batch_coords2egc", list});
  CHECK(e.out == kSixThreeEgc + "\nb1-a1-\nerror\nb1-a1-\n");
  const auto k = run({"egc2knottypes", "--"}, "b1-a1-\nnonsense\n" + kSixThreeEgc + "\n");
  CHECK(k.status == 1);
  CHECK(k.out == "a0.1\nerror\na6.3\n");
  CHECK(k.err.find("line 2") != std::string::npos);
}

TEST_CASE("usage") {
  CHECK(run({"knotid"}).status == 2);
  CHECK(run({"knotid", "help"}).status == 0);
  CHECK(run({"knotid", "frobnicate"}).status == 2);
  CHECK(run({"jhomfly", "--bogus", "--"}).status == 2);
  CHECK(run({"/usr/local/bin/jhomfly", "--"}, "b1-a1-\n").out == "1\n");
}

TEST_CASE("build-table reproduces the shipped table") {
  const auto r = run({"knotid", "build-table", "--max-crossing", "10"});
  CHECK(r.status == 0);
  CHECK(r.out == slurp(std::string(KNOTID_DATA_DIR) + "/knot_table.txt"));
}

}
