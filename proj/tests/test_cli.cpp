// Copyright 2026 The schnyder-greedy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kWork = TEST_WORK_DIR;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  fs::create_directories(kWork);
  const fs::path out = kWork / "stdout.txt";
  const fs::path err = kWork / "stderr.txt";
  const std::string cmd = std::string("cd '") + kWork.string() + "' && '" + SCHNYDER_BIN + "' " + args + " > '" +
                          out.string() + "' 2> '" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

fs::path write_t5() {
  fs::create_directories(kWork);
  const fs::path p = kWork / "t5.tri";
  std::ofstream(p) << "# T5 fixture\n5\n1 4 3 2\n2 3 4 0\n0 3 1\n0 4 1 2\n0 1 3\n";
  return p;
}

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("gen") {
  const Run k4 = run("gen -n 4");
  CHECK(k4.code == 0);
  CHECK(k4.out.find("4\n1 3 2\n2 3 0\n0 3 1\n0 1 2\n") != std::string::npos);

  const Run bad = run("gen -n 3");
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());

  const Run file = run("gen -n 50 --flips 200 --seed 9 -o g50.tri --format json");
  CHECK(file.code == 0);
  const auto j = nlohmann::json::parse(file.out);
  CHECK(j["edges"] == 144);
  CHECK(j["faces"] == 96);
  CHECK(j["config"]["seed"] == 9);
  CHECK(fs::exists(kWork / "g50.tri"));
  CHECK(run("verify g50.tri").code == 0);
}

TEST_CASE("usage and input errors exit with 2") {
  const fs::path t5 = write_t5();
  CHECK(run("").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("verify missing.tri").code == 2);
  CHECK(run("route t5.tri --from 4 --to 9").code == 2);
  CHECK(run("route t5.tri --from 4 --to 4").code == 2);
  CHECK(run("allpairs t5.tri --strategy bogus").code == 2);
  std::ofstream(kWork / "broken.tri") << "5\n1 4 3 2\n2 3 4 0\n";
  const Run broken = run("verify broken.tri");
  CHECK(broken.code == 2);
  CHECK(broken.err.find("line") != std::string::npos);
}

TEST_CASE("verify") {
  write_t5();
  const Run t5 = run("verify t5.tri --format json");
  CHECK(t5.code == 0);
  const auto j = nlohmann::json::parse(t5.out);
  CHECK(j["ok"] == true);
  CHECK(j["checks"].size() == 10);

  run("gen -n 4 -o k4.tri");
  CHECK(run("verify k4.tri").code == 0);
  CHECK(run("verify -n 120 --seed 5").code == 0);
}

TEST_CASE("verify with an injected fault fails and leaves a counterexample") {
  write_t5();
  fs::remove_all(kWork / "cex");
  const Run r = run("verify t5.tri --inject-fault swap-coords:3,4 --cex-dir cex --format json");
  CHECK(r.code == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["ok"] == false);
  REQUIRE(fs::exists(kWork / "cex"));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(kWork / "cex")) {
    ++files;
    const auto cex = nlohmann::json::parse(slurp(e.path()));
    CHECK(cex.contains("rotation"));
    CHECK(cex["drawing"]["coords"][3] == nlohmann::json::array({2, 2, 1}));
  }
  CHECK(files >= 1);

  CHECK(run("verify -n 40 --seed 2 --inject-fault shift:10 --cex-dir cex").code == 1);
}

TEST_CASE("draw") {
  write_t5();
  const Run r = run("draw t5.tri --svg t5.svg --bary t5.bary --sat t5.sat");
  CHECK(r.code == 0);
  const std::string svg = slurp(kWork / "t5.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count(svg, "<circle class=\"vertex\"") == 5);
  CHECK(count(svg, "<line class=\"edge\"") == 9);
  CHECK(count(svg, "data-tree=\"T3\"") >= 1);
  CHECK(slurp(kWork / "t5.bary") == "denom 5\n0 5 0 0\n1 0 5 0\n2 0 0 5\n3 1 1 3\n4 2 2 1\n");
  CHECK(slurp(kWork / "t5.sat").find("4 0 1 3") != std::string::npos);

  run("gen -n 4 -o k4.tri");
  const Run k4 = run("draw k4.tri --no-tree-colors --scale 300");
  CHECK(k4.code == 0);
  CHECK(count(k4.out, "<line class=\"edge\"") == 6);
  CHECK(count(k4.out, "data-tree=\"T") == 0);

  const Run big = run("draw -n 200 --seed 1 -o big.svg");
  CHECK(big.code == 0);
  const std::string bsvg = slurp(kWork / "big.svg");
  CHECK(count(bsvg, "<circle class=\"vertex\"") == 200);
  CHECK(bsvg.find("nan") == std::string::npos);
  CHECK(bsvg.find("inf") == std::string::npos);
}

TEST_CASE("route and allpairs") {
  write_t5();
  const Run r = run("route t5.tri --from 4 --to A3 --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["trace"]["hops"] == nlohmann::json::array({4, 3, 2}));
  CHECK(j["trace"]["outcome"] == "Delivered");

  const Run all = run("allpairs t5.tri --format json");
  CHECK(all.code == 0);
  const auto a = nlohmann::json::parse(all.out);
  CHECK(a["pairs_tested"] == 20);
  CHECK(a["delivered"] == 20);

  CHECK(run("allpairs -n 60 --seed 4 --strategy euclidean").code == 0);
  CHECK(run("realize t5.tri").code == 0);
}

TEST_CASE("compare and determinism") {
  const Run one = run("compare -n 40 --seeds 0..5 --format json --threads 1");
  const Run four = run("compare -n 40 --seeds 0..5 --format json --threads 4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  const auto j = nlohmann::json::parse(one.out);
  CHECK(j["rows"].size() == 6);
  CHECK(j["aggregate"]["sector_delivered"] == j["aggregate"]["pairs"]);

  const Run v1 = run("verify -n 80 --seed 8 --format json --threads 1");
  const Run v3 = run("verify -n 80 --seed 8 --format json --threads 3");
  CHECK(v1.out == v3.out);

  run("compare -n 25 --seeds 3..4 --report rep.json");
  const std::string first = slurp(kWork / "rep.json");
  run("compare -n 25 --seeds 3..4 --report rep.json --threads 2");
  CHECK(slurp(kWork / "rep.json") == first);
}
