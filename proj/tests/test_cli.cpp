// Copyright 2026 The diagram-ops Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the diagram-ops binary through the shell and compares its output
// byte for byte.

#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "diagram_ops/config.hpp"

using diagram_ops::cache_directory;

namespace {

struct Run {
  std::string out;
  int code = -1;
};

std::string cache_flag() { return "--cache-dir '" + cache_directory()->string() + "'"; }

Run shell(const std::string& command) {
  Run r;
  FILE* pipe = ::popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Run cli(const std::string& args) {
  return shell(std::string("'") + DIAGRAM_OPS_CLI + "' " + cache_flag() + " " + args + " 2>/dev/null");
}

std::string slurp(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("documented examples") {
  CHECK(cli("mult \"[1]\" \"[2]\"").out == "2*[2] + 1*[2,1]\n");
  CHECK(cli("mult \"[2]\" \"[2]\"").out == "1*[1,1] + 3*[3] + 2*[2,2]\n");
  CHECK(cli("mult \"[]\" \"[3]\"").out == "1*[3]\n");
  CHECK(cli("eigenvalue \"[2]\" \"[3]\"").out == "3\n");
  CHECK(cli("schur \"[2,1]\"").out == "1/3*p1^3 + -1/3*p3\n");
  const Run h = cli("hurwitz --n 2 \"[2]\" \"[2]\" \"[1,1]\"");
  CHECK(h.out == "1/2\n");
  CHECK(h.code == 0);
}

TEST_CASE("README console sessions") {
  // Every "$ diagram-ops ..." line in the README is run; the lines up to the
  // next prompt or fence are its expected output.
  std::istringstream readme(slurp(DIAGRAM_OPS_README));
  std::string line, command, expected;
  bool in_console = false;
  int checked = 0;
  auto flush = [&] {
    if (command.empty()) return;
    const std::string args = command.substr(std::string("$ diagram-ops ").size());
    const Run r = cli(args);
    CHECK_MESSAGE(r.out == expected, "command: " << command);
    ++checked;
    command.clear();
    expected.clear();
  };
  while (std::getline(readme, line)) {
    if (line.rfind("```console", 0) == 0) {
      in_console = true;
      continue;
    }
    if (!in_console) continue;
    if (line.rfind("```", 0) == 0) {
      flush();
      in_console = false;
    } else if (line.rfind("$ diagram-ops ", 0) == 0) {
      flush();
      command = line;
    } else if (!command.empty()) {
      expected += line + "\n";
    }
  }
  CHECK(checked >= 8);
}

TEST_CASE("json output") {
  CHECK(cli("--json hurwitz --n 2 \"[2]\" \"[2]\" \"[1,1]\"").out ==
        "{\"n\":2,\"branches\":[\"[2]\",\"[2]\",\"[1,1]\"],\"value\":\"1/2\"}\n");
  CHECK(cli("--json mult \"[1]\" \"[2]\"").out ==
        "{\"terms\":[{\"diagram\":[2],\"coef\":\"2\"},{\"diagram\":[2,1],\"coef\":\"1\"}]}\n");
  CHECK(cli("schur \"[1,1]\" --json").out ==
        "{\"bound\":null,\"terms\":[{\"mono\":[1,1],\"coef\":\"1/2\"},{\"mono\":[2],\"coef\":\"-1/2\"}]}\n");
  CHECK(cli("--json chartable 2").out ==
        "{\"n\":2,\"order\":[\"[2]\",\"[1,1]\"],\"rows\":{\"[2]\":[\"1\",\"1\"],\"[1,1]\":[\"-1\",\"1\"]}}\n");
  CHECK(cli("--json eigenvalue \"[2]\" \"[1,1,1]\"").out ==
        "{\"diagram\":\"[2]\",\"irrep\":\"[1,1,1]\",\"value\":\"-3\"}\n");
  CHECK(cli("--json evolve -d \"[2]\" --p-bound 2 --order 1").out ==
        "{\"p_bound\":2,\"order\":1,\"terms\":[{\"beta\":{},\"mono\":[],\"coef\":\"1\"},"
        "{\"beta\":{},\"mono\":[1],\"coef\":\"1\"},{\"beta\":{},\"mono\":[1,1],\"coef\":\"1/2\"},"
        "{\"beta\":{\"[2]\":1},\"mono\":[2],\"coef\":\"1/2\"}]}\n");
}

TEST_CASE("wapply routes agree") {
  const std::string f = "\"1/2*p1^3 + p1*p2 - 2*p3 + p2^2\"";
  for (const char* d : {"[1]", "[1,1]", "[1,1,1]", "[2]", "[2,1]", "[3]"}) {
    const Run spectral = cli(std::string("wapply \"") + d + "\" " + f);
    const Run expl = cli(std::string("wapply --explicit \"") + d + "\" " + f);
    CHECK(spectral.code == 0);
    CHECK(spectral.out == expl.out);
  }
  CHECK(cli("wapply \"[2]\" \"p2\"").out == "1*p1^2\n");
  CHECK(cli("wapply \"[2]\" \"1 + p1 + 1/2*p1^2 + 1/6*p1^3\" --bound 2").out == "1/2*p2\n");
  CHECK(cli("wapply --explicit \"[2,2]\" \"p2\"").code == 2);
}

TEST_CASE("error envelope and exit codes") {
  const Run parse = cli("--json mult \"[1,3]\" \"[2]\"");
  CHECK(parse.code == 2);
  CHECK(parse.out == "{\"error\":{\"kind\":\"parse\",\"msg\":\"parts must be weakly decreasing at position 3\"}}\n");
  CHECK(cli("schur \"[2,\"").code == 2);
  CHECK(cli("chartable").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("--max-degree 15 chartable 3").code == 2);
  CHECK(cli("selftest medium").code == 2);
  CHECK(cli("schur \"[2]\" stray").code == 2);

  const Run resource = cli("--json chartable 11");
  CHECK(resource.code == 3);
  CHECK(resource.out.rfind("{\"error\":{\"kind\":\"resource\"", 0) == 0);
  CHECK(cli("--max-degree 3 mult \"[2]\" \"[2]\"").code == 3);
  CHECK(cli("--max-degree 12 chartable 11").code == 0);
  CHECK(cli("evolve -d \"[2]\" --p-bound 11 --order 1").code == 3);
}

TEST_CASE("selftest is deterministic") {
  const Run a = cli("selftest full --json");
  const Run b = cli("selftest full --json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"passed\":true") != std::string::npos);
  const Run quick = cli("selftest quick");
  CHECK(quick.code == 0);
  CHECK(quick.out.find("selftest quick: PASS") != std::string::npos);
}

TEST_CASE("selftest recovers from a corrupt cache file") {
  const auto dir = *cache_directory() / "corrupt";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "chartab_4.json") << "not json at all";
  const std::string stderr_file = (dir / "stderr.txt").string();
  const Run r = shell(std::string("'") + DIAGRAM_OPS_CLI + "' --cache-dir '" + dir.string() +
                      "' selftest quick 2>'" + stderr_file + "'");
  CHECK(r.code == 0);
  CHECK(slurp(stderr_file).find("chartab_4.json is corrupt; recomputing") != std::string::npos);
  CHECK(slurp(dir / "chartab_4.json").rfind("{\"n\":4,", 0) == 0);
}

TEST_CASE("cache directory from the environment") {
  const auto dir = *cache_directory() / "from-env";
  const Run r = shell("DIAGRAM_OPS_CACHE_DIR='" + dir.string() + "' '" + DIAGRAM_OPS_CLI +
                      "' chartable 5 >/dev/null 2>&1");
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "chartab_5.json"));
}
