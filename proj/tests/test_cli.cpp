// Copyright 2026 The Gately Authors
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

#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gately/cli.hpp"
#include "gately/generators.hpp"
#include "gately/io.hpp"
#include "support.hpp"

using namespace gately;
using namespace gately::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gately");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) {
  return (std::filesystem::path(GATELY_SOURCE_DIR) / "fixtures" /
          (name + ".json"))
      .string();
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("value subcommand") {
  auto r = run({"value", fx("trade"), "--method", "gately"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "S: 7/3 (2.33333333333)"));
  CHECK(has(r.out, "B1: 2/3 (0.666666666667)"));

  r = run({"value", fx("trade"), "--method", "gately", "--alpha", "2"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "[alpha-gately]"));
  CHECK(has(r.out, "S: 13/5"));

  r = run({"value", fx("trade"), "--method", "shapley"});
  CHECK(has(r.out, "S: 13/6"));

  r = run({"value", fx("trade"), "--method", "nucleolus", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["analyses"]["nucleolus"]["values"]["S"]["exact"] == "5/2");

  r = run({"value", fx("fourplayer_core_miss"), "--method", "equal"});
  CHECK(has(r.out, "1: 3 (3)"));

  r = run({"value", fx("trade"), "--method", "dual-gately", "--alpha", "1"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "S: 7/3"));
}

TEST_CASE("analysis errors exit with status 1") {
  auto r = run({"value", fx("continuum3"), "--method", "gately"});
  CHECK(r.code == kExitAnalysisError);
  CHECK(has(r.err, "NotStandard"));
  CHECK(r.out.empty());

  r = run({"value", fx("emptycore3"), "--method", "nucleolus"});
  CHECK(r.code == kExitOk);

  r = run({"verify", fx("emptycore3"), "--alpha", "1"});
  CHECK(r.code == kExitAnalysisError);
  CHECK(has(r.err, "NotSemiStandard"));
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).code == kExitUsageError);
  CHECK(run({"bogus"}).code == kExitUsageError);
  CHECK(run({"value", fx("trade"), "--method", "banzhaf"}).code ==
        kExitUsageError);
  CHECK(run({"value", fx("trade")}).code == kExitUsageError);
  CHECK(run({"value", "/nonexistent/game.json", "--method", "gately"}).code ==
        kExitUsageError);
  CHECK(run({"value", fx("trade"), "--method", "gately", "--alpha", "-1"})
            .code != kExitOk);
  CHECK(run({"info", fx("trade"), "--format", "xml"}).code == kExitUsageError);
  CHECK(run({"check-core", fx("trade"), "--point", "1,2"}).code ==
        kExitUsageError);
  CHECK(run({"check-core", fx("trade"), "--point", "1,2,0", "--alpha", "2"})
            .code == kExitUsageError);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("info and dividends") {
  auto r = run({"info", fx("topdom_nonsuper3")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "regular: true"));
  CHECK(has(r.out, "superadditive: false"));

  r = run({"dividends", fx("fiveplayer_unanimity")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "{1,2}: 1 (1)"));
  CHECK(has(r.out, "{3,4,5}: 3 (3)"));
}

TEST_CASE("check-core subcommand") {
  auto r = run({"check-core", fx("fourplayer_core_miss")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "member: false"));
  CHECK(has(r.out, "violation {1,2}: deficit 8/7 (1.14285714286)"));

  r = run({"check-core", fx("trade"), "--point", "5/2,1/2,0"});
  CHECK(has(r.out, "member: true"));

  r = run({"check-core", fx("trade"), "--point", "3,3,0"});
  CHECK(has(r.out, "efficient: false"));

  r = run({"check-core", fx("topdom_nonsuper3"), "--alpha", "2", "--format",
           "json"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out).dump().find("\"member\":true") !=
        std::string::npos);
}

TEST_CASE("alpha-range subcommand") {
  auto r = run({"alpha-range", fx("singleton_core3")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "interval: {1}"));
  CHECK(has(r.out, "endpoints_validated: true"));

  r = run({"alpha-range", fx("trade"), "--grid", "1"});
  CHECK(r.code == kExitUsageError);
}

TEST_CASE("verify subcommand") {
  auto r = run({"verify", fx("trade"), "--alpha", "1"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "agree: true"));
  r = run({"verify", fx("alpha_interval3"), "--alpha", "2"});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "agree: true"));
}

TEST_CASE("dual subcommand writes a game file") {
  const auto dir = std::filesystem::temp_directory_path() / "gately_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "dual.json").string();
  const auto r = run({"dual", fx("trade"), "-o", path});
  CHECK(r.code == kExitOk);
  CHECK(read_game_file(path).game == dual_game(fixture("trade")));
  std::filesystem::remove_all(dir);
}

TEST_CASE("fixtures subcommand reproduces the checked-in files") {
  const auto dir = std::filesystem::temp_directory_path() / "gately_cli_fx";
  std::filesystem::remove_all(dir);
  const auto r = run({"fixtures", "--emit", dir.string()});
  CHECK(r.code == kExitOk);
  for (const auto& [name, f] : builtin_fixtures()) {
    const auto doc = read_game_file(dir / (name + ".json"));
    CHECK(doc.game == f.game);
    CHECK(doc.labels == f.labels);
    CHECK(read_game_file(fx(name)).game == f.game);
  }
  std::filesystem::remove_all(dir);
}
