// Copyright 2026 The cgtherm Authors.
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

#include "commands.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "cgt/parser.h"
#include "cgt/random_games.h"
#include "json.hpp"

namespace cgt::cli {
namespace {

using nlohmann::json;

json RunJson(const std::function<int(const RunConfig&, std::ostream&)>& run,
             int expected_code = kExitOk) {
  RunConfig config;
  config.format = "json";
  std::ostringstream out;
  EXPECT_EQ(run(config, out), expected_code);
  return json::parse(out.str());
}

json Eval(const std::string& expr) {
  return RunJson([&](const RunConfig& c, std::ostream& o) {
    return RunEval(c, expr, o);
  });
}

TEST(CliEval, Examples) {
  EXPECT_EQ(Eval("±{9|3}")["temperature"], "6");
  json pm = Eval("{{10|1}|-1}");
  EXPECT_EQ(pm["ell"], "2");
  EXPECT_EQ(pm["left_stop"], "1");
  EXPECT_EQ(pm["right_stop"], "-1");
  json zero = Eval("0");
  EXPECT_EQ(zero["outcome"], "P");
  EXPECT_EQ(zero["temperature"], "-1");
}

TEST(CliEval, JsonValuesRoundTrip) {
  GameStore store;
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    GameHandle g = RandomGame(store, rng);
    json doc = Eval(store.Print(g));
    for (const char* key :
         {"left_stop", "right_stop", "ell", "temperature", "mean"}) {
      Dyadic d = Dyadic::Parse(doc[key].get<std::string>());
      EXPECT_EQ(d.ToString(), doc[key].get<std::string>());
    }
    GameHandle back = ParseGame(store, doc["canonical"].get<std::string>());
    EXPECT_TRUE(store.Eq(back, g)) << doc.dump();
  }
}

TEST(CliThermo, JsonWallsParse) {
  json doc = RunJson([](const RunConfig& c, std::ostream& o) {
    return RunThermo(c, "{{5|2}|{-2|-3}}", o);
  });
  EXPECT_EQ(Dyadic::Parse(doc["temperature"].get<std::string>()), Dyadic(3));
  for (const auto& point : doc["left_wall"]) {
    EXPECT_NO_THROW(Dyadic::Parse(point[0].get<std::string>()));
    EXPECT_NO_THROW(Dyadic::Parse(point[1].get<std::string>()));
  }
}

TEST(CliTables, ReferenceCells) {
  auto cell = [](const std::string& table, const std::string& name) {
    json doc = RunJson([&](const RunConfig& c, std::ostream& o) {
      return RunTables(c, table, o);
    });
    for (const json& row : doc["rows"]) {
      if (row["cell"] == name) return row;
    }
    return json();
  };
  EXPECT_EQ(cell("domineering2xn", "2x3")["temperature"], "5/4");
  EXPECT_EQ(cell("snortpaths", "P6")["temperature"], "0");
  json grid = cell("snort2xn", "2x5");
  EXPECT_EQ(grid["temperature"], "5/2");
  EXPECT_EQ(grid["match"], true);
}

TEST(CliTables, TruncationIsMarked) {
  RunConfig config;
  config.format = "json";
  config.max_nodes = 100;
  std::ostringstream out;
  EXPECT_EQ(RunTables(config, "snort2xn", out), kExitResource);
  json doc = json::parse(out.str());
  EXPECT_TRUE(doc["truncated"].get<bool>());
  EXPECT_TRUE(doc.contains("truncation"));
}

TEST(CliVerify, Suites) {
  json t = RunJson([](const RunConfig& c, std::ostream& o) {
    return RunVerify(c, "tightness", o);
  });
  EXPECT_TRUE(t["pass"].get<bool>());
  EXPECT_EQ(t["checks"].size(), 7u);
  RunConfig config;
  config.max_n = 6;
  std::ostringstream out;
  EXPECT_EQ(RunVerify(config, "snakes", out), kExitOk);
  EXPECT_THROW(RunVerify(config, "nope", out), std::invalid_argument);
}

TEST(CliScan, SnakesReportBound) {
  json doc = RunJson([](const RunConfig& c, std::ostream& o) {
    return RunScan(c, "snakes", o);
  });
  EXPECT_TRUE(doc["bound_holds"].get<bool>());
  EXPECT_LE(Dyadic::Parse(doc["bp_bound"].get<std::string>()), Dyadic(3));
}

TEST(CliErrors, BadInputs) {
  RunConfig config;
  std::ostringstream out;
  EXPECT_THROW(RunEval(config, "{1|", out), ParseError);
  EXPECT_THROW(RunBoard(config, "chess", "#", out), std::invalid_argument);
  config.format = "svg";
  EXPECT_THROW(RunTables(config, "snort2xn", out), std::invalid_argument);
}

}  // namespace
}  // namespace cgt::cli
