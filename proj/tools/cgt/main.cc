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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cgt/game.h"
#include "cgt/parser.h"
#include "commands.h"

namespace {

using cgt::cli::RunConfig;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cgt: exact temperature and thermograph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  RunConfig config;
  app.add_option("--format", config.format, "text, json or svg")
      ->check(CLI::IsMember({"text", "json", "svg"}));
  app.add_option("--max-n", config.max_n, "size bound for tables and scans")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", config.max_nodes, "game store node cap")
      ->check(CLI::PositiveNumber);
  app.add_option("--time-budget-s", config.time_budget_s,
                 "wall-clock budget in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--epsilon", config.epsilon, "witness infinitesimal")
      ->check(CLI::IsMember({"up", "star", "zero", "down"}));
  app.add_option("--step", config.step, "grid step for minimal K");
  app.add_option("--k", config.k, "witness K for verify snakes/paths");

  std::string expr, file, kind, name;
  auto input = [&](CLI::App* sub, const char* what) {
    sub->add_option("input", expr, what);
    sub->add_option("--file", file, "read the input from a file");
  };
  CLI::App* eval = app.add_subcommand("eval", "evaluate a game expression");
  input(eval, "game expression");
  CLI::App* thermo = app.add_subcommand("thermo", "thermograph of a game");
  input(thermo, "game expression");
  CLI::App* board = app.add_subcommand("board", "evaluate a board");
  board->add_option("kind", kind, "dom or snort")
      ->required()
      ->check(CLI::IsMember({"dom", "snort"}));
  input(board, "board text, rows separated by '/'");
  CLI::App* tables = app.add_subcommand("tables", "recompute reference tables");
  tables->add_option("which", name, "domineering2xn, snortpaths or snort2xn")
      ->required();
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("suite", name,
                   "tightness, snakes, paths, stars, witness or properties")
      ->required();
  CLI::App* scan = app.add_subcommand("scan", "boiling-point scan of a family");
  scan->add_option("family", name, "snakes, paths or graphs")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : cgt::cli::kExitUsage;
  }

  try {
    auto source = [&] {
      if (!file.empty() && !expr.empty()) {
        throw std::invalid_argument("give either an input or --file");
      }
      if (!file.empty()) return ReadFile(file);
      if (expr.empty()) throw std::invalid_argument("missing input");
      return expr;
    };
    if (*eval) return cgt::cli::RunEval(config, source(), std::cout);
    if (*thermo) return cgt::cli::RunThermo(config, source(), std::cout);
    if (*board) return cgt::cli::RunBoard(config, kind, source(), std::cout);
    if (*tables) return cgt::cli::RunTables(config, name, std::cout);
    if (*verify) return cgt::cli::RunVerify(config, name, std::cout);
    if (*scan) return cgt::cli::RunScan(config, name, std::cout);
  } catch (const cgt::ParseError& e) {
    std::cerr << e.what() << '\n';
    return cgt::cli::kExitUsage;
  } catch (const cgt::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return cgt::cli::kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cgt::cli::kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cgt::cli::kExitUsage;
  }
  return cgt::cli::kExitUsage;
}
