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

#ifndef CGT_TOOLS_COMMANDS_H_
#define CGT_TOOLS_COMMANDS_H_

#include <cstddef>
#include <ostream>
#include <string>

namespace cgt::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

struct RunConfig {
  std::string format = "text";  // text | json | svg
  int max_n = 0;                // 0: per-command default
  std::size_t max_nodes = 0;    // 0: unlimited
  double time_budget_s = 0;     // 0: unlimited
  std::string epsilon = "up";   // up | star | zero | down
  std::string step = "1/2";
  std::string k;                // witness K override; empty: suite default
};

// Each command writes its report to `out` and returns an exit code.
// ParseError and std::invalid_argument escape for usage errors,
// ResourceError for caps hit outside a table.
int RunEval(const RunConfig& config, const std::string& expr,
            std::ostream& out);
int RunThermo(const RunConfig& config, const std::string& expr,
              std::ostream& out);
// `kind` is "dom" or "snort"; '/' and ';' in `text` stand for newlines.
int RunBoard(const RunConfig& config, const std::string& kind,
             const std::string& text, std::ostream& out);
// domineering2xn | snortpaths | snort2xn
int RunTables(const RunConfig& config, const std::string& which,
              std::ostream& out);
// tightness | snakes | paths | stars | witness | properties
int RunVerify(const RunConfig& config, const std::string& suite,
              std::ostream& out);
// snakes | paths | graphs
int RunScan(const RunConfig& config, const std::string& family,
            std::ostream& out);

}  // namespace cgt::cli

#endif  // CGT_TOOLS_COMMANDS_H_
