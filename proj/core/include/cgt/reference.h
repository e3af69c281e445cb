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

// Published temperature tables, used as golden values by `cgt tables` and
// the acceptance suite.

#ifndef CGT_REFERENCE_H_
#define CGT_REFERENCE_H_

#include <array>
#include <optional>
#include <string_view>

#include "cgt/dyadic.h"

namespace cgt::reference {

// Domineering on 2 x n, n = 1..5, then periodic in n = 10k + j, j = 6..15.
inline constexpr std::array<std::string_view, 5> kDomineering2xnHead = {
    "0", "1", "5/4", "0", "0"};
inline constexpr std::array<std::string_view, 10> kDomineering2xnPeriod = {
    "1", "1", "9/8", "9/8", "19/16", "19/16", "0", "0", "9/8", "9/8"};

inline std::optional<Dyadic> Domineering2xn(int n) {
  if (n < 1) return std::nullopt;
  if (n <= 5) return Dyadic::Parse(kDomineering2xnHead[n - 1]);
  return Dyadic::Parse(kDomineering2xnPeriod[(n - 6) % 10]);
}

// Snort on decorated paths with n vertices counting end pieces, n = 1..12.
// Empty entries are shapes that do not exist for that n.
enum class PathRow { kPlain, kLeftEnd, kLeftLeft, kLeftRight };

inline constexpr std::array<std::string_view, 12> kSnortPlain = {
    "0", "1", "2", "3/2", "1", "0", "1", "2", "2", "3/2", "3/2", "1"};
inline constexpr std::array<std::string_view, 12> kSnortLeftEnd = {
    "-1", "-1", "1/2", "3/2", "2", "7/4", "3/2", "1", "15/8", "2", "2",
    "31/16"};
inline constexpr std::array<std::string_view, 12> kSnortLeftLeft = {
    "", "-1", "-1", "-1", "1", "3/2", "2", "3/2", "7/4", "1", "7/4", "15/8"};
inline constexpr std::array<std::string_view, 12> kSnortLeftRight = {
    "", "", "-1", "0", "1", "2", "2", "2", "1", "1", "1", "2"};

inline std::optional<Dyadic> SnortPath(PathRow row, int n) {
  if (n < 1 || n > 12) return std::nullopt;
  std::string_view cell;
  switch (row) {
    case PathRow::kPlain: cell = kSnortPlain[n - 1]; break;
    case PathRow::kLeftEnd: cell = kSnortLeftEnd[n - 1]; break;
    case PathRow::kLeftLeft: cell = kSnortLeftLeft[n - 1]; break;
    case PathRow::kLeftRight: cell = kSnortLeftRight[n - 1]; break;
  }
  if (cell.empty()) return std::nullopt;
  return Dyadic::Parse(cell);
}

// Snort on the 2 x n grid graph, n = 2..7.
inline constexpr std::array<std::string_view, 6> kSnort2xn = {
    "-1", "9/4", "-1", "5/2", "-1", "1"};

inline std::optional<Dyadic> Snort2xn(int n) {
  if (n < 2 || n > 7) return std::nullopt;
  return Dyadic::Parse(kSnort2xn[n - 2]);
}

}  // namespace cgt::reference

#endif  // CGT_REFERENCE_H_
