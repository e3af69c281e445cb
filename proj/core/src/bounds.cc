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

#include "cgt/bounds.h"

namespace cgt {

Dyadic BpBound(const Dyadic& j, const Dyadic& k) {
  if (j.Sign() < 0 || k.Sign() < 0) {
    throw std::domain_error("bp bound needs non-negative J and K");
  }
  return k.Half() + j;
}

BoundsLab::BoundsLab(Thermal& thermal)
    : thermal_(thermal), store_(thermal.store()) {}

WitnessReport BoundsLab::ConfusionWitness(GameHandle g, const Dyadic& k,
                                          GameHandle eps) {
  if (k.Sign() < 0) throw std::domain_error("witness needs K >= 0");
  if (!thermal_.IsInfinitesimal(eps)) {
    throw std::domain_error("epsilon must be infinitesimal");
  }
  WitnessReport report{g, k, eps, true, std::nullopt, thermal_.Ell(g)};
  GameHandle offset = store_.Add(store_.Number(-k), eps);
  GameHandle minus_g = store_.Negate(store_.Canonical(g));
  for (GameHandle gl : store_.LeftOptions(g)) {
    GameHandle d = store_.Add(store_.Add(gl, minus_g), offset);
    if (!store_.Leq(d, store_.Zero())) {
      report.holds = false;
      report.failing_option = gl;
      break;
    }
  }
  return report;
}

Dyadic BoundsLab::MinimalConfusionK(GameHandle g, const Dyadic& step,
                                    GameHandle eps, const Dyadic& ceiling) {
  if (step.Sign() <= 0) throw std::domain_error("step must be positive");
  auto holds = [&](long long m) {
    return ConfusionWitness(g, step * m, eps).holds;
  };
  auto exceeded = [&](long long m) { return ceiling < step * m; };
  if (holds(0)) return Dyadic(0);

  long long lo = 0, hi = 1;  // holds(lo) is false
  while (!holds(hi)) {
    lo = hi;
    hi *= 2;
    if (exceeded(hi)) {
      hi = lo + 1;
      while (!exceeded(hi) && !holds(hi)) ++hi;
      if (exceeded(hi)) {
        throw CeilingExceededError("no witness K up to " + ceiling.ToString());
      }
      return step * hi;
    }
  }
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    (holds(mid) ? hi : lo) = mid;
  }
  // Spot checks: one grid point above must hold and a few below must fail.
  bool monotone = exceeded(hi + 1) || holds(hi + 1);
  for (long long m = hi - 2; monotone && m >= 0 && m >= hi - 4; --m) {
    monotone = !holds(m);
  }
  if (monotone && hi > 4) monotone = !holds(hi / 2);
  if (monotone) return step * hi;

  ++fallbacks_;
  for (long long m = 1; !exceeded(m); ++m) {
    if (holds(m)) return step * m;
  }
  throw CeilingExceededError("no witness K up to " + ceiling.ToString());
}

ClassScanReport BoundsLab::ClassScan(std::span<const GameHandle> positions,
                                     const std::string& label) {
  if (positions.empty()) throw EmptyClassError("class '" + label + "' is empty");
  ClassScanReport report;
  report.label = label;
  report.count = positions.size();
  report.max_temperature = thermal_.Temperature(positions.front());
  for (GameHandle g : positions) {
    report.max_ell = Max(report.max_ell, thermal_.Ell(g));
    report.max_temperature =
        Max(report.max_temperature, thermal_.Temperature(g));
    for (const auto& options : {store_.LeftOptions(g), store_.RightOptions(g)}) {
      for (GameHandle option : options) {
        report.max_option_ell = Max(report.max_option_ell, thermal_.Ell(option));
      }
    }
  }
  report.bp_bound = BpBound(report.max_option_ell, report.max_ell);
  report.bound_holds = report.max_temperature <= report.bp_bound;
  return report;
}

std::vector<TightnessEntry> BoundsLab::TightnessSequence(int n) {
  if (n < 0) throw std::domain_error("tightness index must be >= 0");
  std::vector<TightnessEntry> out;
  for (int m = 0; m <= n; ++m) {
    GameHandle inner = store_.Integer(9 + 6LL * m);
    for (int i = m - 1; i >= 0; --i) {
      inner = store_.Make({inner}, {store_.Integer(9 + 6LL * i)});
    }
    GameHandle g = store_.PlusMinus(store_.Make({inner}, {store_.Integer(3)}));
    Dyadic expected = Dyadic(9) - Dyadic(3).Scaled(-m);
    out.push_back({g, thermal_.Temperature(g), expected});
  }
  return out;
}

}  // namespace cgt
