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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// blocking criterion fails; stretch parts are reported but never block.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cgt/bounds.h"
#include "cgt/domineering.h"
#include "cgt/parser.h"
#include "cgt/random_games.h"
#include "cgt/reference.h"
#include "cgt/snort.h"
#include "cgt/thermal.h"
#include "naive_game.h"

namespace cgt {
namespace {

using Clock = std::chrono::steady_clock;

Dyadic D(std::string_view s) { return Dyadic::Parse(s); }

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(double seconds) {
  std::ostringstream os;
  os.precision(3);
  os << seconds << " s";
  return os.str();
}

struct Result {
  bool pass = true;
  bool blocking = true;
  std::string detail;
  std::vector<std::string> notes;  // extra indented lines
};

// -- AC1 ---------------------------------------------------------------------

Result CanonicalOracle() {
  auto start = Clock::now();
  GameStore store;
  std::mt19937_64 rng(1001);
  int outcome_bad = 0, eq_bad = 0, equal_pairs = 0;
  const int kGames = 1000;
  std::vector<GameHandle> games;
  for (int i = 0; i < kGames; ++i) games.push_back(RandomGame(store, rng));
  for (GameHandle g : games) {
    GameHandle c = store.Canonical(g);
    // Tree search on the literal difference, independent of the store.
    testing::NaiveSum diff{testing::ToNaive(store, g),
                           testing::NaiveNegate(testing::ToNaive(store, c))};
    if (testing::NaiveOutcome(diff) != Outcome::kPrevious) ++outcome_bad;
  }
  for (int i = 0; i < kGames; ++i) {
    GameHandle g = games[i];
    GameHandle x = games[(i + 1) % kGames];
    // Equal by construction, likely unequal, and unrelated.
    GameHandle same = store.Sum(g, store.Difference(x, x));
    GameHandle shifted = store.Sum(g, store.Star());
    for (GameHandle h : {same, shifted, x}) {
      bool eq = store.Leq(g, h) && store.Leq(h, g);
      bool canon = store.Canonical(g) == store.Canonical(h);
      equal_pairs += eq;
      if (eq != canon) ++eq_bad;
    }
  }
  double secs = Seconds(start);
  Result r;
  r.pass = outcome_bad == 0 && eq_bad == 0 && secs < 60;
  r.detail = "canonical form: " + std::to_string(kGames) +
             " games, outcome(G - canonical G) != P: " +
             std::to_string(outcome_bad) + "; eq vs canonical mismatches: " +
             std::to_string(eq_bad) + " over " + std::to_string(3 * kGames) +
             " pairs (" + std::to_string(equal_pairs) + " equal); " +
             Fmt(secs) + " (limit 60 s)";
  return r;
}

// -- AC2 ---------------------------------------------------------------------

Result PropertySuite() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  std::mt19937_64 rng(1002);
  const int kPairs = 1000;
  std::map<std::string, int> violations;
  for (int i = 0; i < kPairs; ++i) {
    GameHandle g = RandomGame(store, rng), h = RandomGame(store, rng);
    GameHandle sum = store.Add(g, h);
    StopPair sg = thermal.Stops(g), sh = thermal.Stops(h),
             ss = thermal.Stops(sum);
    StopPair sneg = thermal.Stops(store.Negate(g));
    if (sg.left < sg.right) ++violations["LS>=RS"];
    if (sneg.left != -sg.right) ++violations["LS(-G)=-RS(G)"];
    if (ss.left < sg.right + sh.left || sg.left + sh.left < ss.left) {
      ++violations["RS(G)+LS(H)<=LS(G+H)<=LS(G)+LS(H)"];
    }
    if (ss.right < sg.right + sh.right || sg.left + sh.right < ss.right) {
      ++violations["RS(G)+RS(H)<=RS(G+H)<=LS(G)+RS(H)"];
    }
    Dyadic x = D("3/4");
    if (thermal.Stops(store.Add(g, store.Number(x))).left != sg.left + x) {
      ++violations["LS(G+x)=LS(G)+x"];
    }
    if (thermal.Ell(g) + thermal.Ell(h) < thermal.Ell(sum)) {
      ++violations["l(G+H)<=l(G)+l(H)"];
    }
    if (Max(thermal.Temperature(g), thermal.Temperature(h)) <
        thermal.Temperature(sum)) {
      ++violations["t(G+H)<=max"];
    }
  }
  int total = 0;
  std::string which;
  for (const auto& [name, count] : violations) {
    total += count;
    which += " " + name + "=" + std::to_string(count);
  }
  Result r;
  r.pass = total == 0;
  r.detail = "stop/confusion/temperature properties on " +
             std::to_string(kPairs) + " pairs: " + std::to_string(total) +
             " violations" + which + "; " + Fmt(Seconds(start));
  return r;
}

// -- AC3 ---------------------------------------------------------------------

std::string Join(const std::vector<Dyadic>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out += (i ? "," : "") + xs[i].ToString();
  }
  return out + ")";
}

Result WorkedExample() {
  GameStore store;
  Thermal thermal(store);
  GameHandle g = ParseGame(store, "{{{6|4}|{2|0}}|{{0|-2}|{-4|-6}}}");
  auto [left, right] = thermal.Decompose(g);
  Dyadic t = thermal.Temperature(g);
  std::vector<Dyadic> want{D("0"), D("1"), D("2"), D("3")};
  Result r;
  r.pass = left.turning_points == want && left.vertical_total == D("1") &&
           left.oblique_total == D("2") && right.vertical_total == D("1") &&
           right.oblique_total == D("2") && t == D("3");
  r.detail = "wall decomposition: left turning points " +
             Join(left.turning_points) + ", T^L_ver=" +
             left.vertical_total.ToString() +
             " T^L_obl=" + left.oblique_total.ToString() +
             " T^R_ver=" + right.vertical_total.ToString() +
             " T^R_obl=" + right.oblique_total.ToString() +
             " t(G)=" + t.ToString() + " (want (0,1,2,3),1,2,1,2,3)";
  return r;
}

// -- AC4 ---------------------------------------------------------------------

Result Tightness() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  BoundsLab lab(thermal);
  auto seq = lab.TightnessSequence(6);
  bool ok = BpBound(D("6"), D("6")) == D("9");
  std::string temps;
  for (const TightnessEntry& e : seq) {
    ok = ok && e.temperature == e.expected && e.temperature <= D("9") &&
         e.temperature <= thermal.TempUpperBound(e.game) &&
         thermal.Ell(e.game) <= D("6");
    temps += " " + e.temperature.ToString();
  }
  double secs = Seconds(start);
  Result r;
  r.pass = ok && secs < 10;
  r.detail = "tightness t(G_n), n=0..6:" + temps +
             " (want 9 - 3/2^n, all <= 9 = bp_bound(6,6)); " + Fmt(secs) +
             " (limit 10 s)";
  return r;
}

// -- AC5 ---------------------------------------------------------------------

Result ThermicVersionChecks() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  std::mt19937_64 rng(1005);
  const int kGames = 500;
  int hot = 0, pairs = 0;
  std::map<std::string, int> bad;
  while (hot < kGames) {
    GameHandle g = RandomGame(store, rng);
    if (!thermal.IsHot(g)) continue;
    ++hot;
    auto versions = thermal.ThermicVersions(g);
    if (versions.empty()) ++bad["no thermic version"];
    auto graph = thermal.ThermographOf(g);
    Dyadic temp = graph->temperature;
    for (const ThermicPair& p : versions) {
      ++pairs;
      GameHandle v = store.Make({p.left}, {p.right});
      auto vg = thermal.ThermographOf(v);
      std::vector<Dyadic> ts;
      for (int k = 0; Dyadic(k).Scaled(-3) <= temp + Dyadic(1); ++k) {
        ts.push_back(Dyadic(k).Scaled(-3));
      }
      for (const auto* wall : {&graph->left, &graph->right, &vg->left,
                               &vg->right}) {
        for (const WallPoint& q : wall->points()) {
          if (q.t.Sign() >= 0) ts.push_back(q.t);
        }
      }
      for (const Dyadic& t : ts) {
        if (graph->LeftAt(t) < vg->LeftAt(t) ||
            vg->RightAt(t) < graph->RightAt(t)) {
          ++bad["wall domination"];
          break;
        }
      }
      if (thermal.Ell(g) < thermal.Ell(v)) ++bad["l(version)<=l(G)"];
      if (thermal.TempUpperBound(g, p) < temp) ++bad["TempBound"];
      auto [l, rt] = thermal.Decompose(v);
      if (l.vertical_total + l.oblique_total != temp ||
          rt.vertical_total + rt.oblique_total != temp ||
          l.oblique_total + rt.oblique_total != thermal.Ell(v)) {
        ++bad["segment sums"];
      }
    }
  }
  int total = 0;
  std::string which;
  for (const auto& [name, count] : bad) {
    total += count;
    which += " " + name + "=" + std::to_string(count);
  }
  Result r;
  r.pass = total == 0;
  r.detail = "thermic versions on " + std::to_string(hot) + " hot games (" +
             std::to_string(pairs) + " thermic pairs): " +
             std::to_string(total) + " violations" + which + "; " +
             Fmt(Seconds(start));
  return r;
}

// -- AC6 ---------------------------------------------------------------------

Result WitnessSoundness() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  BoundsLab lab(thermal);
  std::mt19937_64 rng(1006);
  const int kGames = 500;
  int checks = 0, holds = 0, bad = 0;
  for (int i = 0; i < kGames; ++i) {
    GameHandle g = RandomGame(store, rng);
    for (int half = 0; half <= 12; ++half) {
      WitnessReport w = lab.ConfusionWitness(g, Dyadic(half).Half(),
                                             store.Up());
      ++checks;
      holds += w.holds;
      if (w.holds && w.k < w.ell) ++bad;
    }
  }
  GameHandle pm = ParseGame(store, "{1|-1}");
  Dyadic ell = thermal.Ell(pm);
  Dyadic k = lab.MinimalConfusionK(pm, D("1"), store.Up());
  bool fails_at_2 = !lab.ConfusionWitness(pm, D("2"), store.Up()).holds;
  Result r;
  r.pass = bad == 0 && ell == D("2") && k == D("3") && fails_at_2;
  r.detail = "witness soundness: " + std::to_string(checks) + " (G,K) checks, " +
             std::to_string(holds) + " hold, " + std::to_string(bad) +
             " with l > K; {1|-1}: l=" + ell.ToString() +
             ", minimal integer K with eps=^ is " + k.ToString() +
             " (want 3); " + Fmt(Seconds(start));
  return r;
}

// -- AC7 ---------------------------------------------------------------------

Result DomineeringTable() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  Domineering dom(store);
  auto row = [&](int from, int to, std::string* text) {
    bool ok = true;
    for (int n = from; n <= to; ++n) {
      Dyadic t = thermal.Temperature(dom.Value(DomBoard::Rectangle(2, n)));
      Dyadic want = *reference::Domineering2xn(n);
      ok = ok && t == want;
      *text += " n=" + std::to_string(n) + ":" + t.ToString() +
               (t == want ? "" : "(want " + want.ToString() + ")");
    }
    return ok;
  };
  std::string head, tail;
  bool head_ok = row(1, 5, &head);
  bool tail_ok = row(6, 10, &tail);
  Result r;
  r.pass = head_ok;
  r.detail = "domineering 2xn temperatures:" + head + "; stretch" + tail +
             (tail_ok ? " [stretch PASS]" : " [stretch FAIL, non-blocking]") +
             "; " + Fmt(Seconds(start));
  if (!head_ok) {
    // Show what the values are so the mismatch can be judged.
    std::string values;
    for (int n = 1; n <= 5; ++n) {
      values += " 2x" + std::to_string(n) + "=" +
                store.Print(dom.Value(DomBoard::Rectangle(2, n)));
    }
    r.notes.push_back("values:" + values);
    r.notes.push_back(
        "cold (number-valued) boards report temperature < 0 under the "
        "t >= -1 convention; the table lists 0 for them");
  }
  return r;
}

// -- AC8 ---------------------------------------------------------------------

Result Snakes() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  BoundsLab lab(thermal);
  Domineering dom(store);
  std::vector<DomBoard> snakes = EnumerateSnakes(8);
  std::vector<GameHandle> forms;
  int ell_bad = 0, temp_bad = 0, witness_bad = 0, plain_bad = 0;
  std::string first_failure;
  for (const DomBoard& b : snakes) {
    GameHandle g = dom.Form(b);
    forms.push_back(g);
    if (D("2") < thermal.Ell(g)) ++ell_bad;
    if (D("3") < thermal.Temperature(g)) ++temp_bad;
    if (!lab.ConfusionWitness(g, D("2"), store.Up()).holds) {
      ++witness_bad;
      if (first_failure.empty()) first_failure = b.ToString();
    }
    if (!lab.ConfusionWitness(g, D("2"), store.Zero()).holds) ++plain_bad;
  }
  ClassScanReport scan = lab.ClassScan(forms, "snakes 2x8");
  double secs = Seconds(start);
  Result r;
  r.pass = ell_bad == 0 && temp_bad == 0 && witness_bad == 0 &&
           scan.bound_holds && secs < 600;
  r.detail = "snakes fitting 2xn, n<=8: " + std::to_string(snakes.size()) +
             " snakes; l>2: " + std::to_string(ell_bad) +
             ", t>3: " + std::to_string(temp_bad) +
             ", witness(K=2, eps=^) fails: " + std::to_string(witness_bad) +
             " (eps=0 fails: " + std::to_string(plain_bad) + "); K=" +
             scan.max_ell.ToString() + " J=" + scan.max_option_ell.ToString() +
             " bound=" + scan.bp_bound.ToString() + " max t=" +
             scan.max_temperature.ToString() + "; " + Fmt(secs) +
             " (limit 600 s)";
  if (!first_failure.empty()) {
    std::string board = first_failure;
    for (char& c : board) {
      if (c == '\n') c = '/';
    }
    r.notes.push_back("first witness failure: " + board);
  }
  return r;
}

// -- AC9 ---------------------------------------------------------------------

Result SnortPaths() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  Snort snort(store);
  struct Row {
    const char* name;
    reference::PathRow row;
    PathEnd left, right;
  };
  const Row rows[] = {
      {"P", reference::PathRow::kPlain, PathEnd::kNone, PathEnd::kNone},
      {"LP", reference::PathRow::kLeftEnd, PathEnd::kLeft, PathEnd::kNone},
      {"LPL", reference::PathRow::kLeftLeft, PathEnd::kLeft, PathEnd::kLeft},
      {"LPR", reference::PathRow::kLeftRight, PathEnd::kLeft, PathEnd::kRight},
  };
  int cells = 0, mismatches = 0, stretch_mismatches = 0;
  std::string diffs;
  for (const Row& row : rows) {
    for (int n = 1; n <= 12; ++n) {
      std::optional<Dyadic> want = reference::SnortPath(row.row, n);
      if (!want) continue;
      Dyadic t = thermal.Temperature(
          snort.Value(SnortBoard::Path(n, row.left, row.right)));
      if (n <= 10) ++cells;
      if (t == *want) continue;
      (n <= 10 ? mismatches : stretch_mismatches)++;
      diffs += std::string(" ") + row.name + std::to_string(n) + "=" +
               t.ToString() + "(want " + want->ToString() + ")";
    }
  }
  // Bound over every decoration of both ends.
  int decorated = 0, ell_bad = 0, temp_bad = 0;
  Dyadic max_ell, max_t(-1);
  const PathEnd ends[] = {PathEnd::kNone, PathEnd::kLeft, PathEnd::kRight};
  for (int n = 1; n <= 10; ++n) {
    for (PathEnd a : ends) {
      for (PathEnd b : ends) {
        SnortBoard board;
        try {
          board = SnortBoard::Path(n, a, b);
        } catch (const std::invalid_argument&) {
          continue;  // shape does not exist for this n
        }
        GameHandle g = snort.Value(board);
        ++decorated;
        Dyadic ell = thermal.Ell(g), t = thermal.Temperature(g);
        max_ell = Max(max_ell, ell);
        max_t = Max(max_t, t);
        if (D("5") < ell) ++ell_bad;
        if (D("15/2") < t) ++temp_bad;
      }
    }
  }
  Result r;
  r.pass = mismatches == 0 && ell_bad == 0 && temp_bad == 0;
  r.detail = "snort path tables n<=10: " + std::to_string(cells) +
             " cells, " + std::to_string(mismatches) +
             " mismatches; stretch n=11,12: " +
             std::to_string(stretch_mismatches) + " mismatches" + diffs +
             "; decorated paths n<=10: " + std::to_string(decorated) +
             " boards, max l=" + max_ell.ToString() + " (<=5), max t=" +
             max_t.ToString() + " (<=15/2); " + Fmt(Seconds(start));
  return r;
}

// -- AC10 --------------------------------------------------------------------

Result SnortGrid() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  Snort snort(store);
  bool ok = true, stretch_ok = true;
  std::string text;
  for (int n = 2; n <= 7; ++n) {
    Dyadic t = thermal.Temperature(snort.Value(SnortBoard::Grid(2, n)));
    Dyadic want = *reference::Snort2xn(n);
    (n <= 5 ? ok : stretch_ok) &= t == want;
    text += " n=" + std::to_string(n) + ":" + t.ToString() +
            (t == want ? "" : "(want " + want.ToString() + ")");
  }
  Result r;
  r.pass = ok;
  r.detail = "snort 2xn grid temperatures:" + text +
             (stretch_ok ? " [stretch n=6,7 PASS]"
                         : " [stretch n=6,7 FAIL, non-blocking]") +
             "; " + Fmt(Seconds(start));
  return r;
}

// -- AC11 --------------------------------------------------------------------

Result UniversalVertex() {
  GameStore store;
  Thermal thermal(store);
  Snort snort(store);
  bool ok = true;
  std::string text;
  for (int n = 1; n <= 6; ++n) {
    GameHandle g = snort.Value(SnortBoard::Star(n));
    bool eq = store.Eq(g, store.PlusMinus(store.Integer(n)));
    Dyadic t = thermal.Temperature(g);
    ok = ok && eq && t == Dyadic(n);
    text += " K1," + std::to_string(n) + "=" + store.Print(g) + "/t=" +
            t.ToString();
  }
  Result r;
  r.pass = ok;
  r.detail = "stars K_{1,n}, n=1..6:" + text;
  return r;
}

// -- AC12 --------------------------------------------------------------------

Result DegreeConjecture() {
  auto start = Clock::now();
  GameStore store;
  Thermal thermal(store);
  Snort snort(store);
  std::vector<SnortBoard> graphs = EnumerateConnectedGraphs(6);
  Result r;
  int counterexamples = 0;
  for (const SnortBoard& g : graphs) {
    Dyadic t = thermal.Temperature(snort.Value(g));
    if (Dyadic(g.MaxDegree()) < t) {
      ++counterexamples;
      std::string text = g.ToString();
      for (char& c : text) {
        if (c == '\n') c = ';';
      }
      r.notes.push_back("finding: t=" + t.ToString() + " > degree " +
                        std::to_string(g.MaxDegree()) + " on " + text);
    }
  }
  r.pass = true;  // findings are reported, not failures
  r.detail = "degree scan over " + std::to_string(graphs.size()) +
             " connected graphs (<=6 vertices): " +
             std::to_string(counterexamples) + " with t > max degree; " +
             Fmt(Seconds(start));
  return r;
}

// -- AC13 --------------------------------------------------------------------

Result DrummondCole() {
  auto start = Clock::now();
  Result r;
  r.blocking = false;
  std::ifstream in(std::string(CGT_DATA_DIR) + "/drummond_cole.dom");
  std::stringstream text;
  text << in.rdbuf();
  if (!in) {
    r.pass = false;
    r.detail = "drummond-cole board: data file missing";
    return r;
  }
  GameStore store;
  store.SetLimits({.max_nodes = 5'000'000,
                   .deadline = Clock::now() + std::chrono::seconds(300)});
  Thermal thermal(store);
  Domineering dom(store);
  try {
    DomBoard board = DomBoard::Parse(text.str());
    Dyadic t = thermal.Temperature(dom.Value(board));
    r.pass = t == D("2");
    r.detail = "drummond-cole board (" + std::to_string(board.CellCount()) +
               " cells): t=" + t.ToString() + " (want 2); " +
               Fmt(Seconds(start));
  } catch (const ResourceError& e) {
    r.pass = false;
    r.detail = std::string("drummond-cole board: TRUNCATED (") + e.what() +
               "); " + Fmt(Seconds(start));
  }
  return r;
}

}  // namespace
}  // namespace cgt

int main() {
  using cgt::Result;
  struct Criterion {
    const char* id;
    std::function<Result()> run;
  };
  const Criterion criteria[] = {
      {"AC1", cgt::CanonicalOracle},     {"AC2", cgt::PropertySuite},
      {"AC3", cgt::WorkedExample},       {"AC4", cgt::Tightness},
      {"AC5", cgt::ThermicVersionChecks},
      {"AC6", cgt::WitnessSoundness},    {"AC7", cgt::DomineeringTable},
      {"AC8", cgt::Snakes},              {"AC9", cgt::SnortPaths},
      {"AC10", cgt::SnortGrid},          {"AC11", cgt::UniversalVertex},
      {"AC12", cgt::DegreeConjecture},   {"AC13", cgt::DrummondCole},
  };
  int blocking_failures = 0;
  for (const Criterion& c : criteria) {
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    if (!r.pass && r.blocking) ++blocking_failures;
    std::cout << (r.pass ? "PASS " : "FAIL ") << c.id << (r.blocking ? "" : " (optional)")
              << "  " << r.detail << "\n";
    for (const std::string& note : r.notes) std::cout << "     " << note << "\n";
    std::cout.flush();
  }
  std::cout << (blocking_failures == 0 ? "ALL BLOCKING CRITERIA PASS"
                                       : std::to_string(blocking_failures) +
                                             " BLOCKING CRITERIA FAIL")
            << "\n";
  return blocking_failures == 0 ? 0 : 1;
}
