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

#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <stdexcept>
#include <vector>

#include "cgt/bounds.h"
#include "cgt/domineering.h"
#include "cgt/parser.h"
#include "cgt/random_games.h"
#include "cgt/reference.h"
#include "cgt/snort.h"
#include "cgt/thermal.h"
#include "json.hpp"

namespace cgt::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Session {
  GameStore store;
  Thermal thermal{store};
  BoundsLab lab{thermal};

  explicit Session(const RunConfig& config) {
    if (config.max_nodes == 0 && config.time_budget_s <= 0) return;
    StoreLimits limits;
    limits.max_nodes = config.max_nodes;
    if (config.time_budget_s > 0) {
      limits.deadline =
          std::chrono::steady_clock::now() +
          std::chrono::duration_cast<std::chrono::steady_clock::duration>(
              std::chrono::duration<double>(config.time_budget_s));
    }
    store.SetLimits(limits);
  }

  GameHandle Epsilon(const std::string& name) {
    if (name == "up") return store.Up();
    if (name == "star") return store.Star();
    if (name == "zero") return store.Zero();
    if (name == "down") return store.Down();
    throw std::invalid_argument("unknown epsilon '" + name + "'");
  }
};

Dyadic WitnessK(const RunConfig& config, int fallback) {
  return config.k.empty() ? Dyadic(fallback) : Dyadic::Parse(config.k);
}

int MaxN(const RunConfig& config, int fallback) {
  return config.max_n > 0 ? config.max_n : fallback;
}

void CheckFormat(const RunConfig& config, bool svg_allowed) {
  if (config.format == "text" || config.format == "json") return;
  if (config.format == "svg" && svg_allowed) return;
  throw std::invalid_argument("format '" + config.format +
                              "' not supported here");
}

std::string Text(const Dyadic& d) { return d.ToString(); }

Json Summary(Session& s, GameHandle g) {
  StopPair stops = s.thermal.Stops(g);
  Json j;
  j["canonical"] = s.store.Print(s.store.Canonical(g));
  j["outcome"] = std::string(OutcomeName(s.store.OutcomeOf(g)));
  j["left_stop"] = Text(stops.left);
  j["right_stop"] = Text(stops.right);
  j["ell"] = Text(stops.left - stops.right);
  j["temperature"] = Text(s.thermal.Temperature(g));
  j["mean"] = Text(s.thermal.Mean(g));
  return j;
}

void PrintFields(const Json& j, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    out << std::left << std::setw(13) << key << ' '
        << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
}

int Report(Session& s, GameHandle g, Json head, const RunConfig& config,
           std::ostream& out) {
  if (config.format == "svg") {
    out << ThermographSvg(*s.thermal.ThermographOf(g));
    return kExitOk;
  }
  head.update(Summary(s, g));
  if (config.format == "json") {
    out << head.dump(2) << '\n';
  } else {
    PrintFields(head, out);
  }
  return kExitOk;
}

std::string Unescape(std::string text) {
  for (char& c : text) {
    if (c == '/' || c == ';') c = '\n';
  }
  return text;
}

// -- checks shared by verify and scan -----------------------------------------

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

int EmitChecks(const std::string& suite, const std::vector<Check>& checks,
               bool truncated, const RunConfig& config, std::ostream& out) {
  bool pass = true;
  for (const Check& c : checks) pass = pass && c.pass;
  if (config.format == "json") {
    Json doc;
    doc["suite"] = suite;
    doc["pass"] = pass && !truncated;
    doc["truncated"] = truncated;
    doc["checks"] = Json::array();
    for (const Check& c : checks) {
      doc["checks"].push_back(
          {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    out << doc.dump(2) << '\n';
  } else {
    for (const Check& c : checks) {
      out << (c.pass ? "PASS " : "FAIL ") << c.name << "  " << c.detail
          << '\n';
    }
    if (truncated) out << "TRUNCATED: resource cap hit, results partial\n";
    out << suite << ": " << (pass && !truncated ? "PASS" : "FAIL") << '\n';
  }
  if (truncated) return kExitResource;
  return pass ? kExitOk : kExitVerifyFailed;
}

std::vector<DomBoard> Snakes(int max_columns) {
  return EnumerateSnakes(max_columns);
}

std::vector<std::pair<std::string, SnortBoard>> DecoratedPaths(int max_n) {
  const std::pair<const char*, PathEnd> ends[] = {
      {"", PathEnd::kNone}, {"L", PathEnd::kLeft}, {"R", PathEnd::kRight}};
  std::vector<std::pair<std::string, SnortBoard>> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& [a_name, a] : ends) {
      for (const auto& [b_name, b] : ends) {
        try {
          out.emplace_back(std::string(a_name) + "P" + std::to_string(n) +
                               b_name,
                           SnortBoard::Path(n, a, b));
        } catch (const std::invalid_argument&) {
          // Not a realizable decoration for this n.
        }
      }
    }
  }
  return out;
}

std::string OneLine(std::string text) {
  for (char& c : text) {
    if (c == '\n') c = '/';
  }
  if (!text.empty() && text.back() == '/') text.pop_back();
  return text;
}

}  // namespace

int RunEval(const RunConfig& config, const std::string& expr,
            std::ostream& out) {
  CheckFormat(config, true);
  Session s(config);
  GameHandle g = ParseGame(s.store, expr);
  return Report(s, g, Json{{"input", expr}}, config, out);
}

int RunThermo(const RunConfig& config, const std::string& expr,
              std::ostream& out) {
  CheckFormat(config, true);
  Session s(config);
  auto graph = s.thermal.ThermographOf(ParseGame(s.store, expr));
  if (config.format == "svg") {
    out << ThermographSvg(*graph);
  } else if (config.format == "json") {
    out << ThermographJson(*graph) << '\n';
  } else {
    out << "temperature " << graph->temperature << "\nmast " << graph->mast
        << '\n';
    auto wall = [&](const char* name, const std::vector<WallPoint>& points) {
      out << name;
      for (const WallPoint& p : points) out << " (" << p.t << ", " << p.x << ")";
      out << '\n';
    };
    wall("left_wall", graph->LeftWall());
    wall("right_wall", graph->RightWall());
  }
  return kExitOk;
}

int RunBoard(const RunConfig& config, const std::string& kind,
             const std::string& text, std::ostream& out) {
  CheckFormat(config, true);
  Session s(config);
  if (kind == "dom") {
    DomBoard board = DomBoard::Parse(Unescape(text));
    Domineering dom(s.store);
    return Report(s, dom.Value(board),
                  Json{{"board", OneLine(board.ToString())},
                       {"cells", board.CellCount()}},
                  config, out);
  }
  if (kind == "snort") {
    SnortBoard board = SnortBoard::Parse(Unescape(text));
    Snort snort(s.store);
    return Report(s, snort.Value(board),
                  Json{{"vertices", board.size()},
                       {"max_degree", board.MaxDegree()}},
                  config, out);
  }
  throw std::invalid_argument("unknown board kind '" + kind +
                              "' (want dom or snort)");
}

int RunTables(const RunConfig& config, const std::string& which,
              std::ostream& out) {
  CheckFormat(config, false);
  Session s(config);
  struct Cell {
    std::string label;
    int n;
    std::function<GameHandle()> value;
    std::optional<Dyadic> reference;
  };
  std::vector<Cell> cells;
  Domineering dom(s.store);
  Snort snort(s.store);
  if (which == "domineering2xn") {
    for (int n = 1; n <= MaxN(config, 10); ++n) {
      cells.push_back({"2x" + std::to_string(n), n,
                       [&, n] { return dom.Value(DomBoard::Rectangle(2, n)); },
                       reference::Domineering2xn(n)});
    }
  } else if (which == "snortpaths") {
    struct Row {
      const char* name;
      reference::PathRow row;
      PathEnd left, right;
    };
    const Row rows[] = {
        {"P", reference::PathRow::kPlain, PathEnd::kNone, PathEnd::kNone},
        {"LP", reference::PathRow::kLeftEnd, PathEnd::kLeft, PathEnd::kNone},
        {"LPL", reference::PathRow::kLeftLeft, PathEnd::kLeft, PathEnd::kLeft},
        {"LPR", reference::PathRow::kLeftRight, PathEnd::kLeft,
         PathEnd::kRight},
    };
    for (const Row& row : rows) {
      for (int n = 1; n <= MaxN(config, 12); ++n) {
        std::optional<Dyadic> ref = reference::SnortPath(row.row, n);
        bool exists = true;
        try {
          SnortBoard::Path(n, row.left, row.right);
        } catch (const std::invalid_argument&) {
          exists = false;
        }
        if (!exists) continue;
        cells.push_back({row.name + std::to_string(n), n,
                         [&, row, n] {
                           return snort.Value(
                               SnortBoard::Path(n, row.left, row.right));
                         },
                         ref});
      }
    }
  } else if (which == "snort2xn") {
    for (int n = 2; n <= MaxN(config, 7); ++n) {
      cells.push_back({"2x" + std::to_string(n), n,
                       [&, n] { return snort.Value(SnortBoard::Grid(2, n)); },
                       reference::Snort2xn(n)});
    }
  } else {
    throw std::invalid_argument("unknown table '" + which + "'");
  }

  Json rows = Json::array();
  std::string truncation;
  int mismatches = 0;
  for (const Cell& cell : cells) {
    Dyadic t;
    try {
      t = s.thermal.Temperature(cell.value());
    } catch (const ResourceError& e) {
      truncation = std::string(e.what()) + " at " + cell.label;
      break;
    }
    Json row{{"cell", cell.label}, {"n", cell.n}, {"temperature", Text(t)}};
    if (cell.reference) {
      row["reference"] = Text(*cell.reference);
      row["match"] = t == *cell.reference;
      mismatches += t != *cell.reference;
    } else {
      row["reference"] = nullptr;
      row["match"] = nullptr;
    }
    rows.push_back(row);
  }

  if (config.format == "json") {
    Json doc{{"table", which},
             {"rows", rows},
             {"mismatches", mismatches},
             {"truncated", !truncation.empty()}};
    if (!truncation.empty()) doc["truncation"] = truncation;
    out << doc.dump(2) << '\n';
  } else {
    out << std::left << std::setw(8) << "cell" << std::setw(12)
        << "temperature" << std::setw(12) << "reference" << "match\n";
    for (const Json& row : rows) {
      std::string ref = row["reference"].is_null()
                            ? "-"
                            : row["reference"].get<std::string>();
      std::string match = row["match"].is_null()
                              ? "-"
                              : (row["match"].get<bool>() ? "yes" : "NO");
      out << std::setw(8) << row["cell"].get<std::string>() << std::setw(12)
          << row["temperature"].get<std::string>() << std::setw(12) << ref
          << match << '\n';
    }
    out << "mismatches: " << mismatches << '\n';
    if (!truncation.empty()) out << "TRUNCATED: " << truncation << '\n';
  }
  return truncation.empty() ? kExitOk : kExitResource;
}

int RunVerify(const RunConfig& config, const std::string& suite,
              std::ostream& out) {
  CheckFormat(config, false);
  Session s(config);
  GameHandle eps = s.Epsilon(config.epsilon);
  std::vector<Check> checks;
  bool truncated = false;
  try {
    if (suite == "tightness") {
      for (const TightnessEntry& e : s.lab.TightnessSequence(MaxN(config, 6))) {
        checks.push_back({"t(" + s.store.Print(e.game) + ")",
                          e.temperature == e.expected &&
                              e.temperature <= Dyadic(9),
                          "t=" + Text(e.temperature) +
                              " want " + Text(e.expected)});
      }
    } else if (suite == "snakes") {
      Domineering dom(s.store);
      std::vector<GameHandle> forms;
      for (const DomBoard& b : Snakes(MaxN(config, 8))) {
        GameHandle g = dom.Form(b);
        forms.push_back(g);
        Dyadic ell = s.thermal.Ell(g), t = s.thermal.Temperature(g);
        Dyadic k = WitnessK(config, 2);
        bool witness = s.lab.ConfusionWitness(g, k, eps).holds;
        checks.push_back({OneLine(b.ToString()),
                          ell <= Dyadic(2) && t <= Dyadic(3) && witness,
                          "l=" + Text(ell) + " t=" + Text(t) + " witness(K=" +
                              Text(k) + ")=" + (witness ? "holds" : "fails")});
      }
      ClassScanReport scan = s.lab.ClassScan(forms, "snakes");
      checks.push_back({"bp_bound", scan.bound_holds && scan.bp_bound <= Dyadic(3),
                        "K=" + Text(scan.max_ell) + " J=" +
                            Text(scan.max_option_ell) + " bound=" +
                            Text(scan.bp_bound)});
    } else if (suite == "paths") {
      Snort snort(s.store);
      for (const auto& [name, board] : DecoratedPaths(MaxN(config, 10))) {
        GameHandle g = snort.Form(board);
        Dyadic ell = s.thermal.Ell(g), t = s.thermal.Temperature(g);
        Dyadic k = WitnessK(config, 5);
        bool witness = s.lab.ConfusionWitness(g, k, eps).holds;
        checks.push_back({name,
                          ell <= Dyadic(5) && t <= Dyadic::Parse("15/2") &&
                              witness,
                          "l=" + Text(ell) + " t=" + Text(t) + " witness(K=" +
                              Text(k) + ")=" + (witness ? "holds" : "fails")});
      }
    } else if (suite == "stars") {
      Snort snort(s.store);
      for (int n = 1; n <= MaxN(config, 6); ++n) {
        GameHandle g = snort.Value(SnortBoard::Star(n));
        Dyadic t = s.thermal.Temperature(g);
        bool eq = s.store.Eq(g, s.store.PlusMinus(s.store.Integer(n)));
        checks.push_back({"K1," + std::to_string(n), eq && t == Dyadic(n),
                          s.store.Print(g) + " t=" + Text(t)});
      }
    } else if (suite == "witness") {
      std::mt19937_64 rng(6);
      int unsound = 0, total = 0;
      for (int i = 0; i < MaxN(config, 500); ++i) {
        GameHandle g = RandomGame(s.store, rng);
        for (int half = 0; half <= 12; ++half) {
          WitnessReport w =
              s.lab.ConfusionWitness(g, Dyadic(half).Half(), eps);
          ++total;
          unsound += w.holds && w.k < w.ell;
        }
      }
      checks.push_back({"soundness", unsound == 0,
                        std::to_string(unsound) + " of " +
                            std::to_string(total) + " witnesses with l > K"});
      GameHandle pm = ParseGame(s.store, "{1|-1}");
      Dyadic k = s.lab.MinimalConfusionK(pm, Dyadic::Parse(config.step), eps);
      checks.push_back({"minimal K of {1|-1}", Dyadic(2) <= k,
                        "K=" + Text(k) + " on step " + config.step +
                            ", l=" + Text(s.thermal.Ell(pm))});
    } else if (suite == "properties") {
      std::mt19937_64 rng(2);
      int bad = 0, n = MaxN(config, 1000);
      for (int i = 0; i < n; ++i) {
        GameHandle g = RandomGame(s.store, rng), h = RandomGame(s.store, rng);
        GameHandle sum = s.store.Add(g, h);
        StopPair a = s.thermal.Stops(g), b = s.thermal.Stops(h),
                 c = s.thermal.Stops(sum);
        bool ok = a.right <= a.left &&
                  s.thermal.Stops(s.store.Negate(g)).left == -a.right &&
                  a.right + b.left <= c.left && c.left <= a.left + b.left &&
                  a.right + b.right <= c.right && c.right <= a.left + b.right &&
                  s.thermal.Ell(sum) <= s.thermal.Ell(g) + s.thermal.Ell(h) &&
                  s.thermal.Temperature(sum) <=
                      Max(s.thermal.Temperature(g), s.thermal.Temperature(h));
        bad += !ok;
      }
      checks.push_back({"random pairs", bad == 0,
                        std::to_string(bad) + " of " + std::to_string(n) +
                            " pairs violate a stop or temperature property"});
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  } catch (const ResourceError&) {
    truncated = true;
  }
  return EmitChecks(suite, checks, truncated, config, out);
}

int RunScan(const RunConfig& config, const std::string& family,
            std::ostream& out) {
  CheckFormat(config, false);
  Session s(config);
  GameHandle eps = s.Epsilon(config.epsilon);
  Dyadic step = Dyadic::Parse(config.step);
  std::vector<GameHandle> forms;
  std::vector<Check> findings;
  bool truncated = false;
  Dyadic max_k;
  try {
    if (family == "snakes") {
      Domineering dom(s.store);
      for (const DomBoard& b : Snakes(MaxN(config, 8))) {
        forms.push_back(dom.Form(b));
      }
    } else if (family == "paths") {
      Snort snort(s.store);
      for (const auto& [name, board] : DecoratedPaths(MaxN(config, 10))) {
        forms.push_back(snort.Form(board));
      }
    } else if (family == "graphs") {
      Snort snort(s.store);
      int n = MaxN(config, 6);
      for (const SnortBoard& b : EnumerateConnectedGraphs(n, n)) {
        GameHandle g = snort.Form(b);
        forms.push_back(g);
        Dyadic t = s.thermal.Temperature(g);
        if (Dyadic(b.MaxDegree()) < t) {
          findings.push_back({"degree", false,
                              "t=" + Text(t) + " > max degree " +
                                  std::to_string(b.MaxDegree()) + " on " +
                                  OneLine(b.ToString())});
        }
      }
    } else {
      throw std::invalid_argument("unknown family '" + family + "'");
    }
    for (GameHandle g : forms) {
      max_k = Max(max_k, s.lab.MinimalConfusionK(g, step, eps));
    }
  } catch (const ResourceError&) {
    truncated = true;
  }
  if (forms.empty()) {
    out << "TRUNCATED: no positions evaluated\n";
    return kExitResource;
  }
  ClassScanReport scan = s.lab.ClassScan(forms, family);
  if (config.format == "json") {
    Json doc{{"family", family},
             {"count", scan.count},
             {"K", Text(scan.max_ell)},
             {"J", Text(scan.max_option_ell)},
             {"bp_bound", Text(scan.bp_bound)},
             {"max_temperature", Text(scan.max_temperature)},
             {"bound_holds", scan.bound_holds},
             {"max_witness_k", Text(max_k)},
             {"truncated", truncated},
             {"findings", Json::array()}};
    for (const Check& f : findings) doc["findings"].push_back(f.detail);
    out << doc.dump(2) << '\n';
  } else {
    out << "family           " << family << "\ncount            " << scan.count
        << "\nK                " << scan.max_ell << "\nJ                "
        << scan.max_option_ell << "\nbp_bound         " << scan.bp_bound
        << "\nmax_temperature  " << scan.max_temperature
        << "\nbound_holds      " << (scan.bound_holds ? "yes" : "no")
        << "\nmax_witness_k    " << max_k << '\n';
    for (const Check& f : findings) out << "finding: " << f.detail << '\n';
    if (truncated) out << "TRUNCATED: resource cap hit, results partial\n";
  }
  if (truncated) return kExitResource;
  return scan.bound_holds ? kExitOk : kExitVerifyFailed;
}

}  // namespace cgt::cli
