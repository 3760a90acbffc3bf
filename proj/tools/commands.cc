// Copyright 2026 The Seqgame Authors
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

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "seqgame/game.h"
#include "seqgame/oracle.h"
#include "seqgame/preferences.h"
#include "seqgame/prefs_document.h"
#include "seqgame/relation.h"
#include "seqgame/solver.h"
#include "seqgame/strategy.h"
#include "seqgame/text_format.h"

namespace seqgame::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GameMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Reparses errors with the file name prepended.
template <typename Parse>
auto ParseFile(const std::string& path, Parse parse) {
  const std::string text = ReadFile(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what(), 0, 0);
  }
}

std::vector<OutcomeId> SplitOutcomes(const std::string& csv) {
  std::vector<OutcomeId> outcomes;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) continue;
    outcomes.emplace_back(item.substr(first, last - first + 1));
  }
  if (outcomes.empty()) throw UsageError("--outcomes must list at least one outcome");
  return outcomes;
}

const char* Bool(bool b) { return b ? "true" : "false"; }

void PrintVerdicts(const PreferenceFamily& prefs, const StrategyProfile& s,
                   std::ostream& out) {
  out << "nash: " << Bool(IsNash(prefs, s)) << "\n";
  out << "spe: " << Bool(IsSpe(prefs, s)) << "\n";
}

struct Options {
  std::string game;
  std::string profile;
  std::string prefs;
  std::string mode = "bi";
  std::string filter = "nash";
  std::string assertion;
  std::string outcomes;
  std::string agent;
  std::size_t max_profiles = kDefaultMaxProfiles;
};

void PrintSolved(const PreferenceFamily& prefs, const StrategyProfile& s,
                 std::ostream& out) {
  out << "profile: " << PrintProfile(s) << "\n";
  out << "induced: " << InducedOutcome(s) << "\n";
  PrintVerdicts(prefs, s, out);
}

int Solve(const Options& o, std::ostream& out) {
  const Game game = ParseFile(o.game, ParseGame);
  const PreferenceFamily prefs = ParseFile(o.prefs, ParsePrefs);
  if (o.mode == "bi") {
    PrintSolved(prefs, BackwardInduction(game, prefs), out);
    return kOk;
  }
  try {
    const SpeSolution solution = SolveSpeDetailed(game, prefs);
    for (const auto& [agent, order] : solution.orders) {
      out << "extension " << agent << ":";
      for (std::size_t i = 0; i < order.size(); ++i) {
        out << (i == 0 ? " " : " < ") << order[i];
      }
      out << "\n";
    }
    PrintSolved(prefs, solution.profile, out);
  } catch (const CyclicPreference& e) {
    out << "cyclic " << e.agent() << ": " << e.cycle().ToString() << "\n";
    return kCyclicPreference;
  }
  return kOk;
}

int Check(const Options& o, std::ostream& out, std::ostream& err) {
  const StrategyProfile profile = ParseFile(o.profile, ParseProfile);
  if (!o.game.empty()) {
    const Game game = ParseFile(o.game, ParseGame);
    if (!(UnderlyingGame(profile) == game)) {
      throw GameMismatch("the profile's underlying game " +
                         PrintGame(UnderlyingGame(profile)) +
                         " differs from " + PrintGame(game));
    }
  }
  const PreferenceFamily prefs = ParseFile(o.prefs, ParsePrefs);
  out << "profile: " << PrintProfile(profile) << "\n";
  out << "induced: " << InducedOutcome(profile) << "\n";
  for (const AgentId& a : RelevantAgents(prefs, profile)) {
    out << "happy " << a << ": " << Bool(IsHappy(prefs, profile, a)) << "\n";
  }
  const bool nash = IsNash(prefs, profile);
  const bool spe = IsSpe(prefs, profile);
  out << "nash: " << Bool(nash) << "\n";
  out << "spe: " << Bool(spe) << "\n";
  if (o.assertion == "ne" && !nash) {
    err << "assertion failed: the profile is not a Nash equilibrium\n";
    return kAssertionFailed;
  }
  if (o.assertion == "spe" && !spe) {
    err << "assertion failed: the profile is not a subgame perfect "
           "equilibrium\n";
    return kAssertionFailed;
  }
  return kOk;
}

int Enumerate(const Options& o, std::ostream& out) {
  const Game game = ParseFile(o.game, ParseGame);
  const PreferenceFamily prefs = ParseFile(o.prefs, ParsePrefs);
  const EquilibriumFilter filter = o.filter == "all"   ? EquilibriumFilter::kAll
                                   : o.filter == "spe" ? EquilibriumFilter::kSpe
                                                       : EquilibriumFilter::kNash;
  const auto found = FindEquilibria(game, prefs, filter, o.max_profiles);
  out << "count: " << found.size() << "\n";
  for (const ClassifiedProfile& c : found) {
    out << PrintProfile(c.profile) << " nash=" << Bool(c.nash)
        << " spe=" << Bool(c.spe) << "\n";
  }
  return kOk;
}

int PrefsAnalyze(const Options& o, std::ostream& out) {
  const PreferenceFamily prefs = ParseFile(o.prefs, ParsePrefs);
  const std::vector<OutcomeId> carrier = SplitOutcomes(o.outcomes);
  for (const AgentId& a : prefs.agents()) {
    const Relation& r = prefs.For(a);
    const PropertyReport report = CheckProperties(r, carrier);
    const auto cycle = FindCycle(r, carrier);
    out << "agent " << a << "\n";
    out << "  irreflexive: " << Bool(report.irreflexive) << "\n";
    out << "  transitive: " << Bool(report.transitive) << "\n";
    out << "  total: " << Bool(report.total) << "\n";
    out << "  acyclic: " << Bool(!cycle) << "\n";
    if (cycle) out << "  cycle: " << cycle->ToString() << "\n";
  }
  return kOk;
}

int Counterexample(const Options& o, std::ostream& out, std::ostream& err) {
  const PreferenceFamily prefs = ParseFile(o.prefs, ParsePrefs);
  const std::vector<OutcomeId> carrier = SplitOutcomes(o.outcomes);
  const AgentId agent(o.agent);
  const auto cycle = FindCycle(prefs.For(agent), carrier);
  if (!cycle) {
    err << "the preference of agent '" << agent
        << "' is acyclic on the given outcomes, so every game over them has "
           "a subgame perfect equilibrium\n";
    return kCyclicPreference;
  }
  out << PrintGame(NoEquilibriumGame(agent, *cycle)) << "\n";
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Solver and checker for abstract sequential games", "seqgame"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand(
      "solve", "Backward induction (bi) or SPE via linear extension (spe)");
  solve->add_option("--game", o.game, "Game file")->required();
  solve->add_option("--prefs", o.prefs, "Preference document")->required();
  solve->add_option("--mode", o.mode)->check(CLI::IsMember({"bi", "spe"}));

  auto* check = app.add_subcommand(
      "check", "Report happiness, Nash and SPE verdicts for a profile");
  check->add_option("--game", o.game, "Game the profile must be played on");
  check->add_option("--profile", o.profile, "Profile file")->required();
  check->add_option("--prefs", o.prefs, "Preference document")->required();
  check->add_option("--assert", o.assertion)
      ->check(CLI::IsMember({"ne", "spe"}));

  auto* enumerate = app.add_subcommand(
      "enumerate", "List all profiles of a game with their equilibrium flags");
  enumerate->add_option("--game", o.game, "Game file")->required();
  enumerate->add_option("--prefs", o.prefs, "Preference document")->required();
  enumerate->add_option("--filter", o.filter)
      ->check(CLI::IsMember({"nash", "spe", "all"}));
  enumerate->add_option("--max-profiles", o.max_profiles,
                        "Refuse games with more profiles than this");

  auto* analyze = app.add_subcommand(
      "prefs-analyze", "Order-theoretic properties of each preference");
  analyze->add_option("--prefs", o.prefs, "Preference document")->required();
  analyze->add_option("--outcomes", o.outcomes, "Comma-separated carrier")
      ->required();

  auto* counterexample = app.add_subcommand(
      "counterexample", "Game without Nash equilibrium for a cyclic preference");
  counterexample->add_option("--prefs", o.prefs, "Preference document")
      ->required();
  counterexample->add_option("--agent", o.agent, "Agent")->required();
  counterexample->add_option("--outcomes", o.outcomes, "Comma-separated carrier")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out;
    std::ostringstream cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return Solve(o, out);
    if (*check) return Check(o, out, err);
    if (*enumerate) return Enumerate(o, out);
    if (*analyze) return PrefsAnalyze(o, out);
    if (*counterexample) return Counterexample(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return kTooLarge;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const GameMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const MissingPayoff& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const UnknownKind& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return kUsage;
}

}  // namespace seqgame::cli
