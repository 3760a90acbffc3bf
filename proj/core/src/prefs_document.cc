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

#include "seqgame/prefs_document.h"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <utility>
#include <vector>

#include "seqgame/text_format.h"

namespace seqgame {
namespace {

using json = nlohmann::ordered_json;

// Builds a DOM like json::parse, but keeps non-integer numbers as their
// source text so no precision is lost to double.
class ExactNumberSax : public nlohmann::detail::json_sax_dom_parser<json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;

  bool number_float(json::number_float_t /*value*/, const std::string& text) {
    std::string copy = text;
    return Base::string(copy);
  }
};

std::pair<std::size_t, std::size_t> LineColumn(std::string_view text,
                                               std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void Invalid(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what, 0, 0);
}

const json& RequireObject(const json& value, const std::string& where) {
  if (!value.is_object()) Invalid(where, "expected an object");
  return value;
}

const json& RequireArray(const json& value, const std::string& where) {
  if (!value.is_array()) Invalid(where, "expected an array");
  return value;
}

std::string RequireString(const json& value, const std::string& where) {
  if (!value.is_string()) Invalid(where, "expected a string");
  return value.get<std::string>();
}

Payoff ReadPayoff(const json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) {
      return value.is_number_unsigned() ? Payoff(value.get<std::uint64_t>())
                                        : Payoff(value.get<std::int64_t>());
    }
    if (value.is_string()) return ParsePayoff(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    Invalid(where, e.what());
  }
  Invalid(where, "expected a number");
}

PayoffTable ReadPayoffs(const json& doc) {
  PayoffTable table;
  for (const auto& [outcome, row] : RequireObject(doc, "payoffs").items()) {
    const std::string where = "payoffs." + outcome;
    for (const auto& [agent, value] : RequireObject(row, where).items()) {
      table.Set(OutcomeId(outcome), AgentId(agent),
                ReadPayoff(value, where + "." + agent));
    }
  }
  table.RequireTotal();
  return table;
}

SetPayoffTable ReadSetPayoffs(const json& doc) {
  SetPayoffTable table;
  for (const auto& [outcome, row] : RequireObject(doc, "set_payoffs").items()) {
    const std::string where = "set_payoffs." + outcome;
    for (const auto& [agent, values] : RequireObject(row, where).items()) {
      const std::string cell = where + "." + agent;
      std::vector<Payoff> set;
      for (const json& v : RequireArray(values, cell)) {
        set.push_back(ReadPayoff(v, cell));
      }
      if (set.empty()) Invalid(cell, "payoff sets must be nonempty");
      table.Set(OutcomeId(outcome), AgentId(agent), std::move(set));
    }
  }
  table.RequireTotal();
  return table;
}

template <typename Table>
const Table& RequireTable(const std::optional<Table>& table, AgentId agent,
                          const std::string& kind, const char* key) {
  if (!table) {
    Invalid("preferences." + agent.name(),
            "kind '" + kind + "' needs a \"" + key + "\" table");
  }
  const auto& agents = table->agents();
  if (std::find(agents.begin(), agents.end(), agent) == agents.end()) {
    if (table->outcomes().empty()) {
      Invalid(key, "table is empty but agent '" + agent.name() + "' needs it");
    }
    throw MissingPayoff(table->outcomes().front(), agent);
  }
  return *table;
}

Relation ReadPairs(const json& entry, const std::string& where) {
  if (!entry.contains("pairs")) Invalid(where, "missing \"pairs\"");
  std::vector<Relation::Pair> pairs;
  std::size_t index = 0;
  for (const json& pair : RequireArray(entry["pairs"], where + ".pairs")) {
    const std::string at = where + ".pairs[" + std::to_string(index++) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      Invalid(at, "expected a two-element array");
    }
    pairs.emplace_back(OutcomeId(RequireString(pair[0], at)),
                       OutcomeId(RequireString(pair[1], at)));
  }
  return Relation::FromPairs(pairs);
}

}  // namespace

PrefsDocument ParsePrefsDocument(std::string_view json_text) {
  json doc;
  ExactNumberSax sax(doc, /*allow_exceptions=*/true);
  try {
    json::sax_parse(json_text, &sax);
  } catch (const json::parse_error& e) {
    const auto [line, column] = LineColumn(json_text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError(e.what(), line, column);
  }
  RequireObject(doc, "document");
  if (!doc.contains("preferences")) Invalid("document", "missing \"preferences\"");

  PrefsDocument result;
  if (doc.contains("payoffs")) result.payoffs = ReadPayoffs(doc["payoffs"]);
  if (doc.contains("set_payoffs")) {
    result.set_payoffs = ReadSetPayoffs(doc["set_payoffs"]);
  }

  for (const auto& [name, entry] :
       RequireObject(doc["preferences"], "preferences").items()) {
    const std::string where = "preferences." + name;
    const AgentId agent(name);
    RequireObject(entry, where);
    if (!entry.contains("kind")) Invalid(where, "missing \"kind\"");
    const std::string kind = RequireString(entry["kind"], where + ".kind");

    Relation relation;
    if (kind == "pairs") {
      relation = ReadPairs(entry, where);
    } else if (kind == "selfish" || kind == "benevolent" ||
               kind == "selfish-benevolent" || kind == "selfish-malevolent") {
      const PayoffTable& table =
          RequireTable(result.payoffs, agent, kind, "payoffs");
      if (kind == "selfish") {
        relation = Selfish(table, agent);
      } else if (kind == "benevolent") {
        relation = Benevolent(table, table.agents());
      } else if (kind == "selfish-benevolent") {
        relation = SelfishBenevolent(table, agent, table.agents());
      } else {
        relation = SelfishMalevolent(table, agent, table.agents());
      }
    } else if (kind == "set-min" || kind == "set-max" ||
               kind == "set-interval") {
      const SetPayoffTable& table =
          RequireTable(result.set_payoffs, agent, kind, "set_payoffs");
      const SetOrderKind order = kind == "set-min"   ? SetOrderKind::kMin
                                 : kind == "set-max" ? SetOrderKind::kMax
                                                     : SetOrderKind::kInterval;
      relation = SetOrder(table, agent, order);
    } else {
      throw UnknownKind(kind);
    }
    result.family.Set(agent, std::move(relation));
  }
  return result;
}

PreferenceFamily ParsePrefs(std::string_view json_text) {
  return ParsePrefsDocument(json_text).family;
}

}  // namespace seqgame
