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

#include "seqgame/preferences.h"

#include <algorithm>
#include <cctype>
#include <memory>
#include <string>

namespace seqgame {
namespace {

template <typename Table>
void RequireTotalGrid(const Table& table) {
  for (const OutcomeId& x : table.outcomes()) {
    for (const AgentId& a : table.agents()) table.Get(x, a);
  }
}

template <typename Value>
void Track(std::map<std::pair<OutcomeId, AgentId>, Value>& entries,
           std::vector<OutcomeId>& outcomes, std::vector<AgentId>& agents,
           OutcomeId x, AgentId a, Value v) {
  if (std::find(outcomes.begin(), outcomes.end(), x) == outcomes.end()) {
    outcomes.push_back(x);
  }
  if (std::find(agents.begin(), agents.end(), a) == agents.end()) {
    agents.push_back(a);
  }
  entries.insert_or_assign({x, a}, std::move(v));
}

bool ParetoBetter(const PayoffTable& t, std::span<const AgentId> agents,
                  OutcomeId x, OutcomeId y) {
  bool strict = false;
  for (const AgentId& a : agents) {
    const Payoff& px = t.Get(x, a);
    const Payoff& py = t.Get(y, a);
    if (py < px) return false;
    if (py > px) strict = true;
  }
  return strict;
}

}  // namespace

Payoff ParsePayoff(std::string_view text) {
  const std::string original(text);
  auto fail = [&]() {
    throw std::invalid_argument("not a decimal number: '" + original + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  boost::multiprecision::cpp_int digits = 0;
  long long scale = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    digits = digits * 10 + (text[i] - '0');
    any_digit = true;
    ++i;
  }
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits = digits * 10 + (text[i] - '0');
      --scale;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit) fail();
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    long long exponent = 0;
    bool exp_digit = false;
    while (i < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[i]))) {
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 100000) fail();
      exp_digit = true;
      ++i;
    }
    if (!exp_digit) fail();
    scale += exp_negative ? -exponent : exponent;
  }
  if (i != text.size()) fail();

  boost::multiprecision::cpp_int power = 1;
  for (long long k = 0; k < (scale < 0 ? -scale : scale); ++k) power *= 10;
  Payoff value = scale < 0 ? Payoff(digits, power) : Payoff(digits * power);
  return negative ? Payoff(-value) : value;
}

MissingPayoff::MissingPayoff(OutcomeId outcome, AgentId agent)
    : std::runtime_error("missing payoff for agent '" + agent.name() +
                         "' at outcome '" + outcome.name() + "'"),
      outcome_(outcome),
      agent_(agent) {}

void PayoffTable::Set(OutcomeId outcome, AgentId agent, Payoff value) {
  Track(entries_, outcomes_, agents_, outcome, agent, std::move(value));
}

const Payoff& PayoffTable::Get(OutcomeId outcome, AgentId agent) const {
  auto it = entries_.find({outcome, agent});
  if (it == entries_.end()) throw MissingPayoff(outcome, agent);
  return it->second;
}

void PayoffTable::RequireTotal() const { RequireTotalGrid(*this); }

void SetPayoffTable::Set(OutcomeId outcome, AgentId agent,
                         std::vector<Payoff> values) {
  if (values.empty()) {
    throw std::invalid_argument("empty payoff set for agent '" + agent.name() +
                                "' at outcome '" + outcome.name() + "'");
  }
  Track(entries_, outcomes_, agents_, outcome, agent, std::move(values));
}

const std::vector<Payoff>& SetPayoffTable::Get(OutcomeId outcome,
                                               AgentId agent) const {
  auto it = entries_.find({outcome, agent});
  if (it == entries_.end()) throw MissingPayoff(outcome, agent);
  return it->second;
}

void SetPayoffTable::RequireTotal() const { RequireTotalGrid(*this); }

Relation Selfish(const PayoffTable& table, AgentId agent) {
  auto t = std::make_shared<const PayoffTable>(table);
  return Relation::FromPredicate(
      [t, agent](OutcomeId x, OutcomeId y) {
        return t->Get(y, agent) > t->Get(x, agent);
      },
      t->outcomes());
}

Relation Benevolent(const PayoffTable& table, std::vector<AgentId> agents) {
  auto t = std::make_shared<const PayoffTable>(table);
  return Relation::FromPredicate(
      [t, agents = std::move(agents)](OutcomeId x, OutcomeId y) {
        return ParetoBetter(*t, agents, x, y);
      },
      t->outcomes());
}

Relation SelfishBenevolent(const PayoffTable& table, AgentId agent,
                           std::vector<AgentId> agents) {
  Relation selfish = Selfish(table, agent);
  Relation benevolent = Benevolent(table, std::move(agents));
  return Relation::FromPredicate(
      [selfish, benevolent](OutcomeId x, OutcomeId y) {
        return selfish.Holds(x, y) || benevolent.Holds(x, y);
      },
      table.outcomes());
}

Relation SelfishMalevolent(const PayoffTable& table, AgentId agent,
                           std::vector<AgentId> agents) {
  auto t = std::make_shared<const PayoffTable>(table);
  std::erase(agents, agent);
  return Relation::FromPredicate(
      [t, agent, others = std::move(agents)](OutcomeId x, OutcomeId y) {
        const Payoff& own_x = t->Get(x, agent);
        const Payoff& own_y = t->Get(y, agent);
        if (own_y != own_x) return own_y > own_x;
        bool strict = false;
        for (const AgentId& b : others) {
          const Payoff& px = t->Get(x, b);
          const Payoff& py = t->Get(y, b);
          if (py > px) return false;
          if (py < px) strict = true;
        }
        return strict;
      },
      t->outcomes());
}

Relation SetOrder(const SetPayoffTable& table, AgentId agent,
                  SetOrderKind kind) {
  auto t = std::make_shared<const SetPayoffTable>(table);
  return Relation::FromPredicate(
      [t, agent, kind](OutcomeId x, OutcomeId y) {
        const auto& sx = t->Get(x, agent);
        const auto& sy = t->Get(y, agent);
        const auto [min_x, max_x] = std::minmax_element(sx.begin(), sx.end());
        const auto [min_y, max_y] = std::minmax_element(sy.begin(), sy.end());
        switch (kind) {
          case SetOrderKind::kMin:
            return *min_y > *min_x;
          case SetOrderKind::kMax:
            return *max_y > *max_x;
          case SetOrderKind::kInterval:
            return *min_y >= *min_x && *max_y >= *max_x &&
                   (*min_y > *min_x || *max_y > *max_x);
        }
        return false;
      },
      t->outcomes());
}

}  // namespace seqgame
