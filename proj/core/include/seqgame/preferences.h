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

#ifndef SEQGAME_PREFERENCES_H_
#define SEQGAME_PREFERENCES_H_

#include <map>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "seqgame/relation.h"
#include "seqgame/symbol.h"

namespace seqgame {

// Payoffs are exact rationals so that ties compare reliably.
using Payoff = boost::multiprecision::cpp_rational;

// Parses a decimal literal such as "3", "-0.25" or "1.5e-3" exactly.
// Throws std::invalid_argument on malformed input.
Payoff ParsePayoff(std::string_view text);

class MissingPayoff : public std::runtime_error {
 public:
  MissingPayoff(OutcomeId outcome, AgentId agent);
  OutcomeId outcome() const { return outcome_; }
  AgentId agent() const { return agent_; }

 private:
  OutcomeId outcome_;
  AgentId agent_;
};

// Payoff of each agent at each outcome: the traditional payoff functions.
class PayoffTable {
 public:
  void Set(OutcomeId outcome, AgentId agent, Payoff value);
  // Throws MissingPayoff when there is no entry.
  const Payoff& Get(OutcomeId outcome, AgentId agent) const;

  // In order of first insertion.
  const std::vector<OutcomeId>& outcomes() const { return outcomes_; }
  const std::vector<AgentId>& agents() const { return agents_; }

  // Throws MissingPayoff unless every outcome has an entry for every agent.
  void RequireTotal() const;

 private:
  std::map<std::pair<OutcomeId, AgentId>, Payoff> entries_;
  std::vector<OutcomeId> outcomes_;
  std::vector<AgentId> agents_;
};

// Payoffs that are nonempty finite sets of reals.
class SetPayoffTable {
 public:
  // Throws std::invalid_argument if `values` is empty.
  void Set(OutcomeId outcome, AgentId agent, std::vector<Payoff> values);
  const std::vector<Payoff>& Get(OutcomeId outcome, AgentId agent) const;

  const std::vector<OutcomeId>& outcomes() const { return outcomes_; }
  const std::vector<AgentId>& agents() const { return agents_; }
  void RequireTotal() const;

 private:
  std::map<std::pair<OutcomeId, AgentId>, std::vector<Payoff>> entries_;
  std::vector<OutcomeId> outcomes_;
  std::vector<AgentId> agents_;
};

// Prefers y to x iff `agent` gets strictly more at y.
Relation Selfish(const PayoffTable& table, AgentId agent);

// Pareto: nobody gets less at y and somebody gets strictly more.
Relation Benevolent(const PayoffTable& table, std::vector<AgentId> agents);

Relation SelfishBenevolent(const PayoffTable& table, AgentId agent,
                           std::vector<AgentId> agents);

// Selfish first; on a tie for `agent`, prefers y if every other agent gets
// no more at y and some other agent gets strictly less.
Relation SelfishMalevolent(const PayoffTable& table, AgentId agent,
                           std::vector<AgentId> agents);

enum class SetOrderKind { kMin, kMax, kInterval };

// kMin / kMax compare lower / upper bounds. kInterval requires both bounds to
// be no lower at y and at least one strictly higher.
Relation SetOrder(const SetPayoffTable& table, AgentId agent,
                  SetOrderKind kind);

}  // namespace seqgame

#endif  // SEQGAME_PREFERENCES_H_
