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

#ifndef SEQGAME_PREFS_DOCUMENT_H_
#define SEQGAME_PREFS_DOCUMENT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seqgame/preferences.h"
#include "seqgame/strategy.h"

namespace seqgame {

// Preference documents are JSON:
//
//   {
//     "preferences": {
//       "a": {"kind": "pairs", "pairs": [["oc3", "oc2"]]},
//       "b": {"kind": "selfish-benevolent"},
//       "c": {"kind": "set-interval"}
//     },
//     "payoffs":     {"oc1": {"a": 1, "b": 0.5}, ...},
//     "set_payoffs": {"oc1": {"c": [0, 5]}, ...}
//   }
//
// A pair [x, y] means the agent prefers y to x. Payoff kinds (selfish,
// benevolent, selfish-benevolent, selfish-malevolent) read "payoffs"; set
// kinds (set-min, set-max, set-interval) read "set_payoffs". Benevolence
// ranges over every agent of the payoff table. Numbers are read exactly and
// may also be given as decimal strings.

class UnknownKind : public std::runtime_error {
 public:
  explicit UnknownKind(const std::string& kind)
      : std::runtime_error("unknown preference kind '" + kind + "'") {}
};

struct PrefsDocument {
  PreferenceFamily family;
  std::optional<PayoffTable> payoffs;
  std::optional<SetPayoffTable> set_payoffs;
};

// Throws ParseError, MissingPayoff or UnknownKind.
PrefsDocument ParsePrefsDocument(std::string_view json_text);
PreferenceFamily ParsePrefs(std::string_view json_text);

}  // namespace seqgame

#endif  // SEQGAME_PREFS_DOCUMENT_H_
