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

#ifndef SEQGAME_TEXT_FORMAT_H_
#define SEQGAME_TEXT_FORMAT_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seqgame/game.h"
#include "seqgame/strategy.h"

namespace seqgame {

// Games and profiles are written as s-expressions:
//
//   GAME    := IDENT | '(' IDENT GAME+ ')'
//   PROFILE := IDENT | '(' IDENT ['*'] PROFILE ... ')'   exactly one '*'
//   IDENT   := [A-Za-z0-9_]+
//
// The head of a parenthesized form is the owning agent; a bare identifier is
// an outcome. Example: "(a *(b oc1 *oc2) oc3)".

class ParseError : public std::runtime_error {
 public:
  // line and column are 1-based; 0 means unknown.
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A node with an agent but no children.
class EmptyNode : public ParseError {
 public:
  using ParseError::ParseError;
};

// A profile node without exactly one chosen child.
class ChoiceCountError : public ParseError {
 public:
  using ParseError::ParseError;
};

Game ParseGame(std::string_view text);
StrategyProfile ParseProfile(std::string_view text);

// Canonical form: single spaces, no trailing whitespace or newline.
std::string PrintGame(const Game& g);
std::string PrintProfile(const StrategyProfile& s);

}  // namespace seqgame

#endif  // SEQGAME_TEXT_FORMAT_H_
