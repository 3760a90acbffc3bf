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

#include "seqgame/text_format.h"

#include <cctype>
#include <vector>

namespace seqgame {
namespace {

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Shared recursive-descent reader for games and profiles.
class Reader {
 public:
  Reader(std::string_view text, bool allow_choices)
      : text_(text), allow_choices_(allow_choices) {}

  template <typename Tree, typename Build>
  Tree ReadDocument(const Build& build) {
    SkipSpace();
    Tree result = ReadTree<Tree>(build);
    SkipSpace();
    if (!AtEnd()) Fail("unexpected text after the end of the tree");
    return result;
  }

 private:
  template <typename Tree, typename Build>
  Tree ReadTree(const Build& build) {
    if (AtEnd()) Fail("unexpected end of input");
    if (Peek() != '(') return Tree::Leaf(OutcomeId(ReadIdent()));

    const std::size_t open_line = line_;
    const std::size_t open_column = column_;
    Advance();
    SkipSpace();
    const AgentId owner(ReadIdent());
    std::vector<Tree> children;
    std::vector<std::size_t> marked;
    while (true) {
      const bool had_space = SkipSpace();
      if (AtEnd()) Fail("unclosed '('");
      if (Peek() == ')') {
        Advance();
        break;
      }
      if (!had_space) Fail("expected whitespace before a child");
      if (Peek() == '*') {
        if (!allow_choices_) Fail("'*' choice marks are not allowed in a game");
        Advance();
        SkipSpace();
        marked.push_back(children.size());
      }
      children.push_back(ReadTree<Tree>(build));
    }
    if (children.empty()) {
      throw EmptyNode("node owned by '" + owner.name() + "' has no children",
                      open_line, open_column);
    }
    if (allow_choices_ && marked.size() != 1) {
      throw ChoiceCountError("node owned by '" + owner.name() + "' has " +
                                 std::to_string(marked.size()) +
                                 " chosen children, expected exactly 1",
                             open_line, open_column);
    }
    return build(owner, std::move(children),
                 marked.empty() ? std::size_t{0} : marked.front());
  }

  std::string ReadIdent() {
    if (AtEnd()) Fail("expected an identifier, found end of input");
    std::string ident;
    while (!AtEnd() && IsIdentChar(Peek())) {
      ident.push_back(Peek());
      Advance();
    }
    if (ident.empty()) {
      Fail(std::string("expected an identifier, found '") + Peek() + "'");
    }
    return ident;
  }

  bool SkipSpace() {
    bool skipped = false;
    while (!AtEnd() && std::isspace(static_cast<unsigned char>(Peek()))) {
      Advance();
      skipped = true;
    }
    return skipped;
  }

  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void Fail(const std::string& message) const {
    throw ParseError(message, line_, column_);
  }

  std::string_view text_;
  bool allow_choices_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

void Print(const Game& g, std::string& out) {
  if (g.is_leaf()) {
    out += g.outcome().name();
    return;
  }
  out += '(';
  out += g.owner().name();
  for (const Game& child : g.children()) {
    out += ' ';
    Print(child, out);
  }
  out += ')';
}

void Print(const StrategyProfile& s, std::string& out) {
  if (s.is_leaf()) {
    out += s.outcome().name();
    return;
  }
  out += '(';
  out += s.owner().name();
  const auto children = s.children();
  for (std::size_t i = 0; i < children.size(); ++i) {
    out += ' ';
    if (i == s.chosen_index()) out += '*';
    Print(children[i], out);
  }
  out += ')';
}

}  // namespace

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(
          line == 0 ? message
                    : std::to_string(line) + ":" + std::to_string(column) +
                          ": " + message),
      line_(line),
      column_(column) {}

Game ParseGame(std::string_view text) {
  Reader reader(text, /*allow_choices=*/false);
  return reader.ReadDocument<Game>(
      [](AgentId owner, std::vector<Game> children, std::size_t) {
        Game first = children.front();
        children.erase(children.begin());
        return Game::Node(owner, std::move(first), std::move(children));
      });
}

StrategyProfile ParseProfile(std::string_view text) {
  Reader reader(text, /*allow_choices=*/true);
  return reader.ReadDocument<StrategyProfile>(
      [](AgentId owner, std::vector<StrategyProfile> children,
         std::size_t chosen) {
        return StrategyProfile::Node(owner, std::move(children), chosen);
      });
}

std::string PrintGame(const Game& g) {
  std::string out;
  Print(g, out);
  return out;
}

std::string PrintProfile(const StrategyProfile& s) {
  std::string out;
  Print(s, out);
  return out;
}

}  // namespace seqgame
