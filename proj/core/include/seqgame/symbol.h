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

#ifndef SEQGAME_SYMBOL_H_
#define SEQGAME_SYMBOL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace seqgame {

namespace internal {

// Process-wide, thread-safe string interner. Ids are dense and never reused.
std::uint32_t Intern(std::string_view name);
const std::string& SymbolName(std::uint32_t id);

}  // namespace internal

// An interned identifier. Two symbols of the same kind are equal iff their
// names are equal. The Tag keeps outcomes and agents from being mixed up.
template <typename Tag>
class Symbol {
 public:
  Symbol() : Symbol(std::string_view{}) {}
  explicit Symbol(std::string_view name) : id_(internal::Intern(name)) {}

  const std::string& name() const { return internal::SymbolName(id_); }
  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  // Orders by interning order, not alphabetically. Only useful for
  // associative containers.
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

  friend std::ostream& operator<<(std::ostream& os, Symbol s) {
    return os << s.name();
  }

 private:
  std::uint32_t id_;
};

struct OutcomeTag {};
struct AgentTag {};

using OutcomeId = Symbol<OutcomeTag>;
using AgentId = Symbol<AgentTag>;

}  // namespace seqgame

template <typename Tag>
struct std::hash<seqgame::Symbol<Tag>> {
  std::size_t operator()(seqgame::Symbol<Tag> s) const noexcept {
    return std::hash<std::uint32_t>{}(s.id());
  }
};

#endif  // SEQGAME_SYMBOL_H_
