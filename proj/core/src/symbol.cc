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

#include "seqgame/symbol.h"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace seqgame::internal {
namespace {

struct Table {
  std::shared_mutex mu;
  // deque keeps references stable while the table grows.
  std::deque<std::string> names;
  std::unordered_map<std::string_view, std::uint32_t> ids;
};

Table& GlobalTable() {
  static Table* table = new Table();
  return *table;
}

}  // namespace

std::uint32_t Intern(std::string_view name) {
  Table& table = GlobalTable();
  {
    std::shared_lock lock(table.mu);
    if (auto it = table.ids.find(name); it != table.ids.end()) return it->second;
  }
  std::unique_lock lock(table.mu);
  if (auto it = table.ids.find(name); it != table.ids.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(table.names.size());
  const std::string& stored = table.names.emplace_back(name);
  table.ids.emplace(stored, id);
  return id;
}

const std::string& SymbolName(std::uint32_t id) {
  Table& table = GlobalTable();
  std::shared_lock lock(table.mu);
  return table.names.at(id);
}

}  // namespace seqgame::internal
