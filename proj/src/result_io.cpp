// Copyright 2026 The ifpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ifpmine/result_io.hpp"

#include <algorithm>
#include <ostream>

#include "json.hpp"

namespace ifpmine {

namespace {

std::string label_of(ItemId item, const std::map<ItemId, std::string>& labels) {
  if (auto it = labels.find(item); it != labels.end()) return it->second;
  return std::to_string(item);
}

}  // namespace

std::string format_itemset(const Itemset& itemset,
                           const std::map<ItemId, std::string>& labels) {
  std::string line;
  for (ItemId item : itemset) {
    if (!line.empty()) line += ' ';
    line += label_of(item, labels);
  }
  if (itemset.support()) {
    if (!line.empty()) line += ' ';
    line += "(" + std::to_string(*itemset.support()) + ")";
  }
  return line;
}

void write_itemsets_text(std::ostream& out, std::vector<Itemset> itemsets,
                         const std::map<ItemId, std::string>& labels) {
  std::sort(itemsets.begin(), itemsets.end());
  for (const auto& s : itemsets) out << format_itemset(s, labels) << '\n';
}

void write_itemsets_json(std::ostream& out, std::vector<Itemset> itemsets,
                         const std::map<ItemId, std::string>& labels) {
  std::sort(itemsets.begin(), itemsets.end());
  auto doc = nlohmann::json::array();
  for (const auto& s : itemsets) {
    nlohmann::json entry;
    entry["items"] = s.items();
    if (!labels.empty()) {
      auto names = nlohmann::json::array();
      for (ItemId item : s) names.push_back(label_of(item, labels));
      entry["labels"] = std::move(names);
    }
    if (s.support()) entry["support"] = *s.support();
    doc.push_back(std::move(entry));
  }
  out << doc.dump() << '\n';
}

}  // namespace ifpmine
