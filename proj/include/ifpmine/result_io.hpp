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

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ifpmine/core_data.hpp"

namespace ifpmine {

// "B D (1)": labels in canonical item order, then the support. Lines follow
// canonical itemset order (length, then item ids).
void write_itemsets_text(std::ostream& out, std::vector<Itemset> itemsets,
                         const std::map<ItemId, std::string>& labels = {});

// [{"items":[1,3],"support":1}, ...]; a "labels" array is added per entry
// when a label map is supplied.
void write_itemsets_json(std::ostream& out, std::vector<Itemset> itemsets,
                         const std::map<ItemId, std::string>& labels = {});

std::string format_itemset(const Itemset& itemset,
                           const std::map<ItemId, std::string>& labels = {});

}  // namespace ifpmine
