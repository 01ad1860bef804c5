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

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ifpmine/core_data.hpp"

namespace ifpmine {

class NoLfItem : public std::logic_error {
 public:
  NoLfItem() : std::logic_error("tree has no items") {}
};

class NotLfItem : public std::logic_error {
 public:
  explicit NotLfItem(ItemId item)
      : std::logic_error("item " + std::to_string(item) +
                         " is not the least frequent item of the tree") {}
};

using NodeIndex = std::uint32_t;
inline constexpr NodeIndex kNoNode = static_cast<NodeIndex>(-1);

struct IfpNode {
  ItemId item = 0;
  std::uint32_t rank = 0;  // position of `item` in the owning tree's order
  Count count = 0;
  NodeIndex parent = kNoNode;
  NodeIndex node_link = kNoNode;  // next node carrying the same item
  std::vector<NodeIndex> children;  // sorted by rank
};

// One row of the represented database, items in tree order, with multiplicity.
struct WeightedPath {
  std::vector<ItemId> items;
  Count weight = 0;
};

// Prefix tree of transactions whose items are sorted by
// ascending support (ties by ascending item id). Immutable once built; the
// projected and residual operations return new trees.
//
// Because the order starts with the least frequent item, that item can only
// appear as the first element of a path, so it has exactly one node and that
// node is a child of the root.
class IfpTree {
 public:
  struct HeaderEntry {
    ItemId item = 0;
    Count support = 0;
    NodeIndex first = kNoNode;
    NodeIndex last = kNoNode;
  };

  IfpTree();

  static IfpTree build(const TransactionDatabase& db);
  // `num_transactions` counts rows too, including ones with no items.
  static IfpTree from_paths(const std::vector<WeightedPath>& paths,
                            Count num_transactions);

  bool empty() const { return header_.empty(); }
  Count num_transactions() const { return num_transactions_; }
  // Item nodes only; the root is not counted.
  std::size_t node_count() const { return nodes_.size() - 1; }
  bool single_node() const { return node_count() == 1; }

  // Items with at least one node, in tree order.
  std::vector<ItemId> order() const;
  const std::vector<HeaderEntry>& header() const { return header_; }
  std::optional<std::uint32_t> rank_of(ItemId item) const;
  Count item_support(ItemId item) const;

  ItemId lf_item() const;
  IfpTree projected(ItemId x) const;
  IfpTree residual(ItemId x) const;
  // Deletes every listed item and merges the orphaned subtrees.
  IfpTree without_items(const std::vector<ItemId>& items) const;

  // Items with at least one node, ascending id.
  std::vector<ItemId> items() const;
  Count support(const Itemset& itemset) const;

  const IfpNode& root() const { return nodes_[0]; }
  const IfpNode& node(NodeIndex i) const { return nodes_[i]; }
  std::vector<NodeIndex> header_chain(ItemId item) const;

  // Decompresses into weighted rows in tree order, depth-first by child rank.
  std::vector<WeightedPath> paths() const;

  // One line per node, "item:count", two spaces of indent per depth.
  std::string dump(const std::map<ItemId, std::string>& labels = {}) const;

 private:
  NodeIndex add_child(NodeIndex parent, std::uint32_t rank, Count count);
  void insert(const std::vector<std::uint32_t>& ranks, Count weight);
  void collect_paths(NodeIndex start, std::vector<ItemId>& prefix,
                     std::vector<WeightedPath>& out) const;
  void merge_into(const IfpTree& src, NodeIndex src_node, NodeIndex dst_parent,
                  const std::vector<std::uint32_t>& rank_map);

  std::vector<IfpNode> nodes_;
  std::vector<HeaderEntry> header_;  // indexed by rank
  std::vector<std::pair<ItemId, std::uint32_t>> rank_by_item_;  // sorted by id
  Count num_transactions_ = 0;
};

}  // namespace ifpmine
