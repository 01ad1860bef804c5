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

#include "ifpmine/ifp_tree.hpp"

#include <algorithm>
#include <sstream>

namespace ifpmine {

namespace {

constexpr std::uint32_t kRemoved = static_cast<std::uint32_t>(-1);

}  // namespace

IfpTree::IfpTree() { nodes_.push_back(IfpNode{}); }

IfpTree IfpTree::build(const TransactionDatabase& db) {
  std::vector<WeightedPath> paths;
  paths.reserve(db.size());
  for (const auto& t : db.transactions()) {
    if (!t.items.empty()) paths.push_back({t.items.items(), 1});
  }
  return from_paths(paths, db.size());
}

IfpTree IfpTree::from_paths(const std::vector<WeightedPath>& paths,
                            Count num_transactions) {
  IfpTree tree;
  tree.num_transactions_ = num_transactions;
  tree.nodes_[0].count = num_transactions;

  std::map<ItemId, Count> counts;
  for (const auto& p : paths) {
    if (p.weight == 0) continue;
    for (ItemId item : p.items) counts[item] += p.weight;
  }
  std::vector<std::pair<Count, ItemId>> keyed;
  keyed.reserve(counts.size());
  for (auto [item, n] : counts) keyed.emplace_back(n, item);
  std::sort(keyed.begin(), keyed.end());

  tree.header_.reserve(keyed.size());
  tree.rank_by_item_.reserve(keyed.size());
  for (std::uint32_t r = 0; r < keyed.size(); ++r) {
    tree.header_.push_back({keyed[r].second, keyed[r].first, kNoNode, kNoNode});
    tree.rank_by_item_.emplace_back(keyed[r].second, r);
  }
  std::sort(tree.rank_by_item_.begin(), tree.rank_by_item_.end());

  std::vector<std::uint32_t> ranks;
  for (const auto& p : paths) {
    if (p.weight == 0 || p.items.empty()) continue;
    ranks.clear();
    for (ItemId item : p.items) ranks.push_back(*tree.rank_of(item));
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    tree.insert(ranks, p.weight);
  }
  return tree;
}

NodeIndex IfpTree::add_child(NodeIndex parent, std::uint32_t rank,
                             Count count) {
  const auto index = static_cast<NodeIndex>(nodes_.size());
  IfpNode n;
  n.item = header_[rank].item;
  n.rank = rank;
  n.count = count;
  n.parent = parent;
  nodes_.push_back(std::move(n));

  auto& siblings = nodes_[parent].children;
  auto pos = std::lower_bound(
      siblings.begin(), siblings.end(), rank,
      [this](NodeIndex c, std::uint32_t r) { return nodes_[c].rank < r; });
  siblings.insert(pos, index);

  auto& h = header_[rank];
  if (h.first == kNoNode) {
    h.first = index;
  } else {
    nodes_[h.last].node_link = index;
  }
  h.last = index;
  return index;
}

void IfpTree::insert(const std::vector<std::uint32_t>& ranks, Count weight) {
  NodeIndex cur = 0;
  for (std::uint32_t r : ranks) {
    const auto& siblings = nodes_[cur].children;
    auto pos = std::lower_bound(
        siblings.begin(), siblings.end(), r,
        [this](NodeIndex c, std::uint32_t rr) { return nodes_[c].rank < rr; });
    if (pos != siblings.end() && nodes_[*pos].rank == r) {
      cur = *pos;
      nodes_[cur].count += weight;
    } else {
      cur = add_child(cur, r, weight);
    }
  }
}

std::vector<ItemId> IfpTree::order() const {
  std::vector<ItemId> out;
  out.reserve(header_.size());
  for (const auto& h : header_) out.push_back(h.item);
  return out;
}

std::optional<std::uint32_t> IfpTree::rank_of(ItemId item) const {
  auto it = std::lower_bound(
      rank_by_item_.begin(), rank_by_item_.end(), item,
      [](const auto& entry, ItemId id) { return entry.first < id; });
  if (it == rank_by_item_.end() || it->first != item) return std::nullopt;
  return it->second;
}

Count IfpTree::item_support(ItemId item) const {
  auto r = rank_of(item);
  return r ? header_[*r].support : 0;
}

ItemId IfpTree::lf_item() const {
  if (empty()) throw NoLfItem();
  return header_.front().item;
}

IfpTree IfpTree::projected(ItemId x) const {
  if (lf_item() != x) throw NotLfItem(x);
  const NodeIndex xnode = header_.front().first;

  std::vector<WeightedPath> rows;
  std::vector<ItemId> prefix;
  for (NodeIndex c : nodes_[xnode].children) collect_paths(c, prefix, rows);
  return from_paths(rows, header_.front().support);
}

IfpTree IfpTree::residual(ItemId x) const {
  if (lf_item() != x) throw NotLfItem(x);
  return without_items({x});
}

IfpTree IfpTree::without_items(const std::vector<ItemId>& items) const {
  std::vector<std::uint32_t> rank_map(header_.size(), 0);
  for (ItemId item : items) {
    if (auto r = rank_of(item)) rank_map[*r] = kRemoved;
  }

  IfpTree out;
  out.num_transactions_ = num_transactions_;
  out.nodes_[0].count = num_transactions_;
  std::uint32_t next = 0;
  for (std::uint32_t r = 0; r < header_.size(); ++r) {
    if (rank_map[r] == kRemoved) continue;
    rank_map[r] = next++;
    out.header_.push_back({header_[r].item, header_[r].support, kNoNode,
                           kNoNode});
    out.rank_by_item_.emplace_back(header_[r].item, rank_map[r]);
  }
  std::sort(out.rank_by_item_.begin(), out.rank_by_item_.end());
  out.nodes_.reserve(nodes_.size());

  for (NodeIndex c : nodes_[0].children) out.merge_into(*this, c, 0, rank_map);
  return out;
}

// Copies the subtree of `src_node` below `dst_parent`. Removed nodes vanish and
// their children are merged into the nearest kept ancestor; equal items meet
// in the same node with summed counts.
void IfpTree::merge_into(const IfpTree& src, NodeIndex src_node,
                         NodeIndex dst_parent,
                         const std::vector<std::uint32_t>& rank_map) {
  const IfpNode& s = src.nodes_[src_node];
  const std::uint32_t r = rank_map[s.rank];
  NodeIndex target = dst_parent;
  if (r != kRemoved) {
    const auto& siblings = nodes_[dst_parent].children;
    auto pos = std::lower_bound(
        siblings.begin(), siblings.end(), r,
        [this](NodeIndex c, std::uint32_t rr) { return nodes_[c].rank < rr; });
    if (pos != siblings.end() && nodes_[*pos].rank == r) {
      target = *pos;
      nodes_[target].count += s.count;
    } else {
      target = add_child(dst_parent, r, s.count);
    }
  }
  for (NodeIndex c : s.children) merge_into(src, c, target, rank_map);
}

std::vector<ItemId> IfpTree::items() const {
  std::vector<ItemId> out;
  out.reserve(rank_by_item_.size());
  for (const auto& [item, rank] : rank_by_item_) out.push_back(item);
  return out;
}

Count IfpTree::support(const Itemset& itemset) const {
  if (itemset.empty()) return num_transactions_;
  std::vector<std::uint32_t> ranks;
  ranks.reserve(itemset.size());
  for (ItemId item : itemset) {
    auto r = rank_of(item);
    if (!r) return 0;
    ranks.push_back(*r);
  }
  std::sort(ranks.rbegin(), ranks.rend());

  Count total = 0;
  for (NodeIndex n = header_[ranks[0]].first; n != kNoNode;
       n = nodes_[n].node_link) {
    std::size_t want = 1;
    for (NodeIndex p = nodes_[n].parent; p != 0 && want < ranks.size();
         p = nodes_[p].parent) {
      const auto pr = nodes_[p].rank;
      if (pr == ranks[want]) {
        ++want;
      } else if (pr < ranks[want]) {
        break;
      }
    }
    if (want == ranks.size()) total += nodes_[n].count;
  }
  return total;
}

std::vector<NodeIndex> IfpTree::header_chain(ItemId item) const {
  std::vector<NodeIndex> out;
  auto r = rank_of(item);
  if (!r) return out;
  for (NodeIndex n = header_[*r].first; n != kNoNode; n = nodes_[n].node_link) {
    out.push_back(n);
  }
  return out;
}

void IfpTree::collect_paths(NodeIndex start, std::vector<ItemId>& prefix,
                            std::vector<WeightedPath>& out) const {
  const IfpNode& n = nodes_[start];
  prefix.push_back(n.item);
  Count below = 0;
  for (NodeIndex c : n.children) below += nodes_[c].count;
  if (n.count > below) out.push_back({prefix, n.count - below});
  for (NodeIndex c : n.children) collect_paths(c, prefix, out);
  prefix.pop_back();
}

std::vector<WeightedPath> IfpTree::paths() const {
  std::vector<WeightedPath> out;
  std::vector<ItemId> prefix;
  for (NodeIndex c : nodes_[0].children) collect_paths(c, prefix, out);
  return out;
}

std::string IfpTree::dump(const std::map<ItemId, std::string>& labels) const {
  std::ostringstream os;
  auto walk = [&](auto&& self, NodeIndex n, int depth) -> void {
    const IfpNode& node = nodes_[n];
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
    if (auto it = labels.find(node.item); it != labels.end()) {
      os << it->second;
    } else {
      os << node.item;
    }
    os << ':' << node.count << '\n';
    for (NodeIndex c : node.children) self(self, c, depth + 1);
  };
  for (NodeIndex c : nodes_[0].children) walk(walk, c, 0);
  return os.str();
}

}  // namespace ifpmine
