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

#include "ifpmine/mii_miners.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <iterator>
#include <optional>

namespace ifpmine {

namespace {

// Canonically sorted, duplicate-free collection of itemsets.
using Family = std::vector<Itemset>;

void normalize(Family& f) {
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
}

Family difference(const Family& a, const Family& b) {
  Family out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

class GaugeHold {
 public:
  GaugeHold(NodeGauge& gauge, std::size_t n) : gauge_(gauge), n_(n) {
    gauge_.acquire(n_);
  }
  ~GaugeHold() { gauge_.release(n_); }
  GaugeHold(const GaugeHold&) = delete;
  GaugeHold& operator=(const GaugeHold&) = delete;

 private:
  NodeGauge& gauge_;
  std::size_t n_;
};

struct IfpMinRun {
  Count sigma;
  const MineOptions& options;
  unsigned parallel_depth;
  NodeGauge gauge;

  Family mine(const IfpTree& input, unsigned depth);
};

Family IfpMinRun::mine(const IfpTree& input, unsigned depth) {
  options.deadline.check();

  // Steps 1-2: infrequent items lead the order, so they form a header prefix.
  Family result;
  std::vector<ItemId> infrequent;
  for (const auto& h : input.header()) {
    if (h.support >= sigma) break;
    infrequent.push_back(h.item);
    result.push_back(Itemset{h.item});
  }
  std::optional<IfpTree> pruned;
  if (!infrequent.empty()) pruned = input.without_items(infrequent);
  const IfpTree& tree = pruned ? *pruned : input;
  GaugeHold hold_pruned(gauge, pruned ? pruned->node_count() : 0);

  if (tree.empty()) {
    normalize(result);
    return result;
  }

  const ItemId x = tree.lf_item();
  if (tree.single_node()) {
    if (tree.item_support(x) < sigma) result.push_back(Itemset{x});
    normalize(result);
    return result;
  }

  Family from_residual;
  Family from_projected;
  std::vector<ItemId> residual_items;
  std::vector<ItemId> projected_items;

  auto run_residual = [&] {
    IfpTree residual = tree.residual(x);
    GaugeHold hold(gauge, residual.node_count());
    residual_items = residual.items();
    from_residual = mine(residual, depth + 1);
  };
  auto run_projected = [&] {
    IfpTree projected = tree.projected(x);
    GaugeHold hold(gauge, projected.node_count());
    projected_items = projected.items();
    from_projected = mine(projected, depth + 1);
  };

  if (depth < parallel_depth) {
    auto pending = std::async(std::launch::async, run_projected);
    run_residual();
    pending.get();
  } else {
    run_residual();
    run_projected();
  }

  // S ∪ {x} for projected MIIs S that are not MIIs of the residual.
  Family with_x = unify(x, difference(from_projected, from_residual));

  // Frequent items that never co-occur with x.
  std::vector<ItemId> absent;
  std::set_difference(residual_items.begin(), residual_items.end(),
                      projected_items.begin(), projected_items.end(),
                      std::back_inserter(absent));
  for (ItemId y : absent) with_x.push_back(Itemset{x, y});

  result.insert(result.end(), std::make_move_iterator(from_residual.begin()),
                std::make_move_iterator(from_residual.end()));
  result.insert(result.end(), std::make_move_iterator(with_x.begin()),
                std::make_move_iterator(with_x.end()));
  normalize(result);
  return result;
}

void require_positive(Count sigma) {
  if (sigma < 1) {
    throw InvalidThreshold("minimum support must resolve to at least 1");
  }
}

}  // namespace

std::vector<Itemset> unify(ItemId x, const std::vector<Itemset>& sets) {
  std::vector<Itemset> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.with(x));
  return out;
}

MiiResult ifp_min(const IfpTree& tree, Count sigma,
                  const MineOptions& options) {
  require_positive(sigma);
  const auto start = std::chrono::steady_clock::now();

  const unsigned threads = std::max(1u, options.threads);
  IfpMinRun run{sigma, options,
                static_cast<unsigned>(std::bit_width(threads) - 1), {}};
  run.gauge.acquire(tree.node_count());
  Family miis = run.mine(tree, 0);
  for (auto& m : miis) m.set_support(tree.support(m));

  MiiResult result;
  result.miis = std::move(miis);
  result.sigma = sigma;
  result.algorithm = "ifp";
  result.peak_nodes = run.gauge.peak();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

MiiResult apriori_min(const TransactionDatabase& db, Count sigma,
                      const MineOptions& options) {
  require_positive(sigma);
  const auto start = std::chrono::steady_clock::now();
  MiiResult result;
  result.sigma = sigma;
  result.algorithm = "apriori";

  // Level 1: every infrequent item is an MII; frequent items get dense ids.
  std::vector<ItemId> frequent;
  std::map<ItemId, std::uint32_t> dense;
  for (auto [item, n] : item_supports(db)) {
    if (n < sigma) {
      Itemset s{item};
      s.set_support(n);
      result.miis.push_back(std::move(s));
    } else {
      dense[item] = static_cast<std::uint32_t>(frequent.size());
      frequent.push_back(item);
    }
  }

  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(db.size());
  for (const auto& t : db.transactions()) {
    std::vector<std::uint32_t> row;
    for (ItemId item : t.items) {
      if (auto it = dense.find(item); it != dense.end()) {
        row.push_back(it->second);
      }
    }
    if (row.size() >= 2) rows.push_back(std::move(row));
  }

  using Key = std::vector<std::uint32_t>;
  std::vector<Key> level;  // frequent l-itemsets, lexicographic
  for (std::uint32_t i = 0; i < frequent.size(); ++i) level.push_back({i});

  std::vector<char> present(frequent.size(), 0);
  while (!level.empty()) {
    options.deadline.check();
    const std::size_t l = level.front().size();

    // Join pairs sharing an (l-1)-prefix, then drop candidates with an
    // infrequent l-subset.
    std::vector<Key> candidates;
    Key subset(l);
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t j = i + 1; j < level.size(); ++j) {
        if (!std::equal(level[i].begin(), level[i].end() - 1,
                        level[j].begin())) {
          break;
        }
        Key cand = level[i];
        cand.push_back(level[j].back());
        bool keep = true;
        for (std::size_t drop = 0; keep && drop + 2 < cand.size(); ++drop) {
          std::copy(cand.begin(), cand.begin() + drop, subset.begin());
          std::copy(cand.begin() + drop + 1, cand.end(),
                    subset.begin() + drop);
          keep = std::binary_search(level.begin(), level.end(), subset);
        }
        if (keep) candidates.push_back(std::move(cand));
      }
    }
    result.peak_nodes =
        std::max(result.peak_nodes, level.size() + candidates.size());
    if (candidates.empty()) break;

    std::vector<Count> counts(candidates.size(), 0);
    std::size_t scanned = 0;
    for (const auto& row : rows) {
      if ((++scanned & 63) == 0) options.deadline.check();
      if (row.size() <= l) continue;
      for (auto i : row) present[i] = 1;
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        const auto& cand = candidates[c];
        if (std::all_of(cand.begin(), cand.end(),
                        [&](std::uint32_t i) { return present[i] != 0; })) {
          ++counts[c];
        }
      }
      for (auto i : row) present[i] = 0;
    }

    std::vector<Key> next;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (counts[c] >= sigma) {
        next.push_back(std::move(candidates[c]));
        continue;
      }
      std::vector<ItemId> items;
      items.reserve(candidates[c].size());
      for (auto i : candidates[c]) items.push_back(frequent[i]);
      auto mii = Itemset::from_sorted(std::move(items));
      mii.set_support(counts[c]);
      result.miis.push_back(std::move(mii));
    }
    level = std::move(next);
  }

  std::sort(result.miis.begin(), result.miis.end());
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace ifpmine
