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

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

#include "ifpmine/core_data.hpp"
#include "ifpmine/ifp_tree.hpp"
#include "ifpmine/run_control.hpp"

namespace ifpmine {

// Minimum supports per itemset length: at(k) is the threshold for k-itemsets,
// k = 1..max_length(). Values need not be monotone.
class ThresholdVector {
 public:
  ThresholdVector() = default;
  // Throws InvalidThreshold on an empty list or any zero entry.
  explicit ThresholdVector(std::vector<Count> sigmas);

  std::size_t max_length() const { return sigmas_.size(); }
  Count at(std::size_t k) const { return sigmas_.at(k - 1); }
  const std::vector<Count>& values() const { return sigmas_; }
  std::string to_string() const;

  friend bool operator==(const ThresholdVector&,
                         const ThresholdVector&) = default;

 private:
  std::vector<Count> sigmas_;
};

// Unresolved per-length thresholds, e.g. "4,4,3,2,1" or "10%,8%,5%".
class ThresholdSpec {
 public:
  static ThresholdSpec parse(std::string_view text, char separator = ',');

  ThresholdVector resolve(std::size_t num_transactions) const;
  const std::vector<SupportThreshold>& entries() const { return entries_; }
  std::string to_string(char separator = ',') const;

 private:
  std::vector<SupportThreshold> entries_;
};

Count sigma_low(const ThresholdVector& tv);

// True iff a k-itemset inside a tree reached through `prefix_length`
// projections meets the threshold of its full length k + prefix_length.
bool is_frequent_star(std::size_t k, std::size_t prefix_length, Count supp,
                      const ThresholdVector& tv);

struct PrefixContext {
  Itemset prefix;  // items projected on to reach the tree

  std::size_t length() const { return prefix.size(); }
};

struct MlmsOptions {
  Deadline deadline;
  unsigned threads = 1;
  // Skip the projected branch of items below sigma_low. Turning it off only
  // adds work.
  bool prune_sigma_low = true;
};

struct MlmsResult {
  std::vector<Itemset> frequent;  // canonical order, supports attached
  ThresholdVector thresholds;
  std::chrono::nanoseconds elapsed{0};
  std::size_t peak_nodes = 0;
};

// Frequent* itemsets of `tree` relative to `ctx` (prefix items excluded),
// canonical order, without supports.
std::vector<Itemset> ifp_mlms(const IfpTree& tree, const ThresholdVector& tv,
                              const PrefixContext& ctx,
                              const MlmsOptions& options = {});

MlmsResult mine_mlms(const TransactionDatabase& db, const ThresholdVector& tv,
                     const MlmsOptions& options = {});

}  // namespace ifpmine
