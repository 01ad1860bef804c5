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
#include <vector>

#include "ifpmine/core_data.hpp"
#include "ifpmine/ifp_tree.hpp"
#include "ifpmine/run_control.hpp"

namespace ifpmine {

// Minimally infrequent itemsets of one run, in canonical order, each carrying
// its support in the mined database.
struct MiiResult {
  std::vector<Itemset> miis;
  Count sigma = 0;
  std::string algorithm;
  std::chrono::nanoseconds elapsed{0};
  // Largest number of tree nodes (ifp) or stored candidates (apriori) held at
  // one time.
  std::size_t peak_nodes = 0;
};

struct MineOptions {
  Deadline deadline;
  // Upper bound on concurrently running recursive branches; 1 = sequential.
  unsigned threads = 1;
};

// {x} • sets: adds x to every member. An empty collection stays empty.
std::vector<Itemset> unify(ItemId x, const std::vector<Itemset>& sets);

// Pattern-growth miner over the projected/residual decomposition of `tree`.
// Throws InvalidThreshold when sigma < 1.
MiiResult ifp_min(const IfpTree& tree, Count sigma,
                  const MineOptions& options = {});

// Level-wise miner: candidates rejected at level l+1 are exactly the MIIs of
// that length. Throws InvalidThreshold when sigma < 1.
MiiResult apriori_min(const TransactionDatabase& db, Count sigma,
                      const MineOptions& options = {});

}  // namespace ifpmine
