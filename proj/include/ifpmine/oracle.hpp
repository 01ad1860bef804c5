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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "ifpmine/core_data.hpp"
#include "ifpmine/mlms_miner.hpp"
#include "ifpmine/run_control.hpp"

namespace ifpmine {

class OracleGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kOracleMaxFrequentItems = 25;
inline constexpr std::size_t kOracleMaxTransactionLength = 25;

// Exhaustive reference for minimally infrequent itemsets. Infrequent items
// are reported directly; longer sets are grown one frequent item at a time
// from frequent sets, and a set is minimal when every subset obtained by
// dropping one item is frequent (anti-monotonicity covers the rest).
// Supports are counted by scanning the raw transactions.
std::vector<Itemset> mii_oracle(const TransactionDatabase& db, Count sigma,
                                const Deadline& deadline = {});

// Exhaustive reference for multi-threshold frequent itemsets: counts every
// subset (up to the vector's length) of every transaction.
std::vector<Itemset> mlms_oracle(const TransactionDatabase& db,
                                 const ThresholdVector& tv,
                                 const Deadline& deadline = {});

// xoshiro256** (Blackman and Vigna), seeded through splitmix64.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed);

  std::uint64_t next();
  // Uniform on [0, 1) from the top 53 bits.
  double next_unit();

 private:
  std::array<std::uint64_t, 4> s_{};
};

struct SynthConfig {
  std::size_t num_items = 10;
  std::size_t num_transactions = 100;
  double density = 0.1;
  std::uint64_t seed = 0;
};

// Bernoulli transactions over items 0..num_items-1. Draw order is item-major:
// for item i, then transaction t, one draw decides membership of i in t
// (include iff next_unit() < density). Throws std::invalid_argument on a
// density outside [0,1].
TransactionDatabase gen_synthetic(const SynthConfig& cfg);

}  // namespace ifpmine
