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

#include "ifpmine/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ifpmine {

namespace {

using Items = std::vector<ItemId>;

Count count_containing(const std::vector<Items>& rows, const Items& s) {
  Count n = 0;
  for (const auto& row : rows) {
    if (std::includes(row.begin(), row.end(), s.begin(), s.end())) ++n;
  }
  return n;
}

std::vector<Items> sorted_rows(const TransactionDatabase& db) {
  std::vector<Items> rows;
  rows.reserve(db.size());
  for (const auto& t : db.transactions()) {
    Items row = t.items.items();
    std::sort(row.begin(), row.end());
    rows.push_back(std::move(row));
  }
  return rows;
}

Itemset annotated(Items items, Count support) {
  Itemset s(std::move(items));
  s.set_support(support);
  return s;
}

}  // namespace

std::vector<Itemset> mii_oracle(const TransactionDatabase& db, Count sigma,
                                const Deadline& deadline) {
  if (sigma < 1) throw InvalidThreshold("oracle needs sigma >= 1");
  const auto rows = sorted_rows(db);

  std::vector<Itemset> out;
  Items frequent_items;
  for (ItemId item : db.universe()) {
    const Count n = count_containing(rows, {item});
    if (n < sigma) {
      out.push_back(annotated({item}, n));
    } else {
      frequent_items.push_back(item);
    }
  }
  if (frequent_items.size() > kOracleMaxFrequentItems) {
    throw OracleGuardError("oracle refuses " +
                           std::to_string(frequent_items.size()) +
                           " frequent items (limit " +
                           std::to_string(kOracleMaxFrequentItems) + ")");
  }

  std::set<Items> frequent;
  for (ItemId item : frequent_items) frequent.insert({item});
  while (!frequent.empty()) {
    deadline.check();
    std::set<Items> next;
    for (const auto& base : frequent) {
      for (ItemId y : frequent_items) {
        if (y <= base.back()) continue;
        Items grown = base;
        grown.push_back(y);

        bool subsets_frequent = true;
        for (std::size_t drop = 0; drop < grown.size(); ++drop) {
          Items sub;
          for (std::size_t i = 0; i < grown.size(); ++i) {
            if (i != drop) sub.push_back(grown[i]);
          }
          if (!frequent.contains(sub)) {
            subsets_frequent = false;
            break;
          }
        }
        if (!subsets_frequent) continue;

        const Count n = count_containing(rows, grown);
        if (n < sigma) {
          out.push_back(annotated(grown, n));
        } else {
          next.insert(std::move(grown));
        }
      }
    }
    frequent = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Itemset> mlms_oracle(const TransactionDatabase& db,
                                 const ThresholdVector& tv,
                                 const Deadline& deadline) {
  const auto rows = sorted_rows(db);
  for (const auto& row : rows) {
    if (row.size() > kOracleMaxTransactionLength) {
      throw OracleGuardError("oracle refuses a transaction of length " +
                             std::to_string(row.size()) + " (limit " +
                             std::to_string(kOracleMaxTransactionLength) + ")");
    }
  }

  // Each transaction adds one to every distinct subset it contains.
  std::map<Items, Count> counts;
  const std::size_t max_len = tv.max_length();
  for (const auto& row : rows) {
    deadline.check();
    Items current;
    auto enumerate = [&](auto&& self, std::size_t from) -> void {
      if (!current.empty()) ++counts[current];
      if (current.size() == max_len) return;
      for (std::size_t i = from; i < row.size(); ++i) {
        current.push_back(row[i]);
        self(self, i + 1);
        current.pop_back();
      }
    };
    enumerate(enumerate, 0);
  }

  std::vector<Itemset> out;
  for (const auto& [items, n] : counts) {
    if (n >= tv.at(items.size())) out.push_back(annotated(items, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Xoshiro256StarStar::Xoshiro256StarStar(std::uint64_t seed) {
  for (auto& word : s_) {
    seed += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = seed;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    word = z ^ (z >> 31);
  }
}

std::uint64_t Xoshiro256StarStar::next() {
  const auto rotl = [](std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  };
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256StarStar::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

TransactionDatabase gen_synthetic(const SynthConfig& cfg) {
  if (!(cfg.density >= 0.0 && cfg.density <= 1.0)) {
    throw std::invalid_argument("density must lie in [0,1]");
  }
  Xoshiro256StarStar rng(cfg.seed);
  std::vector<std::vector<ItemId>> rows(cfg.num_transactions);
  for (std::size_t item = 0; item < cfg.num_items; ++item) {
    for (auto& row : rows) {
      if (rng.next_unit() < cfg.density) {
        row.push_back(static_cast<ItemId>(item));
      }
    }
  }
  return TransactionDatabase(std::move(rows));
}

}  // namespace ifpmine
