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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ifpmine {

using ItemId = std::uint32_t;
using Count = std::uint64_t;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class InvalidThreshold : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A set of item ids kept sorted ascending and duplicate-free. Equality and
// ordering ignore the support annotation. Ordering is canonical: shorter sets
// first, then lexicographic by item id.
class Itemset {
 public:
  Itemset() = default;
  Itemset(std::initializer_list<ItemId> items);
  explicit Itemset(std::vector<ItemId> items);

  // Skips canonicalization; `items` must already be sorted and unique.
  static Itemset from_sorted(std::vector<ItemId> items);

  const std::vector<ItemId>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  bool contains(ItemId item) const;
  bool is_subset_of(const Itemset& other) const;

  // Returns a copy with `item` added, keeping canonical order.
  Itemset with(ItemId item) const;

  const std::optional<Count>& support() const { return support_; }
  void set_support(Count support) { support_ = support; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  friend bool operator==(const Itemset& a, const Itemset& b) {
    return a.items_ == b.items_;
  }
  friend std::strong_ordering operator<=>(const Itemset& a, const Itemset& b);

 private:
  std::vector<ItemId> items_;
  std::optional<Count> support_;
};

struct Transaction {
  std::uint64_t tid = 0;
  Itemset items;
};

// Immutable multiset of transactions. Transaction ids are 0..size()-1 in
// insertion order.
class TransactionDatabase {
 public:
  TransactionDatabase() = default;
  explicit TransactionDatabase(std::vector<std::vector<ItemId>> rows,
                               std::map<ItemId, std::string> labels = {});

  const std::vector<Transaction>& transactions() const { return transactions_; }
  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }

  // Items appearing in at least one transaction, ascending.
  const std::vector<ItemId>& universe() const { return universe_; }

  const std::map<ItemId, std::string>& labels() const { return labels_; }
  // The label if one is registered, otherwise the decimal id.
  std::string label(ItemId item) const;
  TransactionDatabase with_labels(std::map<ItemId, std::string> labels) const;

  std::vector<std::vector<ItemId>> rows() const;

 private:
  std::vector<Transaction> transactions_;
  std::vector<ItemId> universe_;
  std::map<ItemId, std::string> labels_;
};

TransactionDatabase parse_fimi(std::istream& in);
TransactionDatabase parse_fimi(std::string_view text);
void write_fimi(std::ostream& out, const TransactionDatabase& db);

// Reads "id,label" lines; blank lines and lines starting with '#' are skipped.
std::map<ItemId, std::string> parse_label_map(std::istream& in);

Count support(const TransactionDatabase& db, const Itemset& itemset);

// Support of every universe item, keyed by item id.
std::map<ItemId, Count> item_supports(const TransactionDatabase& db);

// Universe items ascending by support, ties ascending by item id.
std::vector<ItemId> iflist_order(const TransactionDatabase& db);

struct PruneResult {
  TransactionDatabase db;
  std::vector<Itemset> infrequent;  // 1-itemsets with supports, ascending id
};

PruneResult prune_infrequent_items(const TransactionDatabase& db, Count sigma);

// A minimum support given either as an absolute count or as a fraction of the
// database size. Fractions are kept as an exact ratio so that "30%" of 10000
// resolves to exactly 3000.
class SupportThreshold {
 public:
  enum class Kind { kAbsolute, kFraction };

  static SupportThreshold absolute(Count count);
  static SupportThreshold fraction(std::uint64_t numerator,
                                   std::uint64_t denominator);
  // Accepts "N" or "P%" where P is a non-negative decimal (e.g. "12.5%").
  static SupportThreshold parse(std::string_view text);

  Kind kind() const { return kind_; }
  double value() const;
  // ceil(fraction * num_transactions) for fractions.
  Count resolve(std::size_t num_transactions) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::kAbsolute;
  std::uint64_t numerator_ = 0;
  std::uint64_t denominator_ = 1;
  std::string text_;
};

}  // namespace ifpmine
