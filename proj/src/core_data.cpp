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

#include "ifpmine/core_data.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace ifpmine {

namespace {

void canonicalize(std::vector<ItemId>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

ItemId parse_item(std::string_view token, std::size_t line) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError(line, "negative item id '" + std::string(token) + "'");
  }
  ItemId value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec == std::errc::result_out_of_range) {
    throw ParseError(line, "item id out of range '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, "not an item id '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Itemset::Itemset(std::initializer_list<ItemId> items) : items_(items) {
  canonicalize(items_);
}

Itemset::Itemset(std::vector<ItemId> items) : items_(std::move(items)) {
  canonicalize(items_);
}

Itemset Itemset::from_sorted(std::vector<ItemId> items) {
  Itemset s;
  s.items_ = std::move(items);
  return s;
}

bool Itemset::contains(ItemId item) const {
  return std::binary_search(items_.begin(), items_.end(), item);
}

bool Itemset::is_subset_of(const Itemset& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

Itemset Itemset::with(ItemId item) const {
  Itemset out;
  out.items_.reserve(items_.size() + 1);
  auto pos = std::lower_bound(items_.begin(), items_.end(), item);
  out.items_.insert(out.items_.end(), items_.begin(), pos);
  if (pos == items_.end() || *pos != item) out.items_.push_back(item);
  out.items_.insert(out.items_.end(), pos, items_.end());
  return out;
}

std::strong_ordering operator<=>(const Itemset& a, const Itemset& b) {
  if (auto c = a.items_.size() <=> b.items_.size(); c != 0) return c;
  return a.items_ <=> b.items_;
}

TransactionDatabase::TransactionDatabase(std::vector<std::vector<ItemId>> rows,
                                         std::map<ItemId, std::string> labels)
    : labels_(std::move(labels)) {
  transactions_.reserve(rows.size());
  std::vector<ItemId> seen;
  for (auto& row : rows) {
    Itemset items(std::move(row));
    seen.insert(seen.end(), items.begin(), items.end());
    transactions_.push_back({transactions_.size(), std::move(items)});
  }
  canonicalize(seen);
  universe_ = std::move(seen);
}

std::string TransactionDatabase::label(ItemId item) const {
  if (auto it = labels_.find(item); it != labels_.end()) return it->second;
  return std::to_string(item);
}

TransactionDatabase TransactionDatabase::with_labels(
    std::map<ItemId, std::string> labels) const {
  TransactionDatabase copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

std::vector<std::vector<ItemId>> TransactionDatabase::rows() const {
  std::vector<std::vector<ItemId>> out;
  out.reserve(transactions_.size());
  for (const auto& t : transactions_) out.push_back(t.items.items());
  return out;
}

TransactionDatabase parse_fimi(std::istream& in) {
  std::vector<std::vector<ItemId>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<ItemId> row;
    std::string_view rest(line);
    while (true) {
      const auto start = rest.find_first_not_of(" \t\r");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto stop = std::min(rest.find_first_of(" \t\r"), rest.size());
      row.push_back(parse_item(rest.substr(0, stop), line_no));
      rest.remove_prefix(stop);
    }
    rows.push_back(std::move(row));
  }
  return TransactionDatabase(std::move(rows));
}

TransactionDatabase parse_fimi(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_fimi(in);
}

void write_fimi(std::ostream& out, const TransactionDatabase& db) {
  for (const auto& t : db.transactions()) {
    bool first = true;
    for (ItemId item : t.items) {
      if (!first) out << ' ';
      out << item;
      first = false;
    }
    out << '\n';
  }
}

std::map<ItemId, std::string> parse_label_map(std::istream& in) {
  std::map<ItemId, std::string> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw ParseError(line_no, "expected 'id,label'");
    }
    const ItemId id = parse_item(trim(body.substr(0, comma)), line_no);
    labels[id] = std::string(trim(body.substr(comma + 1)));
  }
  return labels;
}

Count support(const TransactionDatabase& db, const Itemset& itemset) {
  Count n = 0;
  for (const auto& t : db.transactions()) {
    if (itemset.is_subset_of(t.items)) ++n;
  }
  return n;
}

std::map<ItemId, Count> item_supports(const TransactionDatabase& db) {
  std::map<ItemId, Count> counts;
  for (const auto& t : db.transactions()) {
    for (ItemId item : t.items) ++counts[item];
  }
  return counts;
}

std::vector<ItemId> iflist_order(const TransactionDatabase& db) {
  const auto counts = item_supports(db);
  std::vector<std::pair<Count, ItemId>> keyed;
  keyed.reserve(counts.size());
  for (auto [item, n] : counts) keyed.emplace_back(n, item);
  std::sort(keyed.begin(), keyed.end());
  std::vector<ItemId> order;
  order.reserve(keyed.size());
  for (auto [n, item] : keyed) order.push_back(item);
  return order;
}

PruneResult prune_infrequent_items(const TransactionDatabase& db, Count sigma) {
  const auto counts = item_supports(db);
  std::vector<Itemset> infrequent;
  for (auto [item, n] : counts) {
    if (n < sigma) {
      Itemset s{item};
      s.set_support(n);
      infrequent.push_back(std::move(s));
    }
  }
  if (infrequent.empty()) return {db, {}};

  std::vector<std::vector<ItemId>> rows;
  rows.reserve(db.size());
  for (const auto& t : db.transactions()) {
    std::vector<ItemId> row;
    for (ItemId item : t.items) {
      if (counts.at(item) >= sigma) row.push_back(item);
    }
    rows.push_back(std::move(row));
  }
  return {TransactionDatabase(std::move(rows), db.labels()),
          std::move(infrequent)};
}

SupportThreshold SupportThreshold::absolute(Count count) {
  SupportThreshold t;
  t.kind_ = Kind::kAbsolute;
  t.numerator_ = count;
  t.denominator_ = 1;
  t.text_ = std::to_string(count);
  return t;
}

SupportThreshold SupportThreshold::fraction(std::uint64_t numerator,
                                            std::uint64_t denominator) {
  if (denominator == 0 || numerator > denominator) {
    throw InvalidThreshold("fraction threshold must lie in [0,1]");
  }
  SupportThreshold t;
  t.kind_ = Kind::kFraction;
  t.numerator_ = numerator;
  t.denominator_ = denominator;
  std::ostringstream os;
  os << t.value();
  t.text_ = os.str();
  return t;
}

SupportThreshold SupportThreshold::parse(std::string_view text) {
  const auto body = trim(text);
  if (body.empty()) throw InvalidThreshold("empty threshold");
  const bool percent = body.back() == '%';
  const auto digits = percent ? trim(body.substr(0, body.size() - 1)) : body;

  std::uint64_t whole = 0;
  std::uint64_t frac = 0;
  std::uint64_t scale = 1;
  const auto dot = digits.find('.');
  const auto int_part = digits.substr(0, dot);
  const auto parse_digits = [&](std::string_view part, std::uint64_t& out) {
    if (part.empty()) return;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, out);
    if (ec != std::errc() || ptr != end) {
      throw InvalidThreshold("bad threshold '" + std::string(text) + "'");
    }
  };
  if (int_part.empty() && dot == std::string_view::npos) {
    throw InvalidThreshold("bad threshold '" + std::string(text) + "'");
  }
  parse_digits(int_part, whole);
  if (dot != std::string_view::npos) {
    if (!percent) {
      throw InvalidThreshold("absolute threshold must be an integer: '" +
                             std::string(text) + "'");
    }
    const auto frac_part = digits.substr(dot + 1);
    if (frac_part.size() > 9) {
      throw InvalidThreshold("too many decimals in '" + std::string(text) + "'");
    }
    parse_digits(frac_part, frac);
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  }

  if (!percent) return absolute(whole);
  if (whole > 100) {
    throw InvalidThreshold("percentage above 100: '" + std::string(text) + "'");
  }
  auto t = fraction(whole * scale + frac, 100 * scale);
  t.text_ = std::string(body);
  return t;
}

double SupportThreshold::value() const {
  return static_cast<double>(numerator_) / static_cast<double>(denominator_);
}

Count SupportThreshold::resolve(std::size_t num_transactions) const {
  if (kind_ == Kind::kAbsolute) return numerator_;
  // ceil(numerator * m / denominator) in exact integer arithmetic
  __extension__ using Wide = unsigned __int128;
  const Wide scaled = static_cast<Wide>(numerator_) * num_transactions;
  return static_cast<Count>((scaled + denominator_ - 1) / denominator_);
}

std::string SupportThreshold::to_string() const { return text_; }

}  // namespace ifpmine
