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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"

namespace ifpmine {
namespace {

using testing::letters;

TEST(ParseFimi, OneTransactionPerLine) {
  const auto db = parse_fimi("5 6\n1 2 3\n");
  ASSERT_EQ(db.size(), 2u);
  EXPECT_EQ(db.transactions()[0].tid, 0u);
  EXPECT_EQ(db.transactions()[0].items, (Itemset{5, 6}));
  EXPECT_EQ(db.transactions()[1].tid, 1u);
  EXPECT_EQ(db.transactions()[1].items, (Itemset{1, 2, 3}));
  EXPECT_EQ(db.universe(), (std::vector<ItemId>{1, 2, 3, 5, 6}));
}

TEST(ParseFimi, EmptyInput) {
  const auto db = parse_fimi("");
  EXPECT_EQ(db.size(), 0u);
  EXPECT_TRUE(db.universe().empty());
}

TEST(ParseFimi, MiiExample) {
  const auto db = testing::mii_example();
  EXPECT_EQ(db.size(), 9u);
  EXPECT_EQ(db.universe().size(), 6u);
  EXPECT_EQ(db.label(5), "F");
}

TEST(ParseFimi, BlankLinesAreEmptyTransactions) {
  const auto db = parse_fimi("1\n\n2\n");
  ASSERT_EQ(db.size(), 3u);
  EXPECT_TRUE(db.transactions()[1].items.empty());
}

TEST(ParseFimi, DuplicateItemsCollapse) {
  const auto db = parse_fimi("3 3 1\n3 1\n");
  EXPECT_EQ(db.transactions()[0].items, (Itemset{1, 3}));
  EXPECT_EQ(db.size(), 2u);
}

TEST(ParseFimi, NonIntegerTokenReportsLine) {
  try {
    parse_fimi("1 2\n3 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ParseFimi, NegativeItemRejected) {
  try {
    parse_fimi("-4\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse_fimi("1 2.5\n"), ParseError);
}

TEST(ParseFimi, RoundTripIsIdentityOnCanonicalDatabases) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    auto db = testing::random_db(rng);
    std::ostringstream os;
    write_fimi(os, db);
    const auto again = parse_fimi(os.str());
    EXPECT_EQ(again.rows(), db.rows());
    std::ostringstream os2;
    write_fimi(os2, again);
    EXPECT_EQ(os.str(), os2.str());
  }
}

TEST(Support, WorkedExampleValues) {
  const auto db = testing::mii_example();
  EXPECT_EQ(support(db, letters("BD")), 1u);
  EXPECT_EQ(support(db, letters("AE")), 0u);
  EXPECT_EQ(support(db, Itemset{}), 9u);
  EXPECT_EQ(support(db, Itemset{42}), 0u);
}

TEST(Support, AntiMonotone) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const auto db = testing::random_db(rng);
    const auto s = testing::random_itemset(rng, 10);
    const auto bigger = s.with(std::uniform_int_distribution<ItemId>(0, 9)(rng));
    EXPECT_GE(support(db, s), support(db, bigger));
  }
}

TEST(IflistOrder, MlmsExample) {
  const auto db = testing::mlms_example();
  const auto order = iflist_order(db);
  // B, A, D, T, W, C
  EXPECT_EQ(order, (std::vector<ItemId>{1, 0, 3, 4, 5, 2}));
}

TEST(IflistOrder, MiiExample) {
  // F has support 1, every other item 4; ties fall back to id.
  EXPECT_EQ(iflist_order(testing::mii_example()),
            (std::vector<ItemId>{5, 0, 1, 2, 3, 4}));
}

TEST(IflistOrder, SingleItem) {
  EXPECT_EQ(iflist_order(testing::db_of({{9}})), (std::vector<ItemId>{9}));
}

TEST(IflistOrder, PermutationOfUniverseWithNondecreasingSupport) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 100; ++round) {
    const auto db = testing::random_db(rng);
    auto order = iflist_order(db);
    const auto counts = item_supports(db);
    for (std::size_t i = 1; i < order.size(); ++i) {
      EXPECT_LE(counts.at(order[i - 1]), counts.at(order[i]));
    }
    std::sort(order.begin(), order.end());
    EXPECT_EQ(order, db.universe());
  }
}

TEST(PruneInfrequentItems, RemovesF) {
  const auto db = testing::mii_example();
  const auto pruned = prune_infrequent_items(db, 2);
  ASSERT_EQ(pruned.infrequent.size(), 1u);
  EXPECT_EQ(pruned.infrequent[0], letters("F"));
  EXPECT_EQ(pruned.infrequent[0].support(), 1u);
  EXPECT_EQ(pruned.db.size(), 9u);
  EXPECT_EQ(pruned.db.transactions()[0].items, letters("E"));
}

TEST(PruneInfrequentItems, ZeroThresholdKeepsEverything) {
  const auto db = testing::mii_example();
  const auto pruned = prune_infrequent_items(db, 0);
  EXPECT_TRUE(pruned.infrequent.empty());
  EXPECT_EQ(pruned.db.rows(), db.rows());
}

TEST(PruneInfrequentItems, EmptiedTransactionsAreKept) {
  const auto pruned = prune_infrequent_items(testing::db_of({{0}, {1}}), 2);
  EXPECT_EQ(pruned.infrequent, (std::vector<Itemset>{{0}, {1}}));
  ASSERT_EQ(pruned.db.size(), 2u);
  EXPECT_TRUE(pruned.db.transactions()[0].items.empty());
  EXPECT_TRUE(pruned.db.transactions()[1].items.empty());
}

TEST(PruneInfrequentItems, PreservesSupportOfSurvivingItemsets) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const auto db = testing::random_db(rng);
    const Count sigma = std::uniform_int_distribution<Count>(0, 8)(rng);
    const auto pruned = prune_infrequent_items(db, sigma);
    const auto s = testing::random_itemset(rng, 10);
    const bool touches_pruned = std::any_of(
        pruned.infrequent.begin(), pruned.infrequent.end(),
        [&](const Itemset& p) { return s.contains(p.items()[0]); });
    if (!touches_pruned) EXPECT_EQ(support(db, s), support(pruned.db, s));
  }
}

TEST(SupportThreshold, ResolvesFractionsWithCeiling) {
  EXPECT_EQ(SupportThreshold::parse("30%").resolve(10000), 3000u);
  EXPECT_EQ(SupportThreshold::parse("12.5%").resolve(9), 2u);
  EXPECT_EQ(SupportThreshold::parse("10%").resolve(9), 1u);
  EXPECT_EQ(SupportThreshold::parse("0%").resolve(9), 0u);
  EXPECT_EQ(SupportThreshold::parse("100%").resolve(7), 7u);
  EXPECT_EQ(SupportThreshold::parse("3").resolve(9), 3u);
  EXPECT_EQ(SupportThreshold::parse("3").kind(),
            SupportThreshold::Kind::kAbsolute);
  EXPECT_DOUBLE_EQ(SupportThreshold::parse("25%").value(), 0.25);
}

TEST(SupportThreshold, RejectsMalformedText) {
  EXPECT_THROW(SupportThreshold::parse("101%"), InvalidThreshold);
  EXPECT_THROW(SupportThreshold::parse("abc"), InvalidThreshold);
  EXPECT_THROW(SupportThreshold::parse("-1"), InvalidThreshold);
  EXPECT_THROW(SupportThreshold::parse("2.5"), InvalidThreshold);
  EXPECT_THROW(SupportThreshold::parse(""), InvalidThreshold);
  EXPECT_THROW(SupportThreshold::fraction(3, 2), InvalidThreshold);
}

TEST(Itemset, CanonicalFormAndOrdering) {
  const Itemset a{3, 1, 3};
  EXPECT_EQ(a.items(), (std::vector<ItemId>{1, 3}));
  EXPECT_EQ(a.with(2).items(), (std::vector<ItemId>{1, 2, 3}));
  EXPECT_EQ(a.with(3), a);
  EXPECT_LT((Itemset{9}), (Itemset{0, 1}));
  EXPECT_LT((Itemset{0, 2}), (Itemset{1, 2}));
  Itemset b{1, 3};
  b.set_support(4);
  EXPECT_EQ(a, b);
}

}  // namespace
}  // namespace ifpmine
