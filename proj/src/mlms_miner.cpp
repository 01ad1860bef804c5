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

#include "ifpmine/mlms_miner.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <iterator>

namespace ifpmine {

ThresholdVector::ThresholdVector(std::vector<Count> sigmas)
    : sigmas_(std::move(sigmas)) {
  if (sigmas_.empty()) throw InvalidThreshold("empty threshold vector");
  for (std::size_t k = 0; k < sigmas_.size(); ++k) {
    if (sigmas_[k] < 1) {
      throw InvalidThreshold("threshold for length " + std::to_string(k + 1) +
                             " must be at least 1");
    }
  }
}

std::string ThresholdVector::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < sigmas_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(sigmas_[k]);
  }
  return out;
}

ThresholdSpec ThresholdSpec::parse(std::string_view text, char separator) {
  ThresholdSpec spec;
  while (true) {
    const auto cut = text.find(separator);
    spec.entries_.push_back(SupportThreshold::parse(text.substr(0, cut)));
    if (cut == std::string_view::npos) break;
    text.remove_prefix(cut + 1);
  }
  return spec;
}

ThresholdVector ThresholdSpec::resolve(std::size_t num_transactions) const {
  std::vector<Count> sigmas;
  sigmas.reserve(entries_.size());
  for (const auto& e : entries_) sigmas.push_back(e.resolve(num_transactions));
  return ThresholdVector(std::move(sigmas));
}

std::string ThresholdSpec::to_string(char separator) const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += separator;
    out += entries_[i].to_string();
  }
  return out;
}

Count sigma_low(const ThresholdVector& tv) {
  if (tv.values().empty()) throw InvalidThreshold("empty threshold vector");
  return *std::min_element(tv.values().begin(), tv.values().end());
}

bool is_frequent_star(std::size_t k, std::size_t prefix_length, Count supp,
                      const ThresholdVector& tv) {
  const std::size_t length = k + prefix_length;
  return length <= tv.max_length() && supp >= tv.at(length);
}

namespace {

struct MlmsRun {
  const ThresholdVector& tv;
  const MlmsOptions& options;
  Count low;
  unsigned parallel_depth;
  NodeGauge gauge;

  std::vector<Itemset> mine(const IfpTree& tree, const PrefixContext& ctx,
                            unsigned depth);
};

std::vector<Itemset> MlmsRun::mine(const IfpTree& tree,
                                   const PrefixContext& ctx, unsigned depth) {
  options.deadline.check();
  // No length beyond max_length() has a threshold, so a tree whose prefix
  // already fills it cannot contribute.
  if (tree.empty() || ctx.length() >= tv.max_length()) return {};

  const ItemId x = tree.lf_item();
  const Count x_support = tree.item_support(x);
  const bool skip_projected = options.prune_sigma_low && x_support < low;

  std::vector<Itemset> from_projected;
  std::vector<Itemset> from_residual;
  auto run_projected = [&] {
    IfpTree projected = tree.projected(x);
    gauge.acquire(projected.node_count());
    from_projected = mine(projected, {ctx.prefix.with(x)}, depth + 1);
    gauge.release(projected.node_count());
  };
  auto run_residual = [&] {
    IfpTree residual = tree.residual(x);
    gauge.acquire(residual.node_count());
    from_residual = mine(residual, ctx, depth + 1);
    gauge.release(residual.node_count());
  };

  if (skip_projected) {
    run_residual();
  } else if (depth < parallel_depth) {
    auto pending = std::async(std::launch::async, run_projected);
    run_residual();
    pending.get();
  } else {
    run_projected();
    run_residual();
  }

  std::vector<Itemset> out;
  out.reserve(from_projected.size() + from_residual.size() + 1);
  for (const auto& s : from_projected) out.push_back(s.with(x));
  out.insert(out.end(), std::make_move_iterator(from_residual.begin()),
             std::make_move_iterator(from_residual.end()));
  if (is_frequent_star(1, ctx.length(), x_support, tv)) {
    out.push_back(Itemset{x});
  }
  std::sort(out.begin(), out.end());
  return out;
}

MlmsRun make_run(const ThresholdVector& tv, const MlmsOptions& options) {
  const unsigned threads = std::max(1u, options.threads);
  return MlmsRun{tv, options, sigma_low(tv),
                 static_cast<unsigned>(std::bit_width(threads) - 1), {}};
}

}  // namespace

std::vector<Itemset> ifp_mlms(const IfpTree& tree, const ThresholdVector& tv,
                              const PrefixContext& ctx,
                              const MlmsOptions& options) {
  auto run = make_run(tv, options);
  return run.mine(tree, ctx, 0);
}

MlmsResult mine_mlms(const TransactionDatabase& db, const ThresholdVector& tv,
                     const MlmsOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  auto run = make_run(tv, options);
  const IfpTree tree = IfpTree::build(db);
  run.gauge.acquire(tree.node_count());

  MlmsResult result;
  result.thresholds = tv;
  result.frequent = run.mine(tree, {}, 0);
  for (auto& s : result.frequent) s.set_support(tree.support(s));
  result.peak_nodes = run.gauge.peak();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace ifpmine
