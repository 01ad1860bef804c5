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

#include "ifpmine/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "ifpmine/ifp_tree.hpp"
#include "ifpmine/mii_miners.hpp"
#include "ifpmine/mlms_miner.hpp"
#include "ifpmine/oracle.hpp"

namespace ifpmine {

namespace {

struct Cell {
  std::size_t dataset;
  std::size_t algorithm;
  std::size_t threshold;
};

BenchRecord run_cell(const BenchDataset& data, const std::string& algorithm,
                     const std::string& threshold, double timeout_seconds) {
  BenchRecord rec;
  rec.dataset = data.id;
  rec.algorithm = algorithm;
  rec.threshold = threshold;
  const auto deadline = Deadline::after(
      std::chrono::duration<double>(timeout_seconds));
  const auto start = std::chrono::steady_clock::now();
  try {
    if (is_mii_algorithm(algorithm)) {
      const Count sigma =
          SupportThreshold::parse(threshold).resolve(data.db.size());
      MineOptions options{deadline, 1};
      if (algorithm == "ifp") {
        const auto tree = IfpTree::build(data.db);
        const auto r = ifp_min(tree, sigma, options);
        rec.itemsets = static_cast<long long>(r.miis.size());
        rec.peak_nodes = static_cast<long long>(r.peak_nodes);
      } else if (algorithm == "apriori") {
        const auto r = apriori_min(data.db, sigma, options);
        rec.itemsets = static_cast<long long>(r.miis.size());
        rec.peak_nodes = static_cast<long long>(r.peak_nodes);
      } else {
        rec.itemsets = static_cast<long long>(
            mii_oracle(data.db, sigma, deadline).size());
        rec.peak_nodes = 0;
      }
    } else {
      const auto tv =
          ThresholdSpec::parse(threshold, ':').resolve(data.db.size());
      if (algorithm == "mlms") {
        MlmsOptions options;
        options.deadline = deadline;
        const auto r = mine_mlms(data.db, tv, options);
        rec.itemsets = static_cast<long long>(r.frequent.size());
        rec.peak_nodes = static_cast<long long>(r.peak_nodes);
      } else {
        rec.itemsets = static_cast<long long>(
            mlms_oracle(data.db, tv, deadline).size());
        rec.peak_nodes = 0;
      }
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  } catch (const Timeout&) {
    rec.status = BenchRecord::Status::kTimeout;
    rec.message = "timed out after " + std::to_string(timeout_seconds) + " s";
  } catch (const OracleGuardError& e) {
    rec.status = BenchRecord::Status::kGuard;
    rec.message = e.what();
  } catch (const InvalidThreshold& e) {
    rec.status = BenchRecord::Status::kInvalid;
    rec.message = e.what();
  }
  if (rec.status != BenchRecord::Status::kOk) {
    rec.elapsed_ms = -1.0;
    rec.itemsets = -1;
    rec.peak_nodes = -1;
  }
  return rec;
}

}  // namespace

bool is_mii_algorithm(const std::string& name) {
  return name == "ifp" || name == "apriori" || name == "oracle";
}

bool is_mlms_algorithm(const std::string& name) {
  return name == "mlms" || name == "mlms-oracle";
}

std::vector<BenchRecord> bench_sweep(const std::vector<BenchDataset>& datasets,
                                     const BenchConfig& config) {
  for (const auto& a : config.algorithms) {
    if (!is_mii_algorithm(a) && !is_mlms_algorithm(a)) {
      throw std::invalid_argument("unknown algorithm '" + a + "'");
    }
    for (const auto& t : config.thresholds) {
      // Shape checks only; resolution depends on the dataset size.
      if (is_mii_algorithm(a)) {
        SupportThreshold::parse(t);
      } else {
        ThresholdSpec::parse(t, ':');
      }
    }
  }

  std::vector<Cell> cells;
  for (std::size_t d = 0; d < datasets.size(); ++d) {
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      for (std::size_t t = 0; t < config.thresholds.size(); ++t) {
        cells.push_back({d, a, t});
      }
    }
  }

  std::vector<BenchRecord> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const auto& c = cells[i];
      rows[i] = run_cell(datasets[c.dataset], config.algorithms[c.algorithm],
                         config.thresholds[c.threshold],
                         config.timeout_seconds);
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows) {
  out << "dataset,algorithm,threshold,elapsed_ms,itemsets,peak_nodes\n";
  for (const auto& r : rows) {
    char elapsed[32];
    if (r.elapsed_ms < 0) {
      std::snprintf(elapsed, sizeof elapsed, "-1");
    } else {
      std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_ms);
    }
    out << r.dataset << ',' << r.algorithm << ',' << r.threshold << ','
        << elapsed << ',' << r.itemsets << ',' << r.peak_nodes << '\n';
  }
}

std::vector<std::string> bench_mismatches(
    const std::vector<BenchRecord>& rows) {
  // Rows of one dataset are contiguous, so consecutive runs of equal ids form
  // one dataset occurrence even when the same file is listed twice.
  std::vector<std::string> problems;
  std::size_t begin = 0;
  while (begin < rows.size()) {
    std::size_t end = begin;
    while (end < rows.size() && rows[end].dataset == rows[begin].dataset) ++end;

    std::map<std::pair<bool, std::string>, const BenchRecord*> first;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& r = rows[i];
      if (r.status != BenchRecord::Status::kOk) continue;
      const auto key = std::make_pair(is_mii_algorithm(r.algorithm),
                                      r.threshold);
      auto [it, inserted] = first.emplace(key, &r);
      if (!inserted && it->second->itemsets != r.itemsets) {
        problems.push_back(r.dataset + " @ " + r.threshold + ": " +
                           it->second->algorithm + " found " +
                           std::to_string(it->second->itemsets) + ", " +
                           r.algorithm + " found " +
                           std::to_string(r.itemsets));
      }
    }
    begin = end;
  }
  return problems;
}

}  // namespace ifpmine
