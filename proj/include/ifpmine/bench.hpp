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

#include <iosfwd>
#include <string>
#include <vector>

#include "ifpmine/core_data.hpp"

namespace ifpmine {

struct BenchDataset {
  std::string id;
  TransactionDatabase db;
};

struct BenchConfig {
  // ifp | apriori | oracle mine MIIs; mlms | mlms-oracle mine per-length
  // frequent itemsets.
  std::vector<std::string> algorithms;
  // MII cells take "N" or "P%"; mlms cells take a ':'-separated vector such
  // as "4:4:3" (a single value is a vector of length one).
  std::vector<std::string> thresholds;
  unsigned jobs = 1;
  double timeout_seconds = 60.0;
};

struct BenchRecord {
  enum class Status { kOk, kTimeout, kGuard, kInvalid };

  std::string dataset;
  std::string algorithm;
  std::string threshold;
  double elapsed_ms = -1.0;
  long long itemsets = -1;
  long long peak_nodes = -1;
  Status status = Status::kOk;
  std::string message;
};

bool is_mii_algorithm(const std::string& name);
bool is_mlms_algorithm(const std::string& name);

// Runs the full (dataset, algorithm, threshold) cross product. Rows come back
// in that nesting order no matter how many jobs run. Throws
// std::invalid_argument for unknown algorithms or unparsable thresholds.
std::vector<BenchRecord> bench_sweep(const std::vector<BenchDataset>& datasets,
                                     const BenchConfig& config);

// Header "dataset,algorithm,threshold,elapsed_ms,itemsets,peak_nodes".
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& rows);

// Completed cells of the same dataset and threshold whose itemset counts
// disagree between algorithms of the same family.
std::vector<std::string> bench_mismatches(const std::vector<BenchRecord>& rows);

}  // namespace ifpmine
