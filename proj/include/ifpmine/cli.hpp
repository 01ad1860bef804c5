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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ifpmine::cli {

enum ExitCode : int {
  kOk = 0,
  kDisagreement = 1,
  kUsage = 2,
  kIoFailure = 3,
  kOracleGuard = 4,
};

enum class Command { kMineMii, kMineMlms, kCheck, kBench, kGen };

struct RunSpec {
  Command command = Command::kMineMii;
  std::vector<std::string> inputs;
  std::optional<std::string> labels_path;
  std::string algorithm = "ifp";
  std::vector<std::string> algorithms;  // bench
  std::string min_sup;
  std::string thresholds;
  std::vector<std::string> threshold_list;  // bench
  std::string format = "text";
  std::optional<std::string> output_path;
  unsigned jobs = 1;
  unsigned threads = 1;
  double timeout_seconds = 60.0;

  std::size_t gen_items = 0;
  std::size_t gen_transactions = 0;
  double gen_density = 0.0;
  std::uint64_t gen_seed = 0;
};

// Parses argv-style arguments (args[0] is the program name). Help requests
// and malformed flags are reported on `err`; the return is empty with
// `exit_code` set in that case.
std::optional<RunSpec> parse_args(const std::vector<std::string>& args,
                                  std::ostream& out, std::ostream& err,
                                  int& exit_code);

int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

}  // namespace ifpmine::cli
