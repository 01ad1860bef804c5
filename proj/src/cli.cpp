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

#include "ifpmine/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>

#include "CLI11.hpp"
#include "ifpmine/bench.hpp"
#include "ifpmine/ifp_tree.hpp"
#include "ifpmine/mii_miners.hpp"
#include "ifpmine/mlms_miner.hpp"
#include "ifpmine/oracle.hpp"
#include "ifpmine/result_io.hpp"

namespace ifpmine::cli {

namespace {

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

TransactionDatabase load_database(const std::string& path,
                                  const std::optional<std::string>& labels) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot read '" + path + "'");
  TransactionDatabase db;
  try {
    db = parse_fimi(in);
  } catch (const ParseError& e) {
    throw IoFailure(path + ": " + e.what());
  }
  if (labels) {
    std::ifstream lin(*labels);
    if (!lin) throw IoFailure("cannot read '" + *labels + "'");
    try {
      db = db.with_labels(parse_label_map(lin));
    } catch (const ParseError& e) {
      throw IoFailure(*labels + ": " + e.what());
    }
  }
  return db;
}

// Writes to the requested file, or to `fallback` when none was given.
class Sink {
 public:
  Sink(const std::optional<std::string>& path, std::ostream& fallback)
      : stream_(&fallback) {
    if (path) {
      file_.open(*path);
      if (!file_) throw IoFailure("cannot write '" + *path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void emit(std::ostream& out, const std::string& format,
          const std::vector<Itemset>& itemsets, const TransactionDatabase& db) {
  if (format == "json") {
    write_itemsets_json(out, itemsets, db.labels());
  } else {
    write_itemsets_text(out, itemsets, db.labels());
  }
}

int mine_mii(const RunSpec& spec, std::ostream& out) {
  const auto db = load_database(spec.inputs.front(), spec.labels_path);
  const Count sigma = SupportThreshold::parse(spec.min_sup).resolve(db.size());
  MineOptions options;
  options.threads = spec.threads;

  std::vector<Itemset> miis;
  if (spec.algorithm == "ifp") {
    miis = ifp_min(IfpTree::build(db), sigma, options).miis;
  } else if (spec.algorithm == "apriori") {
    miis = apriori_min(db, sigma, options).miis;
  } else {
    miis = mii_oracle(db, sigma);
  }
  Sink sink(spec.output_path, out);
  emit(sink.get(), spec.format, miis, db);
  return kOk;
}

int mine_mlms_command(const RunSpec& spec, std::ostream& out) {
  const auto db = load_database(spec.inputs.front(), spec.labels_path);
  const auto tv = ThresholdSpec::parse(spec.thresholds).resolve(db.size());
  MlmsOptions options;
  options.threads = spec.threads;
  const auto result = mine_mlms(db, tv, options);
  Sink sink(spec.output_path, out);
  emit(sink.get(), spec.format, result.frequent, db);
  return kOk;
}

void report_difference(std::ostream& out, const std::string& left_name,
                       const std::vector<Itemset>& left,
                       const std::string& right_name,
                       const std::vector<Itemset>& right,
                       const TransactionDatabase& db) {
  std::vector<Itemset> only_left;
  std::vector<Itemset> only_right;
  std::set_difference(left.begin(), left.end(), right.begin(), right.end(),
                      std::back_inserter(only_left));
  std::set_difference(right.begin(), right.end(), left.begin(), left.end(),
                      std::back_inserter(only_right));
  for (const auto& s : only_left) {
    out << "only " << left_name << " (vs " << right_name
        << "): " << format_itemset(s, db.labels()) << '\n';
  }
  for (const auto& s : only_right) {
    out << "only " << right_name << " (vs " << left_name
        << "): " << format_itemset(s, db.labels()) << '\n';
  }
}

int check(const RunSpec& spec, std::ostream& out) {
  const auto db = load_database(spec.inputs.front(), spec.labels_path);
  const Count sigma = SupportThreshold::parse(spec.min_sup).resolve(db.size());
  MineOptions options;
  options.threads = spec.threads;

  const auto oracle = mii_oracle(db, sigma);
  const auto ifp = ifp_min(IfpTree::build(db), sigma, options).miis;
  const auto apriori = apriori_min(db, sigma, options).miis;

  if (ifp == oracle && apriori == oracle) {
    out << "agree: " << oracle.size() << " minimally infrequent itemsets at "
        << "min-sup " << sigma << '\n';
    return kOk;
  }
  report_difference(out, "ifp", ifp, "oracle", oracle, db);
  report_difference(out, "apriori", apriori, "oracle", oracle, db);
  return kDisagreement;
}

int bench(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  std::vector<BenchDataset> datasets;
  for (const auto& path : spec.inputs) {
    datasets.push_back({path, load_database(path, std::nullopt)});
  }
  BenchConfig config;
  config.algorithms = spec.algorithms;
  config.thresholds = spec.threshold_list;
  config.jobs = spec.jobs;
  config.timeout_seconds = spec.timeout_seconds;

  const auto rows = bench_sweep(datasets, config);
  write_bench_csv(out, rows);

  int code = kOk;
  for (const auto& r : rows) {
    if (r.status == BenchRecord::Status::kOk) continue;
    err << "warning: " << r.dataset << ' ' << r.algorithm << ' '
        << r.threshold << ": " << r.message << '\n';
    if (r.status == BenchRecord::Status::kGuard) code = kOracleGuard;
    if (r.status == BenchRecord::Status::kInvalid) code = kUsage;
  }
  const auto mismatches = bench_mismatches(rows);
  for (const auto& m : mismatches) err << "mismatch: " << m << '\n';
  if (code == kOk && !mismatches.empty()) code = kDisagreement;
  return code;
}

int gen(const RunSpec& spec, std::ostream& out) {
  SynthConfig cfg;
  cfg.num_items = spec.gen_items;
  cfg.num_transactions = spec.gen_transactions;
  cfg.density = spec.gen_density;
  cfg.seed = spec.gen_seed;
  const auto db = gen_synthetic(cfg);
  Sink sink(spec.output_path, out);
  write_fimi(sink.get(), db);
  return kOk;
}

}  // namespace

std::optional<RunSpec> parse_args(const std::vector<std::string>& args,
                                  std::ostream& out, std::ostream& err,
                                  int& exit_code) {
  RunSpec spec;
  CLI::App app{"Minimally infrequent and multi-threshold itemset mining",
               "ifpmine"};
  app.require_subcommand(1);

  auto* mii = app.add_subcommand("mine-mii", "Mine minimally infrequent itemsets");
  std::string mii_input;
  mii->add_option("--input", mii_input, "FIMI transaction file")->required();
  mii->add_option("--min-sup", spec.min_sup, "Minimum support, N or P%")
      ->required();
  mii->add_option("--algo", spec.algorithm, "Miner")
      ->check(CLI::IsMember({"ifp", "apriori", "oracle"}));
  mii->add_option("--format", spec.format)
      ->check(CLI::IsMember({"text", "json"}));
  mii->add_option("--labels", spec.labels_path, "CSV of id,label");
  mii->add_option("--out", spec.output_path, "Output file (default stdout)");
  mii->add_option("--threads", spec.threads, "Parallel recursion width")
      ->check(CLI::PositiveNumber);

  auto* mlms = app.add_subcommand(
      "mine-mlms", "Mine frequent itemsets under per-length thresholds");
  std::string mlms_input;
  mlms->add_option("--input", mlms_input, "FIMI transaction file")->required();
  mlms->add_option("--thresholds", spec.thresholds,
                   "Per-length minimum supports, e.g. 4,4,3,2,1 or 10%,8%")
      ->required();
  mlms->add_option("--format", spec.format)
      ->check(CLI::IsMember({"text", "json"}));
  mlms->add_option("--labels", spec.labels_path, "CSV of id,label");
  mlms->add_option("--out", spec.output_path, "Output file (default stdout)");
  mlms->add_option("--threads", spec.threads, "Parallel recursion width")
      ->check(CLI::PositiveNumber);

  auto* chk = app.add_subcommand(
      "check", "Cross-check ifp, apriori and the exhaustive oracle");
  std::string check_input;
  chk->add_option("--input", check_input, "FIMI transaction file")->required();
  chk->add_option("--min-sup", spec.min_sup, "Minimum support, N or P%")
      ->required();
  chk->add_option("--labels", spec.labels_path, "CSV of id,label");

  auto* bn = app.add_subcommand("bench", "Timing sweep, CSV on stdout");
  bn->add_option("--inputs", spec.inputs, "FIMI files")
      ->required()
      ->delimiter(',');
  bn->add_option("--algos", spec.algorithms,
                 "ifp, apriori, oracle, mlms, mlms-oracle")
      ->required()
      ->delimiter(',');
  bn->add_option("--thresholds", spec.threshold_list,
                 "Thresholds; mlms vectors use ':' between lengths")
      ->required()
      ->delimiter(',');
  bn->add_option("--jobs", spec.jobs, "Cells run in parallel")
      ->check(CLI::PositiveNumber);
  bn->add_option("--timeout", spec.timeout_seconds, "Seconds per cell")
      ->check(CLI::PositiveNumber);

  auto* gn = app.add_subcommand("gen", "Write a synthetic FIMI database");
  gn->add_option("--items", spec.gen_items)->required();
  gn->add_option("--transactions", spec.gen_transactions)->required();
  gn->add_option("--density", spec.gen_density)
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  gn->add_option("--seed", spec.gen_seed);
  gn->add_option("--out", spec.output_path, "Output file (default stdout)");

  // CLI11 consumes a reversed argument list without the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = kUsage;
    return std::nullopt;
  }

  if (mii->parsed()) {
    spec.command = Command::kMineMii;
    spec.inputs = {mii_input};
  } else if (mlms->parsed()) {
    spec.command = Command::kMineMlms;
    spec.inputs = {mlms_input};
  } else if (chk->parsed()) {
    spec.command = Command::kCheck;
    spec.inputs = {check_input};
  } else if (bn->parsed()) {
    spec.command = Command::kBench;
  } else {
    spec.command = Command::kGen;
  }
  exit_code = kOk;
  return spec;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    switch (spec.command) {
      case Command::kMineMii:
        return mine_mii(spec, out);
      case Command::kMineMlms:
        return mine_mlms_command(spec, out);
      case Command::kCheck:
        return check(spec, out);
      case Command::kBench:
        return bench(spec, out, err);
      case Command::kGen:
        return gen(spec, out);
    }
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const OracleGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kOracleGuard;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int main_with_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  int code = kOk;
  auto spec = parse_args(args, out, err, code);
  if (!spec) return code;
  return run(*spec, out, err);
}

}  // namespace ifpmine::cli
