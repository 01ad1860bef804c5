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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>

namespace ifpmine {

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("mining run exceeded its deadline") {}
};

// Cooperative wall-clock limit polled by the miners.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(std::chrono::duration<double> budget) {
    Deadline d;
    d.at_ = Clock::now() +
            std::chrono::duration_cast<Clock::duration>(budget);
    return d;
  }

  bool expired() const { return at_ && Clock::now() >= *at_; }
  void check() const {
    if (expired()) throw Timeout();
  }

 private:
  std::optional<Clock::time_point> at_;
};

// Tracks how many tree nodes are alive at once across a recursive run.
class NodeGauge {
 public:
  void acquire(std::size_t n) {
    const auto now = live_.fetch_add(n, std::memory_order_relaxed) + n;
    auto seen = peak_.load(std::memory_order_relaxed);
    while (now > seen &&
           !peak_.compare_exchange_weak(seen, now, std::memory_order_relaxed)) {
    }
  }
  void release(std::size_t n) { live_.fetch_sub(n, std::memory_order_relaxed); }
  std::size_t peak() const { return peak_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::size_t> live_{0};
  std::atomic<std::size_t> peak_{0};
};

}  // namespace ifpmine
