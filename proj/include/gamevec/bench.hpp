// Copyright 2026 The gamevec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <string>

#include "gamevec/game_spec.hpp"

namespace gamevec {

struct BenchConfig {
  GameId game = GameId::kTicTacToe;
  std::size_t batch_size = 1024;
  std::uint64_t total_steps = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;  // 0 = hardware concurrency
};

// Every slot counts as one sample on every step, including steps on which a
// finished slot is reset.
struct BenchResult {
  GameId game = GameId::kTicTacToe;
  std::size_t batch_size = 0;
  std::uint64_t total_steps = 0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  double wall_seconds = 0.0;
  double samples_per_second = 0.0;
  std::uint64_t episodes_completed = 0;
  // Fingerprint of the final batch; depends on the seed only.
  std::uint64_t trajectory_digest = 0;

  std::uint64_t samples() const { return total_steps * batch_size; }
};

// Uniform random legal actions through batch_step with auto-reset. Wall time
// covers the stepping loop only (not batch init or thread pool start-up).
// Throws UnsupportedGame and std::invalid_argument on a zero batch or step
// count.
BenchResult bench_run(const BenchConfig& config);

}  // namespace gamevec
