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


#include "gamevec/bench.hpp"

#include <chrono>
#include <memory>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gamevec/agents.hpp"
#include "gamevec/batch.hpp"

namespace gamevec {

BenchResult bench_run(const BenchConfig& config) {
  if (config.batch_size == 0) throw std::invalid_argument("bench: batch_size must be >= 1");
  if (config.total_steps == 0) throw std::invalid_argument("bench: total_steps must be >= 1");
  const Env env(config.game);
  unsigned threads = config.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::unique_ptr<Executor> executor = threads > 1 ? std::make_unique<Executor>(threads) : nullptr;

  const RngKey root(config.seed);
  Batch batch = batch_init(env, root.fold_in(0), config.batch_size, executor.get());
  std::vector<int> actions(config.batch_size, 0);
  if (executor) executor->parallel_for(config.batch_size, [](std::size_t, std::size_t) {});

  BenchResult result;
  result.game = config.game;
  result.batch_size = config.batch_size;
  result.total_steps = config.total_steps;
  result.seed = config.seed;
  result.threads = threads;

  const RngKey run_key = root.fold_in(1);
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t t = 0; t < config.total_steps; ++t) {
    const RngKey step_key = run_key.fold_in(t);
    const RngKey act_key = step_key.fold_in(0);
    auto choose = [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const EnvState& s = batch.states[i];
        actions[i] = s.done() ? 0 : random_action(s, act_key.fold_in(i));
      }
    };
    if (executor) {
      executor->parallel_for(config.batch_size, choose);
    } else {
      choose(0, config.batch_size);
    }
    batch_step_in_place(env, batch, actions, step_key.fold_in(1), executor.get());
    for (const auto& s : batch.states) result.episodes_completed += s.done() ? 1 : 0;
  }
  const auto stop = std::chrono::steady_clock::now();

  result.wall_seconds = std::chrono::duration<double>(stop - start).count();
  result.samples_per_second =
      static_cast<double>(result.samples()) / std::max(result.wall_seconds, 1e-12);
  std::uint64_t digest = 0xcbf29ce484222325ULL;
  for (const auto& s : batch.states) digest = RngKey::mix(digest ^ fingerprint(s));
  result.trajectory_digest = RngKey::mix(digest ^ result.episodes_completed);
  return result;
}

}  // namespace gamevec
