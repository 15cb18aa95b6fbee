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


#include "gamevec/batch.hpp"

#include "gamevec/errors.hpp"

namespace gamevec {
namespace {

void for_slots(Executor* executor, std::size_t n, const std::function<void(std::size_t)>& body) {
  auto chunk = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) body(i);
  };
  if (executor == nullptr) {
    chunk(0, n);
  } else {
    executor->parallel_for(n, chunk);
  }
}

}  // namespace

std::vector<int> Batch::current_players() const {
  std::vector<int> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.current_player);
  return out;
}

std::vector<std::uint8_t> Batch::legal_action_masks() const {
  std::vector<std::uint8_t> out;
  for (const auto& s : states) {
    out.insert(out.end(), s.legal_action_mask.begin(), s.legal_action_mask.end());
  }
  return out;
}

std::vector<float> Batch::rewards() const {
  std::vector<float> out;
  for (const auto& s : states) out.insert(out.end(), s.rewards.begin(), s.rewards.end());
  return out;
}

std::vector<std::uint8_t> Batch::terminated() const {
  std::vector<std::uint8_t> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.terminated);
  return out;
}

std::vector<std::uint8_t> Batch::truncated() const {
  std::vector<std::uint8_t> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.truncated);
  return out;
}

Batch batch_init(const Env& env, RngKey key, std::size_t n, Executor* executor) {
  if (n == 0) throw EmptyBatch("batch_init: batch size must be at least 1");
  Batch batch;
  batch.game = env.id();
  batch.states.resize(n);
  for_slots(executor, n, [&](std::size_t i) { batch.states[i] = env.init(key.fold_in(i)); });
  return batch;
}

void batch_step_in_place(const Env& env, Batch& batch, std::span<const int> actions, RngKey key,
                         Executor* executor) {
  if (batch.game != env.id()) throw ShapeMismatch("batch belongs to a different game");
  if (actions.size() != batch.size()) {
    throw ShapeMismatch("batch_step: " + std::to_string(actions.size()) + " actions for " +
                        std::to_string(batch.size()) + " slots");
  }
  const int num_actions = env.spec().num_actions;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const EnvState& s = batch.states[i];
    if (s.done()) continue;
    const int a = actions[i];
    if (a < 0 || a >= num_actions || !s.legal_action_mask[static_cast<std::size_t>(a)]) {
      throw SlotIllegalAction(i, "action " + std::to_string(a) + " is not legal");
    }
  }
  for_slots(executor, batch.size(), [&](std::size_t i) {
    EnvState& s = batch.states[i];
    const RngKey slot_key = key.fold_in(i);
    if (s.done()) {
      s = env.init(slot_key);
    } else {
      env.step_in_place(s, actions[i], slot_key);
    }
  });
}

Batch batch_step(const Env& env, const Batch& batch, std::span<const int> actions, RngKey key,
                 Executor* executor) {
  Batch next = batch;
  batch_step_in_place(env, next, actions, key, executor);
  return next;
}

}  // namespace gamevec
