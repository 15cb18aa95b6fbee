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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gamevec/env.hpp"
#include "gamevec/executor.hpp"

namespace gamevec {

// Fixed-size set of states of one game, advanced in lockstep.
struct Batch {
  GameId game = GameId::kTicTacToe;
  std::vector<EnvState> states;

  std::size_t size() const { return states.size(); }

  // Column views; each agrees element-wise with the individual states.
  std::vector<int> current_players() const;
  std::vector<std::uint8_t> legal_action_masks() const;  // size x num_actions
  std::vector<float> rewards() const;                     // size x num_players
  std::vector<std::uint8_t> terminated() const;
  std::vector<std::uint8_t> truncated() const;

  friend bool operator==(const Batch&, const Batch&) = default;
};

// Slot i is initialised from key.fold_in(i). Throws EmptyBatch when n == 0.
Batch batch_init(const Env& env, RngKey key, std::size_t n, Executor* executor = nullptr);

// Slot i: a finished state is replaced by env.init(key.fold_in(i)) and its
// action ignored; otherwise env.step(state, actions[i], key.fold_in(i)).
// Throws ShapeMismatch on a length mismatch and SlotIllegalAction naming the
// first offending slot; the batch is unchanged when either is thrown.
Batch batch_step(const Env& env, const Batch& batch, std::span<const int> actions, RngKey key,
                 Executor* executor = nullptr);
void batch_step_in_place(const Env& env, Batch& batch, std::span<const int> actions, RngKey key,
                         Executor* executor = nullptr);

}  // namespace gamevec
