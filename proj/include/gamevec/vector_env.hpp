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
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "gamevec/batch.hpp"

namespace gamevec {

// Batched environment that publishes its state through contiguous row-major
// buffers (batch is the leading axis). Buffers are allocated once and
// refreshed in place on every step; this is the surface scripting-language
// bindings wrap. A VectorEnv has a single owner: concurrent calls on one
// instance are not supported.
//
// Key schedule: the batch is initialised from RngKey(seed).fold_in(0) and step
// t (0-based) uses RngKey(seed).fold_in(1).fold_in(t), so the native
// batch_init/batch_step calls with those keys reproduce it exactly.
class VectorEnv {
 public:
  VectorEnv(GameId id, std::size_t batch_size, std::uint64_t seed, EnvOptions options = {},
            unsigned threads = 1);
  // Throws UnsupportedGame for unknown or reserved names.
  static VectorEnv make(std::string_view game, std::size_t batch_size, std::uint64_t seed);

  VectorEnv(VectorEnv&&) noexcept = default;
  VectorEnv& operator=(VectorEnv&&) noexcept = default;

  // batch_step semantics (auto-reset of finished slots). On error the state
  // and every buffer are unchanged.
  void step(std::span<const int> actions);

  // Observations of `player` for every slot, written to a batch x obs buffer.
  void observe(int player, std::span<float> out) const;

  std::span<const float> observations() const { return observations_; }  // current player's
  std::span<const float> rewards() const { return rewards_; }
  std::span<const std::uint8_t> terminated() const { return terminated_; }
  std::span<const std::uint8_t> truncated() const { return truncated_; }
  std::span<const std::int32_t> current_player() const { return current_player_; }
  std::span<const std::uint8_t> legal_action_mask() const { return legal_action_mask_; }

  std::vector<std::size_t> observation_buffer_shape() const;
  std::vector<std::size_t> mask_buffer_shape() const;
  std::vector<std::size_t> reward_buffer_shape() const;

  std::size_t batch_size() const { return batch_.size(); }
  std::uint64_t steps_taken() const { return steps_; }
  const Env& env() const { return env_; }
  const Batch& batch() const { return batch_; }

  static RngKey init_key(std::uint64_t seed) { return RngKey(seed).fold_in(0); }
  static RngKey step_key(std::uint64_t seed, std::uint64_t t) {
    return RngKey(seed).fold_in(1).fold_in(t);
  }

 private:
  void refresh();

  Env env_;
  std::uint64_t seed_;
  std::uint64_t steps_ = 0;
  std::unique_ptr<Executor> executor_;
  Batch batch_;
  std::vector<float> observations_;
  std::vector<float> rewards_;
  std::vector<std::uint8_t> terminated_;
  std::vector<std::uint8_t> truncated_;
  std::vector<std::int32_t> current_player_;
  std::vector<std::uint8_t> legal_action_mask_;
};

}  // namespace gamevec
