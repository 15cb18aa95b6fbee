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


#include "gamevec/vector_env.hpp"

#include <algorithm>

#include "gamevec/errors.hpp"

namespace gamevec {

VectorEnv::VectorEnv(GameId id, std::size_t batch_size, std::uint64_t seed, EnvOptions options,
                     unsigned threads)
    : env_(id, std::move(options)),
      seed_(seed),
      executor_(threads == 1 ? nullptr : std::make_unique<Executor>(threads)) {
  batch_ = batch_init(env_, init_key(seed_), batch_size, executor_.get());
  const auto& spec = env_.spec();
  observations_.resize(batch_size * static_cast<std::size_t>(spec.observation_size()));
  rewards_.resize(batch_size * static_cast<std::size_t>(spec.num_players));
  terminated_.resize(batch_size);
  truncated_.resize(batch_size);
  current_player_.resize(batch_size);
  legal_action_mask_.resize(batch_size * static_cast<std::size_t>(spec.num_actions));
  refresh();
}

VectorEnv VectorEnv::make(std::string_view game, std::size_t batch_size, std::uint64_t seed) {
  return VectorEnv(parse_game_id(game), batch_size, seed);
}

void VectorEnv::step(std::span<const int> actions) {
  batch_step_in_place(env_, batch_, actions, step_key(seed_, steps_), executor_.get());
  ++steps_;
  refresh();
}

void VectorEnv::refresh() {
  const auto& spec = env_.spec();
  const auto obs = static_cast<std::size_t>(spec.observation_size());
  const auto players = static_cast<std::size_t>(spec.num_players);
  const auto actions = static_cast<std::size_t>(spec.num_actions);
  for (std::size_t i = 0; i < batch_.size(); ++i) {
    const EnvState& s = batch_.states[i];
    env_.observe_into(s, s.current_player, std::span(observations_).subspan(i * obs, obs));
    std::copy(s.rewards.begin(), s.rewards.end(), rewards_.begin() + i * players);
    terminated_[i] = s.terminated;
    truncated_[i] = s.truncated;
    current_player_[i] = s.current_player;
    std::copy(s.legal_action_mask.begin(), s.legal_action_mask.end(),
              legal_action_mask_.begin() + i * actions);
  }
}

void VectorEnv::observe(int player, std::span<float> out) const {
  const auto obs = static_cast<std::size_t>(env_.spec().observation_size());
  if (out.size() != obs * batch_.size()) throw ShapeMismatch("observe: buffer has the wrong size");
  for (std::size_t i = 0; i < batch_.size(); ++i) {
    env_.observe_into(batch_.states[i], player, out.subspan(i * obs, obs));
  }
}

std::vector<std::size_t> VectorEnv::observation_buffer_shape() const {
  std::vector<std::size_t> shape{batch_.size()};
  for (int d : env_.spec().observation_shape) shape.push_back(static_cast<std::size_t>(d));
  return shape;
}

std::vector<std::size_t> VectorEnv::mask_buffer_shape() const {
  return {batch_.size(), static_cast<std::size_t>(env_.spec().num_actions)};
}

std::vector<std::size_t> VectorEnv::reward_buffer_shape() const {
  return {batch_.size(), static_cast<std::size_t>(env_.spec().num_players)};
}

}  // namespace gamevec
