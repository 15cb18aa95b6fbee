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


#include "gamevec/env.hpp"

#include <algorithm>
#include <bit>

#include "gamevec/errors.hpp"

namespace gamevec {
namespace {

GameCore make_core(GameId id, RngKey key, const EnvOptions& options) {
  switch (id) {
    case GameId::kTicTacToe:
      return tic_tac_toe::initial(key);
    case GameId::kConnectFour:
      return connect_four::initial(key);
    case GameId::kOthello:
      return othello::initial(key);
    case GameId::kHex:
      return hex::initial(key);
    case GameId::kGo9x9:
      return go::initial(key, options.go_rules);
    case GameId::kPlay2048:
      return play2048::initial(key);
    case GameId::kBackgammon:
      return backgammon::initial(key);
    case GameId::kKuhnPoker:
      return kuhn_poker::initial(key);
    case GameId::kLeducHoldem:
      return leduc_holdem::initial(key);
    default:
      throw UnsupportedGame("game is reserved but not implemented: " +
                            std::string(game_name(id)));
  }
}

void refresh_mask(EnvState& state) {
  std::visit([&](const auto& core) { legal_actions(core, state.legal_action_mask); }, state.core);
}

void observe_core(const GameCore& core, int role, std::span<float> out) {
  std::visit([&](const auto& c) { observe(c, role, out); }, core);
}

int core_role_to_move(const GameCore& core) {
  return std::visit([](const auto& c) { return role_to_move(c); }, core);
}

}  // namespace

int default_max_steps(GameId id) {
  switch (id) {
    case GameId::kGo9x9:
      return 512;
    case GameId::kBackgammon:
      return 1024;
    default:
      return 256;
  }
}

int EnvState::player_of(int role) const {
  for (std::size_t p = 0; p < player_to_role.size(); ++p) {
    if (player_to_role[p] == role) return static_cast<int>(p);
  }
  return 0;
}

Env::Env(GameId id, EnvOptions options)
    : spec_(&spec_of(id)),
      options_(std::move(options)),
      max_steps_(options_.max_steps.value_or(default_max_steps(id))) {
  if (!spec_->implemented) {
    throw UnsupportedGame("game is reserved but not implemented: " + std::string(spec_->name));
  }
}

EnvState Env::init(RngKey key) const {
  const auto [perm_key, core_key] = key.split();
  EnvState state;
  state.game = id();
  const int n = spec_->num_players;
  state.player_to_role.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) state.player_to_role[p] = p;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(perm_key.fold_in(i).uniform_int(static_cast<std::uint32_t>(i + 1)));
    std::swap(state.player_to_role[i], state.player_to_role[j]);
  }
  state.core = make_core(id(), core_key, options_);
  state.rewards.assign(static_cast<std::size_t>(n), 0.0f);
  state.legal_action_mask.assign(static_cast<std::size_t>(spec_->num_actions), 0);
  refresh_mask(state);
  state.current_player = state.player_of(core_role_to_move(state.core));
  return state;
}

void Env::validate(const EnvState& state, int action) const {
  if (state.game != id()) throw ShapeMismatch("state belongs to a different game");
  if (state.done()) throw TerminalStep("step called on a finished episode");
  if (action < 0 || action >= spec_->num_actions) {
    throw IllegalAction(std::string(spec_->name) + ": action " + std::to_string(action) +
                        " out of range");
  }
  if (!state.legal_action_mask[static_cast<std::size_t>(action)]) {
    throw IllegalAction(std::string(spec_->name) + ": action " + std::to_string(action) +
                        " is masked");
  }
}

void Env::step_in_place(EnvState& state, int action, RngKey key) const {
  validate(state, action);
  const Outcome outcome =
      std::visit([&](auto& core) { return apply(core, action, key); }, state.core);
  ++state.step_count;
  for (std::size_t p = 0; p < state.rewards.size(); ++p) {
    state.rewards[p] = outcome.role_rewards[static_cast<std::size_t>(state.player_to_role[p])];
  }
  state.current_player = state.player_of(core_role_to_move(state.core));
  if (outcome.terminated) {
    state.terminated = true;
  } else if (max_steps_ > 0 && state.step_count >= max_steps_) {
    state.truncated = true;
  }
  if (state.done()) {
    std::fill(state.legal_action_mask.begin(), state.legal_action_mask.end(), std::uint8_t{0});
  } else {
    refresh_mask(state);
  }
}

EnvState Env::step(const EnvState& state, int action, RngKey key) const {
  validate(state, action);
  EnvState next = state;
  step_in_place(next, action, key);
  return next;
}

void Env::observe_into(const EnvState& state, int player, std::span<float> out) const {
  if (player < 0 || player >= spec_->num_players) {
    throw InvalidPlayer("player " + std::to_string(player) + " out of range");
  }
  if (out.size() != static_cast<std::size_t>(spec_->observation_size())) {
    throw ShapeMismatch("observation buffer has the wrong size");
  }
  const int role = state.role_of(player);
  observe_core(state.core, role, out);
}

Observation Env::observe(const EnvState& state, int player) const {
  Observation obs;
  obs.shape = spec_->observation_shape;
  obs.values.assign(static_cast<std::size_t>(spec_->observation_size()), 0.0f);
  observe_into(state, player, obs.values);
  return obs;
}

EnvState init(const GameSpec& spec, RngKey key) { return Env(spec.id).init(key); }

std::uint64_t fingerprint(const EnvState& state) {
  Hasher h;
  h.add(static_cast<std::uint64_t>(state.game));
  h.add(static_cast<std::uint64_t>(state.current_player));
  h.add_all<std::uint8_t>(state.legal_action_mask);
  for (float r : state.rewards) h.add(std::bit_cast<std::uint32_t>(r));
  h.add(state.terminated);
  h.add(state.truncated);
  h.add(static_cast<std::uint64_t>(state.step_count));
  h.add_all<int>(state.player_to_role);
  h.add(state.core.index());
  std::visit([&](const auto& core) { core.hash_into(h); }, state.core);
  return h.value();
}

}  // namespace gamevec
