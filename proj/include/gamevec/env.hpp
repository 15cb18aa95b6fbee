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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gamevec/game_spec.hpp"
#include "gamevec/games/backgammon.hpp"
#include "gamevec/games/connect_four.hpp"
#include "gamevec/games/go.hpp"
#include "gamevec/games/hex.hpp"
#include "gamevec/games/kuhn_poker.hpp"
#include "gamevec/games/leduc_holdem.hpp"
#include "gamevec/games/othello.hpp"
#include "gamevec/games/play2048.hpp"
#include "gamevec/games/tic_tac_toe.hpp"
#include "gamevec/rng.hpp"

namespace gamevec {

using GameCore = std::variant<tic_tac_toe::Core, connect_four::Core, othello::Core, hex::Core,
                              go::Core, play2048::Core, backgammon::Core, kuhn_poker::Core,
                              leduc_holdem::Core>;

struct EnvOptions {
  // Truncation horizon; unset uses default_max_steps(). Zero disables truncation.
  std::optional<int> max_steps;
  go::Rules go_rules;
};

// 512 for Go 9x9, 1024 for backgammon, 256 otherwise.
int default_max_steps(GameId id);

// One environment instance. Rewards, observations and current_player are
// indexed by player; player_to_role maps players onto game roles (colours,
// seats) and is fixed for the episode.
struct EnvState {
  GameId game = GameId::kTicTacToe;
  int current_player = 0;
  std::vector<std::uint8_t> legal_action_mask;
  std::vector<float> rewards;
  bool terminated = false;
  bool truncated = false;
  int step_count = 0;
  std::vector<int> player_to_role;
  GameCore core;

  bool done() const { return terminated || truncated; }
  int role_of(int player) const { return player_to_role.at(static_cast<std::size_t>(player)); }
  int player_of(int role) const;

  friend bool operator==(const EnvState&, const EnvState&) = default;
};

// Row-major tensor with the game's observation shape (board games are HWC).
struct Observation {
  std::vector<int> shape;
  std::vector<float> values;
};

class Env {
 public:
  // Throws UnsupportedGame for reserved or unknown games.
  explicit Env(GameId id, EnvOptions options = {});

  const GameSpec& spec() const { return *spec_; }
  GameId id() const { return spec_->id; }
  const EnvOptions& options() const { return options_; }
  int max_steps() const { return max_steps_; }

  EnvState init(RngKey key) const;

  // Pure transition. Chance events (dice, tile spawns, card reveals) draw from
  // `key`. Throws TerminalStep on a finished state and IllegalAction when the
  // mask forbids `action`.
  EnvState step(const EnvState& state, int action, RngKey key) const;

  // In-place form of step(); on error `state` is left unchanged.
  void step_in_place(EnvState& state, int action, RngKey key) const;

  Observation observe(const EnvState& state, int player) const;
  void observe_into(const EnvState& state, int player, std::span<float> out) const;

 private:
  void validate(const EnvState& state, int action) const;

  const GameSpec* spec_;
  EnvOptions options_;
  int max_steps_;
};

// init() with default options.
EnvState init(const GameSpec& spec, RngKey key);

// 64-bit digest of every field of the state.
std::uint64_t fingerprint(const EnvState& state);

}  // namespace gamevec
