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

#include <cmath>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gamevec/env.hpp"

namespace gamevec {

// A named decision function. `act` must return an action whose mask bit is set.
struct Agent {
  std::string name;
  std::function<int(const Env&, const EnvState&, RngKey)> act;
  std::function<bool(GameId)> supports;
};

// Uniform draw over the legal actions. Throws TerminalStep on a finished state.
int random_action(const EnvState& state, RngKey key);

struct MctsConfig {
  int simulations = 32;
  double exploration = std::sqrt(2.0);
  // Rollout payoffs enter the tree as scale * payoff + offset; the exploration
  // bonus is multiplied by scale as well.
  double payoff_scale = 1.0;
  double payoff_offset = 0.0;
};

struct MctsResult {
  int action = -1;
  std::vector<int> root_visits;  // per action; zero for unexpanded actions
};

// UCT over the two-player perfect-information games without chance.
bool mcts_supports(GameId id);

// Runs config.simulations iterations of select / expand one child / uniform
// random rollout / backup and returns the most visited root child, ties going
// to the lowest action. Throws UnsupportedGame for other games.
MctsResult mcts_search(const Env& env, const EnvState& state, RngKey key,
                       const MctsConfig& config = {});
int mcts_action(const Env& env, const EnvState& state, RngKey key, const MctsConfig& config = {});

Agent make_random_agent();
Agent make_mcts_agent(int simulations = 32);
// "random", "mcts" or "mcts:<simulations>". Throws std::invalid_argument.
Agent parse_agent(std::string_view spec);

}  // namespace gamevec
