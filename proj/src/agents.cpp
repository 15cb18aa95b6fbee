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


#include "gamevec/agents.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "gamevec/errors.hpp"

namespace gamevec {

int random_action(const EnvState& state, RngKey key) {
  if (state.done()) throw TerminalStep("random_action: episode is finished");
  std::uint32_t legal = 0;
  for (auto bit : state.legal_action_mask) legal += bit;
  if (legal == 0) throw IllegalAction("random_action: no legal action");
  std::uint32_t pick = key.uniform_int(legal);
  for (std::size_t a = 0; a < state.legal_action_mask.size(); ++a) {
    if (state.legal_action_mask[a] && pick-- == 0) return static_cast<int>(a);
  }
  return -1;  // unreachable
}

bool mcts_supports(GameId id) {
  switch (id) {
    case GameId::kTicTacToe:
    case GameId::kConnectFour:
    case GameId::kOthello:
    case GameId::kHex:
    case GameId::kGo9x9:
      return true;
    default:
      return false;
  }
}

namespace {

struct Node {
  EnvState state;
  int parent = -1;
  int action = -1;
  int mover = 0;  // player whose action led here
  int visits = 0;
  double value = 0.0;  // sum of transformed payoffs for `mover`
  std::vector<int> children;
  std::vector<int> untried;
};

std::vector<int> legal_list(const EnvState& s) {
  std::vector<int> out;
  if (s.done()) return out;
  for (std::size_t a = 0; a < s.legal_action_mask.size(); ++a) {
    if (s.legal_action_mask[a]) out.push_back(static_cast<int>(a));
  }
  return out;
}

std::vector<float> rollout(const Env& env, EnvState state, RngKey key) {
  for (std::uint64_t t = 0; !state.done(); ++t) {
    const auto [act_key, step_key] = key.fold_in(t).split();
    env.step_in_place(state, random_action(state, act_key), step_key);
  }
  if (state.truncated) return std::vector<float>(state.rewards.size(), 0.0f);
  return state.rewards;
}

}  // namespace

MctsResult mcts_search(const Env& env, const EnvState& state, RngKey key,
                       const MctsConfig& config) {
  if (!mcts_supports(env.id())) {
    throw UnsupportedGame("mcts: " + std::string(env.spec().name) + " is not supported");
  }
  if (state.done()) throw TerminalStep("mcts: episode is finished");
  if (config.simulations < 1) throw std::invalid_argument("mcts: simulations must be >= 1");

  std::vector<Node> tree;
  tree.reserve(static_cast<std::size_t>(config.simulations) + 1);
  tree.push_back(Node{state, -1, -1, -1, 0, 0.0, {}, legal_list(state)});

  for (int sim = 0; sim < config.simulations; ++sim) {
    const RngKey sim_key = key.fold_in(static_cast<std::uint64_t>(sim));
    int node = 0;
    // Selection.
    while (!tree[node].state.done() && tree[node].untried.empty()) {
      const double log_n = std::log(static_cast<double>(tree[node].visits));
      int best = -1;
      double best_score = -std::numeric_limits<double>::infinity();
      for (int child : tree[node].children) {
        const Node& c = tree[child];
        const double mean = c.value / c.visits;
        const double bonus =
            config.payoff_scale * config.exploration * std::sqrt(log_n / c.visits);
        const double score = mean + bonus;
        if (score > best_score) {
          best_score = score;
          best = child;
        }
      }
      node = best;
    }
    // Expansion.
    if (!tree[node].state.done()) {
      auto& untried = tree[node].untried;
      const std::size_t pick = sim_key.fold_in(0).uniform_int(static_cast<std::uint32_t>(untried.size()));
      const int action = untried[pick];
      untried[pick] = untried.back();
      untried.pop_back();
      Node child;
      child.mover = tree[node].state.current_player;
      child.state = env.step(tree[node].state, action, sim_key.fold_in(1));
      child.parent = node;
      child.action = action;
      child.untried = legal_list(child.state);
      tree.push_back(std::move(child));
      const int id = static_cast<int>(tree.size()) - 1;
      tree[node].children.push_back(id);
      node = id;
    }
    // Simulation.
    const std::vector<float> payoff = tree[node].state.done()
                                          ? (tree[node].state.truncated
                                                 ? std::vector<float>(state.rewards.size(), 0.0f)
                                                 : tree[node].state.rewards)
                                          : rollout(env, tree[node].state, sim_key.fold_in(2));
    // Backup.
    for (int n = node; n >= 0; n = tree[n].parent) {
      Node& x = tree[n];
      ++x.visits;
      if (x.mover >= 0) {
        x.value += config.payoff_scale * payoff[static_cast<std::size_t>(x.mover)] +
                   config.payoff_offset;
      }
    }
  }

  MctsResult result;
  result.root_visits.assign(state.legal_action_mask.size(), 0);
  int best_visits = -1;
  for (int child : tree[0].children) {
    const Node& c = tree[child];
    result.root_visits[static_cast<std::size_t>(c.action)] = c.visits;
    if (c.visits > best_visits || (c.visits == best_visits && c.action < result.action)) {
      best_visits = c.visits;
      result.action = c.action;
    }
  }
  return result;
}

int mcts_action(const Env& env, const EnvState& state, RngKey key, const MctsConfig& config) {
  return mcts_search(env, state, key, config).action;
}

Agent make_random_agent() {
  return Agent{"random",
               [](const Env&, const EnvState& s, RngKey key) { return random_action(s, key); },
               [](GameId) { return true; }};
}

Agent make_mcts_agent(int simulations) {
  MctsConfig config;
  config.simulations = simulations;
  return Agent{"mcts" + std::to_string(simulations),
               [config](const Env& env, const EnvState& s, RngKey key) {
                 return mcts_action(env, s, key, config);
               },
               mcts_supports};
}

Agent parse_agent(std::string_view spec) {
  if (spec == "random") return make_random_agent();
  if (spec == "mcts") return make_mcts_agent();
  if (spec.starts_with("mcts:") || (spec.starts_with("mcts") && spec.size() > 4)) {
    const auto digits = spec.substr(spec[4] == ':' ? 5 : 4);
    int sims = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), sims);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && sims > 0) {
      return make_mcts_agent(sims);
    }
  }
  throw std::invalid_argument("unknown agent: " + std::string(spec));
}

}  // namespace gamevec
