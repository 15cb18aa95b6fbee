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


#include "gamevec/evaluation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "gamevec/errors.hpp"

namespace gamevec {

MatchResult play_match(const Env& env, const Agent& a, const Agent& b, int games, RngKey key) {
  MatchResult result;
  result.game = env.id();
  result.agent_a = a.name;
  result.agent_b = b.name;
  for (int g = 0; g < games; ++g) {
    const RngKey game_key = key.fold_in(static_cast<std::uint64_t>(g));
    EnvState state = env.init(game_key.fold_in(0));
    const RngKey play_key = game_key.fold_in(1);
    for (std::uint64_t t = 0; !state.done(); ++t) {
      const auto [act_key, step_key] = play_key.fold_in(t).split();
      const Agent& agent = state.current_player == 0 ? a : b;
      env.step_in_place(state, agent.act(env, state, act_key), step_key);
    }
    if (state.truncated || state.rewards[0] == state.rewards[1]) {
      ++result.draws;
    } else if (state.rewards[0] > state.rewards[1]) {
      ++result.wins_a;
    } else {
      ++result.wins_b;
    }
  }
  return result;
}

std::vector<MatchResult> run_matches(const Env& env, std::span<const Agent> agents,
                                     int games_per_pair, RngKey key, Executor* executor) {
  if (agents.size() < 2) throw std::invalid_argument("run_matches: need at least two agents");
  if (env.spec().num_players != 2) {
    throw UnsupportedGame("run_matches: " + std::string(env.spec().name) + " is not two-player");
  }
  for (const auto& agent : agents) {
    if (agent.supports && !agent.supports(env.id())) {
      throw UnsupportedGame("agent " + agent.name + " does not support " +
                            std::string(env.spec().name));
    }
  }
  if (games_per_pair <= 0) return {};

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (std::size_t j = i + 1; j < agents.size(); ++j) pairs.emplace_back(i, j);
  }
  std::vector<MatchResult> results(pairs.size());
  auto body = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      results[k] = play_match(env, agents[pairs[k].first], agents[pairs[k].second],
                              games_per_pair, key.fold_in(k));
    }
  };
  if (executor) {
    executor->parallel_for(pairs.size(), body);
  } else {
    body(0, pairs.size());
  }
  return results;
}

namespace {

constexpr double kEloPerNat = 400.0 / 2.302585092994046;  // 400 / ln(10)

struct Pairing {
  int a;
  int b;
  double score_a;  // wins_a + draws / 2
  double games;
};

double log_sigmoid(double x) { return x >= 0 ? -std::log1p(std::exp(-x)) : x - std::log1p(std::exp(x)); }

double log_likelihood(const std::vector<Pairing>& pairs, const Eigen::VectorXd& theta) {
  double ll = 0.0;
  for (const auto& p : pairs) {
    const double d = theta[p.a] - theta[p.b];
    ll += p.score_a * log_sigmoid(d) + (p.games - p.score_a) * log_sigmoid(-d);
  }
  return ll;
}

}  // namespace

RatingTable fit_elo(std::span<const MatchResult> results, const std::string& anchor_id,
                    double anchor_value, const std::map<std::string, double>& initial,
                    const EloFitOptions& options) {
  std::map<std::string, int> index;
  std::vector<std::string> names;
  auto id_of = [&](const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };
  std::vector<Pairing> pairs;
  for (const auto& r : results) {
    const int a = id_of(r.agent_a);
    const int b = id_of(r.agent_b);
    if (r.games() > 0) pairs.push_back({a, b, r.wins_a + 0.5 * r.draws, double(r.games())});
  }
  const auto anchor_it = index.find(anchor_id);
  if (anchor_it == index.end()) {
    throw DisconnectedRatingGraph("anchor " + anchor_id + " does not appear in the results");
  }
  const int n = static_cast<int>(names.size());
  const int anchor = anchor_it->second;

  // Every agent must reach the anchor through pairings with games played.
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(n));
  for (const auto& p : pairs) {
    adjacency[p.a].push_back(p.b);
    adjacency[p.b].push_back(p.a);
  }
  std::vector<bool> reached(static_cast<std::size_t>(n), false);
  std::queue<int> frontier;
  frontier.push(anchor);
  reached[anchor] = true;
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int v : adjacency[u]) {
      if (!reached[v]) {
        reached[v] = true;
        frontier.push(v);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!reached[i]) {
      throw DisconnectedRatingGraph("agent " + names[i] + " is not connected to anchor " +
                                    anchor_id);
    }
  }

  Eigen::VectorXd theta = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (auto it = initial.find(names[i]); it != initial.end()) theta[i] = it->second / kEloPerNat;
  }

  // Newton's method with the anchor held fixed; backtracking keeps the
  // likelihood non-decreasing.
  std::vector<int> free_vars;
  for (int i = 0; i < n; ++i) {
    if (i != anchor) free_vars.push_back(i);
  }
  const int m = static_cast<int>(free_vars.size());
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (int k = 0; k < m; ++k) slot[free_vars[k]] = k;

  RatingTable table;
  table.anchor_id = anchor_id;
  table.anchor_value = anchor_value;
  double ll = log_likelihood(pairs, theta);
  for (int iter = 0; iter < options.max_iterations && m > 0; ++iter) {
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(m);
    Eigen::MatrixXd info = Eigen::MatrixXd::Zero(m, m);  // negative Hessian
    for (const auto& p : pairs) {
      const double d = theta[p.a] - theta[p.b];
      const double prob = 1.0 / (1.0 + std::exp(-d));
      const double g = p.score_a - p.games * prob;
      const double w = p.games * prob * (1.0 - prob);
      const int sa = slot[p.a];
      const int sb = slot[p.b];
      if (sa >= 0) {
        grad[sa] += g;
        info(sa, sa) += w;
      }
      if (sb >= 0) {
        grad[sb] -= g;
        info(sb, sb) += w;
      }
      if (sa >= 0 && sb >= 0) {
        info(sa, sb) -= w;
        info(sb, sa) -= w;
      }
    }
    table.iterations = iter;
    table.gradient_norm = grad.norm();
    if (table.gradient_norm < options.tolerance) break;

    Eigen::VectorXd dir = info.ldlt().solve(grad);
    if (!dir.allFinite() || dir.dot(grad) <= 0) dir = grad;
    double step = 1.0;
    for (int tries = 0; tries < 60; ++tries, step *= 0.5) {
      Eigen::VectorXd trial = theta;
      for (int k = 0; k < m; ++k) trial[free_vars[k]] += step * dir[k];
      const double trial_ll = log_likelihood(pairs, trial);
      if (trial_ll >= ll) {
        theta = trial;
        ll = trial_ll;
        break;
      }
    }
    table.iterations = iter + 1;
  }

  for (int i = 0; i < n; ++i) {
    table.ratings[names[i]] = i == anchor ? anchor_value
                                          : anchor_value + (theta[i] - theta[anchor]) * kEloPerNat;
  }
  return table;
}

}  // namespace gamevec
