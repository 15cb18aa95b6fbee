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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gamevec/agents.hpp"
#include "gamevec/executor.hpp"

namespace gamevec {

struct MatchResult {
  GameId game = GameId::kTicTacToe;
  std::string agent_a;
  std::string agent_b;
  int wins_a = 0;
  int wins_b = 0;
  int draws = 0;

  int games() const { return wins_a + wins_b + draws; }
  friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

// Plays `games` games with agent `a` as player 0 and `b` as player 1. Colours
// come from init's random player-to-role permutation. Truncated games count as
// draws.
MatchResult play_match(const Env& env, const Agent& a, const Agent& b, int games, RngKey key);

// Round robin over every unordered pair (i < j), in order (0,1), (0,2), ...,
// (1,2), ...; pairing k uses key.fold_in(k). Pairings may run on `executor`;
// the results equal sequential execution. Empty when games_per_pair is 0.
// Throws UnsupportedGame when an agent cannot play the game or the game is not
// two-player, and std::invalid_argument for fewer than two agents.
std::vector<MatchResult> run_matches(const Env& env, std::span<const Agent> agents,
                                     int games_per_pair, RngKey key,
                                     Executor* executor = nullptr);

struct RatingTable {
  std::map<std::string, double> ratings;
  std::string anchor_id;
  double anchor_value = 1000.0;
  int iterations = 0;
  double gradient_norm = 0.0;

  double rating(const std::string& agent) const { return ratings.at(agent); }
};

struct EloFitOptions {
  double tolerance = 1e-9;   // gradient norm, natural-log rating units
  int max_iterations = 100000;
};

// Maximum-likelihood Elo under P(a beats b) = 1 / (1 + 10^((R_b - R_a) / 400)),
// a draw counting half a win for each side, translated so the anchor sits at
// anchor_value. `initial` seeds the optimiser (missing agents start at 0).
// Throws DisconnectedRatingGraph when some agent has no path of played games
// to the anchor (or the anchor never played).
RatingTable fit_elo(std::span<const MatchResult> results, const std::string& anchor_id,
                    double anchor_value = 1000.0, const std::map<std::string, double>& initial = {},
                    const EloFitOptions& options = {});

}  // namespace gamevec
