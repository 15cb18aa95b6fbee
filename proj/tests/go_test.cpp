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


#include "gamevec/games/go.hpp"

#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "gamevec/env.hpp"
#include "gamevec/errors.hpp"
#include "oracles.hpp"

using namespace gamevec;

namespace {

using Grid = oracle::GoGrid;

Grid to_grid(const go::Board& b) {
  Grid g(81);
  for (int p = 0; p < 81; ++p) g[p] = b[p] == kEmpty ? 0 : b[p] + 1;
  return g;
}

go::Board to_board(const Grid& g) {
  go::Board b;
  for (int p = 0; p < 81; ++p) b[p] = static_cast<std::int8_t>(g[p] - 1);
  return b;
}

}  // namespace

TEST(Go, EmptyBoardDoublePassWhiteWinsOnKomi) {
  const Env env(GameId::kGo9x9);
  EnvState s = env.init(RngKey(4));
  int legal = 0;
  for (auto b : s.legal_action_mask) legal += b;
  EXPECT_EQ(legal, 82);
  s = env.step(s, go::kPassAction, RngKey(5));
  EXPECT_FALSE(s.done());
  s = env.step(s, go::kPassAction, RngKey(6));
  EXPECT_TRUE(s.terminated);
  EXPECT_EQ(s.rewards[static_cast<std::size_t>(s.player_of(1))], 1.0f);
  EXPECT_EQ(s.rewards[static_cast<std::size_t>(s.player_of(0))], -1.0f);
}

TEST(Go, CornerStoneIsCaptured) {
  go::Core core;
  go::transition(core, 1);   // black
  go::transition(core, 0);   // white in the corner
  go::transition(core, 9);   // black fills the last liberty
  EXPECT_EQ(core.board[0], kEmpty);
  EXPECT_EQ(core.board[1], 0);
  EXPECT_EQ(core.board[9], 0);
}

TEST(Go, KoRetakeIsIllegal) {
  go::Core core;
  for (int a : {1, 2, 9, 20, 19, 12, go::kPassAction, 10, 11}) go::transition(core, a);
  ASSERT_EQ(core.board[10], kEmpty);  // white stone at (1,1) captured
  std::array<std::uint8_t, go::kNumActions> mask;
  go::legal_actions(core, mask);
  EXPECT_FALSE(mask[10]);
  EXPECT_THROW(go::transition(core, 10), IllegalAction);
}

TEST(Go, SuicideIsMaskedByDefault) {
  // White's stones at 0 and 1 would have no liberty; black chains keep theirs.
  const std::vector<int> moves{9, 0, 2, go::kPassAction, 10};
  go::Core core;
  for (int a : moves) go::transition(core, a);
  std::array<std::uint8_t, go::kNumActions> mask;
  go::legal_actions(core, mask);
  EXPECT_FALSE(mask[1]);

  go::Core lax = go::initial(RngKey(), go::Rules{6.5f, true});
  for (int a : moves) go::transition(lax, a);
  go::legal_actions(lax, mask);
  EXPECT_TRUE(mask[1]);
  go::transition(lax, 1);
  EXPECT_EQ(lax.board[0], kEmpty);
  EXPECT_EQ(lax.board[1], kEmpty);
}

TEST(Go, SingleStoneSuicideRepeatsThePosition) {
  // Even when self-capture is allowed, removing the lone stone recreates the
  // current board, which positional superko forbids.
  go::Core lax = go::initial(RngKey(), go::Rules{6.5f, true});
  for (int a : {1, go::kPassAction, 9}) go::transition(lax, a);
  std::array<std::uint8_t, go::kNumActions> mask;
  go::legal_actions(lax, mask);
  EXPECT_FALSE(mask[0]);
}

TEST(Go, ScoringMatchesFloodFillOracle) {
  const RngKey root(31);
  for (int i = 0; i < 50; ++i) {
    const RngKey key = root.fold_in(i);
    Grid g(81);
    const double fill = 0.2 + 0.6 * key.fold_in(100).uniform();
    for (int p = 0; p < 81; ++p) {
      const RngKey pk = key.fold_in(p);
      if (pk.uniform() < fill) g[p] = 1 + static_cast<int>(pk.fold_in(1).uniform_int(2));
    }
    const auto [black, white] = oracle::go_score(g, 6.5);
    const go::Score s = go::tromp_taylor_score(to_board(g), 6.5f);
    ASSERT_EQ(s.black, black);
    ASSERT_EQ(s.white, white);

    go::Core core;
    core.board = to_board(g);
    core.position_hash = go::position_hash(core.board);
    core.seen_positions = {core.position_hash};
    go::apply(core, go::kPassAction, RngKey());
    const Outcome o = go::apply(core, go::kPassAction, RngKey());
    ASSERT_TRUE(o.terminated);
    ASSERT_EQ(o.role_rewards[0], black > white ? 1.0f : -1.0f);  // komi .5 rules out ties
  }
}

TEST(Go, IntegerKomiCanDraw) {
  go::Core core = go::initial(RngKey(), go::Rules{0.0f, false});
  go::apply(core, go::kPassAction, RngKey());
  const Outcome o = go::apply(core, go::kPassAction, RngKey());
  EXPECT_TRUE(o.terminated);
  EXPECT_EQ(o.role_rewards[0], 0.0f);
}

TEST(Go, RandomGamesAgreeWithMaskOracle) {
  for (int game = 0; game < 60; ++game) {
    go::Core core;
    std::set<Grid> history{Grid(81, 0)};
    const RngKey key = RngKey(37).fold_in(game);
    for (int ply = 0; ply < 300; ++ply) {
      const int who = go::role_to_move(core) + 1;
      const Grid now = to_grid(core.board);
      std::array<std::uint8_t, go::kNumActions> mask;
      go::legal_actions(core, mask);
      std::vector<int> legal;
      for (int p = 0; p < 81; ++p) {
        bool ok = false;
        if (now[p] == 0) {
          const Grid next = oracle::go_play(now, p, who);
          ok = !next.empty() && !history.count(next);
        }
        ASSERT_EQ(mask[p] != 0, ok) << "game " << game << " ply " << ply << " point " << p;
        if (ok) legal.push_back(p);
      }
      ASSERT_TRUE(mask[go::kPassAction]);
      // Prefer placements so games stay long; pass when none is left.
      int action = go::kPassAction;
      if (!legal.empty()) {
        action = legal[key.fold_in(ply).uniform_int(static_cast<std::uint32_t>(legal.size()))];
      }
      const Outcome o = go::transition(core, action);
      const Grid after = to_grid(core.board);
      if (action != go::kPassAction) {
        ASSERT_EQ(after, oracle::go_play(now, action, who));
        history.insert(after);
      }
      for (int p = 0; p < 81; ++p) {
        if (after[p] != 0) ASSERT_TRUE(oracle::go_group_has_liberty(after, p));
      }
      ASSERT_EQ(core.position_hash, go::position_hash(core.board));
      if (o.terminated) break;
    }
  }
}

TEST(Go, ObservationHistoryPlanes) {
  go::Core core;
  go::transition(core, 40);
  std::array<float, go::kObservationSize> obs;
  go::observe(core, 0, obs);
  constexpr int kPlanes = 17;
  EXPECT_EQ(obs[40 * kPlanes + 0], 1.0f);
  for (int p = 0; p < 81; ++p) {
    for (int plane = 2; plane < 16; ++plane) ASSERT_EQ(obs[p * kPlanes + plane], 0.0f);
    ASSERT_EQ(obs[p * kPlanes + 16], 1.0f);
  }
  go::transition(core, 41);
  go::observe(core, 1, obs);
  EXPECT_EQ(obs[41 * kPlanes + 0], 1.0f);  // white's own stone, newest
  EXPECT_EQ(obs[40 * kPlanes + 1], 1.0f);
  EXPECT_EQ(obs[40 * kPlanes + 3], 1.0f);  // one step back: black stone only
  EXPECT_EQ(obs[41 * kPlanes + 2], 0.0f);
  EXPECT_EQ(obs[0 * kPlanes + 16], 0.0f);
}
