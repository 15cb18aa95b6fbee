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


#include "gamevec/games/play2048.hpp"

#include <gtest/gtest.h>

#include "gamevec/errors.hpp"
#include "oracles.hpp"

using namespace gamevec;
using play2048::Board;

TEST(Play2048, SlidesMatchOracle) {
  const RngKey root(41);
  for (int i = 0; i < 100000; ++i) {
    const RngKey key = root.fold_in(i);
    Board board{};
    const int max_exp = 1 + static_cast<int>(key.fold_in(99).uniform_int(11));
    for (int c = 0; c < 16; ++c) {
      const RngKey ck = key.fold_in(c);
      if (ck.uniform() < 0.6) board[c] = static_cast<std::int8_t>(1 + ck.fold_in(1).uniform_int(max_exp));
    }
    const int dir = static_cast<int>(key.fold_in(98).uniform_int(4));
    const auto [expected, reward] = oracle::slide_board(board, dir);
    const auto s = play2048::slide(board, dir);
    ASSERT_EQ(s.board, expected) << "sample " << i;
    ASSERT_EQ(static_cast<long>(s.reward), reward);
    ASSERT_EQ(s.moved, expected != board);
  }
}

TEST(Play2048, MergeOncePerMove) {
  Board b{};
  b[0] = 1;
  b[1] = 1;
  b[2] = 2;  // [2, 2, 4, 0]
  auto s = play2048::slide(b, play2048::kLeft);
  EXPECT_EQ(s.board[0], 2);
  EXPECT_EQ(s.board[1], 2);
  EXPECT_EQ(s.board[2], 0);
  EXPECT_EQ(s.reward, 4u);

  Board c{};
  c[0] = c[1] = c[2] = c[3] = 2;  // [4, 4, 4, 4]
  s = play2048::slide(c, play2048::kLeft);
  EXPECT_EQ(s.board[0], 3);
  EXPECT_EQ(s.board[1], 3);
  EXPECT_EQ(s.board[2], 0);
  EXPECT_EQ(s.reward, 16u);
}

TEST(Play2048, SpawnTwoFraction) {
  int twos = 0;
  constexpr int kSpawns = 10000;
  for (int i = 0; i < kSpawns; ++i) {
    Board b{};
    play2048::spawn(b, RngKey(43).fold_in(i));
    int tiles = 0;
    for (auto e : b) {
      if (e != 0) {
        ++tiles;
        twos += e == 1;
        ASSERT_TRUE(e == 1 || e == 2);
      }
    }
    ASSERT_EQ(tiles, 1);
  }
  const double fraction = static_cast<double>(twos) / kSpawns;
  EXPECT_GE(fraction, 0.88);
  EXPECT_LE(fraction, 0.92);
}

TEST(Play2048, InitialBoardHasTwoTiles) {
  const auto core = play2048::initial(RngKey(3));
  int tiles = 0;
  for (auto e : core.board) tiles += e != 0;
  EXPECT_EQ(tiles, 2);
}

TEST(Play2048, BlockedDirectionIsIllegalAndFullBoardEnds) {
  play2048::Core core;
  core.board = {1, 2, 1, 2, 2, 1, 2, 1, 1, 2, 1, 2, 2, 1, 2, 0};
  std::array<std::uint8_t, 4> mask;
  play2048::legal_actions(core, mask);
  EXPECT_FALSE(mask[play2048::kLeft]);
  EXPECT_FALSE(mask[play2048::kUp]);
  EXPECT_TRUE(mask[play2048::kRight]);
  EXPECT_THROW(play2048::transition(core, play2048::kLeft, RngKey()), IllegalAction);
  // The spawn refills the only empty cell; the episode ends iff no direction moves.
  const Outcome o = play2048::transition(core, play2048::kRight, RngKey(1));
  play2048::legal_actions(core, mask);
  const bool any = mask[0] || mask[1] || mask[2] || mask[3];
  EXPECT_EQ(o.terminated, !any);
}

TEST(Play2048, ObservationOneHot) {
  play2048::Core core;
  core.board[0] = 1;
  core.board[5] = 11;
  std::array<float, play2048::kObservationSize> obs;
  play2048::observe(core, 0, obs);
  float total = 0;
  for (float v : obs) total += v;
  EXPECT_EQ(total, 2.0f);
  EXPECT_EQ(obs[0 * 31 + 0], 1.0f);
  EXPECT_EQ(obs[5 * 31 + 10], 1.0f);
}
