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


#include "gamevec/games/othello.hpp"

#include <gtest/gtest.h>

#include "gamevec/errors.hpp"

using namespace gamevec;

namespace {

// Array-based reference: cell values 0 empty, 1 black (role 0), 2 white.
struct Oracle {
  int cell[64] = {};

  Oracle() {
    cell[27] = 2;
    cell[36] = 2;
    cell[28] = 1;
    cell[35] = 1;
  }

  int flip_count(int at, int who, bool apply) {
    if (cell[at] != 0) return 0;
    const int opp = 3 - who;
    int total = 0;
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        int r = at / 8 + dr;
        int c = at % 8 + dc;
        int run = 0;
        while (r >= 0 && r < 8 && c >= 0 && c < 8 && cell[r * 8 + c] == opp) {
          r += dr;
          c += dc;
          ++run;
        }
        if (run > 0 && r >= 0 && r < 8 && c >= 0 && c < 8 && cell[r * 8 + c] == who) {
          total += run;
          if (apply) {
            for (int k = 1; k <= run; ++k) cell[(at / 8 + dr * k) * 8 + at % 8 + dc * k] = who;
          }
        }
      }
    }
    if (apply && total > 0) cell[at] = who;
    return total;
  }

  int count(int who) const {
    int n = 0;
    for (int v : cell) n += v == who;
    return n;
  }
};

othello::Core from_cells(const std::vector<int>& black, const std::vector<int>& white) {
  othello::Core core;
  core.discs = {0, 0};
  for (int b : black) core.discs[0] |= 1ULL << b;
  for (int w : white) core.discs[1] |= 1ULL << w;
  return core;
}

}  // namespace

TEST(Othello, OpeningHasFourPlacements) {
  othello::Core core;
  std::array<std::uint8_t, 65> mask;
  othello::legal_actions(core, mask);
  Oracle oracle;
  int legal = 0;
  for (int a = 0; a < 64; ++a) {
    EXPECT_EQ(mask[a] != 0, oracle.flip_count(a, 1, false) > 0) << a;
    legal += mask[a];
  }
  EXPECT_EQ(legal, 4);
  EXPECT_FALSE(mask[othello::kPassAction]);
}

TEST(Othello, RandomGamesAgreeWithOracle) {
  for (int game = 0; game < 1000; ++game) {
    othello::Core core;
    Oracle oracle;
    int passes = 0;
    const RngKey key = RngKey(23).fold_in(game);
    for (int ply = 0;; ++ply) {
      const int role = othello::role_to_move(core);
      std::array<std::uint8_t, 65> mask;
      othello::legal_actions(core, mask);
      std::vector<int> legal;
      for (int a = 0; a < 64; ++a) {
        const bool oracle_legal = oracle.flip_count(a, role + 1, false) > 0;
        ASSERT_EQ(mask[a] != 0, oracle_legal) << "game " << game << " ply " << ply;
        if (oracle_legal) legal.push_back(a);
      }
      ASSERT_EQ(mask[othello::kPassAction] != 0, legal.empty());
      int action = othello::kPassAction;
      if (!legal.empty()) {
        action = legal[key.fold_in(ply).uniform_int(static_cast<std::uint32_t>(legal.size()))];
        oracle.flip_count(action, role + 1, true);
        passes = 0;
      } else {
        ++passes;
      }
      const Outcome o = othello::transition(core, action);
      for (int a = 0; a < 64; ++a) {
        const int v = (core.discs[0] >> a & 1) ? 1 : (core.discs[1] >> a & 1) ? 2 : 0;
        ASSERT_EQ(v, oracle.cell[a]);
      }
      const bool full = oracle.count(0) == 0;
      ASSERT_EQ(o.terminated, full || passes == 2);
      if (o.terminated) {
        const int b = oracle.count(1);
        const int w = oracle.count(2);
        const float expect = b > w ? 1.0f : (b < w ? -1.0f : 0.0f);
        ASSERT_EQ(o.role_rewards[0], expect);
        ASSERT_EQ(o.role_rewards[1], -expect);
        break;
      }
    }
  }
}

TEST(Othello, DoublePassMajorityWins) {
  // No black disc touches a white one, so neither side can place.
  othello::Core core = from_cells({0, 1, 8}, {62, 63});
  std::array<std::uint8_t, 65> mask;
  othello::legal_actions(core, mask);
  for (int a = 0; a < 64; ++a) ASSERT_FALSE(mask[a]);
  ASSERT_TRUE(mask[othello::kPassAction]);
  EXPECT_FALSE(othello::transition(core, othello::kPassAction).terminated);
  const Outcome o = othello::transition(core, othello::kPassAction);
  EXPECT_TRUE(o.terminated);
  EXPECT_EQ(o.role_rewards[0], 1.0f);
  EXPECT_EQ(o.role_rewards[1], -1.0f);
}

TEST(Othello, EqualDiscsDraw) {
  othello::Core core = from_cells({0, 1}, {62, 63});
  othello::transition(core, othello::kPassAction);
  const Outcome o = othello::transition(core, othello::kPassAction);
  EXPECT_TRUE(o.terminated);
  EXPECT_EQ(o.role_rewards[0], 0.0f);
  EXPECT_EQ(o.role_rewards[1], 0.0f);
}

TEST(Othello, PassIsIllegalWhenAPlacementExists) {
  othello::Core core;
  EXPECT_THROW(othello::transition(core, othello::kPassAction), IllegalAction);
  EXPECT_THROW(othello::transition(core, 0), IllegalAction);
}
