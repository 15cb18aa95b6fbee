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


#include "gamevec/games/tic_tac_toe.hpp"

#include <algorithm>

#include "gamevec/errors.hpp"

namespace gamevec::tic_tac_toe {
namespace {

constexpr std::array<std::array<int, 3>, 8> kLines = {{
    {0, 1, 2}, {3, 4, 5}, {6, 7, 8},  // rows
    {0, 3, 6}, {1, 4, 7}, {2, 5, 8},  // columns
    {0, 4, 8}, {2, 4, 6},             // diagonals
}};

}  // namespace

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(board);
  h.add(role_to_move);
}

Core initial(RngKey) { return Core{}; }

int role_to_move(const Core& core) { return core.role_to_move; }

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  for (int i = 0; i < kNumCells; ++i) mask[i] = core.board[i] == kEmpty;
}

bool has_line(const Core& core, int role) {
  return std::any_of(kLines.begin(), kLines.end(), [&](const auto& line) {
    return core.board[line[0]] == role && core.board[line[1]] == role &&
           core.board[line[2]] == role;
  });
}

Outcome apply(Core& core, int action, RngKey) {
  const int me = core.role_to_move;
  core.board[action] = static_cast<std::int8_t>(me);
  core.role_to_move = static_cast<std::int8_t>(1 - me);
  if (has_line(core, me)) return Outcome::win_for(me);
  if (std::none_of(core.board.begin(), core.board.end(), [](auto c) { return c == kEmpty; })) {
    return Outcome::draw();
  }
  return {};
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions || core.board[action] != kEmpty) {
    throw IllegalAction("tic_tac_toe: cell " + std::to_string(action) + " is not playable");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int role, std::span<float> out) {
  std::fill(out.begin(), out.end(), 0.0f);
  for (int i = 0; i < kNumCells; ++i) {
    if (core.board[i] == kEmpty) continue;
    out[i * 2 + (core.board[i] == role ? 0 : 1)] = 1.0f;
  }
}

std::string render(const Core& core) {
  std::string s;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const int v = core.board[r * 3 + c];
      s += v == kEmpty ? '.' : (v == 0 ? 'X' : 'O');
    }
    s += '\n';
  }
  return s;
}

}  // namespace gamevec::tic_tac_toe
