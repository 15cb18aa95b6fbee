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


#include "gamevec/games/connect_four.hpp"

#include <algorithm>

#include "gamevec/errors.hpp"

namespace gamevec::connect_four {

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(board);
  h.add_all<std::int8_t>(heights);
  h.add(role_to_move);
}

Core initial(RngKey) { return Core{}; }

int role_to_move(const Core& core) { return core.role_to_move; }

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  for (int c = 0; c < kCols; ++c) mask[c] = core.heights[c] < kRows;
}

bool completes_line(const Core& core, int row, int col) {
  const int who = core.board[row * kCols + col];
  if (who == kEmpty) return false;
  constexpr int kDirs[4][2] = {{0, 1}, {1, 0}, {1, 1}, {1, -1}};
  for (const auto& d : kDirs) {
    int run = 1;
    for (int sign : {1, -1}) {
      int r = row + sign * d[0];
      int c = col + sign * d[1];
      while (r >= 0 && r < kRows && c >= 0 && c < kCols && core.board[r * kCols + c] == who) {
        ++run;
        r += sign * d[0];
        c += sign * d[1];
      }
    }
    if (run >= 4) return true;
  }
  return false;
}

Outcome apply(Core& core, int action, RngKey) {
  const int me = core.role_to_move;
  const int row = kRows - 1 - core.heights[action];
  core.board[row * kCols + action] = static_cast<std::int8_t>(me);
  ++core.heights[action];
  core.role_to_move = static_cast<std::int8_t>(1 - me);
  if (completes_line(core, row, action)) return Outcome::win_for(me);
  if (std::all_of(core.heights.begin(), core.heights.end(), [](auto h) { return h == kRows; })) {
    return Outcome::draw();
  }
  return {};
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions || core.heights[action] >= kRows) {
    throw IllegalAction("connect_four: column " + std::to_string(action) + " is full or invalid");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int role, std::span<float> out) {
  std::fill(out.begin(), out.end(), 0.0f);
  for (int i = 0; i < kRows * kCols; ++i) {
    if (core.board[i] == kEmpty) continue;
    out[i * 2 + (core.board[i] == role ? 0 : 1)] = 1.0f;
  }
}

std::string render(const Core& core) {
  std::string s;
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      const int v = core.board[r * kCols + c];
      s += v == kEmpty ? '.' : (v == 0 ? 'X' : 'O');
    }
    s += '\n';
  }
  s += "0123456\n";
  return s;
}

}  // namespace gamevec::connect_four
