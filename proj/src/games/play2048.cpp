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

#include <algorithm>
#include <cstdio>

#include "gamevec/errors.hpp"

namespace gamevec::play2048 {
namespace {

// Cell indices of line `i` for `direction`, ordered from the movement side.
constexpr int line_cell(int direction, int line, int k) {
  switch (direction) {
    case kLeft:
      return line * 4 + k;
    case kRight:
      return line * 4 + (3 - k);
    case kUp:
      return k * 4 + line;
    default:
      return (3 - k) * 4 + line;
  }
}

bool any_move(const Board& board) {
  for (int d = 0; d < kNumActions; ++d) {
    if (slide(board, d).moved) return true;
  }
  return false;
}

}  // namespace

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(board);
  h.add(score);
}

Slide slide(const Board& board, int direction) {
  Slide result{board, 0, false};
  for (int line = 0; line < 4; ++line) {
    std::array<std::int8_t, 4> tiles{};
    int n = 0;
    for (int k = 0; k < 4; ++k) {
      const std::int8_t v = board[line_cell(direction, line, k)];
      if (v != 0) tiles[n++] = v;
    }
    std::array<std::int8_t, 4> out{};
    int w = 0;
    for (int i = 0; i < n; ++i) {
      if (i + 1 < n && tiles[i] == tiles[i + 1]) {
        out[w++] = static_cast<std::int8_t>(tiles[i] + 1);
        result.reward += 1u << (tiles[i] + 1);
        ++i;
      } else {
        out[w++] = tiles[i];
      }
    }
    for (int k = 0; k < 4; ++k) {
      const int cell = line_cell(direction, line, k);
      if (result.board[cell] != out[k]) result.moved = true;
      result.board[cell] = out[k];
    }
  }
  return result;
}

void spawn(Board& board, RngKey key) {
  std::array<int, kNumCells> empty;
  int n = 0;
  for (int i = 0; i < kNumCells; ++i) {
    if (board[i] == 0) empty[n++] = i;
  }
  if (n == 0) return;
  const auto [cell_key, value_key] = key.split();
  const int cell = empty[cell_key.uniform_int(static_cast<std::uint32_t>(n))];
  board[cell] = value_key.uniform() < 0.9 ? 1 : 2;
}

Core initial(RngKey key) {
  Core core;
  const auto [first, second] = key.split();
  spawn(core.board, first);
  spawn(core.board, second);
  return core;
}

int role_to_move(const Core&) { return 0; }

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  for (int d = 0; d < kNumActions; ++d) mask[d] = slide(core.board, d).moved;
}

Outcome apply(Core& core, int action, RngKey key) {
  const Slide s = slide(core.board, action);
  core.board = s.board;
  core.score += s.reward;
  spawn(core.board, key);
  Outcome o;
  o.role_rewards[0] = static_cast<float>(s.reward);
  o.terminated = !any_move(core.board);
  return o;
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions || !slide(core.board, action).moved) {
    throw IllegalAction("2048: direction " + std::to_string(action) + " moves nothing");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int, std::span<float> out) {
  std::fill(out.begin(), out.end(), 0.0f);
  for (int i = 0; i < kNumCells; ++i) {
    const int e = core.board[i];
    if (e > 0) out[i * kMaxExponent + (e - 1)] = 1.0f;
  }
}

std::string render(const Core& core) {
  std::string s;
  char buf[32];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const int e = core.board[r * 4 + c];
      if (e == 0) {
        std::snprintf(buf, sizeof buf, "%6s", ".");
      } else {
        std::snprintf(buf, sizeof buf, "%6llu", 1ULL << e);
      }
      s += buf;
    }
    s += '\n';
  }
  s += "score: " + std::to_string(core.score) + '\n';
  return s;
}

}  // namespace gamevec::play2048
