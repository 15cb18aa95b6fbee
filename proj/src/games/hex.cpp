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


#include "gamevec/games/hex.hpp"

#include <algorithm>

#include "gamevec/errors.hpp"

namespace gamevec::hex {
namespace {

constexpr int kNeighbourDr[6] = {-1, -1, 0, 0, 1, 1};
constexpr int kNeighbourDc[6] = {0, 1, -1, 1, -1, 0};

bool on_start_side(int role, int cell) {
  return role == 0 ? cell / kSize == 0 : cell % kSize == 0;
}
bool on_end_side(int role, int cell) {
  return role == 0 ? cell / kSize == kSize - 1 : cell % kSize == kSize - 1;
}

// Flood fill from `start` over stones of its colour; reports which sides the
// chain touches.
std::pair<bool, bool> chain_sides(const Core& core, int start) {
  const int role = core.board[start];
  std::array<bool, kNumCells> seen{};
  std::array<int, kNumCells> stack;
  int top = 0;
  stack[top++] = start;
  seen[start] = true;
  bool touches_start = false;
  bool touches_end = false;
  while (top > 0) {
    const int cell = stack[--top];
    touches_start |= on_start_side(role, cell);
    touches_end |= on_end_side(role, cell);
    const int r = cell / kSize;
    const int c = cell % kSize;
    for (int k = 0; k < 6; ++k) {
      const int nr = r + kNeighbourDr[k];
      const int nc = c + kNeighbourDc[k];
      if (nr < 0 || nr >= kSize || nc < 0 || nc >= kSize) continue;
      const int n = nr * kSize + nc;
      if (!seen[n] && core.board[n] == role) {
        seen[n] = true;
        stack[top++] = n;
      }
    }
  }
  return {touches_start, touches_end};
}

}  // namespace

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(board);
  h.add(role_to_move);
  h.add(static_cast<std::uint64_t>(move_number));
  h.add(swapped);
}

Core initial(RngKey) { return Core{}; }

int role_to_move(const Core& core) { return core.role_to_move; }

bool swap_legal(const Core& core) { return core.move_number == 1; }

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  for (int i = 0; i < kNumCells; ++i) mask[i] = core.board[i] == kEmpty;
  mask[kSwapAction] = swap_legal(core);
}

bool connected(const Core& core, int role) {
  for (int cell = 0; cell < kNumCells; ++cell) {
    if (core.board[cell] == role && on_start_side(role, cell)) {
      auto [start, end] = chain_sides(core, cell);
      if (end) return true;
    }
  }
  return false;
}

Outcome apply(Core& core, int action, RngKey) {
  const int me = core.role_to_move;
  ++core.move_number;
  core.role_to_move = static_cast<std::int8_t>(1 - me);
  if (action == kSwapAction) {
    // Reflect the opening stone across the main diagonal and take it over.
    const auto it = std::find(core.board.begin(), core.board.end(), std::int8_t{0});
    const int cell = static_cast<int>(it - core.board.begin());
    const int r = cell / kSize;
    const int c = cell % kSize;
    core.board[cell] = kEmpty;
    core.board[c * kSize + r] = 1;
    core.swapped = true;
    return {};
  }
  core.board[action] = static_cast<std::int8_t>(me);
  auto [start, end] = chain_sides(core, action);
  if (start && end) return Outcome::win_for(me);
  return {};
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions) throw IllegalAction("hex: action out of range");
  if (action == kSwapAction) {
    if (!swap_legal(core)) throw IllegalAction("hex: swap is only legal on the second move");
  } else if (core.board[action] != kEmpty) {
    throw IllegalAction("hex: cell " + std::to_string(action) + " is occupied");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int role, std::span<float> out) {
  const float colour = role == 0 ? 1.0f : 0.0f;
  const float swap = swap_legal(core) ? 1.0f : 0.0f;
  for (int i = 0; i < kNumCells; ++i) {
    out[i * 4 + 0] = core.board[i] == role ? 1.0f : 0.0f;
    out[i * 4 + 1] = core.board[i] == 1 - role ? 1.0f : 0.0f;
    out[i * 4 + 2] = colour;
    out[i * 4 + 3] = swap;
  }
}

std::string render(const Core& core) {
  std::string s;
  for (int r = 0; r < kSize; ++r) {
    s.append(static_cast<std::size_t>(r), ' ');
    for (int c = 0; c < kSize; ++c) {
      const int v = core.board[r * kSize + c];
      s += v == kEmpty ? '.' : (v == 0 ? 'X' : 'O');
      if (c + 1 < kSize) s += ' ';
    }
    s += '\n';
  }
  return s;
}

}  // namespace gamevec::hex
