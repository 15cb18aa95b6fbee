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

#include <algorithm>
#include <bit>

#include "gamevec/errors.hpp"

namespace gamevec::othello {
namespace {

constexpr std::uint64_t kFileA = 0x0101010101010101ULL;
constexpr std::uint64_t kFileH = 0x8080808080808080ULL;

struct Direction {
  int shift;  // positive: toward higher bit indices
  std::uint64_t keep;
};

// Masks drop bits that wrapped around a board edge.
constexpr std::array<Direction, 8> kDirections = {{
    {1, ~kFileA},    // east
    {-1, ~kFileH},   // west
    {8, ~0ULL},      // south
    {-8, ~0ULL},     // north
    {9, ~kFileA},    // south-east
    {7, ~kFileH},    // south-west
    {-7, ~kFileA},   // north-east
    {-9, ~kFileH},   // north-west
}};

constexpr std::uint64_t shift(std::uint64_t b, const Direction& d) {
  return (d.shift > 0 ? b << d.shift : b >> -d.shift) & d.keep;
}

}  // namespace

void Core::hash_into(Hasher& h) const {
  h.add(discs[0]);
  h.add(discs[1]);
  h.add(role_to_move);
  h.add(consecutive_passes);
}

Core initial(RngKey) { return Core{}; }

int role_to_move(const Core& core) { return core.role_to_move; }

std::uint64_t placements(const Core& core, int role) {
  const std::uint64_t me = core.discs[role];
  const std::uint64_t opp = core.discs[1 - role];
  const std::uint64_t empty = ~(me | opp);
  std::uint64_t moves = 0;
  for (const auto& d : kDirections) {
    std::uint64_t run = shift(me, d) & opp;
    for (int i = 0; i < 5; ++i) run |= shift(run, d) & opp;
    moves |= shift(run, d) & empty;
  }
  return moves;
}

std::uint64_t flips(const Core& core, int role, int cell) {
  const std::uint64_t me = core.discs[role];
  const std::uint64_t opp = core.discs[1 - role];
  const std::uint64_t placed = 1ULL << cell;
  if ((me | opp) & placed) return 0;
  std::uint64_t flipped = 0;
  for (const auto& d : kDirections) {
    std::uint64_t line = 0;
    std::uint64_t x = shift(placed, d);
    while (x & opp) {
      line |= x;
      x = shift(x, d);
    }
    if (x & me) flipped |= line;
  }
  return flipped;
}

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  const std::uint64_t moves = placements(core, core.role_to_move);
  for (int i = 0; i < kNumCells; ++i) mask[i] = (moves >> i) & 1;
  mask[kPassAction] = moves == 0;
}

int disc_count(const Core& core, int role) { return std::popcount(core.discs[role]); }

namespace {

Outcome final_outcome(const Core& core) {
  const int black = disc_count(core, 0);
  const int white = disc_count(core, 1);
  if (black == white) return Outcome::draw();
  return Outcome::win_for(black > white ? 0 : 1);
}

}  // namespace

Outcome apply(Core& core, int action, RngKey) {
  const int me = core.role_to_move;
  core.role_to_move = static_cast<std::int8_t>(1 - me);
  if (action == kPassAction) {
    if (++core.consecutive_passes >= 2) return final_outcome(core);
    return {};
  }
  const std::uint64_t flipped = flips(core, me, action);
  core.discs[me] |= flipped | (1ULL << action);
  core.discs[1 - me] &= ~flipped;
  core.consecutive_passes = 0;
  if ((core.discs[0] | core.discs[1]) == ~0ULL) return final_outcome(core);
  return {};
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions) throw IllegalAction("othello: action out of range");
  const std::uint64_t moves = placements(core, core.role_to_move);
  if (action == kPassAction) {
    if (moves != 0) throw IllegalAction("othello: pass while a placement exists");
  } else if (((moves >> action) & 1) == 0) {
    throw IllegalAction("othello: placement at " + std::to_string(action) + " flips nothing");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int role, std::span<float> out) {
  std::fill(out.begin(), out.end(), 0.0f);
  for (int i = 0; i < kNumCells; ++i) {
    if ((core.discs[role] >> i) & 1) out[i * 2] = 1.0f;
    if ((core.discs[1 - role] >> i) & 1) out[i * 2 + 1] = 1.0f;
  }
}

std::string render(const Core& core) {
  std::string s;
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      const int i = r * 8 + c;
      s += ((core.discs[0] >> i) & 1) ? 'X' : ((core.discs[1] >> i) & 1) ? 'O' : '.';
    }
    s += '\n';
  }
  return s;
}

}  // namespace gamevec::othello
