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

#include <algorithm>

#include "gamevec/errors.hpp"

namespace gamevec::go {
namespace {

struct Neighbours {
  std::array<int, 4> points;
  int count;
};

constexpr std::array<Neighbours, kNumPoints> make_neighbours() {
  std::array<Neighbours, kNumPoints> table{};
  for (int p = 0; p < kNumPoints; ++p) {
    const int r = p / kSize;
    const int c = p % kSize;
    Neighbours n{{0, 0, 0, 0}, 0};
    if (r > 0) n.points[n.count++] = p - kSize;
    if (r < kSize - 1) n.points[n.count++] = p + kSize;
    if (c > 0) n.points[n.count++] = p - 1;
    if (c < kSize - 1) n.points[n.count++] = p + 1;
    table[p] = n;
  }
  return table;
}

constexpr auto kNeighbours = make_neighbours();

constexpr std::array<std::uint64_t, 2 * kNumPoints> make_zobrist() {
  std::array<std::uint64_t, 2 * kNumPoints> table{};
  for (int i = 0; i < 2 * kNumPoints; ++i) {
    table[i] = RngKey::mix(0x60bee2bee120fc15ULL + 0x9e3779b97f4a7c15ULL * (i + 1));
  }
  return table;
}

constexpr auto kZobrist = make_zobrist();

// Chains on a board with their distinct liberty counts and Zobrist signatures.
struct ChainTable {
  std::array<std::int8_t, kNumPoints> chain_of;
  std::array<int, kNumPoints> liberty_count;
  std::array<std::uint64_t, kNumPoints> signature;
  int num_chains = 0;

  explicit ChainTable(const Board& board) {
    chain_of.fill(-1);
    std::array<int, kNumPoints> liberty_stamp;
    liberty_stamp.fill(-1);
    std::array<int, kNumPoints> stack;
    for (int p = 0; p < kNumPoints; ++p) {
      if (board[p] == kEmpty || chain_of[p] >= 0) continue;
      const int id = num_chains++;
      const int colour = board[p];
      int libs = 0;
      std::uint64_t sig = 0;
      int top = 0;
      stack[top++] = p;
      chain_of[p] = static_cast<std::int8_t>(id);
      while (top > 0) {
        const int q = stack[--top];
        sig ^= kZobrist[q * 2 + colour];
        const auto& n = kNeighbours[q];
        for (int k = 0; k < n.count; ++k) {
          const int m = n.points[k];
          if (board[m] == kEmpty) {
            if (liberty_stamp[m] != id) {
              liberty_stamp[m] = id;
              ++libs;
            }
          } else if (board[m] == colour && chain_of[m] < 0) {
            chain_of[m] = static_cast<std::int8_t>(id);
            stack[top++] = m;
          }
        }
      }
      liberty_count[id] = libs;
      signature[id] = sig;
    }
  }
};

// Removes the chain containing `point`; returns the number of stones removed.
int remove_chain(Board& board, int point) {
  const int colour = board[point];
  std::array<int, kNumPoints> stack;
  int top = 0;
  int removed = 0;
  stack[top++] = point;
  board[point] = kEmpty;
  while (top > 0) {
    const int q = stack[--top];
    ++removed;
    const auto& n = kNeighbours[q];
    for (int k = 0; k < n.count; ++k) {
      const int m = n.points[k];
      if (board[m] == colour) {
        board[m] = kEmpty;
        stack[top++] = m;
      }
    }
  }
  return removed;
}

bool seen(const Core& core, std::uint64_t hash) {
  return std::binary_search(core.seen_positions.begin(), core.seen_positions.end(), hash);
}

void remember(Core& core, std::uint64_t hash) {
  auto it = std::lower_bound(core.seen_positions.begin(), core.seen_positions.end(), hash);
  if (it == core.seen_positions.end() || *it != hash) core.seen_positions.insert(it, hash);
}

void push_history(Core& core) {
  for (int t = kHistory - 2; t > 0; --t) core.past[t] = core.past[t - 1];
  core.past[0] = core.board;
}

Outcome final_outcome(const Core& core) {
  const Score s = tromp_taylor_score(core.board, core.rules.komi);
  if (s.black == s.white) return Outcome::draw();
  return Outcome::win_for(s.black > s.white ? 0 : 1);
}

}  // namespace

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(board);
  for (const auto& b : past) h.add_all<std::int8_t>(b);
  h.add(role_to_move);
  h.add(consecutive_passes);
  h.add(position_hash);
  h.add_all<std::uint64_t>(seen_positions);
}

std::uint64_t zobrist(int point, int role) { return kZobrist[point * 2 + role]; }

std::uint64_t position_hash(const Board& board) {
  std::uint64_t h = 0;
  for (int p = 0; p < kNumPoints; ++p) {
    if (board[p] != kEmpty) h ^= kZobrist[p * 2 + board[p]];
  }
  return h;
}

Core initial(RngKey, const Rules& rules) {
  Core core;
  core.rules = rules;
  return core;
}

int role_to_move(const Core& core) { return core.role_to_move; }

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  const int me = core.role_to_move;
  const ChainTable chains(core.board);
  for (int p = 0; p < kNumPoints; ++p) {
    mask[p] = 0;
    if (core.board[p] != kEmpty) continue;
    bool has_liberty = false;
    bool captures = false;
    std::uint64_t captured = 0;
    std::uint64_t own_adjacent = 0;
    std::array<int, 4> counted{-1, -1, -1, -1};
    const auto& n = kNeighbours[p];
    for (int k = 0; k < n.count; ++k) {
      const int m = n.points[k];
      if (core.board[m] == kEmpty) {
        has_liberty = true;
        continue;
      }
      const int id = chains.chain_of[m];
      if (std::find(counted.begin(), counted.end(), id) != counted.end()) continue;
      counted[k] = id;
      if (core.board[m] == me) {
        if (chains.liberty_count[id] > 1) has_liberty = true;
        own_adjacent ^= chains.signature[id];
      } else if (chains.liberty_count[id] == 1) {
        captures = true;
        captured ^= chains.signature[id];
      }
    }
    std::uint64_t next_hash;
    if (has_liberty || captures) {
      next_hash = core.position_hash ^ zobrist(p, me) ^ captured;
    } else if (core.rules.allow_suicide) {
      // Self-capture removes the placed stone and every adjacent own chain.
      next_hash = core.position_hash ^ own_adjacent;
    } else {
      continue;
    }
    mask[p] = !seen(core, next_hash);
  }
  mask[kPassAction] = 1;
}

Outcome apply(Core& core, int action, RngKey) {
  const int me = core.role_to_move;
  push_history(core);
  core.role_to_move = static_cast<std::int8_t>(1 - me);
  if (action == kPassAction) {
    if (++core.consecutive_passes >= 2) return final_outcome(core);
    return {};
  }
  core.consecutive_passes = 0;
  core.board[action] = static_cast<std::int8_t>(me);
  const auto& n = kNeighbours[action];
  for (int k = 0; k < n.count; ++k) {
    const int m = n.points[k];
    if (core.board[m] == 1 - me && liberties(core.board, m) == 0) remove_chain(core.board, m);
  }
  if (liberties(core.board, action) == 0) remove_chain(core.board, action);
  core.position_hash = position_hash(core.board);
  remember(core, core.position_hash);
  return {};
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions) throw IllegalAction("go: action out of range");
  std::array<std::uint8_t, kNumActions> mask;
  legal_actions(core, mask);
  if (!mask[action]) {
    throw IllegalAction("go: point " + std::to_string(action) +
                        " is occupied, suicide, or repeats a position");
  }
  return apply(core, action, key);
}

int liberties(const Board& board, int point) {
  const int colour = board[point];
  if (colour == kEmpty) return 0;
  std::array<bool, kNumPoints> visited{};
  std::array<bool, kNumPoints> liberty{};
  std::array<int, kNumPoints> stack;
  int top = 0;
  int count = 0;
  stack[top++] = point;
  visited[point] = true;
  while (top > 0) {
    const int q = stack[--top];
    const auto& n = kNeighbours[q];
    for (int k = 0; k < n.count; ++k) {
      const int m = n.points[k];
      if (board[m] == kEmpty) {
        if (!liberty[m]) {
          liberty[m] = true;
          ++count;
        }
      } else if (board[m] == colour && !visited[m]) {
        visited[m] = true;
        stack[top++] = m;
      }
    }
  }
  return count;
}

Score tromp_taylor_score(const Board& board, float komi) {
  Score score;
  score.white = komi;
  std::array<bool, kNumPoints> visited{};
  std::array<int, kNumPoints> stack;
  for (int p = 0; p < kNumPoints; ++p) {
    if (board[p] == 0) score.black += 1.0f;
    if (board[p] == 1) score.white += 1.0f;
    if (board[p] != kEmpty || visited[p]) continue;
    int top = 0;
    int region = 0;
    bool reaches[2] = {false, false};
    stack[top++] = p;
    visited[p] = true;
    while (top > 0) {
      const int q = stack[--top];
      ++region;
      const auto& n = kNeighbours[q];
      for (int k = 0; k < n.count; ++k) {
        const int m = n.points[k];
        if (board[m] == kEmpty) {
          if (!visited[m]) {
            visited[m] = true;
            stack[top++] = m;
          }
        } else {
          reaches[board[m]] = true;
        }
      }
    }
    if (reaches[0] && !reaches[1]) score.black += static_cast<float>(region);
    if (reaches[1] && !reaches[0]) score.white += static_cast<float>(region);
  }
  return score;
}

void observe(const Core& core, int role, std::span<float> out) {
  constexpr int kPlanes = 2 * kHistory + 1;
  const float colour = role == 0 ? 1.0f : 0.0f;
  for (int t = 0; t < kHistory; ++t) {
    const Board& b = t == 0 ? core.board : core.past[t - 1];
    for (int p = 0; p < kNumPoints; ++p) {
      out[p * kPlanes + 2 * t] = b[p] == role ? 1.0f : 0.0f;
      out[p * kPlanes + 2 * t + 1] = b[p] == 1 - role ? 1.0f : 0.0f;
    }
  }
  for (int p = 0; p < kNumPoints; ++p) out[p * kPlanes + 2 * kHistory] = colour;
}

std::string render(const Core& core) {
  std::string s;
  for (int r = 0; r < kSize; ++r) {
    for (int c = 0; c < kSize; ++c) {
      const int v = core.board[r * kSize + c];
      s += v == kEmpty ? '.' : (v == 0 ? 'X' : 'O');
    }
    s += '\n';
  }
  return s;
}

}  // namespace gamevec::go
