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


#include "gamevec/games/leduc_holdem.hpp"

#include <algorithm>

#include "gamevec/errors.hpp"

namespace gamevec::leduc_holdem {
namespace {

constexpr char kRankNames[] = {'J', 'Q', 'K'};

void reveal_public_card(Core& core, RngKey key) {
  std::array<int, 4> rest;
  int n = 0;
  for (int c = 0; c < 6; ++c) {
    if (c != core.hands[0] && c != core.hands[1]) rest[n++] = c;
  }
  core.public_card = static_cast<std::int8_t>(rest[key.uniform_int(4)]);
}

}  // namespace

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(hands);
  h.add(static_cast<std::uint64_t>(public_card + 1));
  h.add(round);
  h.add(raises_this_round);
  h.add(actions_this_round);
  h.add_all<std::int8_t>(committed);
  h.add(role_to_move);
}

Core deal(int card0, int card1) {
  Core core;
  core.hands = {static_cast<std::int8_t>(card0), static_cast<std::int8_t>(card1)};
  return core;
}

Core initial(RngKey key) {
  const auto [a, b] = key.split();
  const int first = static_cast<int>(a.uniform_int(6));
  int second = static_cast<int>(b.uniform_int(5));
  if (second >= first) ++second;
  return deal(first, second);
}

int role_to_move(const Core& core) { return core.role_to_move; }

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  mask[kCall] = 1;
  mask[kRaise] = core.raises_this_round < kMaxRaisesPerRound;
  mask[kFold] = 1;
}

int showdown_winner(const Core& core) {
  const int pub = rank_of(core.public_card);
  const int r0 = rank_of(core.hands[0]);
  const int r1 = rank_of(core.hands[1]);
  const bool pair0 = r0 == pub;
  const bool pair1 = r1 == pub;
  if (pair0 != pair1) return pair0 ? 1 : -1;
  if (r0 == r1) return 0;
  return r0 > r1 ? 1 : -1;
}

Outcome apply(Core& core, int action, RngKey key) {
  const int me = core.role_to_move;
  const int opp = 1 - me;
  if (action == kFold) return Outcome::win_for(opp, core.committed[me]);
  const bool closes = action == kCall && core.actions_this_round > 0;
  if (action == kRaise) {
    const int size = core.round == 1 ? 2 : 4;
    core.committed[me] = static_cast<std::int8_t>(core.committed[opp] + size);
    ++core.raises_this_round;
  } else {
    core.committed[me] = core.committed[opp];
  }
  ++core.actions_this_round;
  core.role_to_move = static_cast<std::int8_t>(opp);
  if (!closes) return {};
  if (core.round == 1) {
    reveal_public_card(core, key);
    core.round = 2;
    core.raises_this_round = 0;
    core.actions_this_round = 0;
    core.role_to_move = 0;
    return {};
  }
  const int result = showdown_winner(core);
  if (result == 0) return Outcome::draw();
  return Outcome::win_for(result > 0 ? 0 : 1, core.committed[0]);
}

Outcome transition(Core& core, int action, RngKey key) {
  if (action < 0 || action >= kNumActions ||
      (action == kRaise && core.raises_this_round >= kMaxRaisesPerRound)) {
    throw IllegalAction("leduc_holdem: action " + std::to_string(action) + " is not legal here");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int role, std::span<float> out) {
  std::fill(out.begin(), out.end(), 0.0f);
  out[rank_of(core.hands[role])] = 1.0f;
  if (core.public_card >= 0) out[3 + rank_of(core.public_card)] = 1.0f;
  out[6 + core.committed[role]] = 1.0f;
  out[20 + core.committed[1 - role]] = 1.0f;
}

std::string render(const Core& core) {
  std::string s = "hands: ";
  s += kRankNames[rank_of(core.hands[0])];
  s += ' ';
  s += kRankNames[rank_of(core.hands[1])];
  s += "\npublic: ";
  s += core.public_card >= 0 ? kRankNames[rank_of(core.public_card)] : '-';
  s += "\nround: " + std::to_string(core.round) +
       "  pot: " + std::to_string(core.committed[0] + core.committed[1]) + " (" +
       std::to_string(core.committed[0]) + " + " + std::to_string(core.committed[1]) + ")\n";
  return s;
}

}  // namespace gamevec::leduc_holdem
