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


#include "gamevec/games/kuhn_poker.hpp"

#include <algorithm>

#include "gamevec/errors.hpp"

namespace gamevec::kuhn_poker {
namespace {

bool facing_bet(const Core& core) {
  return core.history_length > 0 && core.history[core.history_length - 1] == kBet;
}

Outcome showdown(const Core& core) {
  const int winner = core.hands[0] > core.hands[1] ? 0 : 1;
  return Outcome::win_for(winner, core.committed[1 - winner]);
}

constexpr char kCardNames[] = {'J', 'Q', 'K'};

}  // namespace

void Core::hash_into(Hasher& h) const {
  h.add_all<std::int8_t>(hands);
  h.add_all<std::int8_t>(history);
  h.add(history_length);
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
  const int first = static_cast<int>(a.uniform_int(3));
  int second = static_cast<int>(b.uniform_int(2));
  if (second >= first) ++second;
  return deal(first, second);
}

int role_to_move(const Core& core) { return core.role_to_move; }

void legal_actions(const Core& core, std::span<std::uint8_t> mask) {
  const bool bet = facing_bet(core);
  mask[kCall] = bet;
  mask[kFold] = bet;
  mask[kBet] = !bet;
  mask[kCheck] = !bet;
}

Outcome apply(Core& core, int action, RngKey) {
  const int me = core.role_to_move;
  const bool second_check = core.history_length == 1 && core.history[0] == kCheck;
  core.history[core.history_length++] = static_cast<std::int8_t>(action);
  core.role_to_move = static_cast<std::int8_t>(1 - me);
  switch (action) {
    case kCheck:
      if (second_check) return showdown(core);
      return {};
    case kBet:
      ++core.committed[me];
      return {};
    case kCall:
      ++core.committed[me];
      return showdown(core);
    default:  // kFold
      return Outcome::win_for(1 - me, core.committed[me]);
  }
}

Outcome transition(Core& core, int action, RngKey key) {
  std::array<std::uint8_t, kNumActions> mask{};
  if (action >= 0 && action < kNumActions) legal_actions(core, mask);
  if (action < 0 || action >= kNumActions || !mask[action]) {
    throw IllegalAction("kuhn_poker: action " + std::to_string(action) + " is not legal here");
  }
  return apply(core, action, key);
}

void observe(const Core& core, int role, std::span<float> out) {
  std::fill(out.begin(), out.end(), 0.0f);
  out[core.hands[role]] = 1.0f;
  out[3 + (core.committed[role] - 1)] = 1.0f;
  out[5 + (core.committed[1 - role] - 1)] = 1.0f;
}

std::string render(const Core& core) {
  static constexpr const char* kNames[] = {"call", "bet", "fold", "check"};
  std::string s = "hands: ";
  s += kCardNames[core.hands[0]];
  s += ' ';
  s += kCardNames[core.hands[1]];
  s += "\npot: " + std::to_string(core.committed[0] + core.committed[1]) + " (" +
       std::to_string(core.committed[0]) + " + " + std::to_string(core.committed[1]) + ")";
  s += "\nhistory:";
  for (int i = 0; i < core.history_length; ++i) s += std::string(" ") + kNames[core.history[i]];
  s += '\n';
  return s;
}

}  // namespace gamevec::kuhn_poker
