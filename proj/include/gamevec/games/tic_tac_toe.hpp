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


#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "gamevec/games/common.hpp"

namespace gamevec::tic_tac_toe {

inline constexpr int kNumCells = 9;
inline constexpr int kNumActions = 9;
inline constexpr int kObservationSize = 3 * 3 * 2;

// Role 0 marks X and moves first.
struct Core {
  std::array<std::int8_t, kNumCells> board{kEmpty, kEmpty, kEmpty, kEmpty, kEmpty,
                                           kEmpty, kEmpty, kEmpty, kEmpty};
  std::int8_t role_to_move = 0;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;
};

Core initial(RngKey key);
int role_to_move(const Core& core);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
// Requires a legal action.
Outcome apply(Core& core, int action, RngKey key);
// Validating transition; throws IllegalAction.
Outcome transition(Core& core, int action, RngKey key = RngKey());
bool has_line(const Core& core, int role);
// Planes (HWC): marks of `role`, marks of the other role.
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::tic_tac_toe
