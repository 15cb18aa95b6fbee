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

namespace gamevec::hex {

inline constexpr int kSize = 11;
inline constexpr int kNumCells = kSize * kSize;
inline constexpr int kSwapAction = kNumCells;
inline constexpr int kNumActions = kNumCells + 1;
inline constexpr int kObservationSize = kNumCells * 4;

// Role 0 connects top to bottom (rows 0 and 10); role 1 connects left to
// right (columns 0 and 10). Cell index = row * 11 + col; neighbours follow the
// rhombus layout (r-1,c) (r-1,c+1) (r,c-1) (r,c+1) (r+1,c-1) (r+1,c).
struct Core {
  std::array<std::int8_t, kNumCells> board = make_empty();
  std::int8_t role_to_move = 0;
  std::int16_t move_number = 0;
  bool swapped = false;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;

  static std::array<std::int8_t, kNumCells> make_empty() {
    std::array<std::int8_t, kNumCells> b;
    b.fill(kEmpty);
    return b;
  }
};

Core initial(RngKey key);
int role_to_move(const Core& core);
bool swap_legal(const Core& core);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key = RngKey());
// Whether `role` has a chain joining its two sides.
bool connected(const Core& core, int role);
// Planes: my stones, opponent stones, colour (1 for role 0), swap legal.
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::hex
