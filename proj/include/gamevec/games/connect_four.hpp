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

namespace gamevec::connect_four {

inline constexpr int kRows = 6;
inline constexpr int kCols = 7;
inline constexpr int kNumActions = kCols;
inline constexpr int kObservationSize = kRows * kCols * 2;

// Row 0 is the top row; discs settle at the highest free row index.
struct Core {
  std::array<std::int8_t, kRows * kCols> board = make_empty();
  std::array<std::int8_t, kCols> heights{};
  std::int8_t role_to_move = 0;

  friend bool operator==(const Core&, const Core&) = default;
  void hash_into(Hasher& h) const;

  static std::array<std::int8_t, kRows * kCols> make_empty() {
    std::array<std::int8_t, kRows * kCols> b;
    b.fill(kEmpty);
    return b;
  }
};

Core initial(RngKey key);
int role_to_move(const Core& core);
void legal_actions(const Core& core, std::span<std::uint8_t> mask);
Outcome apply(Core& core, int action, RngKey key);
Outcome transition(Core& core, int action, RngKey key = RngKey());
// True when the disc at (row, col) is part of a line of four.
bool completes_line(const Core& core, int row, int col);
void observe(const Core& core, int role, std::span<float> out);
std::string render(const Core& core);

}  // namespace gamevec::connect_four
