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

#include "gamevec/rng.hpp"

namespace gamevec {

// Result of one rule transition, indexed by game role (not by player).
struct Outcome {
  bool terminated = false;
  std::array<float, 2> role_rewards{0.0f, 0.0f};

  static Outcome win_for(int role, float payoff = 1.0f) {
    Outcome o;
    o.terminated = true;
    o.role_rewards[role] = payoff;
    o.role_rewards[1 - role] = -payoff;
    return o;
  }
  static Outcome draw() {
    Outcome o;
    o.terminated = true;
    return o;
  }
};

// Order-sensitive 64-bit state fingerprint accumulator.
class Hasher {
 public:
  void add(std::uint64_t v) { h_ = RngKey::mix(h_ ^ (v + 0x9e3779b97f4a7c15ULL + (h_ << 6))); }

  template <class T>
  void add_all(std::span<const T> values) {
    add(values.size());
    for (const T& v : values) add(static_cast<std::uint64_t>(v));
  }

  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0x84222325cbf29ce4ULL;
};

inline constexpr std::int8_t kEmpty = -1;

}  // namespace gamevec
