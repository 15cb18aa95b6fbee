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
#include <vector>

namespace gamevec {

// Splittable, counter-based random key. A key is an immutable value: drawing
// from it does not advance it. Independent streams are obtained with split()
// or fold_in(); reusing a key reproduces the same draws.
class RngKey {
 public:
  constexpr RngKey() : RngKey(0) {}
  explicit constexpr RngKey(std::uint64_t seed)
      : hi_(mix(seed ^ 0x243f6a8885a308d3ULL)), lo_(mix(seed + 0x13198a2e03707344ULL)) {}

  // Child key number `data`. Children for distinct data are independent.
  RngKey fold_in(std::uint64_t data) const;

  // The two children fold_in(0) and fold_in(1).
  std::array<RngKey, 2> split() const { return {fold_in(0), fold_in(1)}; }

  // Children fold_in(0) .. fold_in(n - 1).
  std::vector<RngKey> split(std::size_t n) const;

  // 64 random bits; `counter` selects the word within this key's stream.
  std::uint64_t bits(std::uint64_t counter = 0) const;

  // Uniform integer in [0, n). n must be positive.
  std::uint32_t uniform_int(std::uint32_t n) const;

  // Uniform real in [0, 1).
  double uniform() const;

  // Index drawn with probability proportional to weights[i] (nonnegative,
  // positive sum).
  std::size_t categorical(std::span<const double> weights) const;

  std::uint64_t hi() const { return hi_; }
  std::uint64_t lo() const { return lo_; }

  friend bool operator==(const RngKey&, const RngKey&) = default;

  // splitmix64 finalizer.
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  constexpr RngKey(std::uint64_t hi, std::uint64_t lo, int) : hi_(hi), lo_(lo) {}

  std::uint64_t hi_;
  std::uint64_t lo_;
};

}  // namespace gamevec
