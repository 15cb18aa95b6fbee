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


#include "gamevec/rng.hpp"

#include <bit>
#include <stdexcept>

namespace gamevec {

RngKey RngKey::fold_in(std::uint64_t data) const {
  const std::uint64_t d = mix(data * 0x9e3779b97f4a7c15ULL + 0x6a09e667f3bcc909ULL);
  const std::uint64_t h = mix(hi_ ^ d ^ std::rotl(lo_, 23));
  const std::uint64_t l = mix(lo_ + std::rotl(d, 41) + 0xbb67ae8584caa73bULL) ^ h;
  return RngKey(h, l, 0);
}

std::vector<RngKey> RngKey::split(std::size_t n) const {
  std::vector<RngKey> keys;
  keys.reserve(n);
  for (std::size_t i = 0; i < n; ++i) keys.push_back(fold_in(i));
  return keys;
}

std::uint64_t RngKey::bits(std::uint64_t counter) const {
  return mix(hi_ ^ mix(lo_ + (counter + 1) * 0xd1b54a32d192ed03ULL));
}

std::uint32_t RngKey::uniform_int(std::uint32_t n) const {
  if (n == 0) throw std::invalid_argument("uniform_int: n must be positive");
  // Lemire's multiply-shift with rejection; each retry reads the next word.
  const std::uint32_t threshold = static_cast<std::uint32_t>(-n) % n;
  for (std::uint64_t counter = 0;; ++counter) {
    const std::uint64_t word = bits(counter);
    for (int half = 0; half < 2; ++half) {
      const std::uint32_t x = static_cast<std::uint32_t>(word >> (32 * half));
      const std::uint64_t m = static_cast<std::uint64_t>(x) * n;
      if (static_cast<std::uint32_t>(m) >= threshold) {
        return static_cast<std::uint32_t>(m >> 32);
      }
    }
  }
}

double RngKey::uniform() const {
  return static_cast<double>(bits(0) >> 11) * 0x1.0p-53;
}

std::size_t RngKey::categorical(std::span<const double> weights) const {
  double total = 0.0;
  for (double w : weights) total += w;
  if (weights.empty() || !(total > 0.0)) {
    throw std::invalid_argument("categorical: weights must have positive sum");
  }
  const double u = uniform() * total;
  double acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last = i;
    if (u < acc) return i;
  }
  return last;
}

}  // namespace gamevec
