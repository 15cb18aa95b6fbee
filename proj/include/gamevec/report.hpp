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

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "gamevec/bench.hpp"
#include "gamevec/env.hpp"
#include "gamevec/evaluation.hpp"

namespace gamevec {

// Game picture followed by a footer line:
//   player: <p> step: <n> status: running|terminated|truncated rewards: <r0> <r1>
std::string render_text(const EnvState& state);

// CSV with a header row and one row per result. Reals are written in the
// shortest form that parses back to the same double. Throws IoError.
void write_bench_csv(std::span<const BenchResult> results, const std::filesystem::path& path);
void write_match_csv(std::span<const MatchResult> results, const std::filesystem::path& path);

// Long format: game_id,batch_size,threads,metric,value with one row per
// numeric field of each result.
void write_bench_long_csv(std::span<const BenchResult> results, const std::filesystem::path& path);

// Inverse of write_bench_csv. trajectory_digest is not stored and reads as 0.
// Throws IoError on an unreadable or malformed file.
std::vector<BenchResult> read_bench_csv(const std::filesystem::path& path);
std::vector<MatchResult> read_match_csv(const std::filesystem::path& path);

// Shortest round-trip decimal form of a double.
std::string format_real(double value);

}  // namespace gamevec
