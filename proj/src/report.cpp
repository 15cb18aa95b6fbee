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


#include "gamevec/report.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>
#include <variant>

#include "gamevec/errors.hpp"

namespace gamevec {

namespace {

constexpr const char* kBenchHeader =
    "game_id,batch_size,total_steps,seed,threads,wall_seconds,samples_per_second,"
    "episodes_completed";
constexpr const char* kMatchHeader = "game_id,agent_a,agent_b,wins_a,wins_b,draws";

const char* status_of(const EnvState& s) {
  if (s.terminated) return "terminated";
  if (s.truncated) return "truncated";
  return "running";
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

template <typename T>
T parse_number(const std::string& text, const std::filesystem::path& path) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw IoError("malformed number '" + text + "' in " + path.string());
  }
  return value;
}

std::vector<std::vector<std::string>> read_rows(const std::filesystem::path& path,
                                                const std::string& header, std::size_t width) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw IoError("unexpected header in " + path.string());
  }
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto fields = split_row(line);
    if (fields.size() != width) throw IoError("wrong field count in " + path.string());
    rows.push_back(std::move(fields));
  }
  return rows;
}

}  // namespace

std::string format_real(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string render_text(const EnvState& state) {
  std::string text = std::visit([](const auto& core) { return render(core); }, state.core);
  if (!text.empty() && text.back() != '\n') text += '\n';
  text += "player: " + std::to_string(state.current_player) +
          " step: " + std::to_string(state.step_count) + " status: " + status_of(state) +
          " rewards:";
  for (float r : state.rewards) text += " " + format_real(r);
  text += '\n';
  return text;
}

void write_bench_csv(std::span<const BenchResult> results, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << kBenchHeader << '\n';
  for (const auto& r : results) {
    out << game_name(r.game) << ',' << r.batch_size << ',' << r.total_steps << ',' << r.seed << ','
        << r.threads << ',' << format_real(r.wall_seconds) << ','
        << format_real(r.samples_per_second) << ',' << r.episodes_completed << '\n';
  }
  finish(out, path);
}

void write_bench_long_csv(std::span<const BenchResult> results,
                          const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << "game_id,batch_size,threads,metric,value\n";
  for (const auto& r : results) {
    const auto prefix = std::string(game_name(r.game)) + ',' + std::to_string(r.batch_size) +
                        ',' + std::to_string(r.threads) + ',';
    out << prefix << "total_steps," << r.total_steps << '\n'
        << prefix << "wall_seconds," << format_real(r.wall_seconds) << '\n'
        << prefix << "samples_per_second," << format_real(r.samples_per_second) << '\n'
        << prefix << "episodes_completed," << r.episodes_completed << '\n';
  }
  finish(out, path);
}

void write_match_csv(std::span<const MatchResult> results, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  out << kMatchHeader << '\n';
  for (const auto& r : results) {
    out << game_name(r.game) << ',' << r.agent_a << ',' << r.agent_b << ',' << r.wins_a << ','
        << r.wins_b << ',' << r.draws << '\n';
  }
  finish(out, path);
}

std::vector<BenchResult> read_bench_csv(const std::filesystem::path& path) {
  std::vector<BenchResult> results;
  for (const auto& f : read_rows(path, kBenchHeader, 8)) {
    BenchResult r;
    try {
      r.game = parse_game_id(f[0]);
    } catch (const UnsupportedGame&) {
      throw IoError("unknown game '" + f[0] + "' in " + path.string());
    }
    r.batch_size = parse_number<std::size_t>(f[1], path);
    r.total_steps = parse_number<std::uint64_t>(f[2], path);
    r.seed = parse_number<std::uint64_t>(f[3], path);
    r.threads = parse_number<unsigned>(f[4], path);
    r.wall_seconds = parse_number<double>(f[5], path);
    r.samples_per_second = parse_number<double>(f[6], path);
    r.episodes_completed = parse_number<std::uint64_t>(f[7], path);
    results.push_back(r);
  }
  return results;
}

std::vector<MatchResult> read_match_csv(const std::filesystem::path& path) {
  std::vector<MatchResult> results;
  for (const auto& f : read_rows(path, kMatchHeader, 6)) {
    MatchResult r;
    try {
      r.game = parse_game_id(f[0]);
    } catch (const UnsupportedGame&) {
      throw IoError("unknown game '" + f[0] + "' in " + path.string());
    }
    r.agent_a = f[1];
    r.agent_b = f[2];
    r.wins_a = parse_number<int>(f[3], path);
    r.wins_b = parse_number<int>(f[4], path);
    r.draws = parse_number<int>(f[5], path);
    results.push_back(r);
  }
  return results;
}

}  // namespace gamevec
