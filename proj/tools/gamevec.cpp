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


// gamevec command-line tool: throughput benchmarks, agent matches, rendering.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gamevec/agents.hpp"
#include "gamevec/bench.hpp"
#include "gamevec/errors.hpp"
#include "gamevec/evaluation.hpp"
#include "gamevec/report.hpp"

namespace {

using namespace gamevec;

constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

unsigned parse_threads(const std::string& text) {
  if (text == "auto") return 0;
  unsigned n = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    throw UsageError("--threads expects a positive integer or 'auto', got '" + text + "'");
  }
  return n;
}

void print_bench_table(const std::vector<BenchResult>& results) {
  std::printf("%-14s %8s %8s %8s %12s %16s %10s\n", "game", "batch", "steps", "threads",
              "seconds", "samples/s", "episodes");
  for (const auto& r : results) {
    std::printf("%-14s %8zu %8llu %8u %12.4f %16.1f %10llu\n",
                std::string(game_name(r.game)).c_str(), r.batch_size,
                static_cast<unsigned long long>(r.total_steps), r.threads, r.wall_seconds,
                r.samples_per_second, static_cast<unsigned long long>(r.episodes_completed));
  }
}

void write_bench(const std::vector<BenchResult>& results, const std::string& out, bool long_form) {
  if (out.empty()) return;
  if (long_form) {
    write_bench_long_csv(results, out);
  } else {
    write_bench_csv(results, out);
  }
}

struct BenchArgs {
  std::string game;
  std::size_t batch = 1024;
  std::uint64_t steps = 1000;
  std::uint64_t seed = 0;
  std::string threads = "1";
  std::string out;
  bool long_form = false;
};

int run_bench(const BenchArgs& args) {
  BenchConfig config;
  config.game = parse_game_id(args.game);
  config.batch_size = args.batch;
  config.total_steps = args.steps;
  config.seed = args.seed;
  config.threads = parse_threads(args.threads);
  const std::vector<BenchResult> results{bench_run(config)};
  print_bench_table(results);
  write_bench(results, args.out, args.long_form);
  return 0;
}

struct SweepArgs {
  std::string games;
  std::string batches = "1,8,64,512,1024";
  std::uint64_t steps = 200;
  std::uint64_t seed = 0;
  std::string threads = "auto";
  std::string out;
  bool long_form = false;
};

int run_sweep(const SweepArgs& args) {
  std::vector<GameId> games;
  if (args.games.empty()) {
    games = implemented_games();
  } else {
    for (const auto& name : split_list(args.games)) games.push_back(parse_game_id(name));
  }
  std::vector<std::size_t> batches;
  for (const auto& b : split_list(args.batches)) {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(b.data(), b.data() + b.size(), n);
    if (ec != std::errc() || ptr != b.data() + b.size() || n == 0) {
      throw UsageError("--batches expects positive integers, got '" + b + "'");
    }
    batches.push_back(n);
  }
  const unsigned threads = parse_threads(args.threads);
  std::vector<BenchResult> results;
  for (GameId game : games) {
    for (std::size_t batch : batches) {
      BenchConfig config{game, batch, args.steps, args.seed, threads};
      results.push_back(bench_run(config));
    }
  }
  print_bench_table(results);
  write_bench(results, args.out, args.long_form);
  return 0;
}

struct PlayArgs {
  std::string game;
  std::string agents = "mcts,random";
  int games = 100;
  std::uint64_t seed = 0;
  std::string threads = "1";
  std::string out;
};

int run_play(const PlayArgs& args) {
  const Env env(parse_game_id(args.game));
  std::vector<Agent> agents;
  for (const auto& name : split_list(args.agents)) {
    try {
      agents.push_back(parse_agent(name));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (agents.size() < 2) throw UsageError("--agents needs at least two comma-separated agents");
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (agents[i].name == agents[j].name) throw UsageError("duplicate agent " + agents[i].name);
    }
  }
  const unsigned threads = parse_threads(args.threads);
  std::optional<Executor> executor;
  if (threads != 1) executor.emplace(threads);
  const auto results = run_matches(env, agents, args.games, RngKey(args.seed),
                                   executor ? &*executor : nullptr);

  std::printf("%-14s %-12s %-12s %8s %8s %8s\n", "game", "agent_a", "agent_b", "wins_a",
              "wins_b", "draws");
  for (const auto& r : results) {
    std::printf("%-14s %-12s %-12s %8d %8d %8d\n", std::string(game_name(r.game)).c_str(),
                r.agent_a.c_str(), r.agent_b.c_str(), r.wins_a, r.wins_b, r.draws);
  }
  if (!args.out.empty()) write_match_csv(results, args.out);

  if (args.games > 0) {
    try {
      const auto table = fit_elo(results, agents.front().name);
      std::printf("\nElo (anchor %s = %.0f)\n", table.anchor_id.c_str(), table.anchor_value);
      for (const auto& agent : agents) {
        std::printf("  %-12s %9.1f\n", agent.name.c_str(), table.rating(agent.name));
      }
    } catch (const DisconnectedRatingGraph& e) {
      std::fprintf(stderr, "elo: %s\n", e.what());
    }
  }
  return 0;
}

struct RenderArgs {
  std::string game;
  std::uint64_t seed = 0;
  int steps = 0;
};

int run_render(const RenderArgs& args) {
  const Env env(parse_game_id(args.game));
  const RngKey root(args.seed);
  EnvState state = env.init(root.fold_in(0));
  std::cout << render_text(state);
  for (int t = 0; t < args.steps && !state.done(); ++t) {
    const auto [act_key, step_key] = root.fold_in(1).fold_in(static_cast<std::uint64_t>(t)).split();
    env.step_in_place(state, random_action(state, act_key), step_key);
    std::cout << '\n' << render_text(state);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batched board-game environments: benchmark, play and render"};
  app.require_subcommand(1);

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Random-policy throughput for one game");
  bench_cmd->add_option("--game", bench.game, "Game id, e.g. tic_tac_toe")->required();
  bench_cmd->add_option("--batch", bench.batch, "Batch size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--steps", bench.steps, "Batch steps")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Seed");
  bench_cmd->add_option("--threads", bench.threads, "Worker threads or 'auto'");
  bench_cmd->add_option("--out", bench.out, "CSV output path");
  bench_cmd->add_flag("--long", bench.long_form, "Write the long-format table instead");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Throughput over several games and batch sizes");
  sweep_cmd->add_option("--games", sweep.games, "Comma-separated game ids (default: all)");
  sweep_cmd->add_option("--batches", sweep.batches, "Comma-separated batch sizes");
  sweep_cmd->add_option("--steps", sweep.steps, "Batch steps per run")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep.seed, "Seed");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads or 'auto'");
  sweep_cmd->add_option("--out", sweep.out, "CSV output path");
  sweep_cmd->add_flag("--long", sweep.long_form, "Write the long-format table instead");

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "Round-robin matches and Elo fit");
  play_cmd->add_option("--game", play.game, "Game id")->required();
  play_cmd->add_option("--agents", play.agents, "Comma-separated agents: random, mcts, mcts:N");
  play_cmd->add_option("--games", play.games, "Games per pairing")->check(CLI::NonNegativeNumber);
  play_cmd->add_option("--seed", play.seed, "Seed");
  play_cmd->add_option("--threads", play.threads, "Worker threads or 'auto'");
  play_cmd->add_option("--out", play.out, "CSV output path");

  RenderArgs render;
  auto* render_cmd = app.add_subcommand("render", "Print states of a random game");
  render_cmd->add_option("--game", render.game, "Game id")->required();
  render_cmd->add_option("--seed", render.seed, "Seed");
  render_cmd->add_option("--steps", render.steps, "Random moves to play")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*bench_cmd) return run_bench(bench);
    if (*sweep_cmd) return run_sweep(sweep);
    if (*play_cmd) return run_play(play);
    if (*render_cmd) return run_render(render);
  } catch (const UnsupportedGame& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
