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


// Acceptance gate: one PASS / FAIL / SKIP line per top-level criterion, with
// supporting measurements on indented lines above it. Exit status is nonzero
// when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "gamevec/agents.hpp"
#include "gamevec/batch.hpp"
#include "gamevec/bench.hpp"
#include "gamevec/errors.hpp"
#include "gamevec/evaluation.hpp"
#include "oracles.hpp"

using namespace gamevec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  std::string name;
  bool ok = true;
  bool skipped = false;
  std::string skip_reason;

  void check(bool condition, const std::string& detail) {
    std::printf("    [%s] %s\n", condition ? "ok" : "FAILED", detail.c_str());
    ok = ok && condition;
  }
  void note(const std::string& detail) { std::printf("    %s\n", detail.c_str()); }
};

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

int report(const Criterion& c) {
  if (c.skipped) {
    std::printf("SKIP %s: %s\n", c.name.c_str(), c.skip_reason.c_str());
    return 0;
  }
  std::printf("%s %s\n", c.ok ? "PASS" : "FAIL", c.name.c_str());
  std::fflush(stdout);
  return c.ok ? 0 : 1;
}

std::vector<int> legal_of(const std::vector<std::uint8_t>& mask) {
  std::vector<int> out;
  for (std::size_t a = 0; a < mask.size(); ++a) {
    if (mask[a]) out.push_back(static_cast<int>(a));
  }
  return out;
}

// ---------------------------------------------------------------- rule oracles

void tic_tac_toe_enumeration(Criterion& c) {
  const auto start = Clock::now();
  oracle::TicTacToeTally engine;
  std::function<void(const tic_tac_toe::Core&)> walk = [&](const tic_tac_toe::Core& core) {
    std::array<std::uint8_t, 9> mask;
    tic_tac_toe::legal_actions(core, mask);
    for (int a = 0; a < 9; ++a) {
      if (!mask[a]) continue;
      tic_tac_toe::Core next = core;
      const Outcome o = tic_tac_toe::transition(next, a);
      if (!o.terminated) {
        walk(next);
      } else if (o.role_rewards[0] > 0) {
        ++engine.x_wins;
      } else if (o.role_rewards[1] > 0) {
        ++engine.o_wins;
      } else {
        ++engine.draws;
      }
    }
  };
  walk(tic_tac_toe::Core{});
  const double elapsed = seconds_since(start);
  const auto brute = oracle::ttt_enumerate();
  c.check(engine.total() == 255168 && engine.x_wins == brute.x_wins &&
              engine.o_wins == brute.o_wins && engine.draws == brute.draws && elapsed < 10.0,
          fmt("tic-tac-toe: %ld games (X %ld / O %ld / draw %ld; brute force %ld / %ld / %ld) "
              "in %.2f s (limit 10 s)",
              engine.total(), engine.x_wins, engine.o_wins, engine.draws, brute.x_wins,
              brute.o_wins, brute.draws, elapsed));
}

void kuhn_table(Criterion& c) {
  const auto start = Clock::now();
  int lines = 0;
  int mismatches = 0;
  std::function<void(const kuhn_poker::Core&, std::string, int, int)> walk =
      [&](const kuhn_poker::Core& core, std::string seq, int a, int b) {
        std::array<std::uint8_t, kuhn_poker::kNumActions> mask;
        kuhn_poker::legal_actions(core, mask);
        for (int act = 0; act < kuhn_poker::kNumActions; ++act) {
          if (!mask[act]) continue;
          kuhn_poker::Core next = core;
          const Outcome o = kuhn_poker::transition(next, act);
          const char letter = "cbfk"[act];
          if (o.terminated) {
            ++lines;
            const float expect = oracle::kuhn_table_payoff(seq + letter, a, b);
            if (o.role_rewards[0] != expect || o.role_rewards[1] != -expect) ++mismatches;
          } else {
            walk(next, seq + letter, a, b);
          }
        }
      };
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != b) walk(kuhn_poker::deal(a, b), "", a, b);
    }
  }
  const double elapsed = seconds_since(start);
  c.check(lines == 30 && mismatches == 0 && elapsed < 1.0,
          fmt("kuhn poker: 6 deals x 5 lines = %d terminal lines, %d payoff mismatches, %.4f s "
              "(limit 1 s)",
              lines, mismatches, elapsed));
}

void go_scoring(Criterion& c) {
  const Env env(GameId::kGo9x9, EnvOptions{0, {}});
  int mismatches = 0;
  int black_wins = 0;
  int total_moves = 0;
  for (int g = 0; g < 50; ++g) {
    const RngKey key = RngKey(2024).fold_in(g);
    EnvState s = env.init(key.fold_in(0));
    // Random placements (pass only when forced or with small probability), then two passes.
    for (int t = 0; !s.done(); ++t) {
      const RngKey k = key.fold_in(1).fold_in(t);
      const auto legal = legal_of(s.legal_action_mask);
      int action = go::kPassAction;
      const bool want_pass = t > 60 + static_cast<int>(key.fold_in(2).uniform_int(120));
      if (!want_pass && legal.size() > 1) {
        do {
          action = legal[k.uniform_int(static_cast<std::uint32_t>(legal.size()))];
          if (action == go::kPassAction) action = legal.front();
        } while (action == go::kPassAction);
      }
      env.step_in_place(s, action, k);
      ++total_moves;
    }
    const auto& core = std::get<go::Core>(s.core);
    oracle::GoGrid grid(81);
    for (int p = 0; p < 81; ++p) grid[p] = core.board[p] == kEmpty ? 0 : core.board[p] + 1;
    const auto [black, white] = oracle::go_score(grid, 6.5);
    const go::Score score = go::tromp_taylor_score(core.board, 6.5f);
    const float black_reward = s.rewards[static_cast<std::size_t>(s.player_of(0))];
    const float expect = black > white ? 1.0f : (black < white ? -1.0f : 0.0f);
    if (score.black != black || score.white != white || black_reward != expect) ++mismatches;
    black_wins += expect > 0;
  }
  // Integer komi permits ties; the oracle and engine must then both call a draw.
  go::Core tie = go::initial(RngKey(), go::Rules{0.0f, false});
  go::apply(tie, go::kPassAction, RngKey());
  const Outcome tie_outcome = go::apply(tie, go::kPassAction, RngKey());
  const bool tie_ok = oracle::go_score(oracle::GoGrid(81, 0), 0.0).first ==
                          oracle::go_score(oracle::GoGrid(81, 0), 0.0).second &&
                      tie_outcome.terminated && tie_outcome.role_rewards[0] == 0.0f;
  c.check(mismatches == 0 && tie_ok,
          fmt("go 9x9: 50 random terminal boards (%d moves, black won %d) scored against the "
              "flood-fill oracle, komi 6.5: %d mismatches; komi 0 empty board draws: %s",
              total_moves, black_wins, mismatches, tie_ok ? "yes" : "no"));
}

void backgammon_conservation(Criterion& c) {
  const Env env(GameId::kBackgammon, EnvOptions{0, {}});
  long states = 0;
  int violations = 0;
  int bad_payoffs = 0;
  std::map<int, int> payoff_counts;
  for (int g = 0; g < 10000; ++g) {
    const RngKey key = RngKey(77).fold_in(g);
    EnvState s = env.init(key.fold_in(0));
    for (std::uint64_t t = 0; !s.done(); ++t) {
      const auto [act_key, step_key] = key.fold_in(1).fold_in(t).split();
      env.step_in_place(s, random_action(s, act_key), step_key);
      const auto& core = std::get<backgammon::Core>(s.core);
      ++states;
      if (oracle::backgammon_checkers(core, 0) != 15 || oracle::backgammon_checkers(core, 1) != 15) {
        ++violations;
      }
    }
    const float r = s.rewards[0];
    const float m = std::abs(r);
    if (!s.terminated || !(m == 1.0f || m == 2.0f || m == 3.0f) || s.rewards[1] != -r) {
      ++bad_payoffs;
    }
    ++payoff_counts[static_cast<int>(m)];
  }
  c.check(violations == 0 && bad_payoffs == 0,
          fmt("backgammon: 10000 random games, %ld states, %d conservation violations, %d "
              "payoffs outside {1,2,3} (single %d / gammon %d / backgammon %d)",
              states, violations, bad_payoffs, payoff_counts[1], payoff_counts[2],
              payoff_counts[3]));
}

void slide_and_spawn(Criterion& c) {
  const Env env(GameId::kPlay2048);
  int mismatches = 0;
  int transitions = 0;
  // Boards from random play, so tile distributions are realistic.
  EnvState s = env.init(RngKey(5));
  for (std::uint64_t t = 0; transitions < 100000; ++t) {
    if (s.done()) s = env.init(RngKey(6).fold_in(t));
    const auto& core = std::get<play2048::Core>(s.core);
    const play2048::Board before = core.board;
    const int action = random_action(s, RngKey(7).fold_in(t));
    const auto [expected, reward] = oracle::slide_board(before, action);
    const auto slid = play2048::slide(before, action);
    env.step_in_place(s, action, RngKey(8).fold_in(t));
    ++transitions;
    if (slid.board != expected || static_cast<long>(slid.reward) != reward ||
        s.rewards[0] != static_cast<float>(reward)) {
      ++mismatches;
    }
  }
  int twos = 0;
  for (int i = 0; i < 10000; ++i) {
    play2048::Board b{};
    play2048::spawn(b, RngKey(9).fold_in(i));
    for (auto e : b) twos += e == 1;
  }
  const double fraction = twos / 10000.0;
  c.check(mismatches == 0,
          fmt("2048: %d random slide transitions against the slide-merge oracle: %d mismatches "
              "(board or reward)",
              transitions, mismatches));
  c.check(fraction >= 0.88 && fraction <= 0.92,
          fmt("2048: 2-tile fraction over 10000 spawns = %.4f (band [0.88, 0.92])", fraction));
}

// ---------------------------------------------------------------- determinism

std::uint64_t trajectory_digest(const Env& env, unsigned threads, std::uint64_t seed) {
  constexpr std::size_t kBatch = 64;
  constexpr std::uint64_t kSteps = 10000;
  std::unique_ptr<Executor> pool = threads > 1 ? std::make_unique<Executor>(threads) : nullptr;
  const RngKey root(seed);
  Batch batch = batch_init(env, root.fold_in(0), kBatch, pool.get());
  std::vector<int> actions(kBatch);
  std::uint64_t digest = 0;
  for (std::uint64_t t = 0; t < kSteps; ++t) {
    const RngKey step_key = root.fold_in(1).fold_in(t);
    for (std::size_t i = 0; i < kBatch; ++i) {
      const EnvState& s = batch.states[i];
      actions[i] = s.done() ? 0 : random_action(s, step_key.fold_in(0).fold_in(i));
    }
    batch_step_in_place(env, batch, actions, step_key.fold_in(1), pool.get());
    for (const auto& s : batch.states) digest = RngKey::mix(digest ^ fingerprint(s));
  }
  return digest;
}

void determinism(Criterion& c) {
  for (GameId id : implemented_games()) {
    const Env env(id);
    const auto start = Clock::now();
    const std::uint64_t first = trajectory_digest(env, 1, 12345);
    const std::uint64_t second = trajectory_digest(env, 1, 12345);
    const std::uint64_t threaded = trajectory_digest(env, 8, 12345);
    c.check(first == second && first == threaded,
            fmt("%-13s batch 64 x 10000 steps: run1 %016llx run2 %016llx threads=8 %016llx "
                "(%.1f s)",
                std::string(game_name(id)).c_str(), static_cast<unsigned long long>(first),
                static_cast<unsigned long long>(second), static_cast<unsigned long long>(threaded),
                seconds_since(start)));
  }
}

// ---------------------------------------------------------------- throughput

void throughput(Criterion& c) {
  const unsigned cores = std::thread::hardware_concurrency();
  const bool strict = std::getenv("GAMEVEC_REQUIRE_THROUGHPUT") != nullptr;
  const std::vector<std::size_t> batches{1, 8, 64, 512, 1024};
  constexpr std::uint64_t kSamples = 1 << 18;
  const auto start = Clock::now();
  int monotone_games = 0;
  double ttt_ratio = 0.0;
  for (GameId id : implemented_games()) {
    std::vector<double> sps;
    for (std::size_t b : batches) {
      const std::uint64_t steps = std::max<std::uint64_t>(64, kSamples / b);
      sps.push_back(bench_run({id, b, steps, 1, 0}).samples_per_second);
    }
    bool monotone = true;
    for (std::size_t k = 1; k < sps.size(); ++k) monotone = monotone && sps[k] >= 0.9 * sps[k - 1];
    monotone_games += monotone;
    if (id == GameId::kTicTacToe) ttt_ratio = sps.back() / sps.front();
    c.note(fmt("%-13s samples/s at batch 1/8/64/512/1024: %.3g %.3g %.3g %.3g %.3g %s",
               std::string(game_name(id)).c_str(), sps[0], sps[1], sps[2], sps[3], sps[4],
               monotone ? "(non-decreasing within 10%)" : "(not monotone)"));
  }
  const double sweep_seconds = seconds_since(start);
  const bool ratio_ok = ttt_ratio >= 4.0;
  const bool monotone_ok = monotone_games >= 7;
  const bool time_ok = sweep_seconds < 600.0;
  const std::string summary =
      fmt("tic_tac_toe batch-1024 / batch-1 ratio %.2f (need >= 4); %d of 9 games monotone "
          "(need >= 7); sweep %.1f s (limit 600 s); %u hardware threads",
          ttt_ratio, monotone_games, sweep_seconds, cores);
  if (cores < 8 && !strict) {
    c.note(summary);
    c.skipped = true;
    c.skip_reason = fmt("throughput: requires an >= 8-core machine, this host reports %u "
                        "hardware thread(s); measured values above are informational "
                        "(set GAMEVEC_REQUIRE_THROUGHPUT=1 to grade them anyway)",
                        cores);
    return;
  }
  c.check(ratio_ok && monotone_ok && time_ok, summary);
}

// ---------------------------------------------------------------- evaluation

void evaluation(Criterion& c) {
  const Env env(GameId::kConnectFour);
  const auto start = Clock::now();
  const std::vector<Agent> agents{make_mcts_agent(32), make_random_agent()};
  const auto results = run_matches(env, agents, 200, RngKey(31));
  const MatchResult& r = results.at(0);
  const double win_rate = r.wins_a / 200.0;
  c.check(win_rate >= 0.90,
          fmt("connect four, mcts32 vs random, 200 games: %d wins / %d losses / %d draws, win "
              "rate %.3f (need >= 0.90), %.1f s",
              r.wins_a, r.wins_b, r.draws, win_rate, seconds_since(start)));

  // Outcomes sampled from the logistic model with known ratings 0 / 200 / 400.
  const std::vector<std::pair<std::string, double>> truth{
      {"base", 0.0}, {"plus200", 200.0}, {"plus400", 400.0}};
  std::vector<MatchResult> synthetic;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    for (std::size_t j = i + 1; j < truth.size(); ++j) {
      MatchResult m;
      m.agent_a = truth[i].first;
      m.agent_b = truth[j].first;
      const double p = 1.0 / (1.0 + std::pow(10.0, (truth[j].second - truth[i].second) / 400.0));
      const RngKey key = RngKey(41).fold_in(i).fold_in(j);
      for (int g = 0; g < 2000; ++g) (key.fold_in(g).uniform() < p ? m.wins_a : m.wins_b)++;
      synthetic.push_back(m);
    }
  }
  const RatingTable table = fit_elo(synthetic, "base", 1000.0);
  double worst = 0.0;
  for (const auto& [name, value] : truth) {
    worst = std::max(worst, std::abs(table.rating(name) - 1000.0 - value));
  }
  c.check(worst <= 30.0,
          fmt("elo fit, 3 agents at true 0 / 200 / 400, 2000 games per pair: %.1f / %.1f / %.1f "
              "relative to the anchor, worst error %.1f (tolerance 30)",
              table.rating("base") - 1000.0, table.rating("plus200") - 1000.0,
              table.rating("plus400") - 1000.0, worst));

  const RatingTable played = fit_elo(results, "random", 1000.0);
  c.check(table.rating("base") == 1000.0 && played.rating("random") == 1000.0,
          fmt("anchor ratings: synthetic base = %.17g, random in the played match = %.17g "
              "(must be exactly 1000); mcts32 rated %.1f",
              table.rating("base"), played.rating("random"), played.rating("mcts32")));
}

// ---------------------------------------------------------------- API contract

void api_contract(Criterion& c) {
  for (GameId id : implemented_games()) {
    const Env env(id);
    const auto start = Clock::now();
    constexpr std::size_t kBatch = 32;
    constexpr long kStates = 100000;
    Batch batch = batch_init(env, RngKey(91), kBatch);
    long checked = 0;
    long clean = 0;
    long rejected = 0;
    long violations = 0;
    long resets = 0;
    long reset_violations = 0;
    std::vector<int> actions(kBatch);
    for (std::uint64_t t = 0; checked < kStates; ++t) {
      for (std::size_t i = 0; i < kBatch && checked < kStates; ++i) {
        const EnvState& s = batch.states[i];
        if (s.done()) continue;
        ++checked;
        for (int a = 0; a < env.spec().num_actions; ++a) {
          const bool legal = s.legal_action_mask[static_cast<std::size_t>(a)] != 0;
          try {
            (void)env.step(s, a, RngKey(a));
            legal ? ++clean : ++violations;
          } catch (const IllegalAction&) {
            legal ? ++violations : ++rejected;
          }
        }
      }
      const RngKey key = RngKey(92).fold_in(t);
      for (std::size_t i = 0; i < kBatch; ++i) {
        const EnvState& s = batch.states[i];
        actions[i] = s.done() ? 0 : random_action(s, key.fold_in(0).fold_in(i));
      }
      const Batch before = batch;
      batch_step_in_place(env, batch, actions, key.fold_in(1));
      for (std::size_t i = 0; i < kBatch; ++i) {
        if (!before.states[i].done()) continue;
        ++resets;
        const EnvState& fresh = batch.states[i];
        if (fresh != env.init(key.fold_in(1).fold_in(i)) || fresh.step_count != 0 || fresh.done()) {
          ++reset_violations;
        }
      }
    }
    c.check(violations == 0 && resets > 0 && reset_violations == 0,
            fmt("%-13s %ld states: %ld legal steps ok, %ld masked actions rejected, %ld mask "
                "violations; %ld auto-resets, %ld wrong (%.1f s)",
                std::string(game_name(id)).c_str(), checked, clean, rejected, violations, resets,
                reset_violations, seconds_since(start)));
  }
}

}  // namespace

int main() {
  int failures = 0;
  auto run = [&](const std::string& name, const std::function<void(Criterion&)>& body) {
    Criterion c;
    c.name = name;
    try {
      body(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("unexpected exception: ") + e.what());
    }
    failures += report(c);
  };

  run("rule-oracle equivalence", [](Criterion& c) {
    tic_tac_toe_enumeration(c);
    kuhn_table(c);
    go_scoring(c);
    backgammon_conservation(c);
    slide_and_spawn(c);
  });
  run("determinism across runs and thread counts", determinism);
  run("throughput scaling with batch size", throughput);
  run("evaluation harness", evaluation);
  run("api contract: mask soundness and auto-reset", api_contract);

  std::printf("%s\n", failures == 0 ? "acceptance: all graded criteria passed"
                                    : "acceptance: some criteria FAILED");
  return failures == 0 ? 0 : 1;
}
