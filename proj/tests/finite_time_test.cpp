/*
 * Copyright 2026 The muller-hurry Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <iostream>

#include "muller/engine.hpp"
#include "muller/errors.hpp"
#include "muller/finite_time.hpp"
#include "muller/generators.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace muller {
namespace {

std::size_t power(std::size_t k, std::size_t n)
{
    std::size_t p = 1;
    while (n--) p *= k;
    return p;
}

TEST(Threshold, Rules)
{
    EXPECT_EQ(stopping_threshold(StoppingRule::uniform(3), VertexSet{0, 4}), 3U);
    EXPECT_EQ(stopping_threshold(StoppingRule::mcnaughton(), VertexSet{0, 1, 2}), 7U);
    EXPECT_EQ(stopping_threshold(StoppingRule::mcnaughton(), VertexSet{5}), 2U);
    EXPECT_EQ(stopping_threshold(StoppingRule::mcnaughton(), VertexSet::first_n(12)), 479001601U);
    EXPECT_THROW(stopping_threshold(StoppingRule::mcnaughton(), VertexSet::first_n(13)), ThresholdOverflow);
    EXPECT_THROW(StoppingRule::uniform(1), std::invalid_argument);
    EXPECT_EQ(StoppingRule::uniform(3).name(), "uniform(3)");
}

TEST(Product, Fig1UniformThree)
{
    const GameFile g = fig1_game();
    const ProductGame pg = build_product(g.arena, g.condition, StoppingRule::uniform(3));
    EXPECT_NO_THROW(check_acyclic(pg));
    EXPECT_LE(max_play_length(pg), 27U);
    EXPECT_EQ(pg.initial.size(), 3U);
    for (std::size_t s = 0; s < pg.states.size(); ++s)
        if (pg.states[s].stopped()) EXPECT_TRUE(pg.successors[s].empty());
}

TEST(Product, SelfLoopStopsAfterTwo)
{
    const Arena a({Player::Zero}, {{0}});
    const MullerCondition c(a.vertices(), {VertexSet{0}});
    const ProductGame pg = build_product(a, c, StoppingRule::uniform(2));
    ASSERT_EQ(pg.states.size(), 2U);
    EXPECT_EQ(max_play_length(pg), 2U);
    const auto& second = pg.states[pg.successors[pg.initial[0]].at(0)];
    EXPECT_EQ(second.stop_set, VertexSet{0});
}

TEST(Product, GnIsAcyclic)
{
    const GameFile g = gn_game(2);
    const ProductGame pg = build_product(g.arena, g.condition, StoppingRule::uniform(3));
    EXPECT_NO_THROW(check_acyclic(pg));
}

TEST(Product, CycleIsReported)
{
    ProductGame pg;
    pg.states.resize(2);
    pg.successors = {{1}, {0}};
    pg.initial = {0};
    EXPECT_THROW(check_acyclic(pg), AcyclicityViolation);
}

TEST(Product, StateCap)
{
    const GameFile g = gn_game(4);
    EXPECT_THROW(build_product(g.arena, g.condition, StoppingRule::uniform(3), 10), StateBudgetExceeded);
}

TEST(FiniteSolve, Examples)
{
    const GameFile g = fig1_game();
    EXPECT_EQ(solve_finite(g.arena, g.condition, StoppingRule::uniform(3)).w0, g.arena.vertices());
    EXPECT_EQ(solve_finite(g.arena, g.condition, StoppingRule::mcnaughton()).w0, g.arena.vertices());
    const MullerCondition none(g.arena.vertices(), {});
    for (const StoppingRule& r : {StoppingRule::uniform(2), StoppingRule::uniform(3), StoppingRule::mcnaughton()})
        EXPECT_EQ(solve_finite(g.arena, none, r).w1, g.arena.vertices());
}

// Minimax over explicit plays with the test oracle's scores; tiny arenas only.
Player brute_finite_winner(const GameFile& g, std::uint32_t k, Play& play)
{
    for (VertexSet f : oracle::nonempty_subsets(g.arena.vertices()))
        if (oracle::score(f, play) >= k) return g.condition.membership(f);
    const Player mover = g.arena.owner(play.back());
    for (VertexId s : g.arena.successors(play.back())) {
        play.push_back(s);
        const Player w = brute_finite_winner(g, k, play);
        play.pop_back();
        if (w == mover) return mover;
    }
    return opponent(mover);
}

TEST(FiniteSolve, AgreesWithOracleMinimax)
{
    std::mt19937_64 rng(51);
    for (int i = 0; i < 150; ++i) {
        const GameFile g = testing::random_game_file(rng, 1 + rng() % 2);
        for (std::uint32_t k : {2U, 3U}) {
            const FiniteSolution sol = solve_finite(g.arena, g.condition, StoppingRule::uniform(k));
            for (VertexId v = 0; v < g.arena.size(); ++v) {
                Play p{v};
                EXPECT_EQ(sol.vertex_winner[v], brute_finite_winner(g, k, p)) << print_game(g);
            }
        }
    }
}

TEST(FiniteSolve, AgreesWithPlayTreeOnThreeVertices)
{
    std::mt19937_64 rng(52);
    for (int i = 0; i < 25; ++i) {
        const GameFile g = testing::random_game_file(rng, 3);
        const FiniteSolution sol = solve_finite(g.arena, g.condition, StoppingRule::uniform(3));
        for (VertexId v = 0; v < 3; ++v)
            EXPECT_EQ(sol.vertex_winner[v], solve_play_tree(g.arena, g.condition, StoppingRule::uniform(3), v));
    }
}

TEST(FiniteSolve, DeterminacyAndDepthBound)
{
    std::mt19937_64 rng(53);
    for (int i = 0; i < 80; ++i) {
        const std::size_t n = 1 + rng() % 4;
        const GameFile g = testing::random_game_file(rng, n);
        for (std::uint32_t k : {2U, 3U}) {
            const ProductGame pg = build_product(g.arena, g.condition, StoppingRule::uniform(k));
            EXPECT_LE(max_play_length(pg), power(k, n));
            const FiniteSolution sol = solve_reachability(g.arena, pg, g.condition);
            ASSERT_EQ(sol.vertex_winner.size(), n);
            EXPECT_TRUE((sol.w0 & sol.w1).empty());
            EXPECT_EQ(sol.w0 | sol.w1, g.arena.vertices());
        }
    }
}

// Exhaustive: the extracted strategy wins every continuation from its region.
void check_finite_strategy(const GameFile& g, const StoppingRule& rule)
{
    const SolvedGame game(g);
    const auto f = game.finite(rule);
    for (Player p : {Player::Zero, Player::One}) {
        const Strategy s = extract_finite_strategy(game.arena(), f.product, f.solution, p);
        EXPECT_EQ(s.domain(), f.solution->region(p));
        std::function<void(Play&, const ScoreChain&, const StrategyCursor&)> dfs = [&](Play& play, const ScoreChain& c,
                                                                                     const StrategyCursor& cur) {
            const VertexId v = play.back();
            std::vector<VertexId> next;
            if (g.arena.owner(v) == p) next.push_back(s.move(cur, play));
            else next.assign(g.arena.successors(v).begin(), g.arena.successors(v).end());
            for (VertexId x : next) {
                const ScoreChain c2 = c.extended(x);
                play.push_back(x);
                const auto hit = threshold_hit(c, c2, [&](VertexSet set) { return stopping_threshold(rule, set); });
                if (hit) {
                    EXPECT_EQ(g.condition.membership(*hit), p) << print_game(g);
                    if (g.arena.owner(x) == p) {
                        auto stopped = cur.clone();
                        stopped->push(x);
                        EXPECT_THROW(s.move(*stopped, play), StrategyOffDomain);
                    }
                } else {
                    auto c3 = cur.clone();
                    c3->push(x);
                    dfs(play, c2, *c3);
                }
                play.pop_back();
            }
        };
        for (VertexId v : s.domain()) {
            Play play{v};
            auto cur = s.start();
            cur->push(v);
            dfs(play, ScoreChain(v), *cur);
        }
        for (VertexId v : g.arena.owned_by(p) - s.domain()) EXPECT_THROW(s(Play{v}), StrategyOffDomain);
    }
}

TEST(FiniteStrategy, WinsEveryContinuation)
{
    check_finite_strategy(fig1_game(), StoppingRule::uniform(3));
    check_finite_strategy(fig1_game(), StoppingRule::mcnaughton());
    std::mt19937_64 rng(54);
    for (int i = 0; i < 40; ++i) check_finite_strategy(testing::random_game_file(rng, 1 + rng() % 3), StoppingRule::uniform(3));
}

// Threshold 2 is left open; this only reports how often it differs.
TEST(FiniteSolve, ThresholdTwoProbe)
{
    std::mt19937_64 rng(55);
    int games = 0, mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const GameFile g = testing::random_game_file(rng, 1 + rng() % 4);
        const auto d = solve(g.arena, g.condition);
        const FiniteSolution sol = solve_finite(g.arena, g.condition, StoppingRule::uniform(2));
        ++games;
        if (sol.w0 != d->w0) ++mismatches;
    }
    std::cout << "uniform(2) vs Zielonka: " << mismatches << " of " << games << " games differ\n";
    SUCCEED();
}

} // namespace
} // namespace muller
