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

#include "muller/errors.hpp"
#include "muller/game_io.hpp"
#include "muller/generators.hpp"
#include "support.hpp"

namespace muller {
namespace {

constexpr const char* kFig1 = R"(muller 3;
0 1 0,1;
1 0 0,2;
2 1 1,2;
F0: {0},{2},{0,1,2};
start: 1;
)";

TEST(Parse, Fig1File)
{
    const GameFile g = parse_game(kFig1);
    EXPECT_EQ(g.arena.size(), 3U);
    EXPECT_EQ(g.arena.owner(0), Player::One);
    EXPECT_EQ(g.arena.owner(1), Player::Zero);
    EXPECT_EQ(g.arena.owner(2), Player::One);
    EXPECT_EQ(g.condition.f0(), (std::vector<VertexSet>{VertexSet{0}, VertexSet{2}, VertexSet{0, 1, 2}}));
    EXPECT_EQ(g.start, std::optional<VertexId>(1));
    EXPECT_EQ(g, fig1_game());
}

TEST(Parse, CommentsNamesAndAnyOrder)
{
    const GameFile g = parse_game("# header\nmuller 2; # two vertices\n1 1 0 \"right\";\n0 0 0,1 \"le\\\"ft\";\nF0: {};\n");
    EXPECT_EQ(g.arena.name(0), "le\"ft");
    EXPECT_EQ(g.arena.name(1), "right");
    EXPECT_TRUE(g.condition.f0().front().empty());
    EXPECT_FALSE(g.start);
    EXPECT_EQ(parse_game(print_game(g)), g);
}

TEST(Parse, SemanticErrors)
{
    EXPECT_THROW(parse_game("muller 2; 0 0 1; 1 0 ; F0: {0};"), Error);
    EXPECT_THROW(parse_game("muller 3; 0 1 0,1; 1 0 0,2; 2 1 1,2; F0: {0,3};"), SemanticError);
    EXPECT_THROW(parse_game("muller 2; 0 0 1; 0 0 1; F0: {0};"), SemanticError);
    EXPECT_THROW(parse_game("muller 2; 0 0 2; 1 0 0; F0: {0};"), SemanticError);
    EXPECT_THROW(parse_game("muller 2; 0 0 1; F0: {0};"), SemanticError);
    EXPECT_THROW(parse_game("muller 1; 0 2 0; F0: {0};"), SemanticError);
    EXPECT_THROW(parse_game("muller 1; 0 0 0; F0: {0}; start: 4;"), SemanticError);
    EXPECT_THROW(parse_game("muller 1; 0 0 0;"), SemanticError);
    EXPECT_THROW(parse_game("muller 1; 0 0 0; F0: {0}; F0: {0};"), SemanticError);
    EXPECT_THROW(parse_game("muller 1; 0 0 0,0; F0: {0};"), SemanticError);
    EXPECT_THROW(parse_game("muller 65;"), SemanticError);
}

TEST(Parse, VertexWithoutSuccessorIsSemantic)
{
    EXPECT_THROW(parse_game("muller 2; 0 0 1; 1 0; F0: {0};"), SemanticError);
}

TEST(Parse, SyntaxErrorsCarryPosition)
{
    try {
        parse_game("muller 2;\n0 0 1;\n1 0 0 ?;\n");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_EQ(e.column(), 7U);
    }
    EXPECT_THROW(parse_game("mueller 2;"), SyntaxError);
    EXPECT_THROW(parse_game("muller 2"), SyntaxError);
    EXPECT_THROW(parse_game("muller 1; 0 0 0; F0: {0;"), SyntaxError);
    EXPECT_THROW(parse_game("muller 1; 0 0 0 \"open"), SyntaxError);
}

TEST(Print, RoundTripRandomGames)
{
    std::mt19937_64 rng(71);
    for (int i = 0; i < 200; ++i) {
        GameFile g = testing::random_game_file(rng, 1 + rng() % 8);
        if (rng() % 2) g.start = static_cast<VertexId>(rng() % g.arena.size());
        if (rng() % 3 == 0) {
            std::vector<std::string> names(g.arena.size());
            for (auto& n : names) n = rng() % 2 ? "v" + std::to_string(rng() % 100) : "";
            names[0] = "a \\ b";
            std::vector<Player> owners;
            std::vector<std::vector<VertexId>> succ;
            for (VertexId v = 0; v < g.arena.size(); ++v) {
                owners.push_back(g.arena.owner(v));
                succ.emplace_back(g.arena.successors(v).begin(), g.arena.successors(v).end());
            }
            g.arena = Arena(owners, succ, names);
        }
        EXPECT_EQ(parse_game(print_game(g)), g);
    }
}

TEST(Generators, Deterministic)
{
    EXPECT_EQ(random_game(4, 7), random_game(4, 7));
    EXPECT_EQ(gn_game(3).arena.size(), 4U);
    EXPECT_THROW(random_game(17, 1), std::invalid_argument);
}

} // namespace
} // namespace muller
