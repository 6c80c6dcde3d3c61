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

#include "muller/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace muller {

GameFile fig1_game()
{
    GameFile g;
    g.arena = Arena({Player::One, Player::Zero, Player::One}, {{0, 1}, {0, 2}, {1, 2}});
    g.condition = MullerCondition(VertexSet::first_n(3), {VertexSet{0}, VertexSet{2}, VertexSet{0, 1, 2}});
    g.start = 1;
    return g;
}

GameFile gn_game(std::size_t n)
{
    if (n < 1 || n + 1 > kMaxVertices) throw std::invalid_argument("G_n needs 1 <= n <= 63");
    std::vector<Player> owners(n + 1, Player::Zero);
    std::vector<std::vector<VertexId>> succ(n + 1);
    const auto top = static_cast<VertexId>(n);
    succ[0] = {top};
    for (VertexId v = 1; v <= top; ++v) succ[v].push_back(v - 1);
    succ[1].push_back(top);
    GameFile g;
    g.arena = Arena(std::move(owners), std::move(succ));
    g.condition = MullerCondition(VertexSet::first_n(n + 1), {VertexSet::first_n(n + 1)});
    g.start = 0;
    return g;
}

GameFile random_game(std::size_t vertices, std::uint64_t seed)
{
    if (vertices < 1 || vertices > 16) throw std::invalid_argument("random games have 1..16 vertices");
    // Draw raw 64-bit words only: distributions are implementation-defined,
    // the engine sequence is not.
    std::mt19937_64 rng(seed);
    auto below = [&rng](std::uint64_t bound) { return rng() % bound; };

    std::vector<Player> owners;
    std::vector<std::vector<VertexId>> succ(vertices);
    for (std::size_t v = 0; v < vertices; ++v) {
        owners.push_back(below(2) == 0 ? Player::Zero : Player::One);
        const std::size_t degree = 1 + below(std::min<std::size_t>(3, vertices));
        while (succ[v].size() < degree) {
            const auto s = static_cast<VertexId>(below(vertices));
            if (std::find(succ[v].begin(), succ[v].end(), s) == succ[v].end()) succ[v].push_back(s);
        }
    }
    std::vector<VertexSet> f0;
    const VertexSet all = VertexSet::first_n(vertices);
    any_between(VertexSet{}, all, [&](VertexSet s) {
        if (!s.empty() && below(2) == 0) f0.push_back(s);
        return false;
    });
    GameFile g;
    g.arena = Arena(std::move(owners), std::move(succ));
    g.condition = MullerCondition(all, std::move(f0));
    g.start = 0;
    return g;
}

} // namespace muller
