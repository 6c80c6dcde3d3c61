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

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "muller/finite_time.hpp"
#include "muller/game_io.hpp"
#include "muller/strategy.hpp"
#include "muller/zielonka.hpp"

namespace muller {

/// Strategy names accepted by SolvedGame::strategy().
inline const std::vector<std::string>& strategy_names()
{
    static const std::vector<std::string> names{"sigma-star", "tau-star", "naive", "finite", "random", "first"};
    return names;
}

struct NamedStrategy
{
    Strategy strategy;
    /// Non-empty when the request was adjusted, e.g. sigma-star asked for the root owner.
    std::string note;
};

/**
 * A game with its Zielonka decomposition, plus finite-time products built
 * on demand. Thread-safe.
 */
class SolvedGame
{
public:
    explicit SolvedGame(GameFile game);

    const GameFile& game() const noexcept { return game_; }
    std::shared_ptr<const Arena> arena() const noexcept { return arena_; }
    const MullerCondition& condition() const noexcept { return game_.condition; }
    std::shared_ptr<const Decomposition> decomposition() const noexcept { return decomposition_; }

    /**
     * Strategy by name for `player`. sigma-star and tau-star both give the
     * player's score-bounding strategy; "finite" is read off the product for
     * `rule`. Throws UnknownStrategy.
     */
    NamedStrategy strategy(std::string_view name, Player player, const StoppingRule& rule = StoppingRule::uniform(3),
                           std::uint64_t seed = 1) const;

    struct Finite
    {
        std::shared_ptr<const ProductGame> product;
        std::shared_ptr<const FiniteSolution> solution;
    };
    Finite finite(const StoppingRule& rule) const;

private:
    GameFile game_;
    std::shared_ptr<const Arena> arena_;
    std::shared_ptr<const Decomposition> decomposition_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, Finite> finite_;
};

} // namespace muller
