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

#include "muller/engine.hpp"

#include "muller/errors.hpp"

namespace muller {

SolvedGame::SolvedGame(GameFile game)
    : game_(std::move(game)), arena_(std::make_shared<const Arena>(game_.arena)),
      decomposition_(solve(*arena_, game_.condition))
{
}

SolvedGame::Finite SolvedGame::finite(const StoppingRule& rule) const
{
    std::lock_guard lock(mutex_);
    const std::string key = rule.name();
    if (auto it = finite_.find(key); it != finite_.end()) return it->second;
    auto pg = std::make_shared<const ProductGame>(build_product(*arena_, game_.condition, rule));
    auto sol = std::make_shared<const FiniteSolution>(solve_reachability(*arena_, *pg, game_.condition));
    Finite f{std::move(pg), std::move(sol)};
    finite_.emplace(key, f);
    return f;
}

NamedStrategy SolvedGame::strategy(std::string_view name, Player player, const StoppingRule& rule,
                                   std::uint64_t seed) const
{
    if (name == "sigma-star" || name == "tau-star") {
        const bool owner = player == decomposition_->root_owner;
        std::string note;
        if (owner && name == "sigma-star")
            note = "player " + std::to_string(index_of(player)) +
                   " owns the root label, so its score-bounding strategy is tau-star";
        if (!owner && name == "tau-star")
            note = "player " + std::to_string(index_of(player)) +
                   " does not own the root label, so its score-bounding strategy is sigma-star";
        return {score_bounding_strategy(arena_, decomposition_, player), note};
    }
    if (name == "naive") return {naive_zielonka_strategy(arena_, decomposition_, player), {}};
    if (name == "finite") {
        const Finite f = finite(rule);
        return {extract_finite_strategy(arena_, f.product, f.solution, player), {}};
    }
    if (name == "random") return {random_strategy(arena_, player, seed), {}};
    if (name == "first") return {first_successor_strategy(arena_, player), {}};
    throw UnknownStrategy("unknown strategy '" + std::string(name) +
                          "' (expected sigma-star, tau-star, naive, finite, random or first)");
}

} // namespace muller
