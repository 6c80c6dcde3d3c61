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
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "muller/arena.hpp"
#include "muller/scoring.hpp"
#include "muller/zielonka.hpp"

namespace muller {

/**
 * Incremental evaluation of a strategy along one play. push() feeds every
 * vertex of the play in order, whoever owns it; move() answers for the last
 * pushed vertex. A cursor fed w gives the same move as the strategy applied
 * to the prefix w.
 */
class StrategyCursor
{
public:
    virtual ~StrategyCursor() = default;

    virtual void push(VertexId v) = 0;
    /// Throws OffDomain when the strategy is undefined at the current prefix.
    virtual VertexId move() const = 0;
    /// Finite fingerprint of the strategy's memory, or nullopt if the
    /// strategy is not finite-memory. Equal fingerprints at equal vertices
    /// imply equal future behaviour.
    virtual std::optional<std::string> memory() const = 0;
    virtual std::unique_ptr<StrategyCursor> clone() const = 0;
};

/**
 * A strategy σ: V*V_p → V for one player, defined on prefixes whose last
 * vertex is in `domain` and owned by the player. Evaluation is a pure
 * function of the prefix.
 */
class Strategy
{
public:
    using CursorFactory = std::function<std::unique_ptr<StrategyCursor>()>;

    Strategy(std::shared_ptr<const Arena> arena, Player player, VertexSet domain, std::string name,
             bool finite_memory, CursorFactory factory);

    Player player() const noexcept { return player_; }
    VertexSet domain() const noexcept { return domain_; }
    const std::string& name() const noexcept { return name_; }
    bool finite_memory() const noexcept { return finite_memory_; }
    const Arena& arena() const noexcept { return *arena_; }

    /// Fresh cursor for the empty prefix.
    std::unique_ptr<StrategyCursor> start() const;

    /// The move at `prefix`. Throws StrategyOffDomain (carrying the prefix)
    /// when the last vertex is outside the domain or not the player's.
    VertexId operator()(std::span<const VertexId> prefix) const;

    /// Checked move from a cursor already fed `prefix`.
    VertexId move(const StrategyCursor& cursor, std::span<const VertexId> prefix) const;

private:
    std::shared_ptr<const Arena> arena_;
    Player player_;
    VertexSet domain_;
    std::string name_;
    bool finite_memory_;
    CursorFactory factory_;
};

/// Positional strategy from an attractor: defined on the player's vertices in attractor \ target.
Strategy attractor_strategy(std::shared_ptr<const Arena> arena, const AttractorResult& res);

/// Positional strategy from an explicit choice per vertex.
Strategy positional_strategy(std::shared_ptr<const Arena> arena, Player player,
                             std::vector<std::optional<VertexId>> choice, std::string name = "positional");

/// Always the first successor in file order, on every vertex of the player.
Strategy first_successor_strategy(std::shared_ptr<const Arena> arena, Player player);

/// Uniform choice seeded by (seed, prefix): pure but not finite-memory.
Strategy random_strategy(std::shared_ptr<const Arena> arena, Player player, std::uint64_t seed);

/**
 * Score-bounding strategy of `player` on its region of d. For the owner of
 * the root label this is τ*: the next child is picked by the opponent's
 * indicator. For the other player it is σ*: attractor moves on A_n \ U_{n-1}
 * and recursion on W^n. Recursive calls receive the longest suffix of the
 * history that stays inside the sub-region.
 */
Strategy score_bounding_strategy(std::shared_ptr<const Arena> arena,
                                 std::shared_ptr<const Decomposition> d, Player player);

/// Alias of score_bounding_strategy for the player not owning the root label.
Strategy sigma_star(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d);
/// Alias of score_bounding_strategy for the owner of the root label.
Strategy tau_star(std::shared_ptr<const Arena> arena, std::shared_ptr<const Decomposition> d);

/**
 * Zielonka's original strategies: the root owner cycles through the
 * children with a counter and restarts sub-strategies whenever it switches;
 * the other player plays as in σ*, recursing with the same forgetful form.
 */
Strategy naive_zielonka_strategy(std::shared_ptr<const Arena> arena,
                                 std::shared_ptr<const Decomposition> d, Player player);

/// Value of the child selector c of τ*: index into d.rounds, or nullopt for ⊥.
using ChildChoice = std::optional<std::size_t>;

struct ChangePointTrace
{
    std::vector<std::size_t> positions;
    std::vector<ChildChoice> c_values;
};

/**
 * Change points of the root owner's τ* along `play`: positions where c
 * changes, with position 0 always included. The play must lie in the root
 * owner's region and follow τ* at every vertex of that player; otherwise
 * InconsistentPlay.
 */
ChangePointTrace trace_change_points(std::shared_ptr<const Arena> arena,
                                     std::shared_ptr<const Decomposition> d,
                                     std::span<const VertexId> play);

} // namespace muller
