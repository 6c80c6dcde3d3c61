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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "muller/vertex_set.hpp"

namespace muller {

/**
 * Finite game graph with vertices 0..size()-1 partitioned between the two
 * players. Every vertex has at least one successor; successor lists keep the
 * order they were given in and contain no duplicates.
 */
class Arena
{
public:
    Arena() = default;

    /// Throws InvalidArena if an invariant is violated.
    Arena(std::vector<Player> owners,
          std::vector<std::vector<VertexId>> successors,
          std::vector<std::string> names = {});

    std::size_t size() const noexcept { return owners_.size(); }
    VertexSet vertices() const noexcept { return VertexSet::first_n(size()); }

    Player owner(VertexId v) const { return owners_.at(v); }
    VertexSet owned_by(Player p) const noexcept { return p == Player::Zero ? owned0_ : vertices() - owned0_; }

    std::span<const VertexId> successors(VertexId v) const { return successors_.at(v); }
    VertexSet successor_set(VertexId v) const { return successor_sets_.at(v); }
    bool has_edge(VertexId from, VertexId to) const
    {
        return from < size() && successor_sets_[from].contains(to);
    }

    bool has_names() const noexcept { return !names_.empty(); }
    /// Display name, or the empty string when the arena carries no names.
    const std::string& name(VertexId v) const;
    const std::vector<std::string>& names() const noexcept { return names_; }

    friend bool operator==(const Arena& a, const Arena& b)
    {
        return a.owners_ == b.owners_ && a.successors_ == b.successors_ && a.names_ == b.names_;
    }

private:
    std::vector<Player> owners_;
    std::vector<std::vector<VertexId>> successors_;
    std::vector<VertexSet> successor_sets_;
    std::vector<std::string> names_;
    VertexSet owned0_;
};

/// True iff every member of X has a successor in X.
bool induces_subarena(const Arena& arena, VertexSet members);

/// G[X] renumbered densely; original_ids[new id] is the id in the parent arena.
struct Subarena
{
    Arena arena;
    std::vector<VertexId> original_ids;
};

/// Throws NotASubarena if some member of X has no successor in X.
Subarena subarena(const Arena& arena, VertexSet members);

/**
 * Player `player`'s attractor of `target` inside `domain`, as a layered least
 * fixpoint. rank[v] is the layer a vertex entered in (0 for target ∩ domain).
 * strategy[v] is set exactly for the player's vertices in attractor \ target
 * and always points to a vertex of strictly smaller rank.
 */
struct AttractorResult
{
    Player player = Player::Zero;
    VertexSet target;
    VertexSet domain;
    VertexSet attractor;
    std::vector<std::optional<VertexId>> strategy;
    std::vector<std::optional<std::uint32_t>> rank;
};

AttractorResult attractor(const Arena& arena, Player player, VertexSet target, VertexSet domain);

inline AttractorResult attractor(const Arena& arena, Player player, VertexSet target)
{
    return attractor(arena, player, target, arena.vertices());
}

/// X is a trap for `player`: her edges out of X ∩ V_player stay in X and every
/// opponent vertex of X keeps at least one successor in X.
bool is_trap(const Arena& arena, VertexSet members, Player player);

} // namespace muller
