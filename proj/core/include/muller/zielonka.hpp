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
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "muller/arena.hpp"
#include "muller/condition.hpp"

namespace muller {

struct Decomposition;

/**
 * One iteration of Zielonka's loop at some tree node, with i the owner of
 * the node's label:
 *   A_n = Attr_{1-i}(V, U_{n-1}),  X_n = V \ A_n,  Z_n = X_n \ lbl(T_n),
 *   Y_n = X_n \ Attr_i(X_n, Z_n),  (W^n_0, W^n_1) = solve(G[Y_n], T_n),
 *   U_n = A_n ∪ W^n_{1-i}.
 */
struct RoundRecord
{
    std::uint32_t n = 0;
    std::size_t child_index = 0;
    std::shared_ptr<const ZielonkaTree> tree;

    VertexSet a;
    VertexSet x;
    VertexSet z;
    VertexSet y;
    VertexSet u;

    /// Attr_{1-i}(V, U_{n-1}); its strategy is the loser's attractor move on A_n \ U_{n-1}.
    AttractorResult opponent_attractor;
    /// Attr_i(X_n, Z_n); its strategy is the winner's escape move towards Z_n.
    AttractorResult escape;

    std::shared_ptr<const Decomposition> sub;

    /// W^n_p, the recursive winning region of p inside Y_n.
    VertexSet sub_region(Player p) const;
};

/**
 * Result of solving a game: winning regions plus every round of the loop at
 * every tree node. Vertex ids are those of the arena passed to solve();
 * nested decompositions work on vertex subsets of the same arena.
 */
struct Decomposition
{
    VertexSet vertices;
    std::shared_ptr<const ZielonkaTree> tree;
    Player root_owner = Player::One;
    std::vector<RoundRecord> rounds;
    VertexSet w0;
    VertexSet w1;

    VertexSet region(Player p) const noexcept { return p == Player::Zero ? w0 : w1; }
    bool is_leaf() const noexcept { return tree->is_leaf(); }
    std::size_t branch() const noexcept { return tree->branch(); }

    /// The last branch() rounds, in which U has stabilised. Empty for leaves
    /// and empty arenas.
    std::span<const RoundRecord> final_rounds() const noexcept;

    /// Index into rounds of the round whose U_m \ U_{m-1} holds v.
    /// Throws OffDomain when v is not in the root owner's opponent region.
    std::size_t round_of_loser_vertex(VertexId v) const;
};

/**
 * Runs Zielonka's algorithm. The arena's vertices must lie inside the label
 * of the tree root (InvalidCondition otherwise).
 */
std::shared_ptr<const Decomposition> solve(const Arena& arena, std::shared_ptr<const ZielonkaTree> tree);
std::shared_ptr<const Decomposition> solve(const Arena& arena, const MullerCondition& condition);

/// (W_0, W_1).
std::pair<VertexSet, VertexSet> winning_regions(const Decomposition& d);

/// Deterministic multi-line dump of the whole recursion record.
std::string describe(const Decomposition& d);

} // namespace muller
