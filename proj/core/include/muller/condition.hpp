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

#include <cstddef>
#include <unordered_set>
#include <vector>

#include "muller/vertex_set.hpp"

namespace muller {

/**
 * Partition (F0, F1) of the powerset of a universe. F0 is listed explicitly;
 * every unlisted subset, the empty set included, belongs to F1.
 */
class MullerCondition
{
public:
    MullerCondition() = default;

    /// Throws InvalidCondition on a set outside the universe or a duplicate.
    MullerCondition(VertexSet universe, std::vector<VertexSet> f0);

    VertexSet universe() const noexcept { return universe_; }
    /// Listed F0 sets in ascending bitmask order.
    const std::vector<VertexSet>& f0() const noexcept { return f0_; }

    /// Owner of F. Throws OutOfUniverse if F is not a subset of the universe.
    Player membership(VertexSet set) const;
    /// Like membership(), without the universe check.
    bool in_f0(VertexSet set) const noexcept { return lookup_.contains(set); }

    /// F↾X: universe X, F0 sets contained in X. Throws OutOfUniverse if X ⊄ universe.
    MullerCondition restrict_to(VertexSet members) const;

    /// The condition with both sides exchanged (the empty set stays in F1).
    MullerCondition swapped() const;

    friend bool operator==(const MullerCondition& a, const MullerCondition& b)
    {
        return a.universe_ == b.universe_ && a.f0_ == b.f0_;
    }

private:
    VertexSet universe_;
    std::vector<VertexSet> f0_;
    std::unordered_set<VertexSet> lookup_;
};

/// Largest universe build_zielonka_tree() accepts; children are found by subset scan.
inline constexpr std::size_t kMaxTreeUniverse = 16;

/**
 * Zielonka tree node. The owner is the player whose family contains the label;
 * the children are the ⊆-maximal non-empty proper subsets of the label owned
 * by the other player, ordered by descending size, then ascending bitmask.
 */
struct ZielonkaTree
{
    VertexSet label;
    Player owner = Player::One;
    std::vector<ZielonkaTree> children;

    std::size_t branch() const noexcept { return children.size(); }
    bool is_leaf() const noexcept { return children.empty(); }
    const ZielonkaTree& child(std::size_t j) const { return children.at(j); }

    /// Owner of a non-empty subset of the label, read off the tree. The empty
    /// set follows the first branch down, so it may disagree with the condition.
    Player membership(VertexSet set) const;

    std::size_t node_count() const;
    std::size_t depth() const;

    friend bool operator==(const ZielonkaTree& a, const ZielonkaTree& b)
    {
        return a.label == b.label && a.owner == b.owner && a.children == b.children;
    }
};

/// Throws UniverseTooLarge above kMaxTreeUniverse.
ZielonkaTree build_zielonka_tree(const MullerCondition& condition);

} // namespace muller
