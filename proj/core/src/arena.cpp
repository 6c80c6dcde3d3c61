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

#include "muller/arena.hpp"

#include "muller/errors.hpp"

namespace muller {

Arena::Arena(std::vector<Player> owners,
             std::vector<std::vector<VertexId>> successors,
             std::vector<std::string> names)
    : owners_(std::move(owners)), successors_(std::move(successors)), names_(std::move(names))
{
    const std::size_t n = owners_.size();
    if (n > kMaxVertices)
        throw InvalidArena("arena has " + std::to_string(n) + " vertices; at most 64 are supported");
    if (successors_.size() != n)
        throw InvalidArena("successor table size does not match vertex count");
    if (!names_.empty() && names_.size() != n)
        throw InvalidArena("name table size does not match vertex count");

    successor_sets_.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        if (owners_[v] == Player::Zero) owned0_.insert(v);
        if (successors_[v].empty())
            throw InvalidArena("vertex " + std::to_string(v) + " has no successor");
        for (VertexId s : successors_[v]) {
            if (s >= n)
                throw InvalidArena("edge " + std::to_string(v) + "->" + std::to_string(s) +
                                   " leaves the arena");
            if (successor_sets_[v].contains(s))
                throw InvalidArena("duplicate edge " + std::to_string(v) + "->" + std::to_string(s));
            successor_sets_[v].insert(s);
        }
    }
}

const std::string& Arena::name(VertexId v) const
{
    static const std::string none;
    return names_.empty() ? none : names_.at(v);
}

bool induces_subarena(const Arena& arena, VertexSet members)
{
    if (!members.subset_of(arena.vertices())) return false;
    for (VertexId v : members)
        if (!arena.successor_set(v).intersects(members)) return false;
    return true;
}

Subarena subarena(const Arena& arena, VertexSet members)
{
    if (!members.subset_of(arena.vertices()))
        throw NotASubarena(members.to_string() + " is not a subset of the arena");

    std::vector<VertexId> renumber(arena.size(), 0);
    Subarena out;
    for (VertexId v : members) {
        renumber[v] = static_cast<VertexId>(out.original_ids.size());
        out.original_ids.push_back(v);
    }

    std::vector<Player> owners;
    std::vector<std::vector<VertexId>> successors;
    std::vector<std::string> names;
    for (VertexId v : members) {
        owners.push_back(arena.owner(v));
        std::vector<VertexId> succ;
        for (VertexId s : arena.successors(v))
            if (members.contains(s)) succ.push_back(renumber[s]);
        if (succ.empty())
            throw NotASubarena("vertex " + std::to_string(v) + " has no successor in " +
                               members.to_string());
        successors.push_back(std::move(succ));
        if (arena.has_names()) names.push_back(arena.name(v));
    }
    out.arena = Arena(std::move(owners), std::move(successors), std::move(names));
    return out;
}

AttractorResult attractor(const Arena& arena, Player player, VertexSet target, VertexSet domain)
{
    AttractorResult res;
    res.player = player;
    res.target = target;
    res.domain = domain;
    res.strategy.assign(arena.size(), std::nullopt);
    res.rank.assign(arena.size(), std::nullopt);

    const VertexSet mine = arena.owned_by(player) & domain;
    const VertexSet theirs = arena.owned_by(opponent(player)) & domain;

    VertexSet layer = target & domain;
    for (VertexId v : layer) res.rank[v] = 0;
    res.attractor = layer;

    for (std::uint32_t r = 1; !layer.empty(); ++r) {
        layer = VertexSet{};
        for (VertexId v : mine - res.attractor) {
            for (VertexId s : arena.successors(v)) {
                if (res.attractor.contains(s)) {
                    res.strategy[v] = s;
                    layer.insert(v);
                    break;
                }
            }
        }
        for (VertexId v : theirs - res.attractor) {
            if ((arena.successor_set(v) & domain).subset_of(res.attractor)) layer.insert(v);
        }
        for (VertexId v : layer) res.rank[v] = r;
        res.attractor |= layer;
    }
    return res;
}

bool is_trap(const Arena& arena, VertexSet members, Player player)
{
    for (VertexId v : members) {
        const VertexSet succ = arena.successor_set(v);
        if (arena.owner(v) == player) {
            if (!succ.subset_of(members)) return false;
        } else if (!succ.intersects(members)) {
            return false;
        }
    }
    return true;
}

} // namespace muller
