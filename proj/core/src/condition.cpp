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

#include "muller/condition.hpp"

#include <algorithm>
#include <unordered_map>

#include "muller/errors.hpp"

namespace muller {

MullerCondition::MullerCondition(VertexSet universe, std::vector<VertexSet> f0)
    : universe_(universe), f0_(std::move(f0))
{
    std::sort(f0_.begin(), f0_.end());
    for (VertexSet f : f0_) {
        if (!f.subset_of(universe_))
            throw InvalidCondition("set " + f.to_string() + " is outside the universe " +
                                   universe_.to_string());
        if (!lookup_.insert(f).second)
            throw InvalidCondition("set " + f.to_string() + " is listed twice");
    }
}

Player MullerCondition::membership(VertexSet set) const
{
    if (!set.subset_of(universe_))
        throw OutOfUniverse(set.to_string() + " is not a subset of " + universe_.to_string());
    return in_f0(set) ? Player::Zero : Player::One;
}

MullerCondition MullerCondition::restrict_to(VertexSet members) const
{
    if (!members.subset_of(universe_))
        throw OutOfUniverse(members.to_string() + " is not a subset of " + universe_.to_string());
    std::vector<VertexSet> kept;
    for (VertexSet f : f0_)
        if (f.subset_of(members)) kept.push_back(f);
    return MullerCondition(members, std::move(kept));
}

MullerCondition MullerCondition::swapped() const
{
    if (universe_.size() > 24) throw UniverseTooLarge("cannot complement a family over more than 24 vertices");
    std::vector<VertexSet> other;
    any_between(VertexSet{}, universe_, [&](VertexSet s) {
        if (!s.empty() && !in_f0(s)) other.push_back(s);
        return false;
    });
    return MullerCondition(universe_, std::move(other));
}

Player ZielonkaTree::membership(VertexSet set) const
{
    const ZielonkaTree* node = this;
    while (true) {
        const auto it = std::find_if(node->children.begin(), node->children.end(),
                                     [set](const ZielonkaTree& c) { return set.subset_of(c.label); });
        if (it == node->children.end()) return node->owner;
        node = &*it;
    }
}

std::size_t ZielonkaTree::node_count() const
{
    std::size_t n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
}

std::size_t ZielonkaTree::depth() const
{
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c.depth());
    return d + 1;
}

namespace {

class TreeBuilder
{
public:
    explicit TreeBuilder(const MullerCondition& c) : cond_(c) {}

    ZielonkaTree build(VertexSet label)
    {
        if (auto it = memo_.find(label); it != memo_.end()) return it->second;

        ZielonkaTree node;
        node.label = label;
        node.owner = cond_.in_f0(label) ? Player::Zero : Player::One;

        // Scan proper non-empty subsets by decreasing size; a set of the other
        // player not below an earlier hit is maximal.
        std::vector<std::vector<VertexSet>> by_size(label.size());
        any_between(VertexSet{}, label, [&](VertexSet s) {
            if (!s.empty() && s != label) by_size[s.size()].push_back(s);
            return false;
        });
        std::vector<VertexSet> maximal;
        for (std::size_t sz = label.size(); sz-- > 1;) {
            auto& layer = by_size[sz];
            std::sort(layer.begin(), layer.end());
            for (VertexSet s : layer) {
                const Player p = cond_.in_f0(s) ? Player::Zero : Player::One;
                if (p == node.owner) continue;
                const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                                   [s](VertexSet m) { return s.subset_of(m); });
                if (!dominated) maximal.push_back(s);
            }
        }
        for (VertexSet m : maximal) node.children.push_back(build(m));

        memo_.emplace(label, node);
        return node;
    }

private:
    const MullerCondition& cond_;
    std::unordered_map<VertexSet, ZielonkaTree> memo_;
};

} // namespace

ZielonkaTree build_zielonka_tree(const MullerCondition& condition)
{
    if (condition.universe().size() > kMaxTreeUniverse)
        throw UniverseTooLarge("Zielonka tree construction supports at most " +
                               std::to_string(kMaxTreeUniverse) + " vertices, got " +
                               std::to_string(condition.universe().size()));
    return TreeBuilder(condition).build(condition.universe());
}

} // namespace muller
