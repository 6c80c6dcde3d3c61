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

#include "muller/zielonka.hpp"

#include <sstream>
#include <stdexcept>

#include "muller/errors.hpp"

namespace muller {

VertexSet RoundRecord::sub_region(Player p) const
{
    return sub ? sub->region(p) : VertexSet{};
}

std::span<const RoundRecord> Decomposition::final_rounds() const noexcept
{
    const std::size_t k = branch();
    if (k == 0 || rounds.size() < k) return {};
    return std::span<const RoundRecord>(rounds).last(k);
}

std::size_t Decomposition::round_of_loser_vertex(VertexId v) const
{
    const Player loser = opponent(root_owner);
    if (!region(loser).contains(v))
        throw OffDomain("vertex " + std::to_string(v) + " is not in the region of player " +
                        std::to_string(index_of(loser)));
    for (std::size_t m = 0; m < rounds.size(); ++m)
        if (rounds[m].u.contains(v)) return m;
    throw std::logic_error("loser vertex outside every U_n");
}

namespace {

std::shared_ptr<const Decomposition> solve_node(const Arena& arena, VertexSet domain,
                                                std::shared_ptr<const ZielonkaTree> tree)
{
    auto d = std::make_shared<Decomposition>();
    d->vertices = domain;
    d->tree = tree;
    const Player i = tree->owner;
    d->root_owner = i;

    if (domain.empty()) return d;
    if (tree->is_leaf()) {
        (i == Player::Zero ? d->w0 : d->w1) = domain;
        return d;
    }

    const std::size_t k = tree->branch();
    std::vector<VertexSet> u{VertexSet{}};
    for (std::uint32_t n = 1;; ++n) {
        RoundRecord r;
        r.n = n;
        r.child_index = n % k;
        r.tree = std::shared_ptr<const ZielonkaTree>(tree, &tree->children[r.child_index]);

        r.opponent_attractor = attractor(arena, opponent(i), u.back(), domain);
        r.a = r.opponent_attractor.attractor;
        r.x = domain - r.a;
        r.z = r.x - r.tree->label;
        r.escape = attractor(arena, i, r.z, r.x);
        r.y = r.x - r.escape.attractor;
        r.sub = solve_node(arena, r.y, r.tree);
        r.u = r.a | r.sub->region(opponent(i));

        if (!u.back().subset_of(r.u)) throw std::logic_error("U sequence is not monotone");
        u.push_back(r.u);
        d->rounds.push_back(std::move(r));

        if (n >= k) {
            bool stable = true;
            for (std::size_t j = n - k; j < n; ++j)
                if (u[j] != u[n]) {
                    stable = false;
                    break;
                }
            if (stable) break;
        }
    }

    const VertexSet lost = u.back();
    (i == Player::Zero ? d->w1 : d->w0) = lost;
    (i == Player::Zero ? d->w0 : d->w1) = domain - lost;
    return d;
}

void describe_into(std::ostringstream& out, const Decomposition& d, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    out << pad << "node label=" << d.tree->label << " owner=" << d.root_owner << " V=" << d.vertices
        << " W0=" << d.w0 << " W1=" << d.w1 << '\n';
    for (const RoundRecord& r : d.rounds) {
        out << pad << " round " << r.n << " child=" << r.child_index << " T=" << r.tree->label
            << " A=" << r.a << " X=" << r.x << " Z=" << r.z << " Y=" << r.y << " U=" << r.u << '\n';
        if (r.sub && !r.sub->vertices.empty()) describe_into(out, *r.sub, indent + 1);
    }
}

} // namespace

std::shared_ptr<const Decomposition> solve(const Arena& arena, std::shared_ptr<const ZielonkaTree> tree)
{
    if (!tree) throw std::invalid_argument("solve needs a Zielonka tree");
    if (!arena.vertices().subset_of(tree->label))
        throw InvalidCondition("arena vertices " + arena.vertices().to_string() +
                               " are not inside the condition universe " + tree->label.to_string());
    return solve_node(arena, arena.vertices(), std::move(tree));
}

std::shared_ptr<const Decomposition> solve(const Arena& arena, const MullerCondition& condition)
{
    return solve(arena, std::make_shared<const ZielonkaTree>(build_zielonka_tree(condition)));
}

std::pair<VertexSet, VertexSet> winning_regions(const Decomposition& d)
{
    return {d.w0, d.w1};
}

std::string describe(const Decomposition& d)
{
    std::ostringstream out;
    describe_into(out, d, 0);
    return out.str();
}

} // namespace muller
