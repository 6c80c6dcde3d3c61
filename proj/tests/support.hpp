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

// Test-only oracles. Nothing here calls into the solver or the scoring code
// it is meant to check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "muller/arena.hpp"
#include "muller/condition.hpp"
#include "muller/game_io.hpp"
#include "muller/strategy.hpp"

namespace muller::testing {

// ---- random inputs -------------------------------------------------------

inline Arena random_arena(std::mt19937_64& rng, std::size_t n, std::size_t max_degree = 3)
{
    std::vector<Player> owners(n);
    std::vector<std::vector<VertexId>> succ(n);
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), 0U);
    for (std::size_t v = 0; v < n; ++v) {
        owners[v] = rng() % 2 ? Player::One : Player::Zero;
        const std::size_t deg = 1 + rng() % std::min(max_degree, n);
        std::shuffle(all.begin(), all.end(), rng);
        succ[v].assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(deg));
    }
    return Arena(owners, succ);
}

inline MullerCondition random_condition(std::mt19937_64& rng, VertexSet universe)
{
    std::vector<VertexSet> f0;
    const std::uint64_t full = universe.bits();
    for (std::uint64_t s = full; s != 0; s = (s - 1) & full)
        if (rng() % 2) f0.emplace_back(s);
    return MullerCondition(universe, f0);
}

inline GameFile random_game_file(std::mt19937_64& rng, std::size_t n)
{
    Arena a = random_arena(rng, n);
    MullerCondition c = random_condition(rng, a.vertices());
    return GameFile{std::move(a), std::move(c), std::nullopt};
}

inline std::vector<VertexId> random_word(std::mt19937_64& rng, std::size_t letters, std::size_t length)
{
    std::vector<VertexId> w(length);
    for (auto& x : w) x = static_cast<VertexId>(rng() % letters);
    return w;
}

/// Calls f on every word of the given length over letters 0..letters-1.
template <class F>
void for_each_word(std::size_t letters, std::size_t length, F&& f)
{
    std::vector<VertexId> w(length, 0);
    while (true) {
        f(std::as_const(w));
        std::size_t i = length;
        while (i > 0 && w[i - 1] + 1 == letters) w[--i] = 0;
        if (i == 0) return;
        ++w[i - 1];
    }
}

// ---- attractor by naive fixpoint ------------------------------------------

inline VertexSet naive_attractor(const Arena& a, Player p, VertexSet target, VertexSet domain)
{
    VertexSet attr = target & domain;
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId v : domain - attr) {
            bool any = false, all = true;
            for (VertexId s : a.successors(v)) {
                if (!domain.contains(s)) continue;
                if (attr.contains(s)) any = true; else all = false;
            }
            if (a.owner(v) == p ? any : all) {
                attr.insert(v);
                changed = true;
            }
        }
    }
    return attr;
}

// ---- Muller games via latest appearance records and parity -----------------

struct ParityGame
{
    std::vector<Player> owner;
    std::vector<int> priority;
    std::vector<std::vector<std::size_t>> succ;
};

// Max-priority parity: Player 0 wins iff the largest priority seen infinitely often is even.
inline std::vector<bool> parity_win0(const ParityGame& g)
{
    const std::size_t n = g.owner.size();
    std::function<std::pair<std::vector<bool>, std::vector<bool>>(std::vector<bool>)> solve =
        [&](std::vector<bool> live) {
            std::vector<bool> w0(n, false), w1(n, false);
            int maxp = -1;
            for (std::size_t v = 0; v < n; ++v)
                if (live[v]) maxp = std::max(maxp, g.priority[v]);
            if (maxp < 0) return std::make_pair(w0, w1);
            const Player p = maxp % 2 == 0 ? Player::Zero : Player::One;
            auto attr = [&](Player who, std::vector<bool> target) {
                bool changed = true;
                while (changed) {
                    changed = false;
                    for (std::size_t v = 0; v < n; ++v) {
                        if (!live[v] || target[v]) continue;
                        bool any = false, all = true;
                        for (auto s : g.succ[v]) {
                            if (!live[s]) continue;
                            if (target[s]) any = true; else all = false;
                        }
                        if (g.owner[v] == who ? any : all) {
                            target[v] = true;
                            changed = true;
                        }
                    }
                }
                return target;
            };
            std::vector<bool> top(n, false);
            for (std::size_t v = 0; v < n; ++v) top[v] = live[v] && g.priority[v] == maxp;
            const std::vector<bool> a = attr(p, top);
            std::vector<bool> rest(n);
            for (std::size_t v = 0; v < n; ++v) rest[v] = live[v] && !a[v];
            auto [r0, r1] = solve(rest);
            const std::vector<bool>& opp_win = p == Player::Zero ? r1 : r0;
            if (std::none_of(opp_win.begin(), opp_win.end(), [](bool b) { return b; })) {
                for (std::size_t v = 0; v < n; ++v) (p == Player::Zero ? w0 : w1)[v] = live[v];
                return std::make_pair(w0, w1);
            }
            const std::vector<bool> b = attr(opponent(p), opp_win);
            std::vector<bool> rest2(n);
            for (std::size_t v = 0; v < n; ++v) rest2[v] = live[v] && !b[v];
            auto [s0, s1] = solve(rest2);
            for (std::size_t v = 0; v < n; ++v) {
                if (!live[v]) continue;
                if (b[v]) (p == Player::Zero ? w1 : w0)[v] = true;
                else (s0[v] ? w0 : w1)[v] = true;
            }
            return std::make_pair(w0, w1);
        };
    return solve(std::vector<bool>(n, true)).first;
}

/**
 * Winning regions of a Muller game computed on the product with a latest
 * appearance record (a permutation of V, most recent first). Moving v to the
 * front from index h gives priority 2h+2 if the h+1 most recent vertices form
 * an F0 set, else 2h+1.
 */
inline std::pair<VertexSet, VertexSet> lar_regions(const Arena& a, const MullerCondition& c)
{
    const std::size_t n = a.size();
    // A state is the record after the move plus the hit position, which fixes its priority.
    std::map<std::pair<std::size_t, std::vector<VertexId>>, std::size_t> index;
    ParityGame g;
    std::vector<std::pair<std::size_t, std::vector<VertexId>>> states;
    auto visit = [&](std::vector<VertexId> record, VertexId v, std::size_t& id) {
        auto it = std::find(record.begin(), record.end(), v);
        const auto h = static_cast<std::size_t>(it - record.begin());
        record.erase(it);
        record.insert(record.begin(), v);
        VertexSet recent;
        for (std::size_t i = 0; i <= h; ++i) recent.insert(record[i]);
        auto key = std::make_pair(h, record);
        auto [pos, fresh] = index.emplace(key, states.size());
        id = pos->second;
        if (fresh) {
            states.push_back(key);
            g.owner.push_back(a.owner(v));
            g.priority.push_back(static_cast<int>(2 * h + (c.in_f0(recent) ? 2 : 1)));
            g.succ.emplace_back();
        }
        return fresh;
    };
    std::vector<VertexId> identity(n);
    std::iota(identity.begin(), identity.end(), 0U);
    std::vector<std::size_t> initial(n);
    std::vector<std::size_t> todo;
    for (VertexId v = 0; v < n; ++v)
        if (visit(identity, v, initial[v])) todo.push_back(initial[v]);
    while (!todo.empty()) {
        const std::size_t s = todo.back();
        todo.pop_back();
        const auto [h, record] = states[s];
        for (VertexId t : a.successors(record.front())) {
            std::size_t id = 0;
            if (visit(record, t, id)) todo.push_back(id);
            g.succ[s].push_back(id);
        }
    }
    const std::vector<bool> win0 = parity_win0(g);
    VertexSet w0, w1;
    for (VertexId v = 0; v < n; ++v) (win0[initial[v]] ? w0 : w1).insert(v);
    return {w0, w1};
}

// ---- positional opponents --------------------------------------------------

/// Every positional strategy of `player`, as choice vectors.
inline std::vector<std::vector<std::optional<VertexId>>> all_positional(const Arena& a, Player player)
{
    std::vector<std::vector<std::optional<VertexId>>> out(1, std::vector<std::optional<VertexId>>(a.size()));
    for (VertexId v = 0; v < a.size(); ++v) {
        if (a.owner(v) != player) continue;
        std::vector<std::vector<std::optional<VertexId>>> next;
        for (const auto& base : out)
            for (VertexId s : a.successors(v)) {
                next.push_back(base);
                next.back()[v] = s;
            }
        out = std::move(next);
    }
    return out;
}

} // namespace muller::testing
