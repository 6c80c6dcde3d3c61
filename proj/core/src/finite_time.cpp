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

#include "muller/finite_time.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "muller/errors.hpp"

namespace muller {

StoppingRule StoppingRule::uniform(std::uint32_t k)
{
    if (k < 2) throw std::invalid_argument("uniform stopping threshold must be at least 2");
    return {Kind::Uniform, k};
}

std::string StoppingRule::name() const
{
    return kind == Kind::Uniform ? "uniform(" + std::to_string(k) + ")" : "mcnaughton";
}

std::uint32_t stopping_threshold(const StoppingRule& rule, VertexSet set)
{
    if (rule.kind == StoppingRule::Kind::Uniform) return rule.k;
    std::uint64_t f = 1;
    for (std::uint64_t m = 2; m <= set.size(); ++m) {
        f *= m;
        if (f >= std::numeric_limits<std::uint32_t>::max())
            throw ThresholdOverflow("|F|! + 1 overflows for |F| = " + std::to_string(set.size()));
    }
    return static_cast<std::uint32_t>(f + 1);
}

namespace {

class ThresholdCache
{
public:
    explicit ThresholdCache(StoppingRule rule) : rule_(rule) {}

    std::uint32_t operator()(VertexSet s)
    {
        if (rule_.kind == StoppingRule::Kind::Uniform) return rule_.k;
        auto [it, fresh] = cache_.try_emplace(s, 0);
        if (fresh) it->second = stopping_threshold(rule_, s);
        return it->second;
    }

private:
    StoppingRule rule_;
    std::unordered_map<VertexSet, std::uint32_t> cache_;
};

/// Running states in an order where every state comes after its running successors.
std::vector<std::uint32_t> post_order(const ProductGame& pg)
{
    enum : std::uint8_t { White, Grey, Black };
    std::vector<std::uint8_t> colour(pg.states.size(), White);
    std::vector<std::uint32_t> order;
    order.reserve(pg.states.size());
    std::vector<std::pair<std::uint32_t, std::size_t>> stack;

    for (std::uint32_t root = 0; root < pg.states.size(); ++root) {
        if (colour[root] != White || pg.states[root].stopped()) continue;
        colour[root] = Grey;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [s, next] = stack.back();
            if (next < pg.successors[s].size()) {
                const std::uint32_t t = pg.successors[s][next++];
                if (pg.states[t].stopped()) continue;
                if (colour[t] == Grey)
                    throw AcyclicityViolation("running product states form a cycle through vertex " +
                                              std::to_string(pg.states[t].vertex) + " with chain " +
                                              pg.states[t].chain.key());
                if (colour[t] == White) {
                    colour[t] = Grey;
                    stack.emplace_back(t, 0);
                }
            } else {
                colour[s] = Black;
                order.push_back(s);
                stack.pop_back();
            }
        }
    }
    return order;
}

} // namespace

ProductGame build_product(const Arena& arena, const MullerCondition& condition, const StoppingRule& rule,
                          std::size_t state_cap)
{
    if (!arena.vertices().subset_of(condition.universe()))
        throw InvalidCondition("arena vertices are not inside the condition universe");
    ThresholdCache threshold(rule);
    std::function<std::uint32_t(VertexSet)> thr = [&threshold](VertexSet s) { return threshold(s); };

    ProductGame pg;
    pg.rule = rule;
    std::unordered_map<std::string, std::uint32_t> index;
    std::deque<std::uint32_t> queue;

    auto add = [&](ProductState st) -> std::uint32_t {
        std::string key = st.chain.key();
        if (auto it = index.find(key); it != index.end()) return it->second;
        if (pg.states.size() >= state_cap)
            throw StateBudgetExceeded("product game exceeds " + std::to_string(state_cap) + " states");
        const auto id = static_cast<std::uint32_t>(pg.states.size());
        index.emplace(std::move(key), id);
        const bool running = !st.stopped();
        pg.states.push_back(std::move(st));
        pg.successors.emplace_back();
        if (running) queue.push_back(id);
        return id;
    };

    for (VertexId v = 0; v < arena.size(); ++v) {
        ProductState st;
        st.vertex = v;
        st.chain = ScoreChain(v);
        if (thr(VertexSet::singleton(v)) <= 1) st.stop_set = VertexSet::singleton(v);
        pg.initial.push_back(add(std::move(st)));
    }

    while (!queue.empty()) {
        const std::uint32_t s = queue.front();
        queue.pop_front();
        const VertexId v = pg.states[s].vertex;
        for (VertexId u : arena.successors(v)) {
            ProductState next;
            next.vertex = u;
            next.chain = pg.states[s].chain.extended(u);
            next.stop_set = threshold_hit(pg.states[s].chain, next.chain, thr);
            if (next.stop_set) next.chain.saturate(thr);
            const std::uint32_t t = add(std::move(next));
            pg.successors[s].push_back(t);
        }
    }

    check_acyclic(pg);
    return pg;
}

void check_acyclic(const ProductGame& pg)
{
    (void)post_order(pg);
}

std::size_t max_play_length(const ProductGame& pg)
{
    std::vector<std::size_t> len(pg.states.size(), 1);
    for (std::uint32_t s : post_order(pg)) {
        std::size_t best = 0;
        for (std::uint32_t t : pg.successors[s]) best = std::max(best, len[t]);
        len[s] = best + 1;
    }
    std::size_t out = 0;
    for (std::uint32_t s : pg.initial) out = std::max(out, len[s]);
    return out;
}

FiniteSolution solve_reachability(const Arena& arena, const ProductGame& pg, const MullerCondition& condition)
{
    FiniteSolution sol;
    sol.state_winner.assign(pg.states.size(), Player::One);
    for (std::uint32_t s = 0; s < pg.states.size(); ++s)
        if (pg.states[s].stopped()) sol.state_winner[s] = condition.membership(*pg.states[s].stop_set);

    for (std::uint32_t s : post_order(pg)) {
        const Player p = arena.owner(pg.states[s].vertex);
        const auto& succ = pg.successors[s];
        const bool wins = std::any_of(succ.begin(), succ.end(),
                                      [&](std::uint32_t t) { return sol.state_winner[t] == p; });
        sol.state_winner[s] = wins ? p : opponent(p);
    }

    for (VertexId v = 0; v < pg.initial.size(); ++v) {
        const Player w = sol.state_winner[pg.initial[v]];
        sol.vertex_winner.push_back(w);
        (w == Player::Zero ? sol.w0 : sol.w1).insert(v);
    }
    return sol;
}

FiniteSolution solve_finite(const Arena& arena, const MullerCondition& condition, const StoppingRule& rule,
                            std::size_t state_cap)
{
    const ProductGame pg = build_product(arena, condition, rule, state_cap);
    return solve_reachability(arena, pg, condition);
}

namespace {

class ProductCursor final : public StrategyCursor
{
public:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    ProductCursor(std::shared_ptr<const ProductGame> pg, std::shared_ptr<const FiniteSolution> sol, Player p)
        : pg_(std::move(pg)), sol_(std::move(sol)), p_(p)
    {
    }

    void push(VertexId v) override
    {
        if (!started_) {
            started_ = true;
            state_ = v < pg_->initial.size() ? pg_->initial[v] : kNone;
            return;
        }
        if (state_ == kNone || pg_->states[state_].stopped()) {
            state_ = kNone;
            return;
        }
        std::uint32_t next = kNone;
        for (std::uint32_t t : pg_->successors[state_])
            if (pg_->states[t].vertex == v) next = t;
        state_ = next;
    }

    VertexId move() const override
    {
        if (state_ == kNone) throw OffDomain("prefix is not a play of the product game");
        if (pg_->states[state_].stopped()) throw OffDomain("the referee has already stopped this play");
        if (sol_->state_winner[state_] != p_) throw OffDomain("product state is losing for the player");
        for (std::uint32_t t : pg_->successors[state_])
            if (sol_->state_winner[t] == p_) return pg_->states[t].vertex;
        throw std::logic_error("winning product state without a winning successor");
    }

    std::optional<std::string> memory() const override { return std::to_string(state_); }
    std::unique_ptr<StrategyCursor> clone() const override { return std::make_unique<ProductCursor>(*this); }

private:
    std::shared_ptr<const ProductGame> pg_;
    std::shared_ptr<const FiniteSolution> sol_;
    Player p_;
    bool started_ = false;
    std::uint32_t state_ = kNone;
};

} // namespace

Strategy extract_finite_strategy(std::shared_ptr<const Arena> arena, std::shared_ptr<const ProductGame> pg,
                                 std::shared_ptr<const FiniteSolution> solution, Player player)
{
    const VertexSet region = solution->region(player);
    return Strategy(std::move(arena), player, region, "finite", true, [pg, solution, player] {
        return std::make_unique<ProductCursor>(pg, solution, player);
    });
}

namespace {

class PlayTree
{
public:
    PlayTree(const Arena& arena, const MullerCondition& cond, const StoppingRule& rule)
        : arena_(arena), cond_(cond), threshold_(rule)
    {
    }

    Player solve(VertexId start)
    {
        play_.assign(1, start);
        if (auto hit = stop()) return cond_.membership(*hit);
        return run();
    }

private:
    std::optional<VertexSet> stop()
    {
        for (VertexSet f : reference::suffix_occurrence_sets(play_))
            if (reference::score(f, play_) >= threshold_(f)) return f;
        return std::nullopt;
    }

    Player run()
    {
        const Player p = arena_.owner(play_.back());
        for (VertexId u : arena_.successors(play_.back())) {
            play_.push_back(u);
            const auto hit = stop();
            const Player w = hit ? cond_.membership(*hit) : run();
            play_.pop_back();
            if (w == p) return p;
        }
        return opponent(p);
    }

    const Arena& arena_;
    const MullerCondition& cond_;
    ThresholdCache threshold_;
    Play play_;
};

} // namespace

Player solve_play_tree(const Arena& arena, const MullerCondition& condition, const StoppingRule& rule,
                       VertexId start)
{
    if (start >= arena.size()) throw std::out_of_range("start vertex outside the arena");
    return PlayTree(arena, condition, rule).solve(start);
}

} // namespace muller
