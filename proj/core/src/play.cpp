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

#include "muller/play.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "muller/errors.hpp"

namespace muller {

std::string Verdict::to_string() const
{
    const std::string w = std::to_string(index_of(winner));
    switch (kind) {
    case Kind::Stopped:
        return "stopped(winner=" + w + ", set=" + set.to_string() + ", step=" + std::to_string(step) + ")";
    case Kind::Lasso:
        return "lasso(winner=" + w + ", infinity=" + set.to_string() + ", cycle-start=" + std::to_string(step) + ")";
    case Kind::BudgetExhausted:
        break;
    }
    return "budget-exhausted";
}

std::optional<std::size_t> LassoDetector::observe(const std::string& key)
{
    if (auto it = seen_.find(key); it != seen_.end()) return it->second;
    if (count_ >= budget_)
        throw NotEventuallyPeriodic("no repetition within " + std::to_string(budget_) + " observations");
    seen_.emplace(key, count_++);
    return std::nullopt;
}

PlayRecord referee_play(const Arena& arena, const MullerCondition& condition, VertexId start, const Strategy& s0,
                        const Strategy& s1, const RefereeOptions& options)
{
    if (s0.player() != Player::Zero || s1.player() != Player::One)
        throw std::invalid_argument("referee_play expects a Player 0 strategy and a Player 1 strategy");
    if (start >= arena.size()) throw IllegalMove("start vertex " + std::to_string(start) + " is not in the arena");

    Play opening = options.prefix;
    opening.push_back(start);
    for (std::size_t t = 0; t < opening.size(); ++t) {
        if (opening[t] >= arena.size())
            throw IllegalMove("prefix vertex " + std::to_string(opening[t]) + " is not in the arena");
        if (t > 0 && !arena.has_edge(opening[t - 1], opening[t]))
            throw IllegalMove("prefix step " + std::to_string(opening[t - 1]) + "->" + std::to_string(opening[t]) +
                              " is not an edge");
    }

    std::function<std::uint32_t(VertexSet)> threshold;
    if (options.rule) {
        const StoppingRule rule = *options.rule;
        threshold = [rule](VertexSet s) { return stopping_threshold(rule, s); };
    }
    const bool detect_lasso = !options.rule && s0.finite_memory() && s1.finite_memory();

    PlayRecord rec;
    std::unique_ptr<StrategyCursor> cursors[2] = {s0.start(), s1.start()};
    LassoDetector lasso(options.budget);

    // Appends v; returns true once the verdict is settled.
    auto append = [&](VertexId v) -> bool {
        rec.steps.push_back(v);
        cursors[0]->push(v);
        cursors[1]->push(v);
        if (rec.chains.empty()) {
            rec.chains.emplace_back(v);
        } else {
            rec.chains.push_back(rec.chains.back().extended(v));
        }
        if (threshold) {
            std::optional<VertexSet> hit;
            if (rec.chains.size() == 1) {
                for (const ChainEntry& e : rec.chains.back().entries())
                    if (e.score >= threshold(e.set)) hit = e.set;
            } else {
                hit = threshold_hit(rec.chains[rec.chains.size() - 2], rec.chains.back(), threshold);
            }
            if (hit) {
                rec.verdict = {Verdict::Kind::Stopped, condition.membership(*hit), *hit, rec.steps.size()};
                return true;
            }
        }
        return false;
    };

    for (std::size_t t = 0; t < opening.size(); ++t)
        if (append(opening[t])) return rec;

    while (true) {
        const VertexId v = rec.steps.back();
        if (detect_lasso) {
            const std::string key =
                std::to_string(v) + "|" + cursors[0]->memory().value_or("?") + "|" + cursors[1]->memory().value_or("?");
            std::optional<std::size_t> earlier;
            try {
                earlier = lasso.observe(key);
            } catch (const NotEventuallyPeriodic&) {
                rec.verdict = {};
                return rec;
            }
            if (earlier) {
                const std::size_t from = opening.size() - 1 + *earlier;
                const VertexSet inf = occurrences(std::span<const VertexId>(rec.steps).subspan(from, rec.steps.size() - 1 - from));
                rec.verdict = {Verdict::Kind::Lasso, condition.membership(inf), inf, from};
                return rec;
            }
        }
        if (rec.steps.size() >= options.budget) {
            rec.verdict = {};
            return rec;
        }
        const Player owner = arena.owner(v);
        const Strategy& s = owner == Player::Zero ? s0 : s1;
        const VertexId next = s.move(*cursors[index_of(owner)], rec.steps);
        if (append(next)) return rec;
    }
}

namespace {

class BoundSearch
{
public:
    BoundSearch(const Arena& arena, const MullerCondition& condition, const Strategy& strategy,
                const VerifyOptions& options)
        : arena_(arena), strategy_(strategy), options_(options)
    {
        const Player opp = opponent(strategy.player());
        const MullerCondition* cond = &condition;
        in_family_ = [cond, opp](VertexSet s) { return !s.empty() && cond->membership(s) == opp; };
        const StoppingRule rule = options.rule;
        threshold_ = [rule](VertexSet s) { return stopping_threshold(rule, s); };
        depth_ = options.depth;
        if (depth_ == 0) {
            if (rule.kind != StoppingRule::Kind::Uniform)
                throw std::invalid_argument("verify_bound needs an explicit depth for the McNaughton rule");
            depth_ = 1;
            for (std::size_t i = 0; i < arena.size() && depth_ < 100'000'000; ++i) depth_ *= rule.k;
        }
    }

    BoundReport run()
    {
        std::vector<VertexId> starts;
        if (options_.start) {
            starts.push_back(*options_.start);
        } else {
            for (VertexId v : strategy_.domain()) starts.push_back(v);
        }
        if (options_.mode == VerifyOptions::Mode::Exhaustive) {
            for (VertexId v : starts) {
                Play play{v};
                auto cursor = strategy_.start();
                cursor->push(v);
                explore(play, ScoreChain(v), *cursor, false);
            }
        } else {
            if (starts.empty()) return report_;
            std::mt19937_64 rng(options_.seed);
            for (std::size_t trial = 0; trial < options_.trials; ++trial) random_play(rng, starts);
        }
        return report_;
    }

private:
    void record(const Play& play, const ScoreChain& chain)
    {
        const std::uint32_t s = chain.max_score(in_family_);
        if (!report_.witness || s > report_.max_opponent_score) {
            report_.max_opponent_score = s;
            report_.witness = play;
        }
    }

    void explore(Play& play, const ScoreChain& chain, const StrategyCursor& cursor, bool stopped)
    {
        if (++report_.nodes > options_.node_budget)
            throw BudgetExceeded("adversary search exceeded " + std::to_string(options_.node_budget) + " nodes");
        record(play, chain);
        if (stopped) {
            ++report_.plays;
            return;
        }
        if (play.size() >= depth_) {
            ++report_.plays;
            ++report_.depth_cutoffs;
            return;
        }
        const VertexId v = play.back();
        std::vector<VertexId> options;
        if (arena_.owner(v) == strategy_.player()) {
            options.push_back(strategy_.move(cursor, play));
        } else {
            const auto succ = arena_.successors(v);
            options.assign(succ.begin(), succ.end());
            std::sort(options.begin(), options.end());
        }
        for (VertexId u : options) {
            auto next_cursor = cursor.clone();
            next_cursor->push(u);
            const ScoreChain next_chain = chain.extended(u);
            const bool hit = threshold_hit(chain, next_chain, threshold_).has_value();
            play.push_back(u);
            explore(play, next_chain, *next_cursor, hit);
            play.pop_back();
        }
    }

    void random_play(std::mt19937_64& rng, const std::vector<VertexId>& starts)
    {
        const VertexId v0 = starts[std::uniform_int_distribution<std::size_t>(0, starts.size() - 1)(rng)];
        Play play{v0};
        ScoreChain chain(v0);
        auto cursor = strategy_.start();
        cursor->push(v0);
        record(play, chain);
        while (play.size() < depth_) {
            const VertexId v = play.back();
            VertexId u;
            if (arena_.owner(v) == strategy_.player()) {
                u = strategy_.move(*cursor, play);
            } else {
                const auto succ = arena_.successors(v);
                u = succ[std::uniform_int_distribution<std::size_t>(0, succ.size() - 1)(rng)];
            }
            play.push_back(u);
            cursor->push(u);
            chain.extend(u);
            ++report_.nodes;
            record(play, chain);
        }
        ++report_.plays;
    }

    const Arena& arena_;
    const Strategy& strategy_;
    const VerifyOptions& options_;
    SetPredicate in_family_;
    std::function<std::uint32_t(VertexSet)> threshold_;
    std::size_t depth_ = 0;
    BoundReport report_;
};

} // namespace

BoundReport verify_bound(const Arena& arena, const MullerCondition& condition, const Strategy& strategy,
                         const VerifyOptions& options)
{
    return BoundSearch(arena, condition, strategy, options).run();
}

BoundReport verify_bound(const Arena& arena, const MullerCondition& condition, std::shared_ptr<const Decomposition> d,
                         Player player, const VerifyOptions& options)
{
    if (d->region(player).empty())
        throw std::invalid_argument("player " + std::to_string(index_of(player)) + " has an empty region");
    const Strategy s = score_bounding_strategy(std::make_shared<const Arena>(arena), std::move(d), player);
    return verify_bound(arena, condition, s, options);
}

} // namespace muller
