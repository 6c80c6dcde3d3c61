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
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "muller/condition.hpp"
#include "muller/finite_time.hpp"
#include "muller/scoring.hpp"
#include "muller/strategy.hpp"
#include "muller/zielonka.hpp"

namespace muller {

struct Verdict
{
    enum class Kind { Stopped, Lasso, BudgetExhausted };

    Kind kind = Kind::BudgetExhausted;
    /// Stopped: owner of the stopping set. Lasso: owner of the infinity set.
    Player winner = Player::Zero;
    /// Stopped: the set that hit its threshold. Lasso: the infinity set.
    VertexSet set;
    /// Stopped: length of the prefix at which the referee stopped.
    /// Lasso: index where the repeated cycle starts.
    std::size_t step = 0;

    std::string to_string() const;
};

struct PlayRecord
{
    Play steps;
    /// chains[t] is the score state after steps[0..t].
    std::vector<ScoreChain> chains;
    Verdict verdict;
};

struct RefereeOptions
{
    /// No rule: the play runs until a lasso is found or the budget ends.
    std::optional<StoppingRule> rule = StoppingRule::uniform(3);
    /// Maximal play length.
    std::size_t budget = 10'000;
    /// History w played before the start vertex v; the play is w·v·…
    Play prefix;
};

/**
 * Detects the first repetition of (vertex, memory) keys. observe() returns
 * the index of the earlier occurrence when the current key was seen before.
 */
class LassoDetector
{
public:
    explicit LassoDetector(std::size_t budget) : budget_(budget) {}

    /// Throws NotEventuallyPeriodic once more than `budget` keys were observed without repetition.
    std::optional<std::size_t> observe(const std::string& key);

private:
    std::size_t budget_;
    std::size_t count_ = 0;
    std::unordered_map<std::string, std::size_t> seen_;
};

/**
 * Plays s0 against s1 from `start`, asking the owner's strategy at every
 * vertex, scoring each prefix and stopping at the first threshold hit.
 * Without a rule, a lasso is looked for when both strategies are
 * finite-memory. Throws StrategyOffDomain when a strategy is undefined,
 * IllegalMove on a prefix that is not a path.
 */
PlayRecord referee_play(const Arena& arena, const MullerCondition& condition, VertexId start, const Strategy& s0,
                        const Strategy& s1, const RefereeOptions& options = {});

struct VerifyOptions
{
    enum class Mode { Exhaustive, Random };

    Mode mode = Mode::Exhaustive;
    /// Longest play explored; 0 means |V|-th power of the rule's threshold.
    std::size_t depth = 0;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    /// Start vertex; by default every vertex of the player's region.
    std::optional<VertexId> start;
    /// Exhaustive mode stops each branch when this rule's referee would.
    StoppingRule rule = StoppingRule::uniform(3);
    std::size_t node_budget = 50'000'000;
};

struct BoundReport
{
    std::uint32_t max_opponent_score = 0;
    /// First prefix, in lexicographic play order, attaining the maximum.
    std::optional<Play> witness;
    std::size_t plays = 0;
    std::size_t nodes = 0;
    /// Number of plays cut by the depth limit before the referee stopped them.
    std::size_t depth_cutoffs = 0;
};

/**
 * Highest score any opponent set (a set of the other player's family)
 * reaches against the player's score-bounding strategy. Exhaustive mode
 * branches over every opponent choice in ascending successor order; random
 * mode samples uniform opponents with a seeded generator and runs each play
 * to full depth. Throws BudgetExceeded when node_budget is exhausted.
 */
BoundReport verify_bound(const Arena& arena, const MullerCondition& condition, std::shared_ptr<const Decomposition> d,
                         Player player, const VerifyOptions& options);

/// Same, against an arbitrary strategy of `player`.
BoundReport verify_bound(const Arena& arena, const MullerCondition& condition, const Strategy& strategy,
                         const VerifyOptions& options);

} // namespace muller
