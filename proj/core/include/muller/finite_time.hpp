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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "muller/arena.hpp"
#include "muller/condition.hpp"
#include "muller/scoring.hpp"
#include "muller/strategy.hpp"

namespace muller {

/// When the referee stops a play: as soon as some set's score reaches k
/// (uniform), or reaches |F|! + 1 (McNaughton).
struct StoppingRule
{
    enum class Kind { Uniform, McNaughton };

    Kind kind = Kind::Uniform;
    std::uint32_t k = 3;

    /// Throws std::invalid_argument for k < 2.
    static StoppingRule uniform(std::uint32_t k);
    static StoppingRule mcnaughton() { return {Kind::McNaughton, 0}; }

    /// "uniform(3)" or "mcnaughton".
    std::string name() const;

    friend bool operator==(const StoppingRule&, const StoppingRule&) = default;
};

/// Per-set stopping score. Throws ThresholdOverflow if |F|! + 1 does not fit in 32 bits.
std::uint32_t stopping_threshold(const StoppingRule& rule, VertexSet set);

struct ProductState
{
    VertexId vertex = 0;
    /// Score state of the play so far; scores never exceed the set's threshold.
    ScoreChain chain{0};
    /// The set whose score reached its threshold at this state, if the play is over.
    std::optional<VertexSet> stop_set;

    bool stopped() const noexcept { return stop_set.has_value(); }
};

/**
 * Finite-time game as a reachability game on (vertex, score chain) states.
 * Successor lists follow the arena's successor order.
 */
struct ProductGame
{
    StoppingRule rule;
    std::vector<ProductState> states;
    std::vector<std::vector<std::uint32_t>> successors;
    /// initial[v]: state of the one-vertex play v, for every arena vertex.
    std::vector<std::uint32_t> initial;
};

inline constexpr std::size_t kDefaultStateCap = 5'000'000;

/**
 * Builds every state reachable from the one-vertex plays. Throws
 * StateBudgetExceeded past state_cap states and AcyclicityViolation if the
 * running states contain a cycle.
 */
ProductGame build_product(const Arena& arena, const MullerCondition& condition, const StoppingRule& rule,
                          std::size_t state_cap = kDefaultStateCap);

/// Throws AcyclicityViolation naming a state on a cycle of running states.
void check_acyclic(const ProductGame& pg);

/// Largest number of vertices in a play from an initial state to a stop.
std::size_t max_play_length(const ProductGame& pg);

struct FiniteSolution
{
    /// Winner of every product state under optimal play.
    std::vector<Player> state_winner;
    /// Winner from each arena vertex.
    std::vector<Player> vertex_winner;
    VertexSet w0;
    VertexSet w1;

    VertexSet region(Player p) const noexcept { return p == Player::Zero ? w0 : w1; }
};

/// Backward induction over the acyclic product.
FiniteSolution solve_reachability(const Arena& arena, const ProductGame& pg, const MullerCondition& condition);

/// Convenience: build and solve.
FiniteSolution solve_finite(const Arena& arena, const MullerCondition& condition, const StoppingRule& rule,
                            std::size_t state_cap = kDefaultStateCap);

/**
 * Winning strategy read off the solved product: at each state pick the first
 * successor that stays winning. Defined on the player's finite-time region;
 * OffDomain on losing or stopped states.
 */
Strategy extract_finite_strategy(std::shared_ptr<const Arena> arena, std::shared_ptr<const ProductGame> pg,
                                 std::shared_ptr<const FiniteSolution> solution, Player player);

/**
 * Winner from `start` by plain minimax over explicit plays, scoring each
 * prefix with the reference functions. No memoisation; only for tiny arenas.
 */
Player solve_play_tree(const Arena& arena, const MullerCondition& condition, const StoppingRule& rule,
                       VertexId start);

} // namespace muller
