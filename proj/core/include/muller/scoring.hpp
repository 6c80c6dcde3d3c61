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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "muller/vertex_set.hpp"

namespace muller {

/// A finite play prefix w ∈ V⁺.
using Play = std::vector<VertexId>;

using SetPredicate = std::function<bool(VertexSet)>;

/**
 * Scoring functions computed straight from their definitions by scanning
 * suffixes. Quadratic; used as ground truth for ScoreChain and wherever a
 * play is short.
 */
namespace reference {

/// Number of trailing blocks x1..xk of w with occ(xi) = F, maximised.
/// Uses a greedy right-to-left scan taking the shortest block each time.
std::uint32_t score(VertexSet set, std::span<const VertexId> word);

/// Same value by exhaustive dynamic programming over all block boundaries.
/// Cubic; only for cross-checking score() on short words.
std::uint32_t score_by_decomposition(VertexSet set, std::span<const VertexId> word);

/// occ(x) for the longest suffix x of w inside F along which score_F stays constant.
VertexSet accumulator(VertexSet set, std::span<const VertexId> word);

/// Highest score any listed set reaches on any prefix of w; 0 for an empty family.
std::uint32_t max_score(std::span<const VertexSet> family, std::span<const VertexId> word);

/// Highest score of any subset of V on any prefix of w.
std::uint32_t max_score_all(std::span<const VertexId> word);

/// Distinct occurrence sets of the suffixes of w, smallest first.
std::vector<VertexSet> suffix_occurrence_sets(std::span<const VertexId> word);

/// maxscore ≤ 2 and every listed set has score 0, or score 1 with empty accumulator.
bool is_burden(std::span<const VertexId> word, std::span<const VertexSet> family);

/// Union of the listed sets with positive score and of their non-empty accumulators.
VertexSet indicator(std::span<const VertexId> word, std::span<const VertexSet> family);

} // namespace reference

struct ChainEntry
{
    VertexSet set;
    std::uint32_t score = 0;
    VertexSet accumulator;

    friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
};

/**
 * Incremental score state of a play. The entries are exactly the occurrence
 * sets of the play's suffixes, smallest first, each with its score (always
 * at least 1) and accumulator. Scores and accumulators of any other set are
 * derived: the score is 0 and the accumulator is the largest entry set
 * contained in it.
 */
class ScoreChain
{
public:
    /// State of the one-letter play v.
    explicit ScoreChain(VertexId start);

    static ScoreChain of(std::span<const VertexId> word);

    /// Appends v in place.
    void extend(VertexId v);
    ScoreChain extended(VertexId v) const;

    std::span<const ChainEntry> entries() const noexcept { return entries_; }
    VertexId last_vertex() const noexcept { return last_; }

    std::uint32_t score(VertexSet set) const noexcept;
    VertexSet accumulator(VertexSet set) const noexcept;

    /// Highest current score among entries whose set satisfies the predicate.
    std::uint32_t max_score(const SetPredicate& in_family) const;

    /**
     * Union of all sets F with in_family(F), F ⊆ universe and positive score,
     * together with their accumulators. Sets off the chain are found by
     * scanning supersets of chain sets inside the universe.
     */
    VertexSet indicator(const SetPredicate& in_family, VertexSet universe) const;

    /// Caps every score at cap(set); used to keep product states finite.
    void saturate(const std::function<std::uint32_t(VertexSet)>& cap);

    /// Canonical text key including scores.
    std::string key() const;
    /// Canonical text key of sets and accumulators only. Everything score
    /// independent (indicator, future accumulators) is a function of this.
    std::string shape_key() const;

    friend bool operator==(const ScoreChain&, const ScoreChain&) = default;

private:
    VertexId last_;
    std::vector<ChainEntry> entries_;
};

/// Highest score any family set reaches on any prefix of w, computed via the chain.
std::uint32_t max_score(const SetPredicate& in_family, std::span<const VertexId> word);

/**
 * The set whose score reached k in the step from `before` to `after`, if any.
 * Requires that no entry of `before` is at or above k. Two sets reaching k
 * together would contradict first-hit uniqueness and raise std::logic_error.
 */
std::optional<VertexSet> threshold_hit(const ScoreChain& before, const ScoreChain& after,
                                       std::uint32_t k);

/// Same with a per-set threshold.
std::optional<VertexSet> threshold_hit(const ScoreChain& before, const ScoreChain& after,
                                       const std::function<std::uint32_t(VertexSet)>& threshold);

/**
 * The word w(k,n) over letters 1..n: w(k,1) = 1^(k-1),
 * w(k,n) = (w(k,n-1) n)^(k-1) w(k,n-1). Length k^n - 1.
 * Throws LengthOverflow when k^n - 1 exceeds max_length.
 */
Play low_score_word(std::uint32_t k, std::uint32_t n, std::size_t max_length = std::size_t{1} << 24);

} // namespace muller
