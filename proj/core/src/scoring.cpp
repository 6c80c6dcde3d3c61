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

#include "muller/scoring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "muller/errors.hpp"

namespace muller {

namespace reference {

std::uint32_t score(VertexSet set, std::span<const VertexId> word)
{
    if (set.empty()) return 0;
    std::uint32_t blocks = 0;
    std::size_t end = word.size();
    while (end > 0) {
        VertexSet block;
        std::size_t j = end;
        bool closed = false;
        while (j > 0) {
            const VertexId v = word[j - 1];
            if (!set.contains(v)) return blocks;
            block.insert(v);
            --j;
            if (block == set) {
                closed = true;
                break;
            }
        }
        if (!closed) return blocks;
        ++blocks;
        end = j;
    }
    return blocks;
}

std::uint32_t score_by_decomposition(VertexSet set, std::span<const VertexId> word)
{
    if (set.empty()) return 0;
    const std::size_t n = word.size();
    constexpr int impossible = -1;
    // best[p]: most blocks that tile word[p..n) exactly, each with occurrence set `set`.
    std::vector<int> best(n + 1, impossible);
    best[n] = 0;
    int result = 0;
    for (std::size_t p = n; p-- > 0;) {
        for (std::size_t q = p + 1; q <= n; ++q) {
            if (best[q] == impossible) continue;
            const VertexSet occ = occurrences(word.subspan(p, q - p));
            if (occ == set) best[p] = std::max(best[p], best[q] + 1);
        }
        result = std::max(result, best[p]);
    }
    return static_cast<std::uint32_t>(result);
}

VertexSet accumulator(VertexSet set, std::span<const VertexId> word)
{
    const std::uint32_t s = score(set, word);
    const std::size_t n = word.size();
    std::size_t len = 0;
    // Validity of a suffix length is prefix-closed, so extend one letter at a time.
    while (len < n) {
        const std::size_t cut = n - len - 1;
        if (!set.contains(word[cut])) break;
        if (score(set, word.first(cut)) != s) break;
        ++len;
    }
    return occurrences(word.last(len));
}

std::uint32_t max_score(std::span<const VertexSet> family, std::span<const VertexId> word)
{
    std::uint32_t best = 0;
    for (std::size_t len = 1; len <= word.size(); ++len)
        for (VertexSet f : family) best = std::max(best, score(f, word.first(len)));
    return best;
}

std::vector<VertexSet> suffix_occurrence_sets(std::span<const VertexId> word)
{
    std::vector<VertexSet> out;
    VertexSet occ;
    for (std::size_t j = word.size(); j-- > 0;) {
        const VertexSet grown = occ | VertexSet::singleton(word[j]);
        if (grown != occ) out.push_back(grown);
        occ = grown;
    }
    return out;
}

std::uint32_t max_score_all(std::span<const VertexId> word)
{
    std::uint32_t best = 0;
    for (std::size_t len = 1; len <= word.size(); ++len) {
        const auto prefix = word.first(len);
        for (VertexSet f : suffix_occurrence_sets(prefix)) best = std::max(best, score(f, prefix));
    }
    return best;
}

bool is_burden(std::span<const VertexId> word, std::span<const VertexSet> family)
{
    if (max_score(family, word) > 2) return false;
    for (VertexSet f : family) {
        const std::uint32_t s = score(f, word);
        if (s == 0) continue;
        if (s != 1 || !accumulator(f, word).empty()) return false;
    }
    return true;
}

VertexSet indicator(std::span<const VertexId> word, std::span<const VertexSet> family)
{
    VertexSet out;
    for (VertexSet f : family) {
        if (score(f, word) > 0) out |= f;
        out |= accumulator(f, word);
    }
    return out;
}

} // namespace reference

ScoreChain::ScoreChain(VertexId start) : last_(start)
{
    entries_.push_back({VertexSet::singleton(start), 1, VertexSet{}});
}

ScoreChain ScoreChain::of(std::span<const VertexId> word)
{
    if (word.empty()) throw std::invalid_argument("score chain of an empty play");
    ScoreChain chain(word.front());
    for (VertexId v : word.subspan(1)) chain.extend(v);
    return chain;
}

void ScoreChain::extend(VertexId v)
{
    const VertexSet letter = VertexSet::singleton(v);
    std::vector<ChainEntry> next;
    next.reserve(entries_.size() + 1);

    auto advance = [&](VertexSet set) {
        if (!next.empty() && next.back().set == set) return;
        // State of `set` before v: tracked if on the chain, otherwise score 0
        // with the largest chain set below it as accumulator.
        std::uint32_t s = 0;
        VertexSet acc;
        for (const ChainEntry& e : entries_) {
            if (e.set == set) {
                s = e.score;
                acc = e.accumulator;
                break;
            }
            if (!e.set.subset_of(set)) break;
            acc = e.set;
        }
        acc |= letter;
        if (acc == set)
            next.push_back({set, s + 1, VertexSet{}});
        else
            next.push_back({set, s, acc});
    };

    advance(letter);
    for (const ChainEntry& e : entries_) advance(e.set | letter);

    entries_ = std::move(next);
    last_ = v;
}

ScoreChain ScoreChain::extended(VertexId v) const
{
    ScoreChain copy = *this;
    copy.extend(v);
    return copy;
}

std::uint32_t ScoreChain::score(VertexSet set) const noexcept
{
    for (const ChainEntry& e : entries_)
        if (e.set == set) return e.score;
    return 0;
}

VertexSet ScoreChain::accumulator(VertexSet set) const noexcept
{
    VertexSet acc;
    for (const ChainEntry& e : entries_) {
        if (e.set == set) return e.accumulator;
        if (!e.set.subset_of(set)) break;
        acc = e.set;
    }
    return acc;
}

std::uint32_t ScoreChain::max_score(const SetPredicate& in_family) const
{
    std::uint32_t best = 0;
    for (const ChainEntry& e : entries_)
        if (e.score > best && in_family(e.set)) best = e.score;
    return best;
}

VertexSet ScoreChain::indicator(const SetPredicate& in_family, VertexSet universe) const
{
    // Every contribution is a chain set: a family set with positive score is
    // one, and accumulators are suffix occurrence sets. A chain set S_j is in
    // the union iff S_j itself is a family set or some family set off the
    // chain contains it (that set's accumulator is then at least S_j).
    auto on_chain = [this](VertexSet s) {
        return std::any_of(entries_.begin(), entries_.end(),
                           [s](const ChainEntry& e) { return e.set == s; });
    };
    for (std::size_t j = entries_.size(); j-- > 0;) {
        const VertexSet s = entries_[j].set;
        if (!s.subset_of(universe)) continue;
        if (in_family(s)) return s;
        const bool off_chain_superset = any_between(s, universe, [&](VertexSet f) {
            return f != s && in_family(f) && !on_chain(f);
        });
        if (off_chain_superset) return s;
    }
    return VertexSet{};
}

void ScoreChain::saturate(const std::function<std::uint32_t(VertexSet)>& cap)
{
    for (ChainEntry& e : entries_) e.score = std::min(e.score, cap(e.set));
}

std::string ScoreChain::key() const
{
    std::string k = std::to_string(last_);
    for (const ChainEntry& e : entries_) {
        k += '|';
        k += std::to_string(e.set.bits());
        k += ':';
        k += std::to_string(e.score);
        k += ':';
        k += std::to_string(e.accumulator.bits());
    }
    return k;
}

std::string ScoreChain::shape_key() const
{
    std::string k = std::to_string(last_);
    for (const ChainEntry& e : entries_) {
        k += '|';
        k += std::to_string(e.set.bits());
        k += ':';
        k += std::to_string(e.accumulator.bits());
    }
    return k;
}

std::uint32_t max_score(const SetPredicate& in_family, std::span<const VertexId> word)
{
    if (word.empty()) return 0;
    ScoreChain chain(word.front());
    std::uint32_t best = chain.max_score(in_family);
    for (VertexId v : word.subspan(1)) {
        chain.extend(v);
        best = std::max(best, chain.max_score(in_family));
    }
    return best;
}

std::optional<VertexSet> threshold_hit(const ScoreChain& before, const ScoreChain& after,
                                       const std::function<std::uint32_t(VertexSet)>& threshold)
{
    std::optional<VertexSet> hit;
    for (const ChainEntry& e : after.entries()) {
        const std::uint32_t t = threshold(e.set);
        if (e.score < t || before.score(e.set) >= t) continue;
        if (hit)
            throw std::logic_error("two sets " + hit->to_string() + " and " + e.set.to_string() +
                                   " reached their thresholds in the same step");
        hit = e.set;
    }
    return hit;
}

std::optional<VertexSet> threshold_hit(const ScoreChain& before, const ScoreChain& after,
                                       std::uint32_t k)
{
    return threshold_hit(before, after, [k](VertexSet) { return k; });
}

Play low_score_word(std::uint32_t k, std::uint32_t n, std::size_t max_length)
{
    if (k < 1 || n < 1) throw std::invalid_argument("low_score_word needs k >= 1 and n >= 1");
    std::size_t power = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (power > (max_length + 1) / k)
            throw LengthOverflow("w(" + std::to_string(k) + "," + std::to_string(n) +
                                 ") would exceed the length budget " + std::to_string(max_length));
        power *= k;
    }
    if (power - 1 > max_length)
        throw LengthOverflow("w(" + std::to_string(k) + "," + std::to_string(n) +
                             ") would exceed the length budget " + std::to_string(max_length));

    Play w(k - 1, 1);
    for (VertexId letter = 2; letter <= n; ++letter) {
        Play next;
        next.reserve(w.size() * k + k - 1);
        for (std::uint32_t rep = 0; rep + 1 < k; ++rep) {
            next.insert(next.end(), w.begin(), w.end());
            next.push_back(letter);
        }
        next.insert(next.end(), w.begin(), w.end());
        w = std::move(next);
    }
    return w;
}

} // namespace muller
