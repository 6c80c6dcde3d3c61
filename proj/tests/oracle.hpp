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

// Definitional scores, written out straight from the definitions and kept
// apart from the library's reference:: functions.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "muller/vertex_set.hpp"

namespace muller::oracle {

inline VertexSet occ(std::span<const VertexId> w, std::size_t from, std::size_t to)
{
    VertexSet s;
    for (std::size_t i = from; i < to; ++i) s.insert(w[i]);
    return s;
}

/// Largest k with w = u x1..xk, occ(xi) = F. Dynamic programme over block ends.
inline std::uint32_t score(VertexSet f, std::span<const VertexId> w)
{
    const std::size_t n = w.size();
    if (f.empty()) return 0;
    // blocks[i]: most blocks exactly tiling w[i..n), or -1
    std::vector<int> blocks(n + 1, -1);
    blocks[n] = 0;
    int best = 0;
    for (std::size_t i = n; i-- > 0;) {
        VertexSet s;
        for (std::size_t j = i; j < n; ++j) {
            s.insert(w[j]);
            if (!s.subset_of(f)) break;
            if (s == f && blocks[j + 1] >= 0) blocks[i] = std::max(blocks[i], blocks[j + 1] + 1);
        }
        best = std::max(best, blocks[i]);
    }
    return static_cast<std::uint32_t>(best);
}

/// occ(x) for the longest suffix x ⊆ F with score_F(w minus x) = score_F(w).
inline VertexSet accumulator(VertexSet f, std::span<const VertexId> w)
{
    const std::uint32_t s = score(f, w);
    std::size_t m = 0;
    while (m < w.size() && f.contains(w[w.size() - 1 - m]) && score(f, w.first(w.size() - 1 - m)) == s) ++m;
    return occ(w, w.size() - m, w.size());
}

/// max over sets in the family and over prefixes.
inline std::uint32_t max_score(std::span<const VertexSet> family, std::span<const VertexId> w)
{
    std::uint32_t best = 0;
    for (std::size_t t = 1; t <= w.size(); ++t)
        for (VertexSet f : family) best = std::max(best, score(f, w.first(t)));
    return best;
}

/// Every non-empty subset of occ(w).
inline std::vector<VertexSet> nonempty_subsets(VertexSet u)
{
    std::vector<VertexSet> out;
    for (std::uint64_t s = u.bits(); s != 0; s = (s - 1) & u.bits()) out.emplace_back(s);
    return out;
}

inline VertexSet indicator(std::span<const VertexId> w, std::span<const VertexSet> family)
{
    VertexSet out;
    for (VertexSet f : family) {
        if (score(f, w) > 0) out |= f;
        out |= accumulator(f, w);
    }
    return out;
}

} // namespace muller::oracle
