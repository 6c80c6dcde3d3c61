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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>

namespace muller {

using VertexId = unsigned;

/// Hard cap on arena and condition universes; a VertexSet is one machine word.
inline constexpr std::size_t kMaxVertices = 64;

enum class Player : std::uint8_t { Zero = 0, One = 1 };

constexpr Player opponent(Player p) noexcept
{
    return p == Player::Zero ? Player::One : Player::Zero;
}

constexpr int index_of(Player p) noexcept { return static_cast<int>(p); }

inline Player player_from_index(int i)
{
    if (i != 0 && i != 1) throw std::invalid_argument("player must be 0 or 1");
    return static_cast<Player>(i);
}

std::ostream& operator<<(std::ostream& os, Player p);

/**
 * Set of vertex ids below kMaxVertices, stored as a 64-bit mask.
 * Iteration visits members in ascending order.
 */
class VertexSet
{
public:
    class iterator
    {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}

        constexpr VertexId operator*() const noexcept
        {
            return static_cast<VertexId>(std::countr_zero(rest_));
        }
        constexpr iterator& operator++() noexcept
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) noexcept
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        friend constexpr bool operator==(iterator, iterator) noexcept = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
    VertexSet(std::initializer_list<VertexId> members);

    /// {0, ..., n-1}
    static constexpr VertexSet first_n(std::size_t n)
    {
        if (n > kMaxVertices) throw std::out_of_range("vertex universe exceeds 64");
        return VertexSet(n == kMaxVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet singleton(VertexId v);
    static VertexSet of(std::span<const VertexId> members);

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept
    {
        return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool contains(VertexId v) const noexcept
    {
        return v < kMaxVertices && ((bits_ >> v) & 1U) != 0;
    }
    /// Smallest member; the set must be non-empty.
    VertexId front() const;

    VertexSet& insert(VertexId v);
    VertexSet& erase(VertexId v) noexcept;

    constexpr bool subset_of(VertexSet other) const noexcept
    {
        return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool strict_subset_of(VertexSet other) const noexcept
    {
        return subset_of(other) && bits_ != other.bits_;
    }
    constexpr bool intersects(VertexSet other) const noexcept
    {
        return (bits_ & other.bits_) != 0;
    }

    constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) noexcept
    {
        return a.bits_ <=> b.bits_;
    }

    constexpr iterator begin() const noexcept { return iterator(bits_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    /// "{0,1,2}" or "{}".
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

std::ostream& operator<<(std::ostream& os, VertexSet s);

/// Occurrence set of a finite sequence of vertices.
VertexSet occurrences(std::span<const VertexId> word);

/// Calls f(subset) for every subset of `upper` that contains `lower`.
/// Stops early and returns true as soon as f returns true.
template <class F>
bool any_between(VertexSet lower, VertexSet upper, F&& f)
{
    const std::uint64_t base = lower.bits();
    const std::uint64_t free = upper.bits() & ~base;
    std::uint64_t sub = 0;
    while (true) {
        if (f(VertexSet(base | sub))) return true;
        if (sub == free) return false;
        sub = (sub - free) & free;
    }
}

} // namespace muller

template <>
struct std::hash<muller::VertexSet>
{
    std::size_t operator()(muller::VertexSet s) const noexcept
    {
        return std::hash<std::uint64_t>{}(s.bits());
    }
};
