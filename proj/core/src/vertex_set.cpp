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

#include "muller/vertex_set.hpp"

#include <ostream>

namespace muller {

std::ostream& operator<<(std::ostream& os, Player p)
{
    return os << index_of(p);
}

VertexSet::VertexSet(std::initializer_list<VertexId> members)
{
    for (VertexId v : members) insert(v);
}

VertexSet VertexSet::singleton(VertexId v)
{
    VertexSet s;
    s.insert(v);
    return s;
}

VertexSet VertexSet::of(std::span<const VertexId> members)
{
    VertexSet s;
    for (VertexId v : members) s.insert(v);
    return s;
}

VertexId VertexSet::front() const
{
    if (bits_ == 0) throw std::logic_error("front() of an empty vertex set");
    return static_cast<VertexId>(std::countr_zero(bits_));
}

VertexSet& VertexSet::insert(VertexId v)
{
    if (v >= kMaxVertices) throw std::out_of_range("vertex id " + std::to_string(v) + " exceeds 63");
    bits_ |= std::uint64_t{1} << v;
    return *this;
}

VertexSet& VertexSet::erase(VertexId v) noexcept
{
    if (v < kMaxVertices) bits_ &= ~(std::uint64_t{1} << v);
    return *this;
}

std::string VertexSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for (VertexId v : *this) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

std::ostream& operator<<(std::ostream& os, VertexSet s)
{
    return os << s.to_string();
}

VertexSet occurrences(std::span<const VertexId> word)
{
    return VertexSet::of(word);
}

} // namespace muller
