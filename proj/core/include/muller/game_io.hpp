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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "muller/arena.hpp"
#include "muller/condition.hpp"

namespace muller {

/// A Muller game as stored on disk. The condition's universe is the arena's vertex set.
struct GameFile
{
    Arena arena;
    MullerCondition condition;
    std::optional<VertexId> start;

    friend bool operator==(const GameFile&, const GameFile&) = default;
};

/**
 * Parses the line-oriented game format:
 *
 *     muller 3;
 *     0 1 0,1;
 *     1 0 0,2 "hub";
 *     2 1 1,2;
 *     F0: {0},{2},{0,1,2};
 *     start: 1;
 *
 * Vertex lines are `id owner successors ["name"];` and may come in any
 * order. `#` starts a comment. Throws SyntaxError for malformed text and
 * SemanticError for a well-formed file describing an invalid game.
 */
GameFile parse_game(std::string_view text);

/// Reads and parses a file; std::runtime_error if it cannot be read.
GameFile load_game(const std::filesystem::path& path);

/// Canonical text form; parse_game(print_game(g)) == g.
std::string print_game(const GameFile& game);

} // namespace muller
