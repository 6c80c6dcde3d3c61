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

#include "muller/game_io.hpp"

namespace muller {

/**
 * Three vertices: 0 (Player 1) → 0,1; 1 (Player 0) → 0,2; 2 (Player 1) → 1,2.
 * F0 = {{0},{2},{0,1,2}}, start 1.
 */
GameFile fig1_game();

/**
 * Solo game for Player 0 on 0..n: edges i+1 → i, plus 0 → n and 1 → n.
 * F0 = {{0..n}}. Requires n ≥ 1.
 */
GameFile gn_game(std::size_t n);

/**
 * Random game with `vertices` vertices: random owners, one to three
 * distinct successors per vertex, each non-empty subset in F0 with
 * probability 1/2, start 0. Same (vertices, seed) gives the same game on
 * every platform.
 */
GameFile random_game(std::size_t vertices, std::uint64_t seed);

} // namespace muller
