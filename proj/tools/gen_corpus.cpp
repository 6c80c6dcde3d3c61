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

// gen_corpus DIR: writes the bundled games into DIR.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "muller/generators.hpp"

namespace {

void write(const std::filesystem::path& path, const std::string& comment, const muller::GameFile& g)
{
    std::ofstream out(path, std::ios::binary);
    out << "# " << comment << '\n' << muller::print_game(g);
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: gen_corpus DIR\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);
    write(dir / "fig1.mg", "three-vertex introductory example", muller::fig1_game());
    for (std::size_t n = 2; n <= 6; ++n)
        write(dir / ("g" + std::to_string(n) + ".mg"), "G_" + std::to_string(n) + ": naive counter reaches score n",
              muller::gn_game(n));
    for (int i = 1; i <= 20; ++i) {
        const std::size_t size = 2 + (i - 1) % 4;
        char name[32];
        std::snprintf(name, sizeof name, "rand%02d.mg", i);
        write(dir / name, "random_game(" + std::to_string(size) + ", " + std::to_string(i) + ")",
              muller::random_game(size, static_cast<std::uint64_t>(i)));
    }
    return 0;
}
