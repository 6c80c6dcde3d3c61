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

// Acceptance run: one PASS/FAIL line per primary criterion, each with its
// runtime limit. Exit status 1 if any line fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "muller/engine.hpp"
#include "muller/finite_time.hpp"
#include "muller/game_io.hpp"
#include "muller/generators.hpp"
#include "muller/play.hpp"
#include "muller/scoring.hpp"

namespace {

using namespace muller;

struct Outcome
{
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok) detail = why;
        ok = false;
    }
};

int failures = 0;

void criterion(const char* name, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > limit_seconds) o.fail("over the time limit");
    if (!o.ok) ++failures;
    std::printf("%s %-28s %8.3fs (limit %gs)  %s\n", o.ok ? "PASS" : "FAIL", name, secs, limit_seconds,
                o.detail.c_str());
    std::fflush(stdout);
}

Play word(const std::string& digits)
{
    Play w;
    for (char c : digits) w.push_back(static_cast<VertexId>(c - '0'));
    return w;
}

std::vector<GameFile> corpus_games(std::size_t max_vertices)
{
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(MULLER_CORPUS))
        if (e.path().extension() == ".mg") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<GameFile> out;
    for (const auto& f : files) {
        GameFile g = load_game(f);
        if (g.arena.size() <= max_vertices) out.push_back(std::move(g));
    }
    return out;
}

// Plays a fixed script for both players.
class Script : public StrategyCursor
{
public:
    explicit Script(Play w) : w_(std::move(w)) {}
    void push(VertexId) override { ++pos_; }
    VertexId move() const override { return w_.at(pos_); }
    std::optional<std::string> memory() const override { return std::nullopt; }
    std::unique_ptr<StrategyCursor> clone() const override { return std::make_unique<Script>(*this); }

private:
    Play w_;
    std::size_t pos_ = 0;
};

Outcome fig1_reproduction()
{
    Outcome o;
    const Play w = word("100122121");
    const auto s = reference::score(VertexSet{1, 2}, w);
    const auto c = ScoreChain::of(w).score(VertexSet{1, 2});
    if (s != 3 || c != 3) o.fail("score " + std::to_string(s) + "/" + std::to_string(c));
    const GameFile g = fig1_game();
    auto a = std::make_shared<const Arena>(g.arena);
    auto script = [&](Player p) {
        return Strategy(a, p, a->vertices(), "script", false, [w] { return std::make_unique<Script>(w); });
    };
    const PlayRecord r = referee_play(*a, g.condition, w[0], script(Player::Zero), script(Player::One));
    if (r.verdict.kind != Verdict::Kind::Stopped || r.verdict.step != 9 || r.verdict.winner != Player::One ||
        r.verdict.set != VertexSet{1, 2})
        o.fail("verdict " + r.verdict.to_string());
    if (o.ok) o.detail = "score 3, " + r.verdict.to_string();
    return o;
}

Outcome thm_k3()
{
    Outcome o;
    std::vector<GameFile> games{fig1_game()};
    for (std::size_t n = 1; n <= 4; ++n) games.push_back(gn_game(n));
    for (std::uint64_t seed = 1; seed <= 200; ++seed) games.push_back(random_game(1 + (seed - 1) % 4, seed));
    std::size_t mismatches = 0;
    for (const GameFile& g : games) {
        const auto d = solve(g.arena, g.condition);
        const FiniteSolution f = solve_finite(g.arena, g.condition, StoppingRule::uniform(3));
        if (d->w0 != f.w0 || d->w1 != f.w1) ++mismatches;
    }
    if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
    else o.detail = std::to_string(games.size()) + " games, 0 mismatches";
    return o;
}

Outcome thm_ftmg()
{
    Outcome o;
    const auto games = corpus_games(3);
    std::size_t mismatches = 0;
    for (const GameFile& g : games) {
        const auto d = solve(g.arena, g.condition);
        const FiniteSolution f = solve_finite(g.arena, g.condition, StoppingRule::mcnaughton());
        if (d->w0 != f.w0 || d->w1 != f.w1) ++mismatches;
    }
    if (games.empty()) o.fail("no corpus games with at most 3 vertices");
    else if (mismatches) o.fail(std::to_string(mismatches) + " mismatches");
    else o.detail = std::to_string(games.size()) + " corpus games, 0 mismatches";
    return o;
}

Outcome lem_k3()
{
    Outcome o;
    {
        const SolvedGame fig(fig1_game());
        VerifyOptions opts;
        opts.start = 1;
        opts.depth = 27;
        const BoundReport r = verify_bound(*fig.arena(), fig.condition(), fig.decomposition(), Player::Zero, opts);
        const bool witness_ok = r.witness && (*r.witness == word("1001") || *r.witness == word("1221"));
        if (r.max_opponent_score != 2 || !witness_ok) o.fail("fig1 max " + std::to_string(r.max_opponent_score));
    }
    std::uint32_t worst = 0;
    std::size_t checked = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const SolvedGame game(random_game(1 + i % 3, 5000 + i));
        for (Player p : {Player::Zero, Player::One}) {
            if (game.decomposition()->region(p).empty()) continue;
            VerifyOptions opts;  // depth 3^|V|
            const BoundReport r = verify_bound(*game.arena(), game.condition(), game.decomposition(), p, opts);
            worst = std::max(worst, r.max_opponent_score);
            ++checked;
            if (r.depth_cutoffs != 0) o.fail("depth cutoff on random game " + std::to_string(i));
        }
    }
    if (worst > 2) o.fail("random games reach " + std::to_string(worst));
    if (o.ok) o.detail = "fig1 max 2 with witness 1001/1221; " + std::to_string(checked) + " random checks, max " +
                         std::to_string(worst);
    return o;
}

Outcome lem_unbounded()
{
    Outcome o;
    std::string detail;
    for (std::size_t n = 3; n <= 6; ++n) {
        const SolvedGame game(gn_game(n));
        auto a = game.arena();
        const VertexSet top = a->vertices() - VertexSet{0};
        auto solo = [&](const Strategy& s) {
            Play p{0};
            auto cur = s.start();
            cur->push(0);
            for (int i = 0; i < 500; ++i) {
                p.push_back(s.move(*cur, p));
                cur->push(p.back());
            }
            return p;
        };
        const Play naive = solo(game.strategy("naive", Player::Zero).strategy);
        const Play bounded = solo(game.strategy("tau-star", Player::Zero).strategy);
        const auto naive_top = max_score([&](VertexSet s) { return s == top; }, naive);
        const auto bounded_max =
            max_score([&](VertexSet s) { return game.condition().membership(s) == Player::One; }, bounded);
        if (naive_top != n) o.fail("naive on G_" + std::to_string(n) + " scores " + std::to_string(naive_top));
        if (bounded_max > 2) o.fail("score-bounding on G_" + std::to_string(n) + " scores " + std::to_string(bounded_max));
        detail += "G_" + std::to_string(n) + ":" + std::to_string(naive_top) + "/" + std::to_string(bounded_max) + " ";
    }
    if (o.ok) o.detail = "naive/score-bounding " + detail;
    return o;
}

Outcome bounded_paths()
{
    Outcome o;
    const auto all = [](VertexSet) { return true; };
    for (auto [k, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        std::size_t len = 1;
        for (unsigned i = 0; i < n; ++i) len *= k;
        Play w(len, 0);
        while (true) {
            if (max_score(all, w) < k) {
                o.fail("short word found for k=" + std::to_string(k));
                return o;
            }
            std::size_t i = len;
            while (i > 0 && w[i - 1] + 1 == n) w[--i] = 0;
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    for (std::uint32_t k : {2U, 3U})
        for (std::uint32_t n = 1; n <= 6; ++n) {
            const Play w = low_score_word(k, n);
            std::size_t len = 1;
            for (unsigned i = 0; i < n; ++i) len *= k;
            if (w.size() != len - 1 || max_score(all, w) >= k)
                o.fail("w(" + std::to_string(k) + "," + std::to_string(n) + ")");
        }
    if (o.ok) o.detail = "exhaustive (2,2),(2,3),(3,2); w(k,n) tight for k in {2,3}, n <= 6";
    return o;
}

Outcome scoring_oracle()
{
    Outcome o;
    std::mt19937_64 rng(20260101);
    std::size_t prefixes = 0;
    for (int play = 0; play < 10000 && o.ok; ++play) {
        const std::size_t letters = 1 + rng() % 6;
        const std::size_t length = 1 + rng() % 200;
        Play w;
        ScoreChain chain(0);
        std::uint32_t running_max = 0;
        for (std::size_t t = 0; t < length; ++t) {
            const auto v = static_cast<VertexId>(rng() % letters);
            w.push_back(v);
            if (t == 0) chain = ScoreChain(v);
            else chain.extend(v);
            ++prefixes;

            const auto sets = reference::suffix_occurrence_sets(w);
            const auto entries = chain.entries();
            if (sets.size() != entries.size()) {
                o.fail("chain size differs");
                break;
            }
            std::uint32_t step_max = 0;
            std::size_t at_max = 0;
            for (std::size_t j = 0; j < entries.size(); ++j) {
                const ChainEntry& e = entries[j];
                if (e.set != sets[j] || e.score != reference::score(e.set, w) ||
                    e.accumulator != reference::accumulator(e.set, w)) {
                    o.fail("entry " + e.set.to_string() + " differs at play " + std::to_string(play));
                    break;
                }
                if (j > 0 && !entries[j - 1].set.strict_subset_of(e.set)) o.fail("not a chain");
                if (e.score > step_max) {
                    step_max = e.score;
                    at_max = 0;
                }
                if (e.score == step_max) ++at_max;
            }
            // one set off the chain: score 0, accumulator derived
            const VertexSet probe(rng() & VertexSet::first_n(letters).bits());
            if (chain.score(probe) != reference::score(probe, w) ||
                chain.accumulator(probe) != reference::accumulator(probe, w))
                o.fail("derived value for " + probe.to_string());
            // a new overall maximum >= 2 is reached by exactly one set
            if (step_max > running_max) {
                if (step_max >= 2 && at_max != 1) o.fail("two sets first reach " + std::to_string(step_max));
                running_max = step_max;
            }
            if (!o.ok) break;
        }
    }
    if (o.ok) o.detail = "10000 plays, " + std::to_string(prefixes) + " prefixes";
    return o;
}

// Kahn's algorithm on the running states; independent of check_acyclic.
bool running_subgraph_is_dag(const ProductGame& pg)
{
    const std::size_t n = pg.states.size();
    std::vector<std::size_t> indeg(n, 0);
    for (std::size_t s = 0; s < n; ++s)
        if (!pg.states[s].stopped())
            for (auto t : pg.successors[s])
                if (!pg.states[t].stopped()) ++indeg[t];
    std::vector<std::size_t> ready;
    std::size_t running = 0, removed = 0;
    for (std::size_t s = 0; s < n; ++s)
        if (!pg.states[s].stopped()) {
            ++running;
            if (indeg[s] == 0) ready.push_back(s);
        }
    while (!ready.empty()) {
        const std::size_t s = ready.back();
        ready.pop_back();
        ++removed;
        for (auto t : pg.successors[s])
            if (!pg.states[t].stopped() && --indeg[t] == 0) ready.push_back(t);
    }
    return removed == running;
}

Outcome product_acyclicity()
{
    Outcome o;
    std::size_t products = 0, states = 0;
    for (const GameFile& g : corpus_games(64)) {
        std::vector<StoppingRule> rules{StoppingRule::uniform(2), StoppingRule::uniform(3)};
        if (g.arena.size() <= 3) rules.push_back(StoppingRule::mcnaughton());
        for (const StoppingRule& r : rules) {
            const ProductGame pg = build_product(g.arena, g.condition, r);
            check_acyclic(pg);
            if (!running_subgraph_is_dag(pg)) o.fail("cycle under " + r.name());
            ++products;
            states += pg.states.size();
        }
    }
    if (o.ok) o.detail = std::to_string(products) + " products, " + std::to_string(states) + " states, all acyclic";
    return o;
}

} // namespace

int main()
{
    criterion("fig1-reproduction", 1, fig1_reproduction);
    criterion("thm-k3-equivalence", 300, thm_k3);
    criterion("thm-ftmg-equivalence", 120, thm_ftmg);
    criterion("lem-k3-bound", 600, lem_k3);
    criterion("lem-unbounded", 1, lem_unbounded);
    criterion("bounded-paths-tightness", 30, bounded_paths);
    criterion("scoring-oracle", 120, scoring_oracle);
    criterion("product-acyclicity", 600, product_acyclicity);
    return failures == 0 ? 0 : 1;
}
