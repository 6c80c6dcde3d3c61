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

// muller: command-line front end. Exit codes: 0 success, 1 the checked
// property failed (verify-bound above 2), 2 usage, parse or runtime error.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "muller/engine.hpp"
#include "muller/game_io.hpp"
#include "muller/play.hpp"
#include "muller/scoring.hpp"
#include "muller/service/http_server.hpp"
#include "muller/service/json_codec.hpp"

namespace {

using namespace muller;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFalsified = 1;
constexpr int kError = 2;

// Digits run together when every letter is a single digit ("1001"), else commas.
std::string word_string(const Play& w)
{
    const bool compact = std::all_of(w.begin(), w.end(), [](VertexId v) { return v < 10; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(w[i]);
    }
    return out;
}

json header(const char* command)
{
    return {{"format", service::kFormat}, {"command", command}};
}

struct SolveArgs
{
    std::string file;
    bool json = false;
};

int run_solve(const SolveArgs& a)
{
    const GameFile g = load_game(a.file);
    const auto d = solve(g.arena, g.condition);
    if (a.json) {
        json j = header("solve");
        j["w0"] = service::to_json(d->w0);
        j["w1"] = service::to_json(d->w1);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "W0=" << d->w0 << " W1=" << d->w1 << '\n';
    }
    return kOk;
}

struct SolveFiniteArgs
{
    std::string file;
    std::uint32_t k = 0;
    bool mcnaughton = false;
    bool json = false;
    std::size_t state_cap = kDefaultStateCap;
};

int run_solve_finite(const SolveFiniteArgs& a)
{
    const GameFile g = load_game(a.file);
    const StoppingRule rule = a.mcnaughton ? StoppingRule::mcnaughton() : StoppingRule::uniform(a.k);
    const ProductGame pg = build_product(g.arena, g.condition, rule, a.state_cap);
    const FiniteSolution sol = solve_reachability(g.arena, pg, g.condition);
    if (a.json) {
        json j = header("solve-finite");
        j["rule"] = service::rule_json(rule, g.arena.size());
        j["states"] = pg.states.size();
        j["w0"] = service::to_json(sol.w0);
        j["w1"] = service::to_json(sol.w1);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "W0=" << sol.w0 << " W1=" << sol.w1 << '\n';
        std::cerr << "rule " << rule.name() << ", " << pg.states.size() << " product states\n";
    }
    return kOk;
}

struct PlayArgs
{
    std::string file;
    std::string p0;
    std::string p1;
    std::optional<VertexId> start;
    std::string rule = "k3";
    std::size_t budget = 10'000;
    std::uint64_t seed = 1;
    bool json = false;
};

int run_play(const PlayArgs& a)
{
    const SolvedGame game(load_game(a.file));
    RefereeOptions opts;
    opts.budget = a.budget;
    if (a.rule == "none")
        opts.rule.reset();
    else
        opts.rule = service::parse_rule(a.rule);
    const StoppingRule product_rule = opts.rule.value_or(StoppingRule::uniform(3));
    const NamedStrategy s0 = game.strategy(a.p0, Player::Zero, product_rule, a.seed);
    // Distinct seeds so two random players do not mirror each other.
    const NamedStrategy s1 = game.strategy(a.p1, Player::One, product_rule, a.seed + 1);
    for (const auto* n : {&s0.note, &s1.note})
        if (!n->empty()) std::cerr << "note: " << *n << '\n';

    const VertexId start = a.start.value_or(game.game().start.value_or(0));
    const PlayRecord rec = referee_play(*game.arena(), game.condition(), start, s0.strategy, s1.strategy, opts);
    if (a.json) {
        json j = header("play");
        j["start"] = start;
        j["steps"] = service::to_json(rec.steps);
        j["chain"] = service::chain_json(rec.chains.back(), game.condition());
        j["verdict"] = service::verdict_json(rec.verdict);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "play: " << word_string(rec.steps) << '\n' << "verdict: " << rec.verdict.to_string() << '\n';
    }
    return kOk;
}

struct VerifyArgs
{
    std::string file;
    int player = 0;
    std::string strategy = "sigma-star";
    bool exhaustive = false;
    bool random = false;
    std::size_t depth = 0;
    std::size_t trials = 1000;
    std::uint64_t seed = 1;
    std::optional<VertexId> start;
    bool json = false;
};

int run_verify(const VerifyArgs& a)
{
    const SolvedGame game(load_game(a.file));
    VerifyOptions opts;
    opts.mode = a.random ? VerifyOptions::Mode::Random : VerifyOptions::Mode::Exhaustive;
    opts.depth = a.depth;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.start = a.start;
    if (opts.mode == VerifyOptions::Mode::Random && opts.depth == 0)
        throw CLI::ValidationError("--random needs --depth");
    const NamedStrategy s = game.strategy(a.strategy, player_from_index(a.player), opts.rule, a.seed);
    if (!s.note.empty()) std::cerr << "note: " << s.note << '\n';
    const BoundReport r = verify_bound(*game.arena(), game.condition(), s.strategy, opts);
    const bool ok = r.max_opponent_score <= 2;
    if (a.json) {
        json j = header("verify-bound");
        j["player"] = a.player;
        j["strategy"] = s.strategy.name();
        j["maxOpponentScore"] = r.max_opponent_score;
        j["witness"] = r.witness ? service::to_json(*r.witness) : json(nullptr);
        j["plays"] = r.plays;
        j["nodes"] = r.nodes;
        j["depthCutoffs"] = r.depth_cutoffs;
        j["holds"] = ok;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "max opponent score: " << r.max_opponent_score << '\n';
        if (r.witness) std::cout << "witness: " << word_string(*r.witness) << '\n';
        std::cout << "plays: " << r.plays << ", nodes: " << r.nodes << ", depth cutoffs: " << r.depth_cutoffs << '\n'
                  << (ok ? "bound 2 holds" : "bound 2 VIOLATED") << '\n';
    }
    return ok ? kOk : kFalsified;
}

int run_gen_word(std::uint32_t k, std::uint32_t n)
{
    std::cout << word_string(low_score_word(k, n)) << '\n';
    return kOk;
}

struct ServeArgs
{
    int port = 8080;
    std::string bind = "127.0.0.1";
    std::string corpus = MULLER_DEFAULT_CORPUS;
    std::string static_dir;
    long ttl = 3600;
};

int run_serve(const ServeArgs& a)
{
    service::SessionManager sessions{std::chrono::seconds(a.ttl)};
    std::size_t loaded = 0;
    if (!a.corpus.empty() && std::filesystem::is_directory(a.corpus)) loaded = sessions.load_corpus(a.corpus);
    service::ServerOptions opts;
    opts.host = a.bind;
    opts.port = a.port;
    if (!a.static_dir.empty()) opts.static_dir = a.static_dir;
    service::HttpServer server(sessions, opts);
    const int port = server.bind();
    std::cout << "listening on http://" << a.bind << ':' << port << " (" << loaded << " corpus games)" << std::endl;
    server.listen();
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Muller games: Zielonka solver, finite-time referee and score-bounding strategies"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "Winning regions by Zielonka's algorithm");
    solve_cmd->add_option("file", solve_args.file, "Game file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_flag("--json", solve_args.json);

    SolveFiniteArgs fin_args;
    auto* fin_cmd = app.add_subcommand("solve-finite", "Winning regions of the finite-time game");
    fin_cmd->add_option("file", fin_args.file, "Game file")->required()->check(CLI::ExistingFile);
    auto* k_opt = fin_cmd->add_option("--k", fin_args.k, "Uniform score threshold")->check(CLI::Range(2U, 1000000U));
    auto* mc_opt = fin_cmd->add_flag("--mcnaughton", fin_args.mcnaughton, "Threshold |F|!+1 per set");
    k_opt->excludes(mc_opt);
    fin_cmd->add_flag("--json", fin_args.json);
    fin_cmd->add_option("--state-cap", fin_args.state_cap, "Product state budget");

    PlayArgs play_args;
    auto* play_cmd = app.add_subcommand("play", "Referee a play between two named strategies");
    play_cmd->add_option("file", play_args.file, "Game file")->required()->check(CLI::ExistingFile);
    const auto names = CLI::IsMember(strategy_names());
    play_cmd->add_option("--p0", play_args.p0, "Player 0 strategy")->required()->check(names);
    play_cmd->add_option("--p1", play_args.p1, "Player 1 strategy")->required()->check(names);
    play_cmd->add_option("--start", play_args.start);
    play_cmd->add_option("--rule", play_args.rule, "k3, kK, mcnaughton or none");
    play_cmd->add_option("--budget", play_args.budget, "Longest play");
    play_cmd->add_option("--seed", play_args.seed);
    play_cmd->add_flag("--json", play_args.json);

    VerifyArgs ver_args;
    auto* ver_cmd = app.add_subcommand("verify-bound", "Check that no opponent score exceeds 2");
    ver_cmd->add_option("file", ver_args.file, "Game file")->required()->check(CLI::ExistingFile);
    ver_cmd->add_option("--player", ver_args.player)->required()->check(CLI::Range(0, 1));
    ver_cmd->add_option("--strategy", ver_args.strategy, "Strategy under test")->check(names);
    auto* ex_flag = ver_cmd->add_flag("--exhaustive", ver_args.exhaustive);
    auto* rnd_flag = ver_cmd->add_flag("--random", ver_args.random);
    ex_flag->excludes(rnd_flag);
    ver_cmd->add_option("--depth", ver_args.depth, "Play length (default 3^|V| when exhaustive)");
    ver_cmd->add_option("--trials", ver_args.trials)->needs(rnd_flag);
    ver_cmd->add_option("--seed", ver_args.seed);
    ver_cmd->add_option("--start", ver_args.start);
    ver_cmd->add_flag("--json", ver_args.json);

    std::uint32_t gen_k = 0, gen_n = 0;
    auto* gen_cmd = app.add_subcommand("gen-word", "Print a word of length k^n-1 whose scores stay below k");
    gen_cmd->add_option("--k", gen_k)->required()->check(CLI::Range(1U, 64U));
    gen_cmd->add_option("--n", gen_n)->required()->check(CLI::Range(1U, 63U));

    ServeArgs serve_args;
    auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP session service");
    serve_cmd->add_option("--port", serve_args.port)->check(CLI::Range(0, 65535));
    serve_cmd->add_option("--bind", serve_args.bind);
    serve_cmd->add_option("--corpus", serve_args.corpus, "Directory of bundled *.mg games");
    serve_cmd->add_option("--static", serve_args.static_dir, "Directory served at /");
    serve_cmd->add_option("--ttl", serve_args.ttl, "Session idle timeout in seconds")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
        if (*ver_cmd && !ver_args.exhaustive && !ver_args.random)
            throw CLI::RequiredError("verify-bound needs --exhaustive or --random");
        if (*fin_cmd && !fin_args.mcnaughton && fin_args.k == 0)
            throw CLI::RequiredError("solve-finite needs --k or --mcnaughton");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    try {
        if (*solve_cmd) return run_solve(solve_args);
        if (*fin_cmd) return run_solve_finite(fin_args);
        if (*play_cmd) return run_play(play_args);
        if (*ver_cmd) return run_verify(ver_args);
        if (*gen_cmd) return run_gen_word(gen_k, gen_n);
        if (*serve_cmd) return run_serve(serve_args);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kError;
}
