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

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "muller/engine.hpp"
#include "muller/errors.hpp"
#include "muller/play.hpp"

namespace muller::service {

/// Error with the HTTP status it maps to.
class ServiceError : public Error
{
public:
    ServiceError(int status, const std::string& code, const std::string& message)
        : Error(message), status_(status), code_(code) {}

    int status() const noexcept { return status_; }
    const std::string& code() const noexcept { return code_; }

private:
    int status_;
    std::string code_;
};

enum class Status { AwaitingHuman, AwaitingEngine, Finished };

/// "awaiting-human", "awaiting-engine" or "finished".
std::string to_string(Status s);

struct SessionRequest
{
    std::shared_ptr<const SolvedGame> game;
    std::string game_name;
    StoppingRule rule = StoppingRule::uniform(3);
    Player human = Player::One;
    std::string engine = "sigma-star";
    /// Defaults to the game's start vertex, else 0.
    std::optional<VertexId> start;
    std::uint64_t seed = 1;
};

/**
 * One human-versus-engine finite-time play. Not synchronised by itself;
 * SessionManager hands it out together with its mutex.
 */
class Session
{
public:
    /// Throws ServiceError (InvalidStart, UnknownStrategy).
    Session(std::string id, const SessionRequest& request);

    const std::string& id() const noexcept { return id_; }
    const std::string& game_name() const noexcept { return game_name_; }
    const SolvedGame& game() const noexcept { return *game_; }
    const StoppingRule& rule() const noexcept { return rule_; }
    Player human() const noexcept { return human_; }
    const std::string& engine() const noexcept { return engine_name_; }
    Status status() const noexcept { return status_; }
    Player side_to_move() const;
    VertexId current_vertex() const noexcept { return history_.back(); }
    const Play& history() const noexcept { return history_; }
    const std::vector<ScoreChain>& chains() const noexcept { return chains_; }
    const std::optional<Verdict>& verdict() const noexcept { return verdict_; }
    const std::string& warning() const noexcept { return warning_; }

    /// Throws ServiceError: NotYourTurn, IllegalMove.
    void human_move(VertexId to);
    /// Plays the engine's move and returns it. Throws NotEngineTurn or
    /// StrategyOffDomain (the session stays paused on the engine's turn).
    VertexId engine_step();
    /// The named strategy's move for the side to move at the current
    /// prefix. Throws ServiceError when finished, StrategyOffDomain when undefined.
    VertexId hint() const;

private:
    void append(VertexId v);

    std::string id_;
    std::string game_name_;
    std::shared_ptr<const SolvedGame> game_;
    StoppingRule rule_;
    Player human_;
    std::string engine_name_;
    std::optional<Strategy> strategies_[2];
    std::unique_ptr<StrategyCursor> cursors_[2];
    Play history_;
    std::vector<ScoreChain> chains_;
    std::optional<Verdict> verdict_;
    Status status_ = Status::AwaitingHuman;
    std::string warning_;
};

/**
 * In-memory session store with idle-time eviction. Every session carries
 * its own mutex: with() serialises access to one session while others
 * proceed in parallel.
 */
class SessionManager
{
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionManager(std::chrono::seconds ttl = std::chrono::hours(1));

    /// Registers a bundled game under a name for `"game": name` requests.
    void add_corpus_game(const std::string& name, GameFile game);
    /// Loads every *.mg file of a directory; returns the number loaded.
    std::size_t load_corpus(const std::filesystem::path& dir);
    std::vector<std::string> corpus_names() const;
    std::shared_ptr<const SolvedGame> corpus_game(const std::string& name) const;

    /// Creates a session; returns its id.
    std::string create(SessionRequest request);

    /// Runs f on the session under its lock. Throws ServiceError (404) for unknown or expired ids.
    template <class F>
    auto with(const std::string& id, F&& f)
    {
        auto entry = find(id);
        std::lock_guard lock(entry->mutex);
        return f(*entry->session);
    }

    /// Drops sessions idle for longer than the TTL; returns how many.
    std::size_t evict_expired();
    std::size_t size() const;

    /// For tests: replaces the clock.
    void set_clock(std::function<Clock::time_point()> now) { now_ = std::move(now); }

private:
    struct Entry
    {
        std::unique_ptr<Session> session;
        std::mutex mutex;
        Clock::time_point last_access;
    };

    std::shared_ptr<Entry> find(const std::string& id);

    std::chrono::seconds ttl_;
    std::function<Clock::time_point()> now_;
    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::map<std::string, std::shared_ptr<const SolvedGame>> corpus_;
    std::uint64_t next_id_ = 1;
    std::uint64_t id_salt_;
};

} // namespace muller::service
