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

#include "muller/service/session.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <random>

namespace muller::service {

std::string to_string(Status s)
{
    switch (s) {
    case Status::AwaitingHuman: return "awaiting-human";
    case Status::AwaitingEngine: return "awaiting-engine";
    case Status::Finished: break;
    }
    return "finished";
}

Session::Session(std::string id, const SessionRequest& request)
    : id_(std::move(id)), game_name_(request.game_name), game_(request.game), rule_(request.rule),
      human_(request.human), engine_name_(request.engine)
{
    if (!game_) throw ServiceError(400, "InvalidGame", "no game given");
    const Arena& arena = *game_->arena();
    const VertexId start = request.start.value_or(game_->game().start.value_or(0));
    if (start >= arena.size())
        throw ServiceError(400, "InvalidStart",
                           "start vertex " + std::to_string(start) + " is not in the arena");

    const Player engine = opponent(human_);
    try {
        NamedStrategy e = game_->strategy(engine_name_, engine, rule_, request.seed);
        NamedStrategy h = game_->strategy(engine_name_, human_, rule_, request.seed);
        warning_ = e.note;
        strategies_[index_of(engine)].emplace(std::move(e.strategy));
        strategies_[index_of(human_)].emplace(std::move(h.strategy));
    } catch (const UnknownStrategy& e) {
        throw ServiceError(400, "UnknownStrategy", e.what());
    } catch (const StateBudgetExceeded& e) {
        throw ServiceError(422, "StateBudgetExceeded", e.what());
    } catch (const ThresholdOverflow& e) {
        throw ServiceError(422, "ThresholdOverflow", e.what());
    }

    const Strategy& es = *strategies_[index_of(engine)];
    if (engine_name_ != "random" && engine_name_ != "first" && !es.domain().contains(start)) {
        if (!warning_.empty()) warning_ += "; ";
        warning_ += "start vertex " + std::to_string(start) + " is outside the engine's winning region " +
                    es.domain().to_string();
    }
    for (int p = 0; p < 2; ++p) cursors_[p] = strategies_[p]->start();
    append(start);
}

Player Session::side_to_move() const
{
    return game_->arena()->owner(current_vertex());
}

void Session::append(VertexId v)
{
    history_.push_back(v);
    for (auto& c : cursors_) c->push(v);
    if (chains_.empty())
        chains_.emplace_back(v);
    else
        chains_.push_back(chains_.back().extended(v));

#ifndef NDEBUG
    for (VertexSet f : reference::suffix_occurrence_sets(history_)) {
        assert(chains_.back().score(f) == reference::score(f, history_));
        assert(chains_.back().accumulator(f) == reference::accumulator(f, history_));
    }
#endif

    const StoppingRule rule = rule_;
    const std::function<std::uint32_t(VertexSet)> threshold = [rule](VertexSet s) {
        return stopping_threshold(rule, s);
    };
    std::optional<VertexSet> hit;
    if (chains_.size() == 1) {
        for (const ChainEntry& e : chains_.back().entries())
            if (e.score >= threshold(e.set)) hit = e.set;
    } else {
        hit = threshold_hit(chains_[chains_.size() - 2], chains_.back(), threshold);
    }
    if (hit) {
        verdict_ = Verdict{Verdict::Kind::Stopped, game_->condition().membership(*hit), *hit, history_.size()};
        status_ = Status::Finished;
        return;
    }
    status_ = side_to_move() == human_ ? Status::AwaitingHuman : Status::AwaitingEngine;
}

void Session::human_move(VertexId to)
{
    if (status_ == Status::Finished) throw ServiceError(409, "Finished", "the referee has already stopped this play");
    if (status_ != Status::AwaitingHuman)
        throw ServiceError(409, "NotYourTurn", "vertex " + std::to_string(current_vertex()) + " belongs to the engine");
    if (!game_->arena()->has_edge(current_vertex(), to))
        throw ServiceError(400, "IllegalMove",
                           std::to_string(current_vertex()) + "->" + std::to_string(to) + " is not an edge");
    append(to);
}

VertexId Session::engine_step()
{
    if (status_ == Status::Finished) throw ServiceError(409, "Finished", "the referee has already stopped this play");
    if (status_ != Status::AwaitingEngine)
        throw ServiceError(409, "NotEngineTurn", "vertex " + std::to_string(current_vertex()) + " belongs to the human");
    const Player engine = opponent(human_);
    const VertexId v = strategies_[index_of(engine)]->move(*cursors_[index_of(engine)], history_);
    append(v);
    return v;
}

VertexId Session::hint() const
{
    if (status_ == Status::Finished) throw ServiceError(409, "Finished", "the referee has already stopped this play");
    const int p = index_of(side_to_move());
    return strategies_[p]->move(*cursors_[p], history_);
}

SessionManager::SessionManager(std::chrono::seconds ttl)
    : ttl_(ttl), now_([] { return Clock::now(); }), id_salt_(std::random_device{}())
{
}

void SessionManager::add_corpus_game(const std::string& name, GameFile game)
{
    auto solved = std::make_shared<const SolvedGame>(std::move(game));
    std::lock_guard lock(mutex_);
    corpus_[name] = std::move(solved);
}

std::size_t SessionManager::load_corpus(const std::filesystem::path& dir)
{
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".mg") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) add_corpus_game(f.stem().string(), load_game(f));
    return files.size();
}

std::vector<std::string> SessionManager::corpus_names() const
{
    std::lock_guard lock(mutex_);
    std::vector<std::string> names;
    for (const auto& [name, game] : corpus_) names.push_back(name);
    return names;
}

std::shared_ptr<const SolvedGame> SessionManager::corpus_game(const std::string& name) const
{
    std::lock_guard lock(mutex_);
    auto it = corpus_.find(name);
    if (it == corpus_.end()) throw ServiceError(404, "UnknownGame", "no bundled game named '" + name + "'");
    return it->second;
}

std::string SessionManager::create(SessionRequest request)
{
    std::string id;
    {
        std::lock_guard lock(mutex_);
        char buf[40];
        std::snprintf(buf, sizeof buf, "%08llx%06llx", static_cast<unsigned long long>(id_salt_ & 0xffffffffULL),
                      static_cast<unsigned long long>(next_id_++));
        id = buf;
    }
    auto entry = std::make_shared<Entry>();
    entry->session = std::make_unique<Session>(id, request);
    entry->last_access = now_();
    std::lock_guard lock(mutex_);
    sessions_.emplace(id, std::move(entry));
    return id;
}

std::shared_ptr<SessionManager::Entry> SessionManager::find(const std::string& id)
{
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    const auto now = now_();
    if (it == sessions_.end() || now - it->second->last_access > ttl_) {
        if (it != sessions_.end()) sessions_.erase(it);
        throw ServiceError(404, "UnknownSession", "no session '" + id + "'");
    }
    it->second->last_access = now;
    return it->second;
}

std::size_t SessionManager::evict_expired()
{
    std::lock_guard lock(mutex_);
    const auto now = now_();
    return std::erase_if(sessions_, [&](const auto& kv) { return now - kv.second->last_access > ttl_; });
}

std::size_t SessionManager::size() const
{
    std::lock_guard lock(mutex_);
    return sessions_.size();
}

} // namespace muller::service
