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

#include "muller/service/json_codec.hpp"

namespace muller::service {

using nlohmann::json;

json to_json(VertexSet s)
{
    json a = json::array();
    for (VertexId v : s) a.push_back(v);
    return a;
}

json to_json(const Play& play)
{
    json a = json::array();
    for (VertexId v : play) a.push_back(v);
    return a;
}

json arena_json(const Arena& arena)
{
    json vertices = json::array();
    json edges = json::array();
    for (VertexId v = 0; v < arena.size(); ++v) {
        json succ = json::array();
        for (VertexId s : arena.successors(v)) {
            succ.push_back(s);
            edges.push_back({v, s});
        }
        vertices.push_back({{"id", v},
                            {"owner", index_of(arena.owner(v))},
                            {"name", arena.name(v)},
                            {"successors", std::move(succ)}});
    }
    return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json chain_json(const ScoreChain& chain, const MullerCondition& condition)
{
    json a = json::array();
    for (const ChainEntry& e : chain.entries())
        a.push_back({{"set", to_json(e.set)},
                     {"score", e.score},
                     {"accumulator", to_json(e.accumulator)},
                     {"owner", index_of(condition.membership(e.set))}});
    return a;
}

json rule_json(const StoppingRule& rule, std::size_t vertices)
{
    json thresholds = json::object();
    for (std::size_t size = 1; size <= vertices; ++size) {
        try {
            thresholds[std::to_string(size)] = stopping_threshold(rule, VertexSet::first_n(size));
        } catch (const ThresholdOverflow&) {
            break;
        }
    }
    json j = {{"kind", rule.kind == StoppingRule::Kind::Uniform ? "uniform" : "mcnaughton"},
              {"thresholds", std::move(thresholds)}};
    if (rule.kind == StoppingRule::Kind::Uniform) j["k"] = rule.k;
    return j;
}

json verdict_json(const Verdict& v)
{
    switch (v.kind) {
    case Verdict::Kind::Stopped:
        return {{"kind", "stopped"}, {"winner", index_of(v.winner)}, {"set", to_json(v.set)}, {"step", v.step}};
    case Verdict::Kind::Lasso:
        return {{"kind", "lasso"}, {"winner", index_of(v.winner)}, {"set", to_json(v.set)}, {"step", v.step}};
    case Verdict::Kind::BudgetExhausted:
        break;
    }
    return {{"kind", "budget-exhausted"}, {"winner", nullptr}, {"set", nullptr}, {"step", nullptr}};
}

json session_json(const Session& s)
{
    const Arena& arena = *s.game().arena();
    json j = {{"format", kFormat},
              {"id", s.id()},
              {"game", s.game_name()},
              {"status", to_string(s.status())},
              {"humanPlayer", index_of(s.human())},
              {"engine", s.engine()},
              {"sideToMove", index_of(s.side_to_move())},
              {"currentVertex", s.current_vertex()},
              {"history", to_json(s.history())},
              {"chain", chain_json(s.chains().back(), s.game().condition())},
              {"rule", rule_json(s.rule(), arena.size())},
              {"verdict", s.verdict() ? verdict_json(*s.verdict()) : json(nullptr)},
              {"arena", arena_json(arena)},
              {"warning", s.warning().empty() ? json(nullptr) : json(s.warning())}};
    json legal = json::array();
    if (s.status() == Status::AwaitingHuman)
        for (VertexId v : arena.successors(s.current_vertex())) legal.push_back(v);
    j["legalMoves"] = std::move(legal);
    return j;
}

StoppingRule parse_rule(const json& j)
{
    try {
        if (j.is_string()) {
            const std::string s = j.get<std::string>();
            if (s == "k3") return StoppingRule::uniform(3);
            if (s == "mcnaughton") return StoppingRule::mcnaughton();
            if (s.rfind("uniform:", 0) == 0) return StoppingRule::uniform(static_cast<std::uint32_t>(std::stoul(s.substr(8))));
            if (s.size() > 1 && s[0] == 'k') return StoppingRule::uniform(static_cast<std::uint32_t>(std::stoul(s.substr(1))));
        } else if (j.is_object()) {
            const std::string kind = j.at("kind").get<std::string>();
            if (kind == "mcnaughton") return StoppingRule::mcnaughton();
            if (kind == "uniform") return StoppingRule::uniform(j.value("k", 3U));
        }
    } catch (const std::exception& e) {
        throw ServiceError(400, "InvalidRule", std::string("invalid rule: ") + e.what());
    }
    throw ServiceError(400, "InvalidRule", "invalid rule " + j.dump());
}

} // namespace muller::service
