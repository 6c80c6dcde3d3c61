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

#include <nlohmann/json.hpp>

#include "muller/finite_time.hpp"
#include "muller/play.hpp"
#include "muller/service/session.hpp"

namespace muller::service {

/// Value of the top-level "format" field of every JSON document.
inline constexpr const char* kFormat = "muller-hurry/1";

nlohmann::json to_json(VertexSet s);
nlohmann::json to_json(const Play& play);

/// {vertices:[{id,owner,name,successors}], edges:[[from,to]]}
nlohmann::json arena_json(const Arena& arena);

/// [{set, score, accumulator, owner}] in chain order.
nlohmann::json chain_json(const ScoreChain& chain, const MullerCondition& condition);

/// {kind, k?, thresholds:{"size": score}} for set sizes 1..vertices.
nlohmann::json rule_json(const StoppingRule& rule, std::size_t vertices);

/// {kind, winner, set, step}; Stopped verdicts use exactly {winner,set,step} plus kind.
nlohmann::json verdict_json(const Verdict& v);

/// Full session snapshot as served by the HTTP API.
nlohmann::json session_json(const Session& s);

/**
 * Accepts "k3", "mcnaughton", "uniform:K", or an object {kind:"uniform",k} /
 * {kind:"mcnaughton"}. Throws ServiceError (400) otherwise.
 */
StoppingRule parse_rule(const nlohmann::json& j);

} // namespace muller::service
