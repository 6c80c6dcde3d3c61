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

#include "muller/service/http_server.hpp"

#include <httplib.h>

#include "muller/game_io.hpp"
#include "muller/service/json_codec.hpp"

namespace muller::service {

using nlohmann::json;

namespace {

void reply(httplib::Response& res, int status, const json& body)
{
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& code, const std::string& message)
{
    reply(res, status, {{"error", message}, {"code", code}});
}

// Maps every library error onto a status code, so handlers can just throw.
template <class F>
void guarded(httplib::Response& res, F&& f)
{
    try {
        f();
    } catch (const ServiceError& e) {
        reply_error(res, e.status(), e.code(), e.what());
    } catch (const StrategyOffDomain& e) {
        reply_error(res, 422, "StrategyOffDomain", e.what());
    } catch (const SyntaxError& e) {
        reply_error(res, 400, "SyntaxError", e.what());
    } catch (const SemanticError& e) {
        reply_error(res, 400, "SemanticError", e.what());
    } catch (const json::exception& e) {
        reply_error(res, 400, "BadRequest", e.what());
    } catch (const Error& e) {
        reply_error(res, 500, "InternalError", e.what());
    } catch (const std::exception& e) {
        reply_error(res, 500, "InternalError", e.what());
    }
}

json body_of(const httplib::Request& req)
{
    if (req.body.empty()) return json::object();
    json j = json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ServiceError(400, "BadRequest", "request body is not a JSON object");
    return j;
}

Player player_of(const json& j)
{
    if (j.is_number_integer()) {
        const auto p = j.get<long long>();
        if (p == 0) return Player::Zero;
        if (p == 1) return Player::One;
    }
    throw ServiceError(400, "BadRequest", "humanPlayer must be 0 or 1");
}

} // namespace

HttpServer::HttpServer(SessionManager& sessions, ServerOptions options)
    : sessions_(sessions), options_(std::move(options)), server_(std::make_unique<httplib::Server>())
{
    routes();
}

HttpServer::~HttpServer() { stop(); }

void HttpServer::routes()
{
    httplib::Server& s = *server_;

    s.Post("/games", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json body = body_of(req);
            SessionRequest r;
            if (body.contains("gameText")) {
                r.game = std::make_shared<const SolvedGame>(parse_game(body.at("gameText").get<std::string>()));
                r.game_name = "custom";
            } else if (body.contains("game")) {
                r.game_name = body.at("game").get<std::string>();
                r.game = sessions_.corpus_game(r.game_name);
            } else {
                throw ServiceError(400, "BadRequest", "give either game or gameText");
            }
            if (body.contains("rule")) r.rule = parse_rule(body.at("rule"));
            if (body.contains("humanPlayer")) r.human = player_of(body.at("humanPlayer"));
            if (body.contains("engine")) r.engine = body.at("engine").get<std::string>();
            if (body.contains("start") && !body.at("start").is_null()) r.start = body.at("start").get<VertexId>();
            if (body.contains("seed")) r.seed = body.at("seed").get<std::uint64_t>();
            const std::string id = sessions_.create(std::move(r));
            reply(res, 201, sessions_.with(id, [](Session& x) { return session_json(x); }));
        });
    });

    s.Get(R"(/games/([0-9a-f]+))", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { reply(res, 200, sessions_.with(req.matches[1], [](Session& x) { return session_json(x); })); });
    });

    s.Post(R"(/games/([0-9a-f]+)/move)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            const json body = body_of(req);
            if (!body.contains("to") || !body.at("to").is_number_unsigned())
                throw ServiceError(400, "BadRequest", "move needs a vertex id in \"to\"");
            const auto to = body.at("to").get<VertexId>();
            reply(res, 200, sessions_.with(req.matches[1], [&](Session& x) {
                x.human_move(to);
                return session_json(x);
            }));
        });
    });

    s.Post(R"(/games/([0-9a-f]+)/engine-step)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            reply(res, 200, sessions_.with(req.matches[1], [](Session& x) {
                const VertexId v = x.engine_step();
                json j = session_json(x);
                j["engineMove"] = v;
                return j;
            }));
        });
    });

    s.Get(R"(/games/([0-9a-f]+)/hint)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            reply(res, 200, sessions_.with(req.matches[1], [](Session& x) {
                return json{{"vertex", x.hint()}, {"player", index_of(x.side_to_move())}, {"strategy", x.engine()}};
            }));
        });
    });

    s.Get("/corpus", [this](const httplib::Request&, httplib::Response& res) {
        guarded(res, [&] { reply(res, 200, {{"format", kFormat}, {"games", sessions_.corpus_names()}}); });
    });

    if (options_.static_dir) s.set_mount_point("/", options_.static_dir->string());
}

int HttpServer::bind()
{
    int port = options_.port;
    if (port == 0)
        port = server_->bind_to_any_port(options_.host);
    else if (!server_->bind_to_port(options_.host, port))
        port = -1;
    if (port < 0) throw Error("cannot bind " + options_.host + ":" + std::to_string(options_.port));
    return port;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::stop()
{
    if (server_) server_->stop();
}

bool HttpServer::running() const { return server_->is_running(); }

} // namespace muller::service
