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
#include <memory>
#include <optional>
#include <string>

#include "muller/service/session.hpp"

namespace httplib { class Server; }

namespace muller::service {

struct ServerOptions
{
    std::string host = "127.0.0.1";
    int port = 8080;
    /// Served at "/" when set (the browser client).
    std::optional<std::filesystem::path> static_dir;
};

/**
 * JSON-over-HTTP front end for SessionManager.
 *
 *   POST /games                  create (body: game|gameText, rule, humanPlayer, engine, start, seed)
 *   GET  /games/{id}             snapshot
 *   POST /games/{id}/move        {"to": v}
 *   POST /games/{id}/engine-step
 *   GET  /games/{id}/hint
 *   GET  /corpus                 bundled game names
 *
 * Errors come back as {"error": message, "code": name}.
 */
class HttpServer
{
public:
    HttpServer(SessionManager& sessions, ServerOptions options);
    ~HttpServer();

    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Binds; returns the bound port (options.port 0 picks a free one). Throws Error on failure.
    int bind();
    /// Blocks until stop(). Call bind() first.
    void listen();
    void stop();
    bool running() const;

private:
    void routes();

    SessionManager& sessions_;
    ServerOptions options_;
    std::unique_ptr<httplib::Server> server_;
};

} // namespace muller::service
