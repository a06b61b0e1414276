// Copyright 2026 The GCR Solver Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GCR_HTTP_SERVER_HPP_
#define GCR_HTTP_SERVER_HPP_

#include <string>

#include "gcr/service.hpp"
#include "httplib.h"

namespace gcr {

/// HTTP transport for GameService. Every request is forwarded verbatim;
/// responses are JSON.
class HttpFrontend {
 public:
  explicit HttpFrontend(GameService& service) : service_(service) {
    auto forward = [this](const httplib::Request& req, httplib::Response& res) {
      const ApiResponse out = service_.handle(req.method, req.path, req.body);
      res.status = out.status;
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(out.body.dump(), "application/json");
    };
    // httplib defaults to SO_REUSEPORT, which lets a second server share a busy
    // port silently. SO_REUSEADDR alone still allows quick restarts.
    server_.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
    });
    server_.Get(R"(/.*)", forward);
    server_.Post(R"(/.*)", forward);
    server_.Delete(R"(/.*)", forward);
  }

  /// False when the address cannot be bound (e.g. the port is busy).
  bool bind(const std::string& host, int port) { return server_.bind_to_port(host, port); }

  /// Binds an ephemeral port and returns it, or -1.
  int bind_any(const std::string& host) { return server_.bind_to_any_port(host); }

  /// Serves until stop() is called from another thread.
  bool run() { return server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() const { server_.wait_until_ready(); }

 private:
  GameService& service_;
  httplib::Server server_;
};

}  // namespace gcr

#endif  // GCR_HTTP_SERVER_HPP_
