#pragma once

#include <string>

#include "behaviocog/service/service.hpp"
#include "json.hpp"

namespace httplib {
class Server;
}

namespace behaviocog {

struct HttpReply {
  int status = 200;
  nlohmann::json body;
};

// Routes of the JSON API, independent of any socket:
//   GET  /config
//   POST /register              {user, secret:[ids], renderings:[trace]}
//   POST /session               {user}
//   POST /session/{id}/response {trace}
//   GET  /transcript?user=...
// A trace is JSON-lines text or {"events":[..]}. Errors reply
// {"error": message} with 400, 404 or 409.
class HttpApi {
 public:
  explicit HttpApi(AuthService& service) : service_(service) {}

  HttpReply handle(const std::string& method, const std::string& path, const std::string& query_user,
                   const std::string& body);

  /// Installs the routes on a cpp-httplib server.
  void bind(httplib::Server& server);

 private:
  AuthService& service_;
};

nlohmann::json to_json(const Challenge& challenge);

/// Blocks serving on host:port until the process is stopped.
void serve(AuthService& service, const std::string& host, int port);

}  // namespace behaviocog
