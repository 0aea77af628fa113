#include "behaviocog/service/http_api.hpp"

#include <regex>

#include "behaviocog/errors.hpp"
#include "httplib.h"

namespace behaviocog {
namespace {

HttpReply error(int status, const std::string& message) { return {status, {{"error", message}}}; }

nlohmann::json parse_body(const std::string& body) {
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception&) {
    throw DataError("request body is not valid JSON");
  }
}

}  // namespace

nlohmann::json to_json(const Challenge& c) { return {{"a", c.objects}, {"w", c.weights}}; }

HttpReply HttpApi::handle(const std::string& method, const std::string& path,
                          const std::string& query_user, const std::string& body) {
  static const std::regex response_path("^/session/([0-9a-f]+)/response$");
  try {
    std::smatch m;
    if (method == "GET" && path == "/config") return {200, to_json(service_.config())};

    if (method == "POST" && path == "/register") {
      const auto j = parse_body(body);
      const auto user = j.at("user").get<std::string>();
      const auto secret = j.at("secret").get<std::vector<ObjectId>>();
      std::vector<Trace> renderings;
      for (const auto& r : j.at("renderings")) renderings.push_back(trace_from_json(r));
      service_.register_user(user, secret, renderings);
      return {201, {{"user", user}, {"templates", 2 * service_.config().params.d}}};
    }

    if (method == "POST" && path == "/session") {
      const auto j = parse_body(body);
      const auto started = service_.start_session(j.at("user").get<std::string>());
      return {201, {{"session", started.session},
                    {"round", 0},
                    {"gamma", service_.config().params.gamma},
                    {"challenge", to_json(started.challenge)}}};
    }

    if (method == "POST" && std::regex_match(path, m, response_path)) {
      const std::string id = m[1];
      SubmitResult r;
      std::optional<Trace> trace;
      std::string reason;
      try {
        const auto j = parse_body(body);
        trace = trace_from_json(j.at("trace"));
      } catch (const std::exception& e) {
        reason = e.what();
      }
      r = trace ? service_.submit_response(id, *trace) : service_.submit_malformed(id, reason);
      nlohmann::json out = {{"round", r.round}, {"done", r.done}};
      if (r.accepted) out["verdict"] = *r.accepted ? "accept" : "reject";
      if (r.next) out["challenge"] = to_json(*r.next);
      return {200, out};
    }

    if (method == "GET" && path == "/transcript") {
      if (query_user.empty()) return error(400, "missing user");
      return {200, to_json(service_.export_transcript(query_user))};
    }
    return error(404, "no such route");
  } catch (const NotFound& e) {
    return error(404, e.what());
  } catch (const ProtocolError& e) {
    return error(409, e.what());
  } catch (const nlohmann::json::exception& e) {
    return error(400, std::string("bad request: ") + e.what());
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
}

void HttpApi::bind(httplib::Server& server) {
  auto route = [this](const httplib::Request& req, httplib::Response& res) {
    const auto reply = handle(req.method, req.path, req.get_param_value("user"), req.body);
    res.status = reply.status;
    res.set_content(reply.body.dump(), "application/json");
  };
  server.Get("/config", route);
  server.Get("/transcript", route);
  server.Post("/register", route);
  server.Post("/session", route);
  server.Post(R"(/session/([0-9a-f]+)/response)", route);
}

void serve(AuthService& service, const std::string& host, int port) {
  httplib::Server server;
  HttpApi api(service);
  api.bind(server);
  if (!server.listen(host, port)) throw ConfigError("cannot listen on " + host + ":" + std::to_string(port));
}

}  // namespace behaviocog
