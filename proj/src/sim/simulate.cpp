#include "behaviocog/sim/simulate.hpp"

#include <fstream>

#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace

SimulatedUser make_user(std::string id, const SchemeParams& params, Rng& rng) {
  return {std::move(id), sample_secret(params, rng).objects(), random_style(rng)};
}

std::vector<Trace> registration_set(const SimulatedUser& user, const ServiceConfig& config,
                                    const RenderOptions& render, Rng& rng) {
  std::vector<Trace> out;
  for (const auto& symbol : config.symbols.symbols)
    for (int i = 0; i < config.params.t; ++i) {
      Trace tr = render_symbol(symbol, user.style, render, rng);
      tr.user = user.id;
      tr.session = "registration";
      out.push_back(std::move(tr));
    }
  return out;
}

bool run_session(AuthService& service, const std::string& target, const Responder& responder,
                 const RenderOptions& render, Rng& rng, std::vector<Trace>* submitted) {
  const auto& config = service.config();
  auto started = service.start_session(target);
  std::optional<Secret> secret;
  if (responder.secret) secret.emplace(*responder.secret, config.params);
  Challenge challenge = started.challenge;
  while (true) {
    const int r = secret ? compute_response(config.params, *secret, challenge, rng)
                         : static_cast<int>(rng.below(static_cast<std::uint64_t>(config.params.d)));
    Trace tr = render_symbol(config.symbols.sym(r), responder.style, render, rng);
    tr.session = started.session;
    const auto result = service.submit_response(started.session, tr);
    if (submitted) submitted->push_back(std::move(tr));
    if (result.done) return *result.accepted;
    challenge = *result.next;
  }
}

nlohmann::json to_json(const HandwritingStyle& s) {
  return {{"shape_seed", s.shape_seed}, {"shape_spread", s.shape_spread}, {"slant", s.slant},
          {"scale", s.scale},           {"aspect", s.aspect},             {"speed", s.speed},
          {"rhythm", s.rhythm},         {"rhythm_phase", s.rhythm_phase}, {"pressure", s.pressure},
          {"pressure_swing", s.pressure_swing}, {"size", s.size}};
}

SimulationResult simulate(const SimulationSpec& spec, const std::optional<std::filesystem::path>& out) {
  if (spec.users < 0 || spec.sessions < 0) throw ConfigError("counts must be non-negative");
  const auto config = setup(spec.params, symbol_set_by_name(spec.symbol_set), default_pool(spec.params.n));
  std::shared_ptr<Store> store;
  if (out) {
    std::filesystem::create_directories(*out);
    std::filesystem::remove(*out / "store.jsonl");
    store = std::make_shared<Store>(*out / "store.jsonl");
  } else {
    store = std::make_shared<Store>();
  }
  ServiceOptions options;
  options.seed = spec.seed;
  AuthService service(config, options, store);

  SimulationResult result;
  Rng rng = Rng::derive(spec.seed, 1);
  for (int u = 0; u < spec.users; ++u) {
    auto user = make_user("user" + std::to_string(u), spec.params, rng);
    service.register_user(user.id, user.secret, registration_set(user, config, spec.render, rng));
    for (int s = 0; s < spec.sessions; ++s) {
      std::vector<Trace> traces;
      const Responder responder{&user.secret, user.style};
      result.accepted += run_session(service, user.id, responder, spec.render, rng, &traces);
      ++result.sessions;
      if (out)
        for (std::size_t i = 0; i < traces.size(); ++i) {
          traces[i].user = user.id;
          const auto path = *out / "traces" / user.id /
                            (std::to_string(s) + "-" + std::to_string(i) + ".jsonl");
          std::filesystem::create_directories(path.parent_path());
          save_trace(traces[i], path);
        }
    }
    result.transcripts.push_back(service.export_transcript(user.id));
    result.users.push_back(std::move(user));
  }

  if (out) {
    write_json(*out / "config.json", to_json(config));
    auto users = nlohmann::json::array();
    for (const auto& u : result.users)
      users.push_back({{"user", u.id}, {"secret", u.secret}, {"style", to_json(u.style)}});
    write_json(*out / "users.json", users);
    for (std::size_t i = 0; i < result.users.size(); ++i)
      write_json(*out / "transcripts" / (result.users[i].id + ".json"), to_json(result.transcripts[i]));
  }
  return result;
}

}  // namespace behaviocog
