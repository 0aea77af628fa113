#include "behaviocog/service/service.hpp"

#include <cstdio>

#include "behaviocog/biometric/features.hpp"
#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

std::string hex_id(std::uint64_t a, std::uint64_t b) {
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(a),
                static_cast<unsigned long long>(b));
  return buf;
}

constexpr std::uint64_t kIdStream = 0x5e55'1011'0000'0000ULL;

nlohmann::json params_json(const SchemeParams& p) {
  return {{"d", p.d}, {"k", p.k}, {"l", p.l}, {"n", p.n}, {"gamma", p.gamma}, {"t", p.t}};
}

const char* cognitive_name(const std::optional<VerifyOutcome>& v) {
  return v ? to_string(*v) : "none";
}

}  // namespace

struct AuthService::Enrollment {
  std::string user;
  Secret secret;
  BiometricProfile profile;
};

struct AuthService::Session {
  std::string id;
  std::string user;
  std::uint64_t seed = 0;
  Rng rng{0};
  std::shared_ptr<const Enrollment> enrollment;
  int round = 0;
  bool err = false;
  bool done = false;
  std::optional<Challenge> pending;
  std::vector<RoundOutcome> log;
  std::mutex mutex;
};

ServiceConfig setup(const SchemeParams& params, const SymbolSet& symbols,
                    std::vector<std::string> pool) {
  validate(params);
  if (symbols.size() != params.d)
    throw ConfigError("symbol set has " + std::to_string(symbols.size()) + " symbols, d = " +
                      std::to_string(params.d));
  if (static_cast<int>(pool.size()) != params.n)
    throw ConfigError("object pool has " + std::to_string(pool.size()) + " entries, n = " +
                      std::to_string(params.n));
  return {params, make_symbol_set(symbols.name, symbols.symbols), std::move(pool)};
}

std::vector<std::string> default_pool(int n) {
  std::vector<std::string> pool;
  for (int i = 0; i < n; ++i) pool.push_back(std::to_string(i));
  return pool;
}

nlohmann::json to_json(const ServiceConfig& c) {
  return {{"params", params_json(c.params)}, {"symbols", to_json(c.symbols)}, {"pool", c.pool}};
}

ServiceConfig service_config_from_json(const nlohmann::json& j) {
  try {
    const auto& p = j.at("params");
    const auto params = new_params(p.at("d"), p.at("k"), p.at("l"), p.at("n"), p.value("gamma", 1),
                                   p.value("t", 1));
    return setup(params, symbol_set_from_json(j.at("symbols")),
                 j.at("pool").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("config: ") + e.what());
  }
}

const char* to_string(BiometricVerdict verdict) {
  switch (verdict) {
    case BiometricVerdict::pass: return "pass";
    case BiometricVerdict::fail_sym: return "fail-sym";
    case BiometricVerdict::fail_user: return "fail-user";
    case BiometricVerdict::malformed: return "malformed";
  }
  return "malformed";
}

AuthService::AuthService(ServiceConfig config, ServiceOptions options, std::shared_ptr<Store> store)
    : config_(std::move(config)), options_(std::move(options)), store_(std::move(store)) {
  config_ = setup(config_.params, config_.symbols, config_.pool);
  if (store_->records().empty()) store_->append({{"type", "config"}, {"config", to_json(config_)}});
  else replay();
}

AuthService::~AuthService() = default;

bool AuthService::enrolled(const std::string& user) const {
  std::shared_lock lock(enroll_mutex_);
  return enrollments_.count(user) != 0;
}

void AuthService::register_user(const std::string& user, const std::vector<ObjectId>& secret_ids,
                                const std::vector<Trace>& renderings) {
  if (user.empty()) throw DataError("empty user id");
  if (enrolled(user)) throw ProtocolError("user is already enrolled");
  const auto& p = config_.params;
  Secret secret(secret_ids, p);

  std::vector<std::vector<FeatureSet>> by_symbol(static_cast<std::size_t>(p.d));
  for (std::size_t i = 0; i < renderings.size(); ++i) {
    const auto& tr = renderings[i];
    const std::string where = "rendering " + std::to_string(i) + ": ";
    if (!tr.symbol) throw DataError(where + "missing symbol label");
    const auto r = config_.symbols.response_of(*tr.symbol);
    if (!r) throw DataError(where + "unknown symbol '" + *tr.symbol + "'");
    try {
      by_symbol[static_cast<std::size_t>(*r)].push_back(extract_features(tr));
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
  }
  for (int r = 0; r < p.d; ++r)
    if (static_cast<int>(by_symbol[static_cast<std::size_t>(r)].size()) != p.t)
      throw DataError("symbol '" + config_.symbols.sym(r) + "' has " +
                      std::to_string(by_symbol[static_cast<std::size_t>(r)].size()) +
                      " renderings, expected t = " + std::to_string(p.t));

  auto enrollment = std::make_shared<Enrollment>(
      Enrollment{user, std::move(secret), enroll(by_symbol, options_.enroll)});

  std::unique_lock lock(enroll_mutex_);
  if (enrollments_.count(user)) throw ProtocolError("user is already enrolled");
  store_->append({{"type", "enroll"},
                  {"user", user},
                  {"secret", enrollment->secret.objects()},
                  {"profile", to_json(enrollment->profile)}});
  enrollments_.emplace(user, std::move(enrollment));
}

SessionStart AuthService::start_session(const std::string& user) {
  std::shared_ptr<const Enrollment> enrollment;
  {
    std::shared_lock lock(enroll_mutex_);
    auto it = enrollments_.find(user);
    if (it == enrollments_.end()) throw NotFound();
    enrollment = it->second;
  }

  auto session = std::make_shared<Session>();
  std::unique_lock lock(session_mutex_);
  if (options_.lockout_after > 0 && consecutive_rejects_[user] >= options_.lockout_after)
    throw ProtocolError("too many rejected sessions");
  const std::uint64_t counter = session_counter_++;
  Rng seeds = Rng::derive(options_.seed, counter);
  Rng ids = Rng::derive(options_.seed ^ kIdStream, counter);
  const std::uint64_t a = ids.next();
  session->id = hex_id(a, ids.next());
  session->user = user;
  session->seed = seeds.next();
  session->rng = Rng(session->seed);
  session->enrollment = std::move(enrollment);
  session->pending = sample_challenge(config_.params, session->rng);
  sessions_.emplace(session->id, session);
  session_order_.push_back(session->id);
  if (!replaying_)
    store_->append({{"type", "session"}, {"session", session->id}, {"user", user}, {"seed", session->seed}});
  return {session->id, *session->pending};
}

SubmitResult AuthService::submit_response(const std::string& session, const Trace& trace) {
  return submit(session, &trace, {});
}

SubmitResult AuthService::submit_malformed(const std::string& session, const std::string& reason) {
  return submit(session, nullptr, reason);
}

SubmitResult AuthService::submit(const std::string& id, const Trace* trace, const std::string& reason) {
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(session_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw NotFound();
    s = it->second;
  }
  std::lock_guard lock(s->mutex);
  if (s->done || !s->pending) throw ProtocolError("session has no pending challenge");

  const auto& p = config_.params;
  const auto& e = *s->enrollment;
  RoundOutcome out;
  out.challenge = *s->pending;
  if (trace) {
    try {
      const FeatureSet fs = extract_features(*trace);
      const auto expected = weighted_sum(p, e.secret, out.challenge);
      const Decision dec = classify(fs, e.profile, expected);
      if (dec.accepted) {
        out.biometric = BiometricVerdict::pass;
        out.symbol = dec.symbol;
        out.cognitive = verify_response(p, e.secret, out.challenge, *dec.symbol);
      } else {
        out.biometric = dec.failed == DecisionStage::symbol ? BiometricVerdict::fail_sym
                                                            : BiometricVerdict::fail_user;
        if (expected && dec.failed == DecisionStage::symbol) {
          // Perhaps a well-formed rendering of another symbol: decode it anyway.
          const Decision nearest = classify(fs, e.profile, std::nullopt);
          if (nearest.failed != DecisionStage::symbol) {
            out.symbol = nearest.symbol;
            out.cognitive = verify_response(p, e.secret, out.challenge, *nearest.symbol);
          }
        }
      }
    } catch (const DataError&) {
      out.biometric = BiometricVerdict::malformed;
    }
  }
  out.error = !(out.biometric == BiometricVerdict::pass && out.cognitive &&
                *out.cognitive != VerifyOutcome::wrong);
  s->err = s->err || out.error;
  s->log.push_back(out);
  ++s->round;

  if (!replaying_) {
    nlohmann::json rec = {{"type", "round"},
                          {"session", s->id},
                          {"round", s->round},
                          {"symbol", out.symbol ? nlohmann::json(*out.symbol) : nlohmann::json(nullptr)},
                          {"cognitive", cognitive_name(out.cognitive)},
                          {"biometric", to_string(out.biometric)},
                          {"error", out.error}};
    rec["trace"] = trace ? nlohmann::json(serialize_trace(*trace)) : nlohmann::json(nullptr);
    if (!trace) rec["reason"] = reason;
    store_->append(rec);
  }

  SubmitResult result;
  result.round = s->round;
  if (s->round < p.gamma) {
    s->pending = sample_challenge(p, s->rng);
    result.next = *s->pending;
    return result;
  }
  s->pending.reset();
  s->done = true;
  result.done = true;
  result.accepted = !s->err;
  {
    std::lock_guard lock2(session_mutex_);
    auto& streak = consecutive_rejects_[s->user];
    streak = s->err ? streak + 1 : 0;
  }
  if (!replaying_)
    store_->append({{"type", "verdict"}, {"session", s->id}, {"accepted", !s->err}});
  return result;
}

Transcript AuthService::export_transcript(const std::string& user) const {
  Transcript t;
  t.params = config_.params;
  std::vector<std::shared_ptr<Session>> list;
  {
    std::lock_guard lock(session_mutex_);
    for (const auto& id : session_order_) {
      const auto& s = sessions_.at(id);
      if (s->user == user) list.push_back(s);
    }
  }
  for (const auto& s : list) {
    std::lock_guard lock(s->mutex);
    if (!s->done || s->err) continue;
    for (const auto& r : s->log) t.rounds.push_back({r.challenge, *r.symbol});
  }
  return t;
}

std::vector<RoundOutcome> AuthService::audit(const std::string& id) const {
  std::shared_ptr<Session> s;
  {
    std::lock_guard lock(session_mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw NotFound();
    s = it->second;
  }
  std::lock_guard lock(s->mutex);
  return s->log;
}

void AuthService::replay() {
  replaying_ = true;
  std::map<std::string, std::optional<bool>> verdicts;
  try {
    for (const auto& rec : store_->records()) {
      const auto type = rec.at("type").get<std::string>();
      if (type == "config") {
        if (!(service_config_from_json(rec.at("config")) == config_))
          throw DataError("store was written under a different configuration");
      } else if (type == "enroll") {
        const auto user = rec.at("user").get<std::string>();
        Secret secret(rec.at("secret").get<std::vector<ObjectId>>(), config_.params);
        auto e = std::make_shared<Enrollment>(
            Enrollment{user, std::move(secret), profile_from_json(rec.at("profile"))});
        std::unique_lock lock(enroll_mutex_);
        enrollments_[user] = std::move(e);
      } else if (type == "session") {
        const auto started = start_session(rec.at("user").get<std::string>());
        if (started.session != rec.at("session").get<std::string>())
          throw DataError("session id mismatch; store and seed disagree");
        if (sessions_.at(started.session)->seed != rec.at("seed").get<std::uint64_t>())
          throw DataError("session seed mismatch");
      } else if (type == "round") {
        const auto id = rec.at("session").get<std::string>();
        SubmitResult r;
        if (rec.at("trace").is_null()) {
          r = submit_malformed(id, rec.value("reason", std::string()));
        } else {
          Trace tr;
          bool parsed = true;
          try {
            tr = parse_trace(rec["trace"].get<std::string>());
          } catch (const DataError&) {
            parsed = false;
          }
          r = parsed ? submit_response(id, tr) : submit_malformed(id, "unparseable trace");
        }
        const auto& last = sessions_.at(id)->log.back();
        if (last.error != rec.at("error").get<bool>())
          throw DataError("replayed round outcome differs from the record");
        if (r.done) verdicts[id] = r.accepted;
      } else if (type == "verdict") {
        const auto id = rec.at("session").get<std::string>();
        if (verdicts[id] != std::optional<bool>(rec.at("accepted").get<bool>()))
          throw DataError("replayed verdict differs from the record");
      } else {
        throw DataError("unknown record type '" + type + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    replaying_ = false;
    throw DataError(std::string("store: ") + e.what());
  } catch (...) {
    replaying_ = false;
    throw;
  }
  replaying_ = false;
}

}  // namespace behaviocog
