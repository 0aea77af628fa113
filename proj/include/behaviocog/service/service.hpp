#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "behaviocog/biometric/classifier.hpp"
#include "behaviocog/biometric/symbols.hpp"
#include "behaviocog/biometric/trace.hpp"
#include "behaviocog/cognitive/scheme.hpp"
#include "behaviocog/cognitive/transcript.hpp"
#include "behaviocog/service/store.hpp"
#include "json.hpp"

namespace behaviocog {

// Published configuration. `pool` names the n objects by index.
struct ServiceConfig {
  SchemeParams params;
  SymbolSet symbols;
  std::vector<std::string> pool;

  friend bool operator==(const ServiceConfig& a, const ServiceConfig& b) {
    return a.params == b.params && a.symbols.symbols == b.symbols.symbols && a.pool == b.pool;
  }
};

/// Validates and returns the configuration; identical input gives an equal result.
/// Throws ConfigError when |symbols| != d or |pool| != n.
ServiceConfig setup(const SchemeParams& params, const SymbolSet& symbols,
                    std::vector<std::string> pool);

/// Pool manifest "0" .. "n-1".
std::vector<std::string> default_pool(int n);

nlohmann::json to_json(const ServiceConfig& config);
ServiceConfig service_config_from_json(const nlohmann::json& j);

struct ServiceOptions {
  std::uint64_t seed = 0;
  EnrollOptions enroll;
  // Refuse new sessions after this many consecutive rejected ones; 0 = off.
  int lockout_after = 0;
};

enum class BiometricVerdict { pass, fail_sym, fail_user, malformed };

const char* to_string(BiometricVerdict verdict);

// Audit detail of one round; never returned to the client mid-session.
struct RoundOutcome {
  Challenge challenge;
  std::optional<int> symbol;  // decoded response
  std::optional<VerifyOutcome> cognitive;
  BiometricVerdict biometric = BiometricVerdict::malformed;
  bool error = true;
};

struct SessionStart {
  std::string session;
  Challenge challenge;
};

struct SubmitResult {
  int round = 0;  // rounds completed so far
  bool done = false;
  std::optional<bool> accepted;     // set once done
  std::optional<Challenge> next;    // set while not done
};

// The authentication server: registration, gamma-round sessions with a
// verdict deferred to the last round, and transcript export. Every state
// change is appended to the store; constructing over a non-empty store
// replays it and checks the recomputed verdicts against the recorded ones.
class AuthService {
 public:
  AuthService(ServiceConfig config, ServiceOptions options = {},
              std::shared_ptr<Store> store = std::make_shared<Store>());
  ~AuthService();

  AuthService(const AuthService&) = delete;
  AuthService& operator=(const AuthService&) = delete;

  const ServiceConfig& config() const { return config_; }

  /// `renderings` are labelled by symbol, exactly t per symbol.
  /// Throws DataError on wrong counts, labels or traces, ConfigError on an
  /// invalid secret, ProtocolError if the user is already enrolled.
  void register_user(const std::string& user, const std::vector<ObjectId>& secret,
                     const std::vector<Trace>& renderings);

  bool enrolled(const std::string& user) const;

  /// Throws NotFound for an unknown user, ProtocolError when locked out.
  SessionStart start_session(const std::string& user);

  /// A trace that fails to parse counts as a failed round.
  /// Throws NotFound for an unknown session, ProtocolError once the
  /// session has finished.
  SubmitResult submit_response(const std::string& session, const Trace& trace);
  SubmitResult submit_malformed(const std::string& session, const std::string& reason);

  /// Rounds of finished, accepted sessions of `user`, oldest first.
  Transcript export_transcript(const std::string& user) const;

  /// Audit log of one session.
  std::vector<RoundOutcome> audit(const std::string& session) const;

 private:
  struct Enrollment;
  struct Session;

  SubmitResult submit(const std::string& session, const Trace* trace, const std::string& reason);
  void replay();

  ServiceConfig config_;
  ServiceOptions options_;
  std::shared_ptr<Store> store_;
  bool replaying_ = false;

  mutable std::shared_mutex enroll_mutex_;
  std::map<std::string, std::shared_ptr<const Enrollment>> enrollments_;

  mutable std::mutex session_mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::vector<std::string> session_order_;
  std::uint64_t session_counter_ = 0;
  std::map<std::string, int> consecutive_rejects_;
};

}  // namespace behaviocog
