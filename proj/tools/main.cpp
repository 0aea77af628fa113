// behaviocog: parameter tables, simulation, attacks and biometric tooling.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "behaviocog/attacks/enumeration.hpp"
#include "behaviocog/attacks/frequency.hpp"
#include "behaviocog/attacks/linearization.hpp"
#include "behaviocog/attacks/report.hpp"
#include "behaviocog/biometric/classifier.hpp"
#include "behaviocog/biometric/selection.hpp"
#include "behaviocog/biometric/symbols.hpp"
#include "behaviocog/cognitive/analysis.hpp"
#include "behaviocog/errors.hpp"
#include "behaviocog/service/http_api.hpp"
#include "behaviocog/sim/simulate.hpp"

namespace fs = std::filesystem;
using namespace behaviocog;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 2, kData = 3, kBudget = 4 };

struct Globals {
  std::uint64_t seed = 1;
  std::string out;
  bool json = false;
};

void emit(const Globals& g, const json& j, const std::string& text) {
  if (g.json) std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

void write_file(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

// "d,k,l,n" or "d,k,l,n:budget"
SecurityRowInput parse_row(const std::string& text) {
  int d, k, l, n;
  double budget = 0.0;
  char tail[2];
  const int got = std::sscanf(text.c_str(), "%d,%d,%d,%d:%lf%1s", &d, &k, &l, &n, &budget, tail);
  if (got != 4 && got != 5) throw ConfigError("parameter row must look like d,k,l,n[:budget]: " + text);
  const auto params = new_params(d, k, l, n);
  if (got == 4) budget = complexity_bits(params).meet_in_middle;
  return {params, budget};
}

std::vector<Feature> parse_features(const std::string& list) {
  std::vector<Feature> out;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto f = feature_from_name(name);
    if (!f) throw ConfigError("unknown feature '" + name + "'");
    out.push_back(*f);
  }
  return out;
}

std::vector<FeatureSet> corpus_features(const fs::path& dir) {
  std::vector<FeatureSet> out;
  for (const auto& t : load_corpus(dir)) out.push_back(extract_features(t));
  return out;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

// ---- params ---------------------------------------------------------------

int cmd_params(const Globals& g, const std::vector<std::string>& rows_text, double fpr,
               const std::vector<int>& gammas) {
  std::vector<SecurityRowInput> rows;
  if (rows_text.empty()) rows = reference_rows();
  for (const auto& r : rows_text) rows.push_back(parse_row(r));
  const auto table = security_table(rows, fpr, gammas);

  json j = json::array();
  std::ostringstream text;
  text << "(d, k, l, n)          p_RG    m_it  BF      MitM    CH time  CH samples  GE samples";
  for (int gamma : gammas) text << "  security g=" << gamma;
  text << '\n';
  for (const auto& row : table) {
    j.push_back(to_json(row));
    char line[160];
    std::snprintf(line, sizeof line, "%-20s  %.3f  %4d  2^%-4.0f  2^%-4.0f  2^%-5.0f  %10s  %10llu",
                  to_string(row.params).c_str(), row.p_rg, row.m_it, row.bf_bits, row.mitm_bits,
                  row.ch.time_bits,
                  row.ch_samples == UINT64_MAX ? "inf" : std::to_string(row.ch_samples).c_str(),
                  static_cast<unsigned long long>(row.ge_samples));
    text << line;
    for (const auto& c : row.combined) text << "  " << fmt("%12.1e", c.second);
    text << '\n';
  }
  emit(g, {{"fpr_bar", fpr}, {"gammas", gammas}, {"rows", j}}, text.str());
  return kOk;
}

// ---- simulate -------------------------------------------------------------

int cmd_simulate(const Globals& g, SimulationSpec spec) {
  spec.seed = g.seed;
  const fs::path out = g.out.empty() ? fs::path("sim-out") : fs::path(g.out);
  const auto result = simulate(spec, out);
  json j = {{"out", out.string()},
            {"users", result.users.size()},
            {"sessions", result.sessions},
            {"accepted", result.accepted},
            {"acceptance_rate", result.sessions ? double(result.accepted) / result.sessions : 0.0}};
  auto& rounds = j["transcript_rounds"] = json::object();
  for (std::size_t i = 0; i < result.users.size(); ++i)
    rounds[result.users[i].id] = result.transcripts[i].rounds.size();
  std::ostringstream text;
  text << "simulated " << result.users.size() << " users, " << result.sessions << " sessions, "
       << result.accepted << " accepted; output in " << out.string() << '\n';
  emit(g, j, text.str());
  return kOk;
}

// ---- attack ---------------------------------------------------------------

struct AttackArgs {
  std::string name;
  std::string transcript;
  std::string params;
  double budget = 0.0;  // candidates for enumeration, bits for ch
  int delta = 1;
  std::string mode = "rdfa";
  double alpha = 0.01;
};

int cmd_attack(const Globals& g, const AttackArgs& a) {
  json report;
  if (a.name == "ch") {
    SchemeParams params;
    if (!a.params.empty()) params = parse_row(a.params).params;
    else if (!a.transcript.empty()) params = load_transcript(a.transcript).params;
    else throw ConfigError("ch needs --params or a transcript");
    const double budget = a.budget > 0 ? a.budget : complexity_bits(params).meet_in_middle;
    const auto est = ch_attack_estimate(params, budget);
    report = {{"attack", "ch"}, {"recovered", false}, {"secret", nullptr},
              {"work", {{"rows", 0}, {"candidates", 0}}}, {"stats", to_json(est)}};
    report["stats"]["budget_bits"] = budget;
  } else {
    if (a.transcript.empty()) throw ConfigError("attack needs a transcript");
    const auto t = load_transcript(a.transcript);
    if (a.name == "bruteforce" || a.name == "mitm") {
      EnumerationOptions opt;
      if (a.budget > 0) opt.max_candidates = static_cast<std::uint64_t>(a.budget);
      report = attack_report(a.name, a.name == "mitm" ? mitm_recover(t, opt) : brute_force_recover(t, opt));
    } else if (a.name == "ge" || a.name == "ge-slack") {
      LinearizationOptions opt;
      if (a.budget > 0) opt.max_candidates = static_cast<std::uint64_t>(a.budget);
      report = attack_report(a.name, a.name == "ge" ? ge_recover(t, opt) : ge_slack_recover(t, opt));
    } else if (a.name == "frequency") {
      FrequencyMode mode;
      if (a.mode == "rdfa") mode = FrequencyMode::rdfa;
      else if (a.mode == "rifa") mode = FrequencyMode::rifa;
      else throw ConfigError("mode must be rifa or rdfa");
      const auto fr = frequency_analysis(t, a.delta, mode, a.alpha);
      json candidates = json::array();
      for (const auto& s : fr.tuples)
        if (s.flagged) candidates.push_back(s.tuple);
      report = {{"attack", "frequency"}, {"recovered", false}, {"secret", nullptr},
                {"work", {{"rows", t.rounds.size()}, {"candidates", fr.tuples.size()}}},
                {"stats", to_json(fr, g.json)}};
      report["stats"]["flagged_tuples"] = candidates;
    } else {
      throw ConfigError("unknown attack '" + a.name + "'");
    }
  }
  if (!g.out.empty()) write_file(g.out, report);
  std::cout << report.dump(2) << '\n';
  return kOk;
}

// ---- biometric ------------------------------------------------------------

struct BioArgs {
  std::string action;
  std::vector<std::string> paths;
  std::string features;
  std::string expected;
  double z_sym = 3.0;
  double z_user = 3.0;
  double radius = kDefaultBandRadius;
};

int cmd_biometric(const Globals& g, const BioArgs& a) {
  json result;
  auto need = [&](std::size_t n, const char* usage) {
    if (a.paths.size() != n) throw ConfigError(std::string("usage: biometric ") + usage);
  };
  if (a.action == "train") {
    need(1, "train <corpus>");
    std::map<std::string, std::vector<FeatureSet>> by_symbol;
    for (const auto& t : load_corpus(a.paths[0]))
      by_symbol[t.symbol.value_or("unlabelled")].push_back(extract_features(t));
    std::vector<std::string> names;
    std::vector<std::vector<FeatureSet>> samples;
    for (auto& [name, sets] : by_symbol) {
      names.push_back(name);
      samples.push_back(std::move(sets));
    }
    EnrollOptions opt;
    opt.z_sym = a.z_sym;
    opt.z_user = a.z_user;
    opt.band_radius = a.radius;
    if (!a.features.empty()) opt.user_subset = parse_features(a.features);
    result = {{"symbols", names}, {"profile", to_json(enroll(samples, opt))}};
    write_file(g.out.empty() ? fs::path("templates.json") : fs::path(g.out), result);
    std::ostringstream text;
    text << "trained " << names.size() << " symbol(s)\n";
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& u = result["profile"]["user"][i];
      text << "  " << names[i] << ": mu " << u["mu"].get<double>() << ", sigma "
           << u["sigma"].get<double>() << '\n';
    }
    emit(g, result, text.str());
    return kOk;
  }
  if (a.action == "verify") {
    need(2, "verify <templates.json> <trace>");
    const auto archive = read_json(a.paths[0]);
    const auto profile = profile_from_json(archive.at("profile"));
    const auto names = archive.at("symbols").get<std::vector<std::string>>();
    std::optional<int> expected;
    if (!a.expected.empty()) {
      auto it = std::find(names.begin(), names.end(), a.expected);
      if (it == names.end()) throw ConfigError("unknown symbol '" + a.expected + "'");
      expected = static_cast<int>(it - names.begin());
    }
    const auto d = classify(extract_features(load_trace(a.paths[1])), profile, expected);
    result = {{"accepted", d.accepted},
              {"symbol", d.symbol ? json(names[static_cast<std::size_t>(*d.symbol)]) : json(nullptr)},
              {"failed_stage", d.failed ? json(to_string(*d.failed)) : json(nullptr)},
              {"sym_distance", d.sym_distance},
              {"user_distance", d.user_distance}};
    emit(g, result, std::string(d.accepted ? "accept" : "reject") + "\n");
    return kOk;
  }
  if (a.action == "zlist") {
    need(3, "zlist <registration> <user-tests> <attacker-tests>");
    UserAttackerPair pair{corpus_features(a.paths[0]), corpus_features(a.paths[1]),
                          corpus_features(a.paths[2])};
    auto subset = a.features.empty() ? common_features(pair.registration) : parse_features(a.features);
    result = to_json(get_z_list(subset, pair, a.radius));
  } else if (a.action == "select") {
    need(1, "select <root with pair directories holding registration/, user/, attacker/>");
    std::vector<UserAttackerPair> pairs;
    std::vector<fs::path> dirs;
    for (const auto& e : fs::directory_iterator(a.paths[0]))
      if (e.is_directory()) dirs.push_back(e.path());
    std::sort(dirs.begin(), dirs.end());
    for (const auto& dir : dirs)
      pairs.push_back({corpus_features(dir / "registration"), corpus_features(dir / "user"),
                       corpus_features(dir / "attacker")});
    if (pairs.empty()) throw DataError("no pair directories under " + a.paths[0]);
    std::vector<FeatureSet> all;
    for (const auto& p : pairs) all.insert(all.end(), p.registration.begin(), p.registration.end());
    const auto candidates = a.features.empty() ? common_features(all) : parse_features(a.features);
    result = to_json(select_features(candidates, pairs, a.radius));
  } else {
    throw ConfigError("biometric action must be train, verify, zlist or select");
  }
  if (!g.out.empty()) write_file(g.out, result);
  std::cout << result.dump(2) << '\n';
  return kOk;
}

// ---- serve ----------------------------------------------------------------

int cmd_serve(const Globals& g, const std::string& config_path, const std::string& store_path,
              const std::string& host, int port, const SimulationSpec& spec) {
  ServiceConfig config = config_path.empty()
                             ? setup(spec.params, symbol_set_by_name(spec.symbol_set), default_pool(spec.params.n))
                             : service_config_from_json(read_json(config_path));
  ServiceOptions options;
  options.seed = g.seed;
  auto store = store_path.empty() ? std::make_shared<Store>() : std::make_shared<Store>(store_path);
  AuthService service(config, options, store);
  std::cerr << "listening on " << host << ':' << port << '\n';
  serve(service, host, port);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"behaviocog authentication toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out", g.out, "Output path");
  app.add_flag("--json", g.json, "Machine-readable output");
  app.fallthrough();

  auto* params = app.add_subcommand("params", "Security table for parameter rows");
  std::vector<std::string> rows;
  double fpr = 0.05;
  std::vector<int> gammas{1, 2, 3};
  params->add_option("--row", rows, "d,k,l,n[:ch_budget_bits]; defaults to the reference rows");
  params->add_option("--fpr", fpr, "Average biometric false positive rate")->capture_default_str();
  params->add_option("--gamma", gammas, "Rounds per session")->delimiter(',')->capture_default_str();

  SimulationSpec spec;
  spec.params = new_params(5, 14, 30, 180, 2, 10);
  auto add_scheme = [&](CLI::App* sub) {
    sub->add_option("--d", spec.params.d)->capture_default_str();
    sub->add_option("--k", spec.params.k)->capture_default_str();
    sub->add_option("--l", spec.params.l)->capture_default_str();
    sub->add_option("--n", spec.params.n)->capture_default_str();
    sub->add_option("--gamma", spec.params.gamma)->capture_default_str();
    sub->add_option("--t", spec.params.t, "Renderings per symbol")->capture_default_str();
    sub->add_option("--symbols", spec.symbol_set, "easy-words or complex-words")->capture_default_str();
  };
  auto* simulate_cmd = app.add_subcommand("simulate", "Synthetic users, sessions and traces");
  add_scheme(simulate_cmd);
  simulate_cmd->add_option("--users", spec.users)->capture_default_str();
  simulate_cmd->add_option("--sessions", spec.sessions, "Sessions per user")->capture_default_str();
  simulate_cmd->add_option("--noise", spec.render.noise, "Handwriting jitter")->capture_default_str();

  AttackArgs attack_args;
  auto* attack = app.add_subcommand("attack", "Run an attack against a transcript");
  attack->add_option("name", attack_args.name, "bruteforce|mitm|ge|ge-slack|frequency|ch")
      ->required()
      ->check(CLI::IsMember({"bruteforce", "mitm", "ge", "ge-slack", "frequency", "ch"}));
  attack->add_option("transcript", attack_args.transcript, "Transcript JSON");
  attack->add_option("--budget", attack_args.budget, "Candidate budget (ch: time budget in bits)");
  attack->add_option("--params", attack_args.params, "ch only: d,k,l,n");
  attack->add_option("--delta", attack_args.delta, "frequency: tuple size")->capture_default_str();
  attack->add_option("--mode", attack_args.mode, "frequency: rifa or rdfa")->capture_default_str();
  attack->add_option("--alpha", attack_args.alpha, "frequency: significance level")->capture_default_str();

  BioArgs bio;
  auto* biometric = app.add_subcommand("biometric", "Offline biometric tools");
  biometric->add_option("action", bio.action, "train|verify|zlist|select")
      ->required()
      ->check(CLI::IsMember({"train", "verify", "zlist", "select"}));
  biometric->add_option("paths", bio.paths, "Corpus directories or files");
  biometric->add_option("--features", bio.features, "Comma-separated feature names");
  biometric->add_option("--expected", bio.expected, "verify: expected symbol");
  biometric->add_option("--z-sym", bio.z_sym)->capture_default_str();
  biometric->add_option("--z-user", bio.z_user)->capture_default_str();
  biometric->add_option("--radius", bio.radius, "DTW band radius")->capture_default_str();

  std::string config_path, store_path, host = "127.0.0.1";
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "Run the authentication service");
  add_scheme(serve_cmd);
  serve_cmd->add_option("--config", config_path, "Configuration JSON (overrides scheme flags)");
  serve_cmd->add_option("--store", store_path, "Append-only store file");
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--port", port)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  auto fail = [&](int code, const std::string& kind, const std::string& message, const json& extra = {}) {
    if (g.json) {
      json j = {{"error", message}, {"kind", kind}, {"exit_code", code}};
      if (!extra.is_null()) j.update(extra);
      std::cout << j.dump() << '\n';
    } else {
      std::cerr << "error: " << message << '\n';
    }
    return code;
  };

  try {
    if (*params) return cmd_params(g, rows, fpr, gammas);
    if (*simulate_cmd) {
      validate(spec.params);
      return cmd_simulate(g, spec);
    }
    if (*attack) return cmd_attack(g, attack_args);
    if (*biometric) return cmd_biometric(g, bio);
    if (*serve_cmd) {
      validate(spec.params);
      return cmd_serve(g, config_path, store_path, host, port, spec);
    }
  } catch (const BudgetExceeded& e) {
    if (!g.json) std::cerr << "estimated work: 2^" << e.estimated_log2_work() << '\n';
    return fail(kBudget, "budget", e.what(), {{"estimated_log2_work", e.estimated_log2_work()}});
  } catch (const ConfigError& e) {
    return fail(kUsage, "usage", e.what());
  } catch (const UnsupportedModulus& e) {
    return fail(kUsage, "usage", e.what());
  } catch (const std::exception& e) {
    return fail(kData, "data", e.what());
  }
  return kUsage;
}
