#include "behaviocog/cognitive/transcript.hpp"

#include <fstream>

#include "behaviocog/errors.hpp"

namespace behaviocog {

using nlohmann::json;

json to_json(const Transcript& t) {
  json rounds = json::array();
  for (const auto& r : t.rounds)
    rounds.push_back({{"a", r.challenge.objects}, {"w", r.challenge.weights}, {"r", r.response}});
  return {{"params", {{"d", t.params.d}, {"k", t.params.k}, {"l", t.params.l}, {"n", t.params.n}}},
          {"rounds", std::move(rounds)}};
}

Transcript transcript_from_json(const json& j) {
  Transcript t;
  try {
    const auto& p = j.at("params");
    t.params = new_params(p.at("d").get<int>(), p.at("k").get<int>(), p.at("l").get<int>(),
                          p.at("n").get<int>());
    const auto& rounds = j.at("rounds");
    if (!rounds.is_array()) throw DataError("transcript rounds must be an array");
    t.rounds.reserve(rounds.size());
    for (std::size_t i = 0; i < rounds.size(); ++i) {
      const auto& r = rounds[i];
      Round round;
      round.challenge.objects = r.at("a").get<std::vector<int>>();
      round.challenge.weights = r.at("w").get<std::vector<int>>();
      round.response = r.at("r").get<int>();
      try {
        validate(round.challenge, t.params);
      } catch (const DataError& e) {
        throw DataError("round " + std::to_string(i) + ": " + e.what());
      }
      if (round.response < 0 || round.response >= t.params.d)
        throw DataError("round " + std::to_string(i) + ": response outside Z_d");
      t.rounds.push_back(std::move(round));
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("transcript schema: ") + e.what());
  } catch (const ConfigError& e) {
    throw DataError(std::string("transcript params: ") + e.what());
  }
  return t;
}

Transcript load_transcript(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open transcript " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return transcript_from_json(j);
}

void save_transcript(const Transcript& t, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write transcript " + path.string());
  out << to_json(t).dump() << '\n';
}

}  // namespace behaviocog
