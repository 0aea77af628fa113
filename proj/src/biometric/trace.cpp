#include "behaviocog/biometric/trace.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

std::optional<std::string> id_field(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<long long>());
  throw DataError(std::string("header field '") + key + "' must be a string or integer");
}

bool is_header(const nlohmann::json& j) {
  return j.is_object() && !j.contains("t") &&
         (j.contains("user") || j.contains("symbol") || j.contains("session"));
}

void read_header(const nlohmann::json& j, Trace& trace) {
  trace.user = id_field(j, "user");
  trace.symbol = id_field(j, "symbol");
  trace.session = id_field(j, "session");
}

std::optional<double> optional_number(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw DataError(std::string("'") + key + "' must be a number or null");
  return it->get<double>();
}

double number(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number())
    throw DataError(std::string("'") + key + "' must be a number");
  return it->get<double>();
}

}  // namespace

const char* to_string(TouchAction action) {
  switch (action) {
    case TouchAction::down: return "down";
    case TouchAction::move: return "move";
    case TouchAction::up: return "up";
  }
  return "move";
}

void validate(const Trace& trace) {
  const auto& ev = trace.events;
  if (ev.size() < 2) throw DataError("trace needs at least 2 events");
  bool touching = false;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const auto& e = ev[i];
    const std::string where = "event " + std::to_string(i) + ": ";
    if (!std::isfinite(e.t) || !std::isfinite(e.x) || !std::isfinite(e.y))
      throw DataError(where + "non-finite value");
    if (i > 0 && e.t < ev[i - 1].t) throw DataError(where + "time goes backwards");
    for (auto v : {e.p, e.s})
      if (v && !(*v >= 0.0 && *v <= 1.0)) throw DataError(where + "p and s must lie in [0, 1]");
    if (e.motion)
      for (double m : *e.motion)
        if (!std::isfinite(m)) throw DataError(where + "non-finite motion value");
    switch (e.action) {
      case TouchAction::down:
        if (touching) throw DataError(where + "down while already touching");
        touching = true;
        break;
      case TouchAction::move:
        if (!touching) throw DataError(where + "move without a preceding down");
        break;
      case TouchAction::up:
        if (!touching) throw DataError(where + "up without a preceding down");
        touching = false;
        break;
    }
  }
  if (ev.front().action != TouchAction::down) throw DataError("first event must be down");
  if (ev.back().action != TouchAction::up) throw DataError("last event must be up");
}

TouchEvent event_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DataError("event must be a JSON object");
  TouchEvent e;
  e.t = number(j, "t");
  e.x = number(j, "x");
  e.y = number(j, "y");
  e.p = optional_number(j, "p");
  e.s = optional_number(j, "s");
  auto a = j.find("a");
  if (a == j.end() || !a->is_string()) throw DataError("'a' must be down, move or up");
  const auto& name = a->get_ref<const std::string&>();
  if (name == "down") e.action = TouchAction::down;
  else if (name == "move") e.action = TouchAction::move;
  else if (name == "up") e.action = TouchAction::up;
  else throw DataError("unknown action '" + name + "'");
  auto m = j.find("m");
  if (m != j.end() && !m->is_null()) {
    if (!m->is_array() || m->size() != kMotionChannels)
      throw DataError("'m' must be null or an array of 15 numbers");
    MotionBlock block{};
    for (std::size_t i = 0; i < kMotionChannels; ++i) {
      if (!(*m)[i].is_number()) throw DataError("'m' must hold numbers");
      block[i] = (*m)[i].get<double>();
    }
    e.motion = block;
  }
  return e;
}

nlohmann::ordered_json event_to_json(const TouchEvent& e) {
  nlohmann::ordered_json j;
  j["t"] = e.t;
  j["x"] = e.x;
  j["y"] = e.y;
  j["p"] = e.p ? nlohmann::ordered_json(*e.p) : nlohmann::ordered_json(nullptr);
  j["s"] = e.s ? nlohmann::ordered_json(*e.s) : nlohmann::ordered_json(nullptr);
  j["a"] = to_string(e.action);
  j["m"] = e.motion ? nlohmann::ordered_json(*e.motion) : nlohmann::ordered_json(nullptr);
  return j;
}

Trace parse_trace(std::string_view text) {
  Trace trace;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
      line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      if (first && is_header(j)) read_header(j, trace);
      else trace.events.push_back(event_from_json(j));
    } catch (const nlohmann::json::exception& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    } catch (const DataError& e) {
      throw DataError("line " + std::to_string(line_no) + ": " + e.what());
    }
    first = false;
  }
  validate(trace);
  return trace;
}

Trace trace_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_trace(j.get_ref<const std::string&>());
  if (!j.is_object() || !j.contains("events") || !j["events"].is_array())
    throw DataError("trace must be JSON-lines text or an object with an 'events' array");
  Trace trace;
  if (auto h = j.find("header"); h != j.end() && h->is_object()) read_header(*h, trace);
  else read_header(j, trace);
  std::size_t i = 0;
  for (const auto& e : j["events"]) {
    try {
      trace.events.push_back(event_from_json(e));
    } catch (const DataError& err) {
      throw DataError("event " + std::to_string(i) + ": " + err.what());
    }
    ++i;
  }
  validate(trace);
  return trace;
}

std::string serialize_trace(const Trace& trace) {
  std::string out;
  if (trace.user || trace.symbol || trace.session) {
    nlohmann::ordered_json h;
    h["user"] = trace.user ? nlohmann::ordered_json(*trace.user) : nlohmann::ordered_json(nullptr);
    h["symbol"] = trace.symbol ? nlohmann::ordered_json(*trace.symbol) : nlohmann::ordered_json(nullptr);
    h["session"] = trace.session ? nlohmann::ordered_json(*trace.session) : nlohmann::ordered_json(nullptr);
    out += h.dump();
    out += '\n';
  }
  for (const auto& e : trace.events) {
    out += event_to_json(e).dump();
    out += '\n';
  }
  return out;
}

Trace load_trace(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open trace " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_trace(buf.str());
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void save_trace(const Trace& trace, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write trace " + path.string());
  out << serialize_trace(trace);
}

std::vector<Trace> load_corpus(const std::filesystem::path& dir) {
  if (std::filesystem::is_regular_file(dir)) return {load_trace(dir)};
  if (!std::filesystem::is_directory(dir)) throw DataError("no such corpus: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Trace> traces;
  traces.reserve(files.size());
  for (const auto& f : files) traces.push_back(load_trace(f));
  return traces;
}

}  // namespace behaviocog
