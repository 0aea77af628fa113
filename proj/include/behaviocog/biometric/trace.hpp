#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace behaviocog {

enum class TouchAction { down, move, up };

inline constexpr std::size_t kMotionChannels = 15;
using MotionBlock = std::array<double, kMotionChannels>;

struct TouchEvent {
  double t = 0.0;  // ms since trace start
  double x = 0.0;
  double y = 0.0;
  std::optional<double> p;  // pressure in [0, 1]
  std::optional<double> s;  // contact size in [0, 1]
  TouchAction action = TouchAction::move;
  std::optional<MotionBlock> motion;  // R, G, A, g, a blocks of (x, y, z)

  friend bool operator==(const TouchEvent&, const TouchEvent&) = default;
};

// One rendering of a symbol. Files are JSON lines: an optional header
//   {"user":..,"symbol":..,"session":..}
// followed by one event per line
//   {"t":..,"x":..,"y":..,"p":..|null,"s":..|null,"a":"down"|"move"|"up","m":[15]|null}
struct Trace {
  std::vector<TouchEvent> events;
  std::optional<std::string> user;
  std::optional<std::string> symbol;
  std::optional<std::string> session;

  friend bool operator==(const Trace&, const Trace&) = default;
};

const char* to_string(TouchAction action);

/// Throws DataError: fewer than 2 events, time going backwards, strokes not
/// opened by down and closed by up, non-finite values, p or s outside [0, 1].
void validate(const Trace& trace);

/// Parses and validates JSON-lines text; errors name the offending line.
Trace parse_trace(std::string_view text);

/// Accepts either JSON-lines text (a string) or {"header"?:{..}, "events":[..]}.
Trace trace_from_json(const nlohmann::json& j);

nlohmann::ordered_json event_to_json(const TouchEvent& e);
TouchEvent event_from_json(const nlohmann::json& j);

/// JSON-lines text, one trailing newline per line.
std::string serialize_trace(const Trace& trace);

Trace load_trace(const std::filesystem::path& path);
void save_trace(const Trace& trace, const std::filesystem::path& path);

/// Every *.jsonl file below `dir`, in sorted path order.
std::vector<Trace> load_corpus(const std::filesystem::path& dir);

}  // namespace behaviocog
