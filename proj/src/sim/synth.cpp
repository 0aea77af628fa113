#include "behaviocog/sim/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

using Point = std::pair<double, double>;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Point catmull_rom(const Point& p0, const Point& p1, const Point& p2, const Point& p3, double u) {
  const double u2 = u * u, u3 = u2 * u;
  auto axis = [&](double a, double b, double c, double d) {
    return 0.5 * (2 * b + (-a + c) * u + (2 * a - 5 * b + 4 * c - d) * u2 + (-a + 3 * b - 3 * c + d) * u3);
  };
  return {axis(p0.first, p1.first, p2.first, p3.first),
          axis(p0.second, p1.second, p2.second, p3.second)};
}

double lerp(double a, double b, double t) { return a + (b - a) * t; }

}  // namespace

HandwritingStyle random_style(Rng& rng) {
  HandwritingStyle s;
  s.shape_seed = rng.next();
  s.shape_spread = 0.03 + 0.03 * rng.uniform();
  s.slant = -0.3 + 0.6 * rng.uniform();
  s.scale = 150.0 + 100.0 * rng.uniform();
  s.aspect = 0.8 + 0.4 * rng.uniform();
  s.speed = 0.3 + 0.5 * rng.uniform();
  s.rhythm = 0.1 + 0.4 * rng.uniform();
  s.rhythm_phase = 2.0 * std::numbers::pi * rng.uniform();
  s.pressure = 0.3 + 0.4 * rng.uniform();
  s.pressure_swing = 0.05 + 0.2 * rng.uniform();
  s.size = 0.2 + 0.3 * rng.uniform();
  return s;
}

HandwritingStyle mimic(const HandwritingStyle& own, const HandwritingStyle& victim, double blend) {
  if (!(blend >= 0.0 && blend <= 1.0)) throw ConfigError("mimicry blend must lie in [0, 1]");
  HandwritingStyle s = blend >= 0.5 ? victim : own;
  s.shape_spread = lerp(own.shape_spread, victim.shape_spread, blend);
  s.slant = lerp(own.slant, victim.slant, blend);
  s.scale = lerp(own.scale, victim.scale, blend);
  s.aspect = lerp(own.aspect, victim.aspect, blend);
  s.speed = lerp(own.speed, victim.speed, blend);
  s.rhythm = lerp(own.rhythm, victim.rhythm, blend);
  s.rhythm_phase = lerp(own.rhythm_phase, victim.rhythm_phase, blend);
  s.pressure = lerp(own.pressure, victim.pressure, blend);
  s.pressure_swing = lerp(own.pressure_swing, victim.pressure_swing, blend);
  s.size = lerp(own.size, victim.size, blend);
  return s;
}

std::vector<Point> symbol_prototype(const std::string& symbol) {
  Rng rng(fnv1a(symbol));
  const std::size_t count = 6 + std::min<std::size_t>(symbol.size(), 8) * 2;
  std::vector<Point> pts;
  pts.reserve(count);
  // A left-to-right scribble: x advances steadily, y wanders.
  for (std::size_t i = 0; i < count; ++i) {
    const double x = (static_cast<double>(i) + 0.5 * rng.uniform()) / static_cast<double>(count);
    pts.emplace_back(x, 0.1 + 0.8 * rng.uniform());
  }
  return pts;
}

Trace render_symbol(const std::string& symbol, const HandwritingStyle& style,
                    const RenderOptions& options, Rng& rng) {
  if (options.samples_per_segment < 1) throw ConfigError("samples_per_segment must be positive");
  if (options.noise < 0.0) throw ConfigError("noise must be non-negative");

  auto pts = symbol_prototype(symbol);
  Rng shape = Rng::derive(style.shape_seed, fnv1a(symbol));
  for (auto& [x, y] : pts) {
    x += style.shape_spread * shape.normal();
    y += style.shape_spread * shape.normal();
  }
  const bool noisy = options.noise > 0.0;
  if (noisy)
    for (auto& [x, y] : pts) {
      x += 0.01 * options.noise * rng.normal();
      y += 0.01 * options.noise * rng.normal();
    }
  for (auto& [x, y] : pts) {
    x = (x + style.slant * (1.0 - y)) * style.scale * style.aspect + 50.0;
    y = y * style.scale + 50.0;
  }

  // Ends are duplicated so the spline passes through every control point.
  std::vector<Point> ctl;
  ctl.push_back(pts.front());
  ctl.insert(ctl.end(), pts.begin(), pts.end());
  ctl.push_back(pts.back());

  std::vector<Point> path;
  for (std::size_t seg = 1; seg + 2 < ctl.size(); ++seg)
    for (int k = 0; k < options.samples_per_segment; ++k)
      path.push_back(catmull_rom(ctl[seg - 1], ctl[seg], ctl[seg + 1], ctl[seg + 2],
                                 static_cast<double>(k) / options.samples_per_segment));
  path.push_back(pts.back());

  Trace trace;
  trace.symbol = symbol;
  double t = 0.0;
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(i) / static_cast<double>(n - 1);
    if (i > 0) {
      const double len = std::hypot(path[i].first - path[i - 1].first, path[i].second - path[i - 1].second);
      double v = style.speed * (1.0 + style.rhythm * std::sin(2.0 * std::numbers::pi * u + style.rhythm_phase));
      if (noisy) v *= std::exp(0.05 * options.noise * rng.normal());
      t += std::max(1.0, len / std::max(v, 1e-3));
    }
    TouchEvent e;
    e.t = t;
    e.x = path[i].first;
    e.y = path[i].second;
    if (noisy) {
      e.x += 0.5 * options.noise * rng.normal();
      e.y += 0.5 * options.noise * rng.normal();
    }
    e.action = i == 0 ? TouchAction::down : (i + 1 == n ? TouchAction::up : TouchAction::move);
    if (options.pressure) {
      double p = style.pressure + style.pressure_swing * std::sin(std::numbers::pi * u);
      double s = style.size + 0.5 * style.pressure_swing * std::cos(std::numbers::pi * u);
      if (noisy) {
        p += 0.02 * options.noise * rng.normal();
        s += 0.02 * options.noise * rng.normal();
      }
      e.p = std::clamp(p, 0.0, 1.0);
      e.s = std::clamp(s, 0.0, 1.0);
    }
    if (options.motion) {
      MotionBlock m{};
      for (std::size_t c = 0; c < kMotionChannels; ++c) {
        m[c] = std::sin(0.001 * t * static_cast<double>(c + 1) + style.rhythm_phase) * (1.0 + style.slant);
        if (noisy) m[c] += 0.05 * options.noise * rng.normal();
      }
      e.motion = m;
    }
    trace.events.push_back(e);
  }
  return trace;
}

}  // namespace behaviocog
