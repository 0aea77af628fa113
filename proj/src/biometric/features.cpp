#include "behaviocog/biometric/features.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "behaviocog/errors.hpp"

namespace behaviocog {
namespace {

constexpr std::array<std::string_view, kFeatureCount> kNames = {
    "x",    "y",     "dx",     "dy",    "x_dot", "y_dot", "x_ddot", "y_ddot", "p",     "dp",
    "s",    "ds",    "F",      "AT",    "TMP",   "BMP",   "LMP",    "RMP",    "width", "height",
    "area", "WHR",   "slope",  "path",  "curve", "Rx",    "Ry",     "Rz",     "Gx",    "Gy",
    "Gz",   "Ax",    "Ay",     "Az",    "gx",    "gy",    "gz",     "ax",     "ay",    "az",
};

constexpr std::array<Feature, kFeatureCount> make_all() {
  std::array<Feature, kFeatureCount> out{};
  for (int i = 0; i < kFeatureCount; ++i) out[static_cast<std::size_t>(i)] = static_cast<Feature>(i);
  return out;
}
constexpr auto kAll = make_all();

// Stencil of three indices around i, clipped to [0, n).
std::array<std::size_t, 3> stencil(std::size_t i, std::size_t n) {
  std::size_t mid = std::clamp<std::size_t>(i, 1, n - 2);
  return {mid - 1, mid, mid + 1};
}

Series backward_difference(const Series& v) {
  Series out(v.size(), 0.0);
  for (std::size_t i = 1; i < v.size(); ++i) out[i] = v[i] - v[i - 1];
  return out;
}

template <typename Op>
Series prefix(const Series& v, Op op) {
  Series out(v.size());
  double acc = v.empty() ? 0.0 : v[0];
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = acc = op(acc, v[i]);
  return out;
}

}  // namespace

std::string_view feature_name(Feature f) { return kNames[static_cast<std::size_t>(f)]; }

std::optional<Feature> feature_from_name(std::string_view name) {
  for (int i = 0; i < kFeatureCount; ++i)
    if (kNames[static_cast<std::size_t>(i)] == name) return static_cast<Feature>(i);
  return std::nullopt;
}

std::span<const Feature> all_features() { return kAll; }

const Series& FeatureSet::at(Feature f) const {
  const auto& s = series[static_cast<std::size_t>(f)];
  if (!s) throw DataError("feature '" + std::string(feature_name(f)) + "' is not available");
  return *s;
}

std::vector<Feature> FeatureSet::available_features() const {
  std::vector<Feature> out;
  for (Feature f : kAll)
    if (available(f)) out.push_back(f);
  return out;
}

std::vector<Feature> common_features(std::span<const FeatureSet> sets) {
  std::vector<Feature> out;
  for (Feature f : kAll)
    if (std::all_of(sets.begin(), sets.end(), [f](const FeatureSet& s) { return s.available(f); }))
      out.push_back(f);
  return out;
}

void zscore(Series& s) {
  if (s.empty()) return;
  const double n = static_cast<double>(s.size());
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / n;
  double var = 0.0;
  for (double v : s) var += (v - mean) * (v - mean);
  const double sd = std::sqrt(var / n);
  if (!(sd > 1e-12 * std::max(1.0, std::abs(mean)))) {
    std::fill(s.begin(), s.end(), 0.0);
    return;
  }
  for (double& v : s) v = (v - mean) / sd;
}

Series first_derivative(std::span<const double> t, std::span<const double> v) {
  const std::size_t n = v.size();
  Series out(n, 0.0);
  if (n < 2) return out;
  if (n == 2) {
    const double h = t[1] - t[0];
    out[0] = out[1] = h > 0.0 ? (v[1] - v[0]) / h : 0.0;
    return out;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b, c] = stencil(i, n);
    const double t0 = t[a], t1 = t[b], t2 = t[c];
    const double d01 = t0 - t1, d02 = t0 - t2, d12 = t1 - t2;
    if (d01 == 0.0 || d02 == 0.0 || d12 == 0.0) {
      const double h = t2 - t0;
      out[i] = h > 0.0 ? (v[c] - v[a]) / h : 0.0;
      continue;
    }
    const double x = t[i];
    out[i] = v[a] * ((x - t1) + (x - t2)) / (d01 * d02) +
             v[b] * ((x - t0) + (x - t2)) / (-d01 * d12) +
             v[c] * ((x - t0) + (x - t1)) / (d02 * d12);
  }
  return out;
}

Series second_derivative(std::span<const double> t, std::span<const double> v) {
  const std::size_t n = v.size();
  Series out(n, 0.0);
  if (n < 3) return out;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [a, b, c] = stencil(i, n);
    const double d01 = t[a] - t[b], d02 = t[a] - t[c], d12 = t[b] - t[c];
    if (d01 == 0.0 || d02 == 0.0 || d12 == 0.0) continue;
    out[i] = 2.0 * (v[a] / (d01 * d02) - v[b] / (d01 * d12) + v[c] / (d02 * d12));
  }
  return out;
}

FeatureSet extract_features(const Trace& trace, bool normalize) {
  validate(trace);
  const auto& ev = trace.events;
  const std::size_t n = ev.size();

  Series t(n), x(n), y(n), at(n);
  for (std::size_t i = 0; i < n; ++i) {
    t[i] = ev[i].t;
    x[i] = ev[i].x;
    y[i] = ev[i].y;
    at[i] = static_cast<double>(static_cast<int>(ev[i].action));
  }

  FeatureSet fs;
  fs.set(Feature::x, x);
  fs.set(Feature::y, y);
  fs.set(Feature::dx, backward_difference(x));
  fs.set(Feature::dy, backward_difference(y));
  fs.set(Feature::x_dot, first_derivative(t, x));
  fs.set(Feature::y_dot, first_derivative(t, y));
  fs.set(Feature::x_ddot, second_derivative(t, x));
  fs.set(Feature::y_ddot, second_derivative(t, y));
  fs.set(Feature::action, at);

  const bool has_p = std::all_of(ev.begin(), ev.end(), [](const TouchEvent& e) { return e.p.has_value(); });
  const bool has_s = std::all_of(ev.begin(), ev.end(), [](const TouchEvent& e) { return e.s.has_value(); });
  Series p(n), s(n);
  if (has_p) {
    for (std::size_t i = 0; i < n; ++i) p[i] = *ev[i].p;
    fs.set(Feature::p, p);
    fs.set(Feature::dp, backward_difference(p));
  }
  if (has_s) {
    for (std::size_t i = 0; i < n; ++i) s[i] = *ev[i].s;
    fs.set(Feature::s, s);
    fs.set(Feature::ds, backward_difference(s));
  }
  if (has_p && has_s) {
    Series force(n);
    for (std::size_t i = 0; i < n; ++i) force[i] = p[i] * s[i];
    fs.set(Feature::force, std::move(force));
  }

  // Screen coordinates: the top-most point has the smallest y.
  const auto lo = [](double a, double b) { return std::min(a, b); };
  const auto hi = [](double a, double b) { return std::max(a, b); };
  Series tmp = prefix(y, lo), bmp = prefix(y, hi), lmp = prefix(x, lo), rmp = prefix(x, hi);
  Series width(n), height(n), area(n), whr(n);
  for (std::size_t i = 0; i < n; ++i) {
    width[i] = rmp[i] - lmp[i];
    height[i] = bmp[i] - tmp[i];
    area[i] = width[i] * height[i];
    whr[i] = height[i] > 0.0 ? width[i] / height[i] : 0.0;
  }
  fs.set(Feature::tmp, std::move(tmp));
  fs.set(Feature::bmp, std::move(bmp));
  fs.set(Feature::lmp, std::move(lmp));
  fs.set(Feature::rmp, std::move(rmp));
  fs.set(Feature::width, std::move(width));
  fs.set(Feature::height, std::move(height));
  fs.set(Feature::area, std::move(area));
  fs.set(Feature::whr, std::move(whr));

  // slope(i): direction of segment i-1 -> i; path(i): signed turn between
  // segments i-1 -> i and i -> i+1; curve(i): that turn per unit length.
  Series slope(n, 0.0), path(n, 0.0), curve(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) slope[i] = std::atan2(y[i] - y[i - 1], x[i] - x[i - 1]);
  if (n > 1) slope[0] = slope[1];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double ux = x[i] - x[i - 1], uy = y[i] - y[i - 1];
    const double vx = x[i + 1] - x[i], vy = y[i + 1] - y[i];
    path[i] = std::atan2(ux * vy - uy * vx, ux * vx + uy * vy);
    const double len = std::hypot(ux, uy);
    curve[i] = len > 0.0 ? path[i] / len : 0.0;
  }
  fs.set(Feature::slope, std::move(slope));
  fs.set(Feature::path, std::move(path));
  fs.set(Feature::curve, std::move(curve));

  if (std::all_of(ev.begin(), ev.end(), [](const TouchEvent& e) { return e.motion.has_value(); })) {
    for (std::size_t c = 0; c < kMotionChannels; ++c) {
      Series m(n);
      for (std::size_t i = 0; i < n; ++i) m[i] = (*ev[i].motion)[c];
      fs.set(static_cast<Feature>(static_cast<int>(Feature::Rx) + static_cast<int>(c)), std::move(m));
    }
  }

  if (normalize)
    for (auto& series : fs.series)
      if (series) zscore(*series);
  return fs;
}

}  // namespace behaviocog
