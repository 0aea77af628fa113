#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "behaviocog/biometric/trace.hpp"
#include "behaviocog/rng.hpp"

namespace behaviocog {

// Parameters of one synthetic writer. Shapes come from a shared per-symbol
// prototype displaced by a writer-specific field derived from `shape_seed`.
struct HandwritingStyle {
  std::uint64_t shape_seed = 0;
  double shape_spread = 0.04;  // displacement of control points, unit-box units
  double slant = 0.0;          // x shear per unit height
  double scale = 200.0;        // px per unit
  double aspect = 1.0;
  double speed = 0.5;          // px per ms
  double rhythm = 0.3;         // relative speed modulation along the stroke
  double rhythm_phase = 0.0;
  double pressure = 0.5;
  double pressure_swing = 0.2;
  double size = 0.3;
};

struct RenderOptions {
  double noise = 0.0;  // 0 reproduces the same trace exactly
  int samples_per_segment = 8;
  bool pressure = true;
  bool motion = false;
};

HandwritingStyle random_style(Rng& rng);

/// `victim` shape and dynamics pulled towards by `blend` in [0, 1].
HandwritingStyle mimic(const HandwritingStyle& own, const HandwritingStyle& victim, double blend);

/// Control points of the shared prototype of `symbol` in the unit box.
std::vector<std::pair<double, double>> symbol_prototype(const std::string& symbol);

/// One rendering. Consumes `rng` only when options.noise > 0.
Trace render_symbol(const std::string& symbol, const HandwritingStyle& style,
                    const RenderOptions& options, Rng& rng);

}  // namespace behaviocog
