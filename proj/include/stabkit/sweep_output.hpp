#pragma once

// Text renderings of chamber sweeps: exact CSV and a static SVG figure.

#include <span>
#include <string>

#include "stabkit/chamber.hpp"

namespace stabkit {

/// Header `beta,phi,upper_bound,envelope,nef_margin`; rationals as "p/q",
/// "unknown" for an unavailable Φ and an empty field for a missing envelope.
std::string sweep_csv(std::span<const SweepRow> rows);

/// β horizontal, α vertical: Φ as a solid polyline, the Bogomolov parabola
/// dashed, envelope values as dots. Floats appear only here.
std::string sweep_svg(std::span<const SweepRow> rows, const std::string& title);

}  // namespace stabkit
