#pragma once

#include <string>

#include "wdlmp/metrics.hpp"

namespace wdlmp {

/// Standalone SVG of MSD (dB) versus iteration.
std::string render_learning_curve_svg(const LearningCurve& curve);

}  // namespace wdlmp
