#pragma once

#include <string>
#include <vector>

#include "hypforms/asymptotics.hpp"

namespace hypforms {

struct SvgOptions {
  double viewport = 2.0;  // data window [-viewport, viewport]^2
  int pixels = 600;
  int stride = 10;        // keep every stride-th vertex (plus the last)
};

/// One <path> per curve, with data-seed and data-field attributes. Output is
/// a pure function of the inputs.
std::string render_svg(const std::vector<CurvePolyline>& curves, const SvgOptions& opts = {});

/// Columns curve_id, field, x, y.
std::string curves_csv(const std::vector<CurvePolyline>& curves);

}  // namespace hypforms
