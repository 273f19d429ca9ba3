#include "hypforms/svg.hpp"

#include <cstdio>
#include <sstream>

namespace hypforms {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string field_colour(FieldChoice c) { return c == FieldChoice::F1 ? "#1f4e9c" : "#c0392b"; }

}  // namespace

std::string render_svg(const std::vector<CurvePolyline>& curves, const SvgOptions& opts) {
  const double w = opts.viewport;
  const double px = opts.pixels;
  const int stride = opts.stride < 1 ? 1 : opts.stride;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.pixels << "\" height=\"" << opts.pixels
     << "\" viewBox=\"0 0 " << opts.pixels << ' ' << opts.pixels << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  // y flipped so the picture has the usual orientation.
  os << "<g transform=\"translate(" << num(px / 2) << ' ' << num(px / 2) << ") scale(" << num(px / (2 * w)) << ' '
     << num(-px / (2 * w)) << ")\" fill=\"none\" stroke-width=\"" << num(2 * w / px) << "\">\n";
  for (std::size_t id = 0; id < curves.size(); ++id) {
    const auto& c = curves[id];
    if (c.points.empty()) continue;
    os << "<path id=\"c" << id << "\" data-seed=\"" << num(c.seed[0]) << ',' << num(c.seed[1]) << "\" data-field=\""
       << to_string(c.field_choice) << "\" stroke=\"" << field_colour(c.field_choice) << "\" d=\"";
    const std::size_t n = c.points.size();
    for (std::size_t i = 0; i < n; i += static_cast<std::size_t>(stride)) {
      os << (i == 0 ? "M" : " L") << num(c.points[i][0]) << ' ' << num(c.points[i][1]);
      if (i + static_cast<std::size_t>(stride) >= n && i != n - 1)
        os << " L" << num(c.points[n - 1][0]) << ' ' << num(c.points[n - 1][1]);
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

std::string curves_csv(const std::vector<CurvePolyline>& curves) {
  std::ostringstream os;
  os << "curve_id,field,x,y\n";
  for (std::size_t id = 0; id < curves.size(); ++id)
    for (const auto& p : curves[id].points)
      os << id << ',' << to_string(curves[id].field_choice) << ',' << num(p[0]) << ',' << num(p[1]) << '\n';
  return os.str();
}

}  // namespace hypforms
