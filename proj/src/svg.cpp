#include "wdlmp/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "wdlmp/export.hpp"

namespace wdlmp {

std::string render_learning_curve_svg(const LearningCurve& curve) {
  constexpr double width = 640.0, height = 400.0;
  constexpr double left = 70.0, right = 20.0, top = 40.0, bottom = 50.0;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  const auto& y = curve.msd_db;
  double lo = y.empty() ? -1.0 : *std::min_element(y.begin(), y.end());
  double hi = y.empty() ? 1.0 : *std::max_element(y.begin(), y.end());
  lo = 10.0 * std::floor(lo / 10.0);
  hi = 10.0 * std::ceil(hi / 10.0);
  if (hi <= lo) hi = lo + 10.0;
  const double n = std::max<double>(1.0, static_cast<double>(y.size()) - 1.0);

  auto px = [&](double i) { return left + plot_w * i / n; };
  auto py = [&](double v) { return top + plot_h * (hi - v) / (hi - lo); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << curve.algorithm
    << " (" << curve.trials_used << " trials)</text>\n";

  for (double v = lo; v <= hi + 1e-9; v += 10.0) {
    s << "<line x1=\"" << left << "\" y1=\"" << py(v) << "\" x2=\"" << left + plot_w << "\" y2=\"" << py(v)
      << "\" stroke=\"#ddd\"/>\n";
    s << "<text x=\"" << left - 6 << "\" y=\"" << py(v) + 4 << "\" text-anchor=\"end\">" << v << "</text>\n";
  }
  for (int t = 0; t <= 5; ++t) {
    const double i = n * t / 5.0;
    s << "<text x=\"" << px(i) << "\" y=\"" << top + plot_h + 18 << "\" text-anchor=\"middle\">"
      << static_cast<long long>(std::llround(i)) << "</text>\n";
  }
  s << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  s << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">iteration</text>\n";
  s << "<text x=\"16\" y=\"" << top + plot_h / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
    << top + plot_h / 2 << ")\">MSD (dB)</text>\n";

  s << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) s << ' ';
    s << format_double(px(static_cast<double>(i))) << ',' << format_double(py(y[i]));
  }
  s << "\"/>\n</svg>\n";
  return s.str();
}

}  // namespace wdlmp
