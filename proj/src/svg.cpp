#include "orchard/svg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "orchard/errors.hpp"

namespace orchard {

namespace {

// Locale-independent fixed formatting.
std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 2);
  std::string s(buf, res.ptr);
  return s == "-0.00" ? "0.00" : s;
}

}  // namespace

std::string plot_svg(const PointConfiguration& config, const OrchardPartition& partition,
                     const PlotStyle& style) {
  if (config.dim() != 2) throw input_error("plotting needs 2-dimensional points");
  if (partition.n() != config.size()) throw input_error("partition does not match the points");

  std::vector<double> xs, ys;
  for (const auto& p : config.points()) {
    xs.push_back(p[0].convert_to<double>());
    ys.push_back(p[1].convert_to<double>());
  }
  const auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  const auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  const double span = std::max({*xmax - *xmin, *ymax - *ymin, 1e-12});
  const double inner = style.canvas - 2.0 * style.margin;
  const double scale = inner / span;
  // Centre the bounding box; SVG y grows downwards.
  const double ox = style.margin + (inner - (*xmax - *xmin) * scale) / 2;
  const double oy = style.margin + (inner - (*ymax - *ymin) * scale) / 2;
  auto sx = [&](double x) { return ox + (x - *xmin) * scale; };
  auto sy = [&](double y) { return style.canvas - (oy + (y - *ymin) * scale); };

  const std::string size = std::to_string(style.canvas);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << size << "\" height=\"" << size
      << "\" fill=\"white\"/>\n"
      << "<g stroke=\"black\" stroke-width=\"1\">\n";
  for (int i = 1; i <= config.size(); ++i) {
    const auto& fill = partition.label(i) == 0 ? style.class0_fill : style.class1_fill;
    out << "<circle cx=\"" << fmt(sx(xs[i - 1])) << "\" cy=\"" << fmt(sy(ys[i - 1]))
        << "\" r=\"" << fmt(style.radius) << "\" fill=\"" << fill << "\" class=\"class"
        << partition.label(i) << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int i = 1; i <= config.size(); ++i)
    out << "<text x=\"" << fmt(sx(xs[i - 1]) + style.radius + 2) << "\" y=\""
        << fmt(sy(ys[i - 1]) - style.radius - 2) << "\">P" << i << "</text>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace orchard
