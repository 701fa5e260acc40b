#include "econreg/figure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "econreg/error.hpp"
#include "econreg/format.hpp"

namespace econreg::report {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

struct Axis {
  double lo;
  double hi;
  std::vector<double> ticks;
};

double nice_step(double span, int target) {
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  const double nice = frac <= 1.0 ? 1.0 : frac <= 2.0 ? 2.0 : frac <= 5.0 ? 5.0 : 10.0;
  return nice * mag;
}

Axis make_axis(double lo, double hi) {
  if (hi - lo <= 1e-12 * std::max({1.0, std::fabs(lo), std::fabs(hi)})) {
    const double pad = lo == 0.0 ? 1.0 : 0.1 * std::fabs(lo);
    lo -= pad;
    hi += pad;
  }
  const double step = nice_step(hi - lo, 5);
  Axis a{std::floor(lo / step) * step, std::ceil(hi / step) * step, {}};
  for (double t = a.lo; t <= a.hi + 0.5 * step; t += step) a.ticks.push_back(std::fabs(t) < 1e-12 * step ? 0.0 : t);
  return a;
}

std::string num(double v) { return fmt::fixed(v, 2, false); }

std::string tick_label(double v) {
  const double r = std::round(v);
  if (std::fabs(v - r) < 1e-9 * std::max(1.0, std::fabs(v))) return fmt::fixed(r, 0, false);
  return fmt::plain(v);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

FigureSpec scatter_spec(const Dataset& ds, const std::string& x, const std::string& y) {
  const auto& xs = ds.column(x).values();
  const auto& ys = ds.column(y).values();
  FigureSpec spec{FigureKind::scatter, x, y, {}, "SCATTERPLOT OF " + y + " AND " + x};
  for (std::size_t i = 0; i < xs.size(); ++i) spec.points.emplace_back(xs[i], ys[i]);
  return spec;
}

FigureSpec line_spec(const Series& s) {
  FigureSpec spec{FigureKind::line, "YEAR", s.name(), {}, s.name()};
  if (!s.years().empty()) {
    spec.title += " " + std::to_string(s.years().front()) + "-" + std::to_string(s.years().back());
  }
  for (std::size_t i = 0; i < s.size(); ++i) spec.points.emplace_back(s.years()[i], s.values()[i]);
  return spec;
}

std::string render_figure(const FigureSpec& spec) {
  if (spec.points.empty()) throw Error(ErrorKind::DegenerateRange, "figure '" + spec.title + "' has no points");
  for (const auto& [x, y] : spec.points) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
      throw Error(ErrorKind::InvalidArgument, "figure '" + spec.title + "' has a non-finite point");
    }
  }
  auto [xmin, xmax] = std::minmax_element(spec.points.begin(), spec.points.end(),
                                          [](const auto& a, const auto& b) { return a.first < b.first; });
  auto [ymin, ymax] = std::minmax_element(spec.points.begin(), spec.points.end(),
                                          [](const auto& a, const auto& b) { return a.second < b.second; });
  const Axis ax = make_axis(xmin->first, xmax->first);
  const Axis ay = make_axis(ymin->second, ymax->second);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - ax.lo) / (ax.hi - ax.lo) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - ay.lo) / (ay.hi - ay.lo) * plot_h; };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
      << "<text class=\"title\" x=\"" << num(kWidth / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(spec.title) << "</text>\n";

  svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(kLeft + plot_w)
      << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft) << "\" y2=\""
      << num(kTop + plot_h) << "\"/>\n";
  for (double t : ax.ticks) {
    svg << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(px(t))
        << "\" y2=\"" << num(kTop + plot_h + 5) << "\"/>\n";
  }
  for (double t : ay.ticks) {
    svg << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(py(t)) << "\"/>\n";
  }
  svg << "</g>\n<g class=\"tick-labels\" font-family=\"sans-serif\" font-size=\"11\">\n";
  for (double t : ax.ticks) {
    svg << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (double t : ay.ticks) {
    svg << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\">"
        << tick_label(t) << "</text>\n";
  }
  svg << "</g>\n"
      << "<text class=\"x-label\" x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" << escape(spec.x_name)
      << "</text>\n"
      << "<text class=\"y-label\" x=\"18\" y=\"" << num(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 "
      << num(kTop + plot_h / 2) << ")\">" << escape(spec.y_name) << "</text>\n";

  if (spec.kind == FigureKind::scatter) {
    svg << "<g class=\"marks\" fill=\"none\" stroke=\"navy\">\n";
    for (const auto& [x, y] : spec.points) {
      svg << "<circle class=\"mark\" cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"3\"/>\n";
    }
    svg << "</g>\n";
  } else {
    svg << "<polyline class=\"mark\" fill=\"none\" stroke=\"navy\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < spec.points.size(); ++i) {
      if (i > 0) svg << ' ';
      svg << num(px(spec.points[i].first)) << ',' << num(py(spec.points[i].second));
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace econreg::report
