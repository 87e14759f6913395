#include "flipiet/svg.hpp"

#include <sstream>

#include "flipiet/dynamics.hpp"

namespace flipiet {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << x;
  return os.str();
}

}  // namespace

std::string export_plot(const ExchangeMap<Real>& t, const PlotOptions& options) {
  const double size = options.size;
  const double total = static_cast<double>(t.total_length());
  auto px = [&](double x) { return num(x / total * size); };
  auto py = [&](double y) { return num(size - y / total * size); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.size << "\" height=\""
      << options.size << "\" viewBox=\"0 0 " << options.size << " " << options.size << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << options.size << "\" height=\"" << options.size
      << "\" fill=\"white\" stroke=\"black\"/>\n";
  if (options.kind == PlotKind::graph) {
    for (int i = 1; i <= t.interval_count(); ++i) {
      const double lo = static_cast<double>(t.domain_breakpoints()[i - 1]);
      const double hi = static_cast<double>(t.domain_breakpoints()[i]);
      const double ylo = static_cast<double>(t.slope(i) * t.domain_breakpoints()[i - 1] + t.offset(i));
      const double yhi = static_cast<double>(t.slope(i) * t.domain_breakpoints()[i] + t.offset(i));
      svg << "<line class=\"segment\" data-slope=\"" << t.slope(i) << "\" x1=\"" << px(lo) << "\" y1=\"" << py(ylo)
          << "\" x2=\"" << px(hi) << "\" y2=\"" << py(yhi) << "\" stroke=\"" << (t.slope(i) == 1 ? "black" : "red")
          << "\" stroke-width=\"2\"/>\n";
    }
  } else {
    const auto rep = orbit(t, options.x0, options.iters);
    const double n = std::max<double>(1.0, static_cast<double>(options.iters));
    for (std::size_t k = 0; k < rep.points.size(); ++k) {
      svg << "<circle cx=\"" << num(static_cast<double>(k) / n * size) << "\" cy=\""
          << py(static_cast<double>(rep.points[k])) << "\" r=\"1\" fill=\"black\"/>\n";
    }
    if (rep.stopped_reason == OrbitStopReason::hit_breakpoint) {
      svg << "<text x=\"4\" y=\"14\" font-size=\"12\" fill=\"red\">orbit hit a breakpoint after "
          << rep.points.size() - 1 << " steps</text>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace flipiet
