#pragma once

#include <string>

#include "flipiet/exchange_map.hpp"
#include "flipiet/numeric.hpp"

namespace flipiet {

enum class PlotKind { graph, orbit };

struct PlotOptions {
  PlotKind kind = PlotKind::graph;
  Real x0 = 0.1L;
  long iters = 1000;
  int size = 400;  // pixels per side
};

// SVG 1.1 document. graph: one segment per interval over [0,L]^2. orbit:
// points (k/N, T^k(x0)/L), truncated with a note if the orbit hits a
// breakpoint.
std::string export_plot(const ExchangeMap<Real>& t, const PlotOptions& options);

}  // namespace flipiet
