#pragma once

#include <string>

#include "orchard/points.hpp"
#include "orchard/relation.hpp"

namespace orchard {

struct PlotStyle {
  int canvas = 480;
  int margin = 40;
  double radius = 6.0;
  std::string class0_fill = "#2e7d32";
  std::string class1_fill = "#c62828";
};

/// SVG 1.1 document: one circle per point filled by class, labelled P1..Pn.
/// Output depends only on the inputs. Throws input_error unless dim == 2.
std::string plot_svg(const PointConfiguration& config, const OrchardPartition& partition,
                     const PlotStyle& style = {});

}  // namespace orchard
