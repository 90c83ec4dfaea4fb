#pragma once

#include <string>
#include <vector>

#include "latspan/metrics.hpp"
#include "latspan/planner.hpp"

namespace latspan {

struct PlotOptions {
  double pixels_per_meter = 20.0;
  double footprint_spacing = 2.0;  ///< arc length between drawn footprints
};

/// Obstacles, start/goal footprints, one polyline per given path and a
/// footprint sweep along the last one. Explored positions are drawn as dots.
std::string render_svg(const Scenario& sc, const std::vector<PlanEdge>* planned,
                       const std::vector<PlanEdge>* smoothed, const std::vector<Vec2>& explored,
                       const PlotOptions& opt = {});

/// `metric,planned,smoothed` table preceded by a comment line.
std::string metrics_csv(const MetricsReport& planned, const MetricsReport& smoothed, double step,
                        bool timing);

}  // namespace latspan
