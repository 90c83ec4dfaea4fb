#pragma once

#include <cstddef>
#include <vector>

#include "latspan/planner.hpp"

namespace latspan {

struct MetricsReport {
  double arc_length = 0.0;
  double smoothness1 = 0.0;  ///< sum of |dx_{i+1} - dx_i|^2 over uniformly resampled positions
  double smoothness2 = 0.0;  ///< integral of curvature squared, finite-difference curvature
  double max_curvature = 0.0;
  double wall_time = 0.0;
  std::size_t expansions = 0;
};

/// Configurations every `step` meters of arc length along the path, end included.
std::vector<Configuration> resample_path(const std::vector<PlanEdge>& edges, double step);

/// Geometric metrics of the path; timing and expansion fields are left at zero.
MetricsReport compute_metrics(const std::vector<PlanEdge>& edges, double step);

}  // namespace latspan
