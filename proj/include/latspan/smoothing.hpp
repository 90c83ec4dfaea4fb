#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latspan/planner.hpp"

namespace latspan {

struct Waypoint {
  Configuration config;
  double arc = 0.0;        ///< position along the path
  std::size_t edge = 0;    ///< path edge containing the waypoint
  double edge_arc = 0.0;   ///< position inside that edge
};

/// Edge endpoints plus `n` configurations drawn uniformly by arc length, sorted by
/// position. Deterministic for a fixed seed.
std::vector<Waypoint> sample_waypoints(const std::vector<PlanEdge>& path, std::size_t n,
                                       std::uint64_t seed);

struct SmoothStats {
  std::size_t waypoints = 0;
  std::size_t pair_evaluations = 0;
  std::size_t collision_checks = 0;
  std::uint64_t seed = 0;
  bool kept_input = false;  ///< the DAG path was not cheaper, input returned
};

struct SmoothResult {
  PlanResult plan;
  SmoothStats stats;
};

/// Shortest path through the DAG of forward and penalized-reverse connections
/// between ordered waypoints. Never returns a costlier path than `path`.
SmoothResult dag_smooth(const PlanResult& path, const Scenario& sc, const SteeringConfig& cfg,
                        std::size_t n, std::uint64_t seed);

}  // namespace latspan
