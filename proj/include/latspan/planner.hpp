#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latspan/collision.hpp"
#include "latspan/errors.hpp"
#include "latspan/lattice.hpp"
#include "latspan/mtscs.hpp"

namespace latspan {

struct Scenario {
  Bounds bounds;
  std::vector<Polygon> obstacles;
  Footprint footprint;
  Configuration start;
  Configuration goal;
  std::vector<double> tolerances;  // x, y, theta, then one per higher state
  double lambda = 1.0;

  CollisionWorld world() const { return CollisionWorld(bounds, obstacles, footprint); }
  /// Throws InvalidArgument on bad geometry or a colliding start/goal.
  void validate() const;
};

/// Motions available at every start: the selected forward primitives and the
/// reverse primitives derived from them.
struct ActionSet {
  std::vector<std::vector<Motion>> forward;
  std::vector<std::vector<Motion>> reverse;

  std::vector<Motion> all(VertexId start) const;
};

ActionSet make_action_set(const PrimitiveLibrary& lib, const ControlSet& cs, const Lattice& lat,
                          const SteeringConfig& cfg, bool with_reverse);

/// Per-state nearest lattice sample (ties toward the smaller value).
/// Throws OutOfBounds outside the lattice extents or state bounds.
VertexId round_to_lattice(const Configuration& v, const Lattice& lat);

/// Tolerance grid Q of off-lattice configurations and the motions E_q from each cell.
class OffLatticeSet {
 public:
  struct Location {
    std::size_t cell = 0;
    double dx = 0.0;  // translation taking the cell configuration next to the query
    double dy = 0.0;
  };

  OffLatticeSet() = default;
  OffLatticeSet(const Lattice& lat, std::vector<double> tolerances);

  const std::vector<double>& tolerances() const { return tol_; }
  /// Samples per state: x, y, theta, then higher states.
  const std::vector<std::size_t>& counts() const { return counts_; }
  std::size_t cell_count() const;
  Configuration cell_configuration(std::size_t cell) const;

  /// Cell whose translated configuration matches `v` within the tolerances.
  std::optional<Location> locate(const Configuration& v) const;

  bool has_cell(std::size_t cell) const { return cells_.count(cell) != 0; }
  const std::vector<Motion>& motions(std::size_t cell) const;
  std::size_t computed_cells() const { return cells_.size(); }

 private:
  friend void fill_offlattice_cell(OffLatticeSet&, std::size_t, const Lattice&, const ActionSet&,
                                   const SteeringConfig&);

  std::vector<double> tol_;
  std::vector<std::size_t> counts_;
  std::vector<double> lower_;  // first sample per state
  double alpha_ = 1.0;
  double beta_ = 1.0;
  std::map<std::size_t, std::vector<Motion>> cells_;
};

/// Computes E_q for every cell of Q.
OffLatticeSet build_offlattice_set(const Lattice& lat, const ActionSet& actions,
                                   const std::vector<double>& tolerances, const SteeringConfig& cfg);

/// Computes E_q only for the listed cells.
OffLatticeSet build_offlattice_cells(const Lattice& lat, const ActionSet& actions,
                                     const std::vector<double>& tolerances,
                                     const SteeringConfig& cfg,
                                     const std::vector<std::size_t>& cells);

/// Cells a scenario needs: start, goal and their heading-flipped twins, for
/// whichever endpoints are off the lattice.
std::vector<std::size_t> scenario_cells(const Scenario& sc, const Lattice& lat,
                                        const OffLatticeSet& grid);

void fill_offlattice_cell(OffLatticeSet& set, std::size_t cell, const Lattice& lat,
                          const ActionSet& actions, const SteeringConfig& cfg);

enum class EdgeSource { kPrimitive, kOffLattice, kDirect, kShortcut, kOriginal };

struct PlanEdge {
  Motion motion;
  EdgeSource source = EdgeSource::kPrimitive;
};

struct PlanStats {
  std::size_t expansions = 0;
  std::size_t generated = 0;
  std::size_t collision_checks = 0;
  std::size_t connections = 0;
  double wall_seconds = 0.0;
};

struct PlanResult {
  std::vector<PlanEdge> edges;
  double cost = 0.0;
  PlanStats stats;
  /// Best connection cost after each improvement, in order.
  std::vector<double> incumbent_history;
};

/// Search failed; carries statistics and the explored positions of both trees.
class NoPath : public Error {
 public:
  NoPath(const std::string& what, PlanStats stats, std::vector<Vec2> explored)
      : Error(what), stats_(stats), explored_(std::move(explored)) {}
  const PlanStats& stats() const { return stats_; }
  const std::vector<Vec2>& explored() const { return explored_; }

 private:
  PlanStats stats_;
  std::vector<Vec2> explored_;
};

enum class DirectConnect { kAuto, kAlways, kNever };

using Heuristic = std::function<double(const Configuration&, const Configuration&)>;

struct PlannerOptions {
  double lambda = 1.0;
  /// Auto attempts direct connections only when lambda < 1.
  DirectConnect direct = DirectConnect::kAuto;
  std::size_t max_expansions = 1'000'000;
  /// Empty means Euclidean distance, answered through a spatial index.
  Heuristic heuristic;
};

/// Bidirectional weighted A* over the world lattice (PrAC).
PlanResult prac_plan(const Scenario& sc, const ActionSet& actions, const OffLatticeSet* off,
                     const Lattice& lat, const SteeringConfig& cfg, const PlannerOptions& opt);

double path_cost(const std::vector<PlanEdge>& edges);

}  // namespace latspan
