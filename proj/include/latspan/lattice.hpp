#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latspan/steering.hpp"

namespace latspan {

using VertexId = std::uint32_t;

/// Sampling of one higher-order state: `count` evenly spaced values in [lower, upper]
/// (a single sample sits at `lower`).
struct StateSampling {
  std::string name;
  int count = 1;
  double lower = 0.0;
  double upper = 0.0;

  double value(int index) const;
  double spacing() const;
};

struct LatticeSpec {
  double alpha = 1.0;  ///< x spacing [m]
  double beta = 1.0;   ///< y spacing [m]
  int n0 = 1;          ///< x half-extent in samples
  int n1 = 1;          ///< y half-extent in samples
  int n2 = 3;          ///< 2^n2 headings
  std::vector<StateSampling> states;
  std::optional<double> prune_ratio;
  std::size_t max_vertices = 4'000'000;
  /// Replaces the default start headings (indices into the heading samples).
  std::optional<std::vector<int>> start_headings;

  void validate() const;
  int heading_count() const { return 1 << n2; }
  double heading_step() const;
  /// Headings per quadrant; rotations by this many heading steps are quarter turns.
  int quadrant_headings() const { return 1 << (n2 - 2); }
};

/// Integer grid coordinates of a lattice sample. `ix`/`iy` are unbounded so the
/// same type addresses the infinite world grid used during planning.
struct GridCoord {
  int ix = 0;
  int iy = 0;
  int heading = 0;
  std::vector<int> states;

  friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

/// Multi-start lattice. Vertex ids are assigned starts first, so ids
/// [0, start_count()) are exactly the start set.
class Lattice {
 public:
  const LatticeSpec& spec() const { return spec_; }
  std::size_t size() const { return vertices_.size(); }
  std::size_t start_count() const { return start_count_; }
  bool is_start(VertexId id) const { return id < start_count_; }
  bool is_active(VertexId id) const { return id < vertices_.size() && !pruned_[id]; }
  std::size_t active_count() const;
  std::vector<VertexId> active_vertices() const;
  std::vector<VertexId> pruned_vertices() const;

  const Configuration& vertex(VertexId id) const { return vertices_.at(id); }
  const GridCoord& coord(VertexId id) const { return coords_.at(id); }

  /// Configuration of an arbitrary grid coordinate (inside the extents or not).
  Configuration configuration_of(const GridCoord& c) const;

  /// Snaps `c` to grid coordinates if every state lies within `tol` of a sample.
  /// Extents are ignored; higher states must lie within their bounds.
  std::optional<GridCoord> snap(const Configuration& c, double tol = 1e-6) const;

  /// Vertex id for grid coordinates inside the extents (pruned vertices included).
  std::optional<VertexId> find(const GridCoord& c) const;

  /// Active vertex coinciding with `c` within `tol`, if any.
  std::optional<VertexId> find(const Configuration& c, double tol = 1e-6) const;

  /// Heading index of the start that serves `heading` (heading modulo a quadrant).
  int relative_heading(int heading) const { return heading % spec_.quadrant_headings(); }

 private:
  friend Lattice build_lattice(const LatticeSpec& spec);
  friend Lattice prune(const Lattice&, const class PrimitiveLibrary&, double);
  friend Lattice with_pruned(const Lattice&, const std::vector<VertexId>&);

  std::size_t grid_index(const GridCoord& c) const;

  LatticeSpec spec_;
  std::vector<Configuration> vertices_;
  std::vector<GridCoord> coords_;
  std::vector<bool> pruned_;
  std::vector<VertexId> by_grid_;  // grid index -> vertex id
  std::size_t start_count_ = 0;
};

/// Forward primitives B_s for every start, keyed by target vertex.
class PrimitiveLibrary {
 public:
  using StartSet = std::map<VertexId, Motion>;

  std::size_t start_count() const { return per_start_.size(); }
  const StartSet& primitives(VertexId start) const { return per_start_.at(start); }
  StartSet& primitives(VertexId start) { return per_start_.at(start); }
  const Motion* find(VertexId start, VertexId target) const;
  std::size_t total() const;

  /// (start, target) pairs the steering backend could not connect.
  const std::vector<std::pair<VertexId, VertexId>>& unreachable() const { return unreachable_; }

  /// Copy without the primitives whose targets are pruned in `lat`.
  PrimitiveLibrary restricted_to(const Lattice& lat) const;

  void resize(std::size_t starts) { per_start_.resize(starts); }
  void mark_unreachable(VertexId s, VertexId j) { unreachable_.emplace_back(s, j); }

 private:
  std::vector<StartSet> per_start_;
  std::vector<std::pair<VertexId, VertexId>> unreachable_;
};

/// Builds the Cartesian-product lattice with its start set.
Lattice build_lattice(const LatticeSpec& spec);

/// Copy of `lat` with the given vertices marked pruned.
Lattice with_pruned(const Lattice& lat, const std::vector<VertexId>& pruned);

/// Per-state nearest sample, ties toward the smaller value. Extents and state
/// bounds are not checked.
GridCoord nearest_coord(const Lattice& lat, const Configuration& c);

/// The start vertex whose primitives transform onto `c` by a quarter-turn rotation.
VertexId relative_start(const Configuration& c, const Lattice& lat);

/// Endpoint id of `m` applied at vertex `i`, when that concatenation is valid:
/// some start maps `m` onto the grid and the endpoint at `i` is an active vertex.
std::optional<VertexId> valid_concatenation(VertexId i, const Motion& m, const Lattice& lat);

/// Steers from every start to every active non-start vertex.
PrimitiveLibrary build_primitive_library(const Lattice& lat, const SteeringConfig& cfg);

/// Removes every non-start vertex j with cost(s, j) > ratio * |s - j| for all starts.
Lattice prune(const Lattice& lat, const PrimitiveLibrary& lib, double ratio);

/// Per start, reverse-driving primitives derived from `forward`: each forward motion
/// is driven backwards from the start, its endpoint rounded onto the grid, and one
/// arc-length-minimal motion kept per (x, y). Adds in-place curvature-change
/// primitives when the lattice has a state named "curvature".
std::vector<std::vector<Motion>> add_reverse_primitives(
    const std::vector<std::vector<Motion>>& forward, const Lattice& lat,
    const SteeringConfig& cfg);

}  // namespace latspan
