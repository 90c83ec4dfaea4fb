#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latspan/errors.hpp"
#include "latspan/lattice.hpp"

namespace latspan {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

using VertexPair = std::pair<VertexId, VertexId>;

/// One candidate primitive q: owned by start `owner`, ending at `target`.
/// `uses` is S_q, every (i, j) where applying q at i lands on j.
struct SpanningPrimitive {
  VertexId owner = 0;
  VertexId target = 0;
  double cost = 0.0;
  std::vector<VertexPair> uses;
};

/// Graph view of a lattice and its library, independent of geometry.
/// Vertices [0, start_count) are starts; targets are active non-start vertices.
class SpanningInstance {
 public:
  SpanningInstance() = default;
  SpanningInstance(std::size_t vertex_count, std::size_t start_count, std::vector<bool> active,
                   std::vector<SpanningPrimitive> primitives);

  std::size_t vertex_count() const { return active_.size(); }
  std::size_t start_count() const { return start_count_; }
  bool is_target(VertexId v) const { return v >= start_count_ && v < active_.size() && active_[v]; }
  std::vector<VertexId> targets() const;

  const std::vector<SpanningPrimitive>& primitives() const { return primitives_; }
  const SpanningPrimitive& primitive(std::uint32_t q) const { return primitives_.at(q); }
  /// Index of the primitive (s, j), or kNoIndex.
  std::uint32_t primitive_index(VertexId s, VertexId j) const;
  std::vector<std::uint32_t> primitives_of(VertexId s) const;

  /// Direct cost c_sj from start s (0 for j == s, infinity when B_s has no motion to j).
  double direct_cost(VertexId s, VertexId j) const;

  struct Edge {
    std::uint32_t primitive;
    VertexId other;  // head for out-edges, tail for in-edges
  };
  const std::vector<Edge>& out_edges(VertexId v) const { return out_.at(v); }
  const std::vector<Edge>& in_edges(VertexId v) const { return in_.at(v); }
  std::size_t edge_count() const { return edge_count_; }

 private:
  std::size_t start_count_ = 0;
  std::vector<bool> active_;
  std::vector<SpanningPrimitive> primitives_;
  std::map<VertexPair, std::uint32_t> by_pair_;
  std::vector<std::vector<Edge>> out_;
  std::vector<std::vector<Edge>> in_;
  std::size_t edge_count_ = 0;
};

/// S_q for the library motion from start `s` to `target`, by brute force over the lattice.
std::vector<VertexPair> compute_sq(VertexId s, VertexId target, const Lattice& lat,
                                   const PrimitiveLibrary& lib);

/// Builds the instance for a lattice and its (pruning-restricted) library.
SpanningInstance make_instance(const Lattice& lat, const PrimitiveLibrary& lib);

/// Per-start shortest paths over the edges of enabled primitives. Tails are
/// limited to s and the targets directly reachable from s; equal-cost ties keep
/// the lowest-id predecessor.
struct ShortestPaths {
  VertexId root = 0;
  std::vector<double> dist;
  std::vector<VertexId> pred;
  std::vector<std::uint32_t> via;  // primitive used on the tree edge into v
};

ShortestPaths spanning_dijkstra(const SpanningInstance& inst, VertexId s,
                                const std::vector<char>& enabled);

enum class Objective { kMax, kSum };

struct SolveStats {
  std::size_t nodes = 0;
  std::size_t dijkstra_runs = 0;
  double wall_seconds = 0.0;
};

/// Selected primitives E_s (as target vertex ids) for every start.
struct ControlSet {
  std::vector<std::vector<VertexId>> targets;
  double t = 1.0;
  double t_error = kInfinity;
  bool optimal = false;
  Objective objective_kind = Objective::kMax;
  SolveStats stats;

  std::size_t max_size() const;
  std::size_t total_size() const;
  std::size_t objective() const {
    return objective_kind == Objective::kMax ? max_size() : total_size();
  }
};

/// Enable mask over instance primitives for a control set.
std::vector<char> selection_mask(const ControlSet& cs, const SpanningInstance& inst);

/// Derived edge relation: every (i, j) reachable by one selected primitive.
std::vector<VertexPair> edge_relation(const ControlSet& cs, const SpanningInstance& inst);

/// max over starts s and reachable targets j of d^E(s, j) / c_sj; infinity if some j is cut off.
double t_error(const std::vector<char>& enabled, const SpanningInstance& inst);
double t_error(const ControlSet& cs, const SpanningInstance& inst);
double t_error(const ControlSet& cs, const Lattice& lat, const PrimitiveLibrary& lib);

struct TreeEdge {
  VertexId tail = 0;
  VertexId head = 0;
  double cost = 0.0;
};

/// Shortest-path arborescence per start, with the path costs z.
struct SpannerCertificate {
  struct Tree {
    VertexId root = 0;
    std::vector<TreeEdge> edges;
    std::map<VertexId, double> z;
  };
  std::vector<Tree> trees;

  /// Cost of the tree path from the root to v (throws NotArborescence if v is not covered).
  double path_cost(std::size_t tree, VertexId v) const;
};

enum class VarKind { kBinary, kContinuous };
enum class RowSense { kLessEqual, kEqual };

struct MilpVar {
  std::string name;
  VarKind kind = VarKind::kContinuous;
  double lower = 0.0;
  double upper = kInfinity;
};

struct MilpRow {
  std::string name;
  char family = 'b';  // b, c, d, e or f
  std::vector<std::pair<std::size_t, double>> terms;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;
};

struct MilpModel {
  struct XKey {
    VertexId i = 0;
    VertexId j = 0;
    VertexId s = 0;
    std::uint32_t primitive = 0;
    double cost = 0.0;       // c_ij
    double big_m = 0.0;      // clamped at 0
    double raw_big_m = 0.0;  // t c_si + c_ij - c_sj as computed
  };

  double t = 1.0;
  Objective objective = Objective::kMax;
  std::vector<MilpVar> vars;
  std::vector<MilpRow> rows;
  std::vector<std::size_t> y_var;  // per instance primitive
  std::vector<XKey> x_keys;        // parallel to x_var
  std::vector<std::size_t> x_var;
  std::map<VertexPair, std::size_t> z_var;  // (i, s) -> variable
  std::size_t k_var = 0;

  std::size_t row_count(char family) const;
};

MilpModel build_milp(const SpanningInstance& inst, double t, Objective objective = Objective::kMax);

/// LP-format text with variables y_j_s, x_i_j_s, z_i_s and K.
std::string export_lp(const MilpModel& model);

/// Assignment (indexed by model variable) realizing `cs`: x and z from the
/// per-start shortest-path trees.
std::vector<double> certificate_assignment(const MilpModel& model, const SpanningInstance& inst,
                                           const ControlSet& cs);

/// Names of rows violated by `values` beyond `tol`, plus bound and integrality violations.
std::vector<std::string> violated_rows(const MilpModel& model, const std::vector<double>& values,
                                       double tol = 1e-9);

/// Per start, the x = 1 edges; checks the arborescence property and that every
/// tree edge satisfies z_j >= z_i + c_ij.
SpannerCertificate decode_certificate(const MilpModel& model, const std::vector<double>& values);

struct SolveOptions {
  double t = 1.1;
  std::size_t node_budget = 100000;
  Objective objective = Objective::kMax;
};

struct SolveResult {
  ControlSet control_set;
  SpannerCertificate certificate;
};

/// Raised when the node budget runs out; carries the best spanning set found.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(const std::string& what, ControlSet incumbent)
      : Error(what), incumbent_(std::move(incumbent)) {}
  const ControlSet& incumbent() const { return incumbent_; }

 private:
  ControlSet incumbent_;
};

/// No subset of the library t-spans the lattice; names one uncovered pair.
class NotSpanning : public Error {
 public:
  NotSpanning(const std::string& what, VertexId start, VertexId target)
      : Error(what), start_(start), target_(target) {}
  VertexId start() const { return start_; }
  VertexId target() const { return target_; }

 private:
  VertexId start_;
  VertexId target_;
};

/// Exact branch-and-bound for the minimum t-spanning control set.
SolveResult solve_mtscs(const SpanningInstance& inst, const SolveOptions& options);
SolveResult solve_mtscs(const Lattice& lat, const PrimitiveLibrary& lib, const SolveOptions& options);

/// Shortest-path trees of a spanning selection, as a certificate.
SpannerCertificate certificate_from_selection(const SpanningInstance& inst, const ControlSet& cs);

}  // namespace latspan
