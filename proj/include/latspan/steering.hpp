#pragma once

#include <numbers>
#include <span>
#include <vector>

namespace latspan {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Absolute tolerance used whenever two motion costs are compared.
inline constexpr double kCostTolerance = 1e-9;

/// Wraps an angle into [0, 2pi).
double normalize_angle(double theta);

/// Signed smallest rotation taking `from` onto `to`, in (-pi, pi].
double angle_difference(double from, double to);

/// A vehicle configuration: planar pose plus ordered higher-order states
/// (curvature, velocity, ...). The heading is kept in [0, 2pi).
struct Configuration {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;
  std::vector<double> higher;

  Configuration() = default;
  Configuration(double x_, double y_, double theta_, std::vector<double> higher_ = {})
      : x(x_), y(y_), theta(normalize_angle(theta_)), higher(std::move(higher_)) {}
};

/// True when every state of `a` and `b` agrees within `tol` (heading compared on the circle).
bool same_configuration(const Configuration& a, const Configuration& b, double tol = 1e-9);

/// True when the higher-order states agree within `tol`.
bool same_higher_states(const Configuration& a, const Configuration& b, double tol = 1e-9);

enum class Direction { kForward, kReverse };

enum class SegmentType { kLeft, kStraight, kRight };

/// One constant-curvature piece of a motion. A negative length means the piece is
/// driven backwards (the heading does not flip, the vehicle moves against it).
struct Segment {
  SegmentType type = SegmentType::kStraight;
  double length = 0.0;
  double curvature = 0.0;
};

/// A steering solution between two configurations. The descriptor is enough to
/// regenerate the trace from `start`.
struct Motion {
  Configuration start;
  Configuration end;
  double cost = 0.0;
  Direction direction = Direction::kForward;
  std::vector<Configuration> trace;
  std::vector<Segment> descriptor;

  /// Travelled arc length, independent of the direction penalty.
  double length() const;
};

/// Monotone reverse-driving cost map: c -> scale * c + offset.
struct ReversePenalty {
  double scale = 2.0;
  double offset = 0.0;

  double operator()(double cost) const { return scale * cost + offset; }
};

struct SteeringConfig {
  double min_turn_radius = 1.0;
  double trace_step = 0.1;
  ReversePenalty reverse_penalty;

  /// Throws InvalidArgument unless radius and step are positive and the penalty
  /// satisfies scale >= 1, offset >= 0 (so that penalty(c) >= c for c >= 0).
  void validate() const;
};

/// Pluggable obstacle-free two-point boundary-value solver.
class SteeringFunction {
 public:
  virtual ~SteeringFunction() = default;

  /// Cost-minimizing motion from `a` to `b`; throws UnreachableConfiguration when
  /// the backend cannot connect the pair.
  virtual Motion connect(const Configuration& a, const Configuration& b) const = 0;

  virtual const SteeringConfig& config() const = 0;
};

/// Shortest forward Dubins paths on (x, y, theta). Higher-order states are carried
/// along unchanged, so the two endpoints must agree on them.
class DubinsSteering final : public SteeringFunction {
 public:
  explicit DubinsSteering(SteeringConfig config);

  Motion connect(const Configuration& a, const Configuration& b) const override;
  const SteeringConfig& config() const override { return config_; }

 private:
  SteeringConfig config_;
};

/// Obstacle-free optimal connection using the Dubins backend.
Motion steer(const Configuration& a, const Configuration& b, const SteeringConfig& cfg);

/// Cost of traversing a motion of cost `cost` backwards.
double reverse_cost(double cost, const SteeringConfig& cfg);

/// Rigidly moves `m` so that its start lands on `pose`: positions are translated and
/// the whole motion rotated by pose.theta - m.start.theta. Higher states must match.
Motion transform_motion(const Motion& m, const Configuration& pose);

/// The geometry of `forward` driven backwards, from forward.end to forward.start.
Motion reverse_motion(const Motion& forward, const SteeringConfig& cfg);

/// The same curve run the other way with every heading flipped by pi, so a
/// forward motion stays forward. Cost and direction are kept.
Motion mirror_motion(const Motion& m);

/// `m` shifted by (dx, dy).
Motion translate_motion(const Motion& m, double dx, double dy);

/// Configuration reached after driving `arc` meters (unsigned, along the
/// descriptor order) from `start`.
Configuration integrate_segments(const Configuration& start, std::span<const Segment> segments,
                                 double arc);

/// Samples the descriptor every at most `step` meters, both endpoints included.
std::vector<Configuration> regenerate_trace(const Configuration& start,
                                            std::span<const Segment> segments, double step);

/// Configuration at arc position `arc` in [0, m.length()].
Configuration configuration_at(const Motion& m, double arc);

/// The part of `m` between arc positions `from` and `to`, costed like `m`
/// (plain length forwards, penalized length backwards).
Motion slice_motion(const Motion& m, double from, double to, const SteeringConfig& cfg);

}  // namespace latspan
