#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pfd {

/// PD feedback gains applied to relative position and velocity errors.
struct ControllerGains {
  double kp = 1.0;  // position-error gain, 1/s^2
  double kd = 2.0;  // velocity-error gain, 1/s

  void validate() const {
    if (!(kp > 0.0 && kd > 0.0)) throw std::invalid_argument("ControllerGains: gains must be positive");
  }
};

enum class Architecture { PredecessorFollowing, SymmetricBidirectional };

/// Static description of the platoon: size, desired adjacent gaps, gains and
/// coupling architecture. Only adjacent gaps are stored; gaps between
/// non-adjacent vehicles are cumulative sums, so gap consistency holds by
/// construction.
struct PlatoonConfig {
  int n = 2;              // vehicle count
  Eigen::VectorXd gaps;   // desired distance to the predecessor, entry i-1 for vehicle i, m
  ControllerGains gains;
  Architecture architecture = Architecture::PredecessorFollowing;

  static PlatoonConfig uniform(int n, double gap, ControllerGains gains, Architecture arch) {
    PlatoonConfig c;
    c.n = n;
    c.gaps = Eigen::VectorXd::Constant(n, gap);
    c.gains = gains;
    c.architecture = arch;
    c.validate();
    return c;
  }

  void validate() const {
    if (n < 2) throw std::invalid_argument("PlatoonConfig: need at least two vehicles");
    if (gaps.size() != n) throw std::invalid_argument("PlatoonConfig: gaps must have one entry per vehicle");
    if ((gaps.array() <= 0.0).any()) throw std::invalid_argument("PlatoonConfig: gaps must be positive");
    gains.validate();
  }

  /// Desired distance between the reference vehicle (index 0) and vehicle i.
  double cumulative_gap(int i) const {
    if (i < 0 || i > n) throw std::out_of_range("PlatoonConfig: vehicle index out of range");
    return gaps.head(i).sum();
  }
};

enum class RefMode { Accelerate, Cruise, Brake };

struct RefSegment {
  RefMode mode = RefMode::Cruise;
  double duration = 0.0;  // s
  double rate = 0.0;      // magnitude of the speed change, m/s^2 (unused for Cruise)
};

/// Piecewise constant-acceleration trajectory for the fictitious reference
/// vehicle. Position is continuous and piecewise C^1; after the last segment
/// the profile cruises at the final speed.
class ReferenceProfile {
 public:
  ReferenceProfile() : ReferenceProfile(0.0, {}) {}

  ReferenceProfile(double initial_speed, std::vector<RefSegment> segments)
      : initial_speed_(initial_speed), segments_(std::move(segments)) {
    double t = 0.0, p = 0.0, v = initial_speed_;
    for (const RefSegment& seg : segments_) {
      if (!(seg.duration > 0.0))
        throw std::invalid_argument("ReferenceProfile: segment durations must be positive");
      double a = 0.0;
      if (seg.mode == RefMode::Accelerate) a = seg.rate;
      if (seg.mode == RefMode::Brake) a = -seg.rate;
      starts_.push_back({t, p, v, a});
      p += v * seg.duration + 0.5 * a * seg.duration * seg.duration;
      v += a * seg.duration;
      t += seg.duration;
    }
    starts_.push_back({t, p, v, 0.0});  // cruise extension
  }

  double initial_speed() const { return initial_speed_; }
  const std::vector<RefSegment>& segments() const { return segments_; }
  double total_duration() const { return starts_.back().t; }

  double position(double t) const {
    const Knot& k = knot(t);
    const double tau = t - k.t;
    return k.p + k.v * tau + 0.5 * k.a * tau * tau;
  }

  double velocity(double t) const {
    const Knot& k = knot(t);
    return k.v + k.a * (t - k.t);
  }

  double acceleration(double t) const { return knot(t).a; }

 private:
  struct Knot {
    double t, p, v, a;
  };

  const Knot& knot(double t) const {
    // Few segments in practice; a linear scan keeps this trivially correct.
    for (size_t i = starts_.size(); i-- > 0;)
      if (t >= starts_[i].t || i == 0) return starts_[i];
    return starts_.front();
  }

  double initial_speed_;
  std::vector<RefSegment> segments_;
  std::vector<Knot> starts_;
};

/// Kinematic state of the platoon at one instant.
struct PlatoonState {
  double t = 0.0;
  Eigen::VectorXd p;  // positions, m
  Eigen::VectorXd v;  // velocities, m/s
};

/// Desired position of vehicle i (0 = reference vehicle) at time t.
inline double desired_trajectory(const PlatoonConfig& config, const ReferenceProfile& ref, int i,
                                 double t) {
  if (i < 0 || i > config.n) throw std::out_of_range("desired_trajectory: vehicle index out of range");
  return ref.position(t) - config.cumulative_gap(i);
}

/// Position tracking errors p_i - p_i*(t) for all vehicles.
inline Eigen::VectorXd tracking_error(const PlatoonState& state, const PlatoonConfig& config,
                                      const ReferenceProfile& ref) {
  if (state.p.size() != config.n) throw std::invalid_argument("tracking_error: dimension mismatch");
  Eigen::VectorXd e(config.n);
  for (int i = 0; i < config.n; ++i) e[i] = state.p[i] - desired_trajectory(config, ref, i + 1, state.t);
  return e;
}

/// Velocity deviations from the reference speed.
inline Eigen::VectorXd velocity_error(const PlatoonState& state, const ReferenceProfile& ref) {
  return state.v.array() - ref.velocity(state.t);
}

/// Predecessor-following law: negative PD feedback on the error difference to
/// the vehicle ahead; vehicle 1 tracks the reference through the same law
/// against the (error-free) virtual lead vehicle.
inline Eigen::VectorXd pf_control(const PlatoonState& state, const PlatoonConfig& config,
                                  const ReferenceProfile& ref) {
  if (config.architecture != Architecture::PredecessorFollowing)
    throw std::invalid_argument("pf_control: config does not use the predecessor-following architecture");
  const Eigen::VectorXd pe = tracking_error(state, config, ref);
  const Eigen::VectorXd ve = velocity_error(state, ref);
  Eigen::VectorXd u(config.n);
  for (int i = 0; i < config.n; ++i) {
    const double pe_front = i == 0 ? 0.0 : pe[i - 1];
    const double ve_front = i == 0 ? 0.0 : ve[i - 1];
    u[i] = -config.gains.kp * (pe[i] - pe_front) - config.gains.kd * (ve[i] - ve_front);
  }
  return u;
}

/// Symmetric bidirectional law: interior vehicles apply the PD feedback to
/// both neighbor error differences with equal gains; the last vehicle couples
/// to its front neighbor only.
inline Eigen::VectorXd sb_control(const PlatoonState& state, const PlatoonConfig& config,
                                  const ReferenceProfile& ref) {
  if (config.architecture != Architecture::SymmetricBidirectional)
    throw std::invalid_argument("sb_control: config does not use the symmetric bidirectional architecture");
  const Eigen::VectorXd pe = tracking_error(state, config, ref);
  const Eigen::VectorXd ve = velocity_error(state, ref);
  Eigen::VectorXd u(config.n);
  for (int i = 0; i < config.n; ++i) {
    const double pe_front = i == 0 ? 0.0 : pe[i - 1];
    const double ve_front = i == 0 ? 0.0 : ve[i - 1];
    u[i] = -config.gains.kp * (pe[i] - pe_front) - config.gains.kd * (ve[i] - ve_front);
    if (i + 1 < config.n) {
      u[i] += -config.gains.kp * (pe[i] - pe[i + 1]) - config.gains.kd * (ve[i] - ve[i + 1]);
    }
  }
  return u;
}

}  // namespace pfd
