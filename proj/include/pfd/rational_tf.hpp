#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pfd/polynomial.hpp"

namespace pfd {

/// Rational transfer function num(s)/den(s) with an optional transport delay
/// exp(-delay*s) carried separately from the polynomial part.
struct RationalTF {
  Polynomial num;
  Polynomial den;
  double delay = 0.0;  // s

  RationalTF() : num({1.0}), den({1.0}) {}

  RationalTF(Polynomial numerator, Polynomial denominator, double transport_delay = 0.0)
      : num(std::move(numerator)), den(std::move(denominator)), delay(transport_delay) {
    if (den.is_zero()) throw std::invalid_argument("RationalTF: zero denominator");
    if (delay < 0.0) throw std::invalid_argument("RationalTF: negative delay");
  }

  bool proper() const { return num.degree() <= den.degree(); }
  bool strictly_proper() const { return num.degree() < den.degree(); }
  double dc_gain() const { return polyval(num, 0.0) / polyval(den, 0.0); }
};

inline RationalTF operator*(const RationalTF& a, const RationalTF& b) {
  return RationalTF(a.num * b.num, a.den * b.den, a.delay + b.delay);
}

/// Denominator roots with a scale-aware residual back-check: an eigenvalue p
/// of the companion matrix is accepted only if |den(p)| is small relative to
/// the coefficient magnitudes evaluated at |p|.
struct PoleSet {
  std::vector<std::complex<double>> values;
};

inline PoleSet poles(const RationalTF& tf) {
  if (tf.den.degree() < 1) throw std::invalid_argument("poles: constant denominator");
  PoleSet ps{companion_roots(tf.den)};
  for (const auto& p : ps.values) {
    const std::complex<double> v = polyval(tf.den, p);
    double scale = 0.0;
    double am = std::max(1.0, std::abs(p));
    double power = 1.0;
    for (int i = 0; i <= tf.den.degree(); ++i, power *= am)
      scale += std::abs(tf.den.coeffs()[i]) * power;
    if (std::abs(v) > 1e-6 * scale)
      throw std::runtime_error("poles: companion eigenvalue failed the residual back-check");
  }
  return ps;
}

/// Minimum pairwise distance between two pole sets.
inline double pole_separation(const PoleSet& a, const PoleSet& b) {
  if (a.values.empty() || b.values.empty())
    throw std::invalid_argument("pole_separation: empty pole set");
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pa : a.values)
    for (const auto& pb : b.values) best = std::min(best, std::abs(pa - pb));
  return best;
}

/// num(jw)/den(jw) * exp(-j w delay) over a frequency grid (rad/s).
inline Eigen::VectorXcd freq_response(const RationalTF& tf, const Eigen::VectorXd& omega) {
  Eigen::VectorXcd out(omega.size());
  for (Eigen::Index i = 0; i < omega.size(); ++i) {
    const std::complex<double> jw(0.0, omega[i]);
    const std::complex<double> d = polyval(tf.den, jw);
    if (std::abs(d) == 0.0)
      throw std::domain_error("freq_response: evaluation at a pole");
    out[i] = polyval(tf.num, jw) / d * std::exp(-jw * tf.delay);
  }
  return out;
}

/// Logarithmically spaced frequency grid on [lo, hi].
inline Eigen::VectorXd log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0 && hi > lo && n >= 2)) throw std::invalid_argument("log_grid: bad range");
  Eigen::VectorXd w(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i) w[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return w;
}

/// Squared H2-type distance (1/pi) * integral of |A(jw)-B(jw)|^2 over the
/// grid, by the trapezoid rule. Both functions must be strictly proper so the
/// tail of the integrand decays.
inline double h2_distance(const RationalTF& a, const RationalTF& b, const Eigen::VectorXd& omega) {
  if (!a.strictly_proper() || !b.strictly_proper())
    throw std::invalid_argument("h2_distance: transfer functions must be strictly proper");
  const Eigen::VectorXcd fa = freq_response(a, omega);
  const Eigen::VectorXcd fb = freq_response(b, omega);
  double acc = 0.0;
  for (Eigen::Index i = 0; i + 1 < omega.size(); ++i) {
    const double g0 = std::norm(fa[i] - fb[i]);
    const double g1 = std::norm(fa[i + 1] - fb[i + 1]);
    acc += 0.5 * (g0 + g1) * (omega[i + 1] - omega[i]);
  }
  return acc / std::numbers::pi;
}

inline Eigen::VectorXd default_h2_grid() { return log_grid(1e-3, 1e3, 4096); }

/// Controllable-canonical state-space realization of a proper rational TF.
struct StateSpace {
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::RowVectorXd c;
  double d = 0.0;
};

inline StateSpace to_state_space(const RationalTF& tf) {
  if (!tf.proper()) throw std::invalid_argument("to_state_space: improper transfer function");
  const int n = tf.den.degree();
  const double lead = tf.den.leading();
  StateSpace ss;
  ss.a = Eigen::MatrixXd::Zero(n, n);
  ss.b = Eigen::VectorXd::Zero(n);
  ss.c = Eigen::RowVectorXd::Zero(n);
  // Split off the direct feedthrough when numerator and denominator have
  // equal degree, leaving a strictly proper remainder.
  Polynomial rem = tf.num;
  if (tf.num.degree() == n && n >= 0) {
    ss.d = tf.num.leading() / lead;
    rem = tf.num - ss.d * tf.den;
  }
  if (n == 0) return ss;
  for (int i = 0; i < n - 1; ++i) ss.a(i, i + 1) = 1.0;
  for (int i = 0; i < n; ++i) ss.a(n - 1, i) = -tf.den.coeffs()[i] / lead;
  ss.b[n - 1] = 1.0;
  for (int i = 0; i <= rem.degree() && i < n; ++i) ss.c[i] = rem.coeffs()[i] / lead;
  return ss;
}

/// Fixed-step simulation of a proper rational TF: classical 4th-order
/// integration of the canonical realization with the input held constant over
/// each step, then an integer-sample shift for the transport delay.
inline Eigen::VectorXd simulate_tf(const RationalTF& tf, const Eigen::VectorXd& input, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("simulate_tf: dt must be positive");
  const StateSpace ss = to_state_space(tf);
  const Eigen::Index steps = input.size();
  Eigen::VectorXd y(steps);
  const int n = static_cast<int>(ss.a.rows());
  if (n == 0) {
    y = ss.d * input;
  } else {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd k1(n), k2(n), k3(n), k4(n);
    for (Eigen::Index i = 0; i < steps; ++i) {
      const double u = input[i];
      y[i] = ss.c.dot(x) + ss.d * u;
      k1 = ss.a * x + ss.b * u;
      k2 = ss.a * (x + 0.5 * dt * k1) + ss.b * u;
      k3 = ss.a * (x + 0.5 * dt * k2) + ss.b * u;
      k4 = ss.a * (x + dt * k3) + ss.b * u;
      x += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  if (tf.delay > 0.0) {
    const Eigen::Index shift = static_cast<Eigen::Index>(std::llround(tf.delay / dt));
    Eigen::VectorXd shifted = Eigen::VectorXd::Zero(steps);
    if (shift < steps) shifted.tail(steps - shift) = y.head(steps - shift);
    return shifted;
  }
  return y;
}

}  // namespace pfd
