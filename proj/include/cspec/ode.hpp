#ifndef CSPEC_ODE_HPP
#define CSPEC_ODE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace cspec {

/// Two complex components cover both state spaces used here:
/// (x, p) for classical flows and (psi, psi') for ray shooting.
using State2 = Eigen::Vector2cd;

struct StepperOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double max_step = std::numeric_limits<double>::infinity();
  double initial_step = 0.0;  // 0 selects a heuristic
};

enum class StepVerdict {
  accept,  // keep the step
  retake,  // redo the step at half the size (observer veto)
  stop,    // terminate integration after this step
};

enum class IntegrationStatus {
  reached_end,
  stopped,          // observer requested stop
  step_underflow,   // step size collapsed (trajectory singularity)
};

/// Embedded Dormand-Prince 5(4) pair with PI step-size control.
/// `rhs(t, y)` returns dy/dt; `observe(t, y, h)` is called after every
/// accepted step and may mutate y (e.g. rescale a linear system) or veto
/// the step.  Integration runs forward from t0 to t_end.
template <class Rhs, class Observer>
IntegrationStatus integrate_adaptive(const Rhs& rhs, double t0, double t_end,
                                     State2& y, const StepperOptions& opt,
                                     Observer&& observe) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                          c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                          a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                          a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  // 5th-order minus embedded 4th-order weights (error estimator).
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                          e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;

  const double span = t_end - t0;
  if (!(span > 0.0)) return IntegrationStatus::reached_end;

  double t = t0;
  double h = opt.initial_step;
  if (h <= 0.0) {
    const double f0 = rhs(t0, y).norm();
    h = 0.01 * std::max(1e-6, y.norm()) / std::max(1e-6, f0);
  }
  h = std::min({h, opt.max_step, span});

  double err_prev = 1.0;
  const double h_floor = 1e-14;

  while (t < t_end) {
    h = std::min({h, opt.max_step, t_end - t});
    if (h < h_floor * std::max(1.0, std::abs(t))) {
      return IntegrationStatus::step_underflow;
    }

    const State2 k1 = rhs(t, y);
    const State2 k2 = rhs(t + c2 * h, y + h * (a21 * k1));
    const State2 k3 = rhs(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
    const State2 k4 = rhs(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const State2 k5 = rhs(t + c5 * h,
                          y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const State2 k6 =
        rhs(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    State2 y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const State2 k7 = rhs(t + h, y5);
    const State2 diff =
        h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0.0;
    for (int i = 0; i < 2; ++i) {
      const double scale =
          opt.abs_tol +
          opt.rel_tol * std::max(std::abs(y(i)), std::abs(y5(i)));
      const double r = std::abs(diff(i)) / scale;
      err += r * r;
    }
    err = std::sqrt(err / 2.0);

    if (!std::isfinite(err) || err > 1.0) {
      const double fac = std::isfinite(err)
                             ? std::max(0.1, 0.9 * std::pow(err, -0.2))
                             : 0.1;
      h *= fac;
      continue;
    }

    const double t_new = t + h;
    const StepVerdict verdict = observe(t_new, y5, h);
    if (verdict == StepVerdict::retake) {
      h *= 0.5;
      continue;
    }
    t = t_new;
    y = y5;
    if (verdict == StepVerdict::stop) return IntegrationStatus::stopped;

    const double fac =
        0.9 * std::pow(std::max(err, 1e-10), -0.17) * std::pow(err_prev, 0.04);
    err_prev = std::max(err, 1e-10);
    h *= std::clamp(fac, 0.2, 6.0);
  }
  return IntegrationStatus::reached_end;
}

}  // namespace cspec

#endif
