#include "cspec/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace cspec {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kClearance = 1e-3;

// Path between turning points: straight segment plus an optional smooth
// perpendicular bulge, x(u) = mid + half*u + perp*eta*(1 - u^2), u in [-1,1].
struct QuantPath {
  Complex mid, half, perp;
  double eta = 0.0;

  Complex at(double u) const { return mid + half * u + perp * (eta * (1.0 - u * u)); }
  Complex tangent(double u) const { return half - perp * (2.0 * eta * u); }
};

double path_clearance(const QuantPath& path, const std::vector<Complex>& tps,
                      Complex ta, Complex tb) {
  double clearance = std::numeric_limits<double>::infinity();
  for (const Complex& t : tps) {
    if (std::abs(t - ta) < 1e-12 || std::abs(t - tb) < 1e-12) continue;
    for (int i = 0; i <= 64; ++i) {
      const double u = -1.0 + 2.0 * i / 64.0;
      clearance = std::min(clearance, std::abs(path.at(u) - t));
    }
  }
  return clearance;
}

QuantPath select_path(const PotentialSpec& spec, Complex E, Complex ta,
                      Complex tb) {
  QuantPath path;
  path.mid = 0.5 * (ta + tb);
  path.half = 0.5 * (tb - ta);
  path.perp = Complex(0.0, 1.0) * path.half / std::abs(path.half);

  std::vector<Complex> tps;
  try {
    tps = turning_points(spec, E);
  } catch (const TurningPointError&) {
    return path;  // clearance unknown; straight path is the best guess
  }
  if (path_clearance(path, tps, ta, tb) > kClearance) return path;

  const double span = std::abs(tb - ta);
  for (double eta : {0.35 * span, -0.35 * span, 0.7 * span, -0.7 * span}) {
    QuantPath bent = path;
    bent.eta = eta;
    if (path_clearance(bent, tps, ta, tb) > kClearance) return bent;
  }
  throw ConvergenceError(
      "quantization_integral: path cannot avoid other turning points "
      "(branch ambiguity)");
}

// Gauss-Chebyshev quadrature of the action integral and its E-derivative
// on a common tracked branch.  With h(u) = E - V(x(u)) vanishing linearly
// at both endpoints, sqrt(h)/sqrt(1-u^2) and 1/(sqrt(h) sqrt(1-u^2))
// are smooth, so second- and first-kind rules apply.
struct ActionValue {
  Complex action;      // int sqrt(E - V) dx
  Complex derivative;  // int dx / (2 sqrt(E - V))
};

ActionValue action_once(const PotentialSpec& spec, Complex E,
                        const QuantPath& path, int order) {
  // Substituting u = cos(theta) turns both integrals into smooth integrals
  // over theta in [0, pi]: the action gets the Chebyshev second-kind rule,
  // the derivative a trapezoid in theta (endpoint terms from the limit
  // q(+-1) = V'(x) x' / (-+2), since h = (1 - u^2) q vanishes linearly).
  const double w = kPi / (order + 1);
  Complex action{0.0, 0.0};
  Complex deriv{0.0, 0.0};
  Complex prev{0.0, 0.0};
  Complex sqrt_q_first{0.0, 0.0}, sqrt_q_last{0.0, 0.0};
  bool first = true;
  for (int k = 1; k <= order; ++k) {
    const double theta = kPi * k / (order + 1);
    const double u = std::cos(theta);
    const double s = std::sin(theta);  // sqrt(1 - u^2)
    const Complex x = path.at(u);
    Complex r = std::sqrt(E - eval_potential(spec, x));
    if (first) {
      first = false;
    } else if ((r * std::conj(prev)).real() < 0.0) {
      r = -r;
    }
    prev = r;
    const Complex dx = path.tangent(u);
    action += w * s * r * dx;
    if (std::abs(r) > 0.0) deriv += w * s * dx / (2.0 * r);
    if (k == 1) sqrt_q_first = r / s;
    if (k == order) sqrt_q_last = r / s;
  }
  // Endpoint halves of the trapezoid; u = +1 is the k -> 0 end.
  const auto endpoint_term = [&](double u, Complex near_sqrt_q) {
    const Complex x = path.at(u);
    const Complex dx = path.tangent(u);
    Complex q = -eval_force(spec, x) * dx * (u > 0 ? 0.5 : -0.5);
    Complex sq = std::sqrt(q);
    if ((sq * std::conj(near_sqrt_q)).real() < 0.0) sq = -sq;
    if (std::abs(sq) == 0.0) return Complex{0.0, 0.0};
    return 0.5 * w * dx / (2.0 * sq);
  };
  deriv += endpoint_term(1.0, sqrt_q_first);
  deriv += endpoint_term(-1.0, sqrt_q_last);
  return {action, deriv};
}

ActionValue action_integrals(const PotentialSpec& spec, Complex E,
                             const QuantPath& path) {
  ActionValue value = action_once(spec, E, path, 48);
  for (int order = 96; order <= 3072; order *= 2) {
    const ActionValue refined = action_once(spec, E, path, order);
    const double change = std::abs(refined.action - value.action);
    value = refined;
    if (change <= 1e-12 * std::max(1.0, std::abs(value.action))) break;
  }
  // Fix the branch so the action has positive real part.
  if (value.action.real() < 0.0 ||
      (value.action.real() == 0.0 && value.action.imag() < 0.0)) {
    value.action = -value.action;
    value.derivative = -value.derivative;
  }
  return value;
}

}  // namespace

std::pair<Complex, Complex> turning_point_pair_for(const PotentialSpec& spec,
                                                   const SectorPair& pair,
                                                   Complex E) {
  const std::vector<Complex> tps = turning_points(spec, E);
  const auto nearest = [&](double angle, const Complex* exclude) {
    const Complex* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const Complex& t : tps) {
      if (exclude != nullptr && std::abs(t - *exclude) < 1e-12) continue;
      const double d = std::abs(wrap_angle(std::arg(t) - angle));
      if (d < best_d) {
        best_d = d;
        best = &t;
      }
    }
    if (best == nullptr) {
      throw TurningPointError("turning_point_pair_for: no selectable root");
    }
    return *best;
  };
  const Complex right = nearest(pair.right.center_angle, nullptr);
  const Complex left = nearest(pair.left.center_angle, &right);
  return {left, right};
}

Complex quantization_integral(const PotentialSpec& spec, Complex E,
                              std::pair<Complex, Complex> tp_pair) {
  const double scale = std::max(1.0, std::abs(E));
  for (const Complex& t : {tp_pair.first, tp_pair.second}) {
    if (std::abs(eval_potential(spec, t) - E) > 1e-6 * scale) {
      throw std::invalid_argument(
          "quantization_integral: endpoints are not turning points of E");
    }
  }
  const QuantPath path = select_path(spec, E, tp_pair.first, tp_pair.second);
  return action_integrals(spec, E, path).action;
}

QuantizationResult quantization_result(const PotentialSpec& spec, Complex E,
                                       std::pair<Complex, Complex> tp_pair) {
  QuantizationResult result;
  result.E = E;
  result.n_effective =
      quantization_integral(spec, E, tp_pair).real() / kPi - 0.5;
  const QuantPath path = select_path(spec, E, tp_pair.first, tp_pair.second);
  for (int i = 0; i <= 64; ++i) {
    result.path.push_back(path.at(-1.0 + 2.0 * i / 64.0));
  }
  return result;
}

Complex wkb_energy_estimate(const PotentialSpec& spec, const SectorPair& pair,
                            int n) {
  if (n < 0) throw std::invalid_argument("wkb_energy_estimate: n must be >= 0");
  const AsymptoticPower ap = asymptotic_power(spec);
  const double target = (n + 0.5) * kPi;
  const double power = 2.0 * ap.degree / (ap.degree + 2.0);
  const double slot = 2.0 * kPi / (ap.degree + 2.0);

  // Candidate seed arguments on the sector-rotation lattice (half steps
  // included: classes without a real member sit between lattice points),
  // ordered so nearly-real seeds are tried first.
  std::vector<double> candidates{0.0};
  const int n_slots = static_cast<int>(std::ceil(ap.degree)) + 2;
  for (int j = 1; j <= n_slots; ++j) {
    for (double sign : {-1.0, 1.0}) {
      const double arg = wrap_angle(sign * 0.5 * j * slot);
      bool dup = false;
      for (double c : candidates) dup = dup || std::abs(c - arg) < 1e-9;
      if (!dup) candidates.push_back(arg);
    }
  }

  const auto in_sector = [](const StokesSector& s, Complex t) {
    return std::abs(wrap_angle(std::arg(t) - s.center_angle)) <=
           0.75 * s.opening;
  };

  for (double phi : candidates) {
    try {
      const Complex probe = std::polar(1.0, phi);
      const auto probe_tps = turning_point_pair_for(spec, pair, probe);
      const QuantPath probe_path =
          select_path(spec, probe, probe_tps.first, probe_tps.second);
      const Complex phi_probe =
          action_integrals(spec, probe, probe_path).action;
      if (std::abs(phi_probe) == 0.0) continue;
      Complex E = probe * std::pow(target / phi_probe, power);

      bool converged = false;
      std::pair<Complex, Complex> tps;
      for (int it = 0; it < 40; ++it) {
        tps = turning_point_pair_for(spec, pair, E);
        const QuantPath path = select_path(spec, E, tps.first, tps.second);
        const ActionValue av = action_integrals(spec, E, path);
        const Complex residual = av.action - target;
        if (std::abs(residual) <= 1e-10 * std::max(1.0, target)) {
          converged = true;
          break;
        }
        if (std::abs(av.derivative) == 0.0) break;
        E -= residual / av.derivative;
      }
      if (!converged) continue;
      if (in_sector(pair.right, tps.second) && in_sector(pair.left, tps.first)) {
        return E;
      }
    } catch (const TurningPointError&) {
    } catch (const ConvergenceError&) {
    }
  }
  throw ConvergenceError("wkb_energy_estimate: Newton iteration found no "
                         "eigenvalue branch matching the sector pair");
}

double pt_hermitian_ratio(int n, const EnergySolver& solver) {
  if (n < 0) throw std::invalid_argument("pt_hermitian_ratio: n must be >= 0");
  const PotentialSpec sextic = pure_monomial(6, Complex{1.0, 0.0});
  SectorPair hermitian, pt;
  bool have_h = false, have_pt = false;
  for (const SectorPair& p : enumerate_sector_pairs(sextic)) {
    const std::string label = pair_label(p);
    if (label == "AE") {
      hermitian = p;
      have_h = true;
    } else if (label == "BD") {
      pt = p;
      have_pt = true;
    }
  }
  if (!have_h || !have_pt) {
    throw std::logic_error("pt_hermitian_ratio: sextic pair enumeration failed");
  }
  const auto energy = [&](const SectorPair& pair) {
    return solver ? solver(sextic, pair, n) : wkb_energy_estimate(sextic, pair, n);
  };
  return energy(pt).real() / energy(hermitian).real();
}

}  // namespace cspec
