#include "cspec/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <unordered_map>

#include "cspec/ode.hpp"

namespace cspec {

namespace {

constexpr double kPi = std::numbers::pi;

void validate(const IntegratorConfig& c) {
  const bool positive = c.rel_tol > 0 && c.abs_tol > 0 && c.max_step > 0 &&
                        c.energy_drift_tol > 0 && c.escape_radius > 0 &&
                        c.t_max > 0;
  if (!positive || c.rel_tol > 1e-3 || c.abs_tol > 1e-3) {
    throw std::invalid_argument(
        "IntegratorConfig: fields must be positive with rel/abs tol <= 1e-3");
  }
}

State2 hamilton_rhs(const PotentialSpec& spec, const State2& y) {
  State2 dy;
  dy(0) = 2.0 * y(1);
  dy(1) = eval_force(spec, y(0));
  return dy;
}

struct DriftCheck {
  double drift;   // |p^2 + V - E|
  double budget;  // tol * max(1, |E|), floored at what doubles can resolve
};

// The conservation budget is relative to the energy, except where the
// kinetic/potential cancellation exceeds double resolution (far out on an
// escape run |V| ~ R^N dwarfs E and an absolute bound is untestable).
DriftCheck energy_drift(const PotentialSpec& spec, const State2& y, Complex E,
                        double tol) {
  const Complex kin = y(1) * y(1);
  const Complex pot = eval_potential(spec, y(0));
  const double floor =
      100.0 * std::numeric_limits<double>::epsilon() *
      std::max({std::abs(kin), std::abs(pot), std::abs(E)});
  return {std::abs(kin + pot - E),
          std::max(tol * std::max(1.0, std::abs(E)), floor)};
}

// Fixed-step RK4, used for sub-sample refinement where the adaptive
// machinery would be overkill.
State2 rk4_advance(const PotentialSpec& spec, State2 y, double dt) {
  const int n = std::max(8, static_cast<int>(std::ceil(std::abs(dt) / 5e-4)));
  const double h = dt / n;
  for (int i = 0; i < n; ++i) {
    const State2 k1 = hamilton_rhs(spec, y);
    const State2 k2 = hamilton_rhs(spec, y + 0.5 * h * k1);
    const State2 k3 = hamilton_rhs(spec, y + 0.5 * h * k2);
    const State2 k4 = hamilton_rhs(spec, y + h * k3);
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

double cross2(Complex a, Complex b) {
  return a.real() * b.imag() - a.imag() * b.real();
}

}  // namespace

Complex momentum_from_energy(const PotentialSpec& spec, Complex x, Complex E) {
  Complex p = std::sqrt(E - eval_potential(spec, x));
  if (p.real() < 0.0 || (p.real() == 0.0 && p.imag() < 0.0)) p = -p;
  return p;
}

PhasePoint advance(const PotentialSpec& spec, PhasePoint from, double dt) {
  State2 y;
  y << from.x, from.p;
  y = rk4_advance(spec, y, dt);
  return {y(0), y(1), from.t + dt};
}

Trajectory integrate(const PotentialSpec& spec, PhasePoint start,
                     const IntegratorConfig& config) {
  validate(config);
  if (!std::isfinite(start.x.real()) || !std::isfinite(start.x.imag()) ||
      !std::isfinite(start.p.real()) || !std::isfinite(start.p.imag())) {
    throw std::invalid_argument("integrate: start point must be finite");
  }

  Trajectory traj;
  traj.spec = spec;
  traj.energy = start.p * start.p + eval_potential(spec, start.x);
  traj.samples.push_back({start.x, start.p, 0.0});

  State2 y;
  y << start.x, start.p;

  StepperOptions opt;
  opt.rel_tol = config.rel_tol;
  opt.abs_tol = config.abs_tol;
  opt.max_step = config.max_step;

  bool escaped = false;
  bool drift_failure = false;
  int drift_retakes = 0;

  const auto rhs = [&spec](double, const State2& s) {
    return hamilton_rhs(spec, s);
  };

  const auto observer = [&](double t, State2& s, double) -> StepVerdict {
    const DriftCheck check =
        energy_drift(spec, s, traj.energy, config.energy_drift_tol);
    if (check.drift > check.budget) {
      if (++drift_retakes < 12) return StepVerdict::retake;
      drift_failure = true;
      return StepVerdict::stop;
    }
    drift_retakes = 0;
    // Accumulated drift is a slow random walk; pull the momentum back onto
    // the energy shell before it can reach the budget.  Skipped near a
    // turning point where the rescale is ill-conditioned.
    if (check.drift > 0.05 * check.budget) {
      const Complex kin_target = traj.energy - eval_potential(spec, s(0));
      const Complex p2 = s(1) * s(1);
      if (std::abs(p2) > 1e-3 * std::max(1.0, std::abs(traj.energy))) {
        Complex scale = std::sqrt(kin_target / p2);
        if (std::abs(scale + 1.0) < std::abs(scale - 1.0)) scale = -scale;
        s(1) *= scale;
      }
    }
    if (std::abs(s(0)) > config.escape_radius) {
      // Bisect the crossing time within the last step.
      const PhasePoint& prev = traj.samples.back();
      double lo = 0.0, hi = t - prev.t;
      State2 yc = s;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        State2 ym;
        ym << prev.x, prev.p;
        ym = rk4_advance(spec, ym, mid);
        if (std::abs(ym(0)) > config.escape_radius) {
          hi = mid;
          yc = ym;
        } else {
          lo = mid;
        }
      }
      traj.samples.push_back({yc(0), yc(1), prev.t + hi});
      escaped = true;
      return StepVerdict::stop;
    }
    traj.samples.push_back({s(0), s(1), t});
    return StepVerdict::accept;
  };

  IntegrationStatus status;
  try {
    status = integrate_adaptive(rhs, 0.0, config.t_max, y, opt, observer);
  } catch (const BranchCutError&) {
    traj.termination = Termination::error;
    return traj;
  }

  if (escaped) {
    traj.termination = Termination::escaped;
  } else if (status == IntegrationStatus::reached_end && !drift_failure) {
    traj.termination = Termination::completed;
  } else {
    traj.termination = Termination::error;
  }
  return traj;
}

OrbitResult detect_closed_orbit(const Trajectory& traj, double closure_tol) {
  if (traj.termination != Termination::completed) {
    throw std::invalid_argument(
        "detect_closed_orbit: trajectory must have completed without escape");
  }
  const auto& s = traj.samples;
  if (s.size() < 8) {
    throw std::invalid_argument("detect_closed_orbit: too few samples");
  }

  const Complex x0 = s.front().x, p0 = s.front().p;
  const auto dist = [&](const PhasePoint& q) {
    return std::abs(q.x - x0) + std::abs(q.p - p0);
  };

  double d_max = 0.0;
  for (const auto& q : s) d_max = std::max(d_max, dist(q));
  const double arm_level = 0.25 * d_max;

  OrbitResult result;
  result.closure_distance = std::numeric_limits<double>::infinity();
  bool armed = false;

  for (size_t i = 1; i + 1 < s.size(); ++i) {
    const double d = dist(s[i]);
    if (!armed) {
      armed = d > arm_level;
      continue;
    }
    if (d >= arm_level) continue;
    if (!(d <= dist(s[i - 1]) && d <= dist(s[i + 1]))) continue;

    // Golden-section refinement around the sampled minimum, re-integrating
    // from the sample before the bracket.
    const PhasePoint& base = s[i - 1];
    double a = 0.0, b = s[i + 1].t - base.t;
    const auto eval = [&](double dt) {
      const PhasePoint q = advance(traj.spec, base, dt);
      return std::make_pair(dist(q), q);
    };
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
    auto f1 = eval(c1), f2 = eval(c2);
    for (int it = 0; it < 80 && (b - a) > 1e-13; ++it) {
      if (f1.first < f2.first) {
        b = c2, c2 = c1, f2 = f1;
        c1 = b - gr * (b - a);
        f1 = eval(c1);
      } else {
        a = c1, c1 = c2, f1 = f2;
        c2 = a + gr * (b - a);
        f2 = eval(c2);
      }
    }
    const auto& best = (f1.first < f2.first) ? f1 : f2;
    result.closure_distance = std::min(result.closure_distance, best.first);

    if (best.first < closure_tol) {
      // Require matching velocity direction unless starting at rest.
      const bool direction_ok =
          std::abs(p0) < 1e-9 ||
          (best.second.p * std::conj(p0)).real() > 0.0;
      if (direction_ok) {
        result.closed = true;
        result.period = best.second.t;
        return result;
      }
    }
    armed = false;
  }
  if (!std::isfinite(result.closure_distance)) {
    result.closure_distance = dist(s.back());
  }
  return result;
}

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
// Newton iteration on the Legendre recurrence.  The cache is shared
// between concurrently running trajectories.
const std::vector<std::pair<double, double>>& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::unordered_map<int, std::vector<std::pair<double, double>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<double, double>> nw(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        nw[static_cast<size_t>(i)] = {x, 2.0 / ((1.0 - x * x) * dp * dp)};
        break;
      }
    }
  }
  std::sort(nw.begin(), nw.end());
  return cache.emplace(n, std::move(nw)).first->second;
}

// sqrt(E - V) with the sign following `prev` continuously.
Complex tracked_sqrt(const PotentialSpec& spec, Complex x, Complex E,
                     Complex& prev) {
  Complex r = std::sqrt(E - eval_potential(spec, x));
  if ((r * std::conj(prev)).real() < 0.0) r = -r;
  prev = r;
  return r;
}

}  // namespace

double escape_time(const PotentialSpec& spec, PhasePoint start,
                   const IntegratorConfig& config) {
  const Trajectory traj = integrate(spec, start, config);
  if (traj.termination != Termination::escaped) {
    throw NoEscapeError("escape_time: trajectory did not escape within t_max");
  }
  const PhasePoint& end = traj.samples.back();
  const Complex E = traj.energy;

  // Tail along the outgoing ray, x(w) = x_esc / w^2 for w in (0, 1]:
  //   dt = dx / (2p),   tail = int_0^1 (x_esc / w^3) / p(x(w)) dw
  // with the momentum branch continued from the escape state.
  const auto tail_integral = [&](int order) {
    Complex prev = end.p;
    Complex sum{0.0, 0.0};
    // Walk nodes from w = 1 toward 0 so branch tracking starts at the
    // known escape momentum.
    const auto& nw = gauss_legendre(order);
    for (auto it = nw.rbegin(); it != nw.rend(); ++it) {
      const double w = 0.5 * (it->first + 1.0);
      const double weight = 0.5 * it->second;
      const Complex x = end.x / (w * w);
      const Complex p = tracked_sqrt(spec, x, E, prev);
      sum += weight * (end.x / (w * w * w)) / p;
    }
    return sum;
  };

  Complex tail = tail_integral(64);
  for (int order = 128; order <= 512; order *= 2) {
    const Complex refined = tail_integral(order);
    const double change = std::abs(refined - tail);
    tail = refined;
    if (change <= 1e-12 * std::max(1.0, std::abs(tail))) break;
  }
  return end.t + tail.real();
}

Complex orbit_period_quadrature(const PotentialSpec& spec, Complex E,
                                const std::vector<Complex>& loop) {
  if (loop.size() < 3) {
    throw std::invalid_argument("orbit_period_quadrature: loop needs >= 3 vertices");
  }
  std::vector<Complex> pts = loop;
  if (std::abs(pts.front() - pts.back()) > 0.0) pts.push_back(pts.front());

  const auto integrate_subdivided = [&](int pieces_per_segment) {
    Complex prev{1.0, 0.0};
    bool first = true;
    Complex total{0.0, 0.0};
    const auto& nw = gauss_legendre(8);
    for (size_t s = 0; s + 1 < pts.size(); ++s) {
      const Complex a = pts[s], b = pts[s + 1];
      for (int piece = 0; piece < pieces_per_segment; ++piece) {
        const Complex pa = a + (b - a) * (static_cast<double>(piece) / pieces_per_segment);
        const Complex pb = a + (b - a) * (static_cast<double>(piece + 1) / pieces_per_segment);
        const Complex half = 0.5 * (pb - pa), mid = 0.5 * (pa + pb);
        for (const auto& [node, weight] : nw) {
          const Complex x = mid + half * node;
          Complex r = std::sqrt(E - eval_potential(spec, x));
          if (first) {
            first = false;
          } else if ((r * std::conj(prev)).real() < 0.0) {
            r = -r;
          }
          if (std::abs(r) == 0.0) {
            throw ConvergenceError(
                "orbit_period_quadrature: loop passes through a turning point");
          }
          prev = r;
          total += weight * half / (2.0 * r);
        }
      }
    }
    return total;
  };

  Complex value = integrate_subdivided(4);
  bool converged = false;
  for (int pieces = 8; pieces <= 512; pieces *= 2) {
    const Complex refined = integrate_subdivided(pieces);
    const double change = std::abs(refined - value);
    value = refined;
    if (change <= 1e-11 * std::max(1.0, std::abs(value))) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError(
        "orbit_period_quadrature: branch tracking did not stabilize "
        "(loop too close to a branch point?)");
  }
  if (value.real() < 0.0 ||
      (value.real() == 0.0 && value.imag() < 0.0)) {
    value = -value;
  }
  return value;
}

std::vector<Complex> region_anchors(const PotentialSpec& spec, Complex E) {
  const std::vector<Complex> tps =
      turning_points(spec, Complex(E.real(), 0.0));
  const double scale = std::max(1.0, std::abs(E));

  std::vector<Complex> anchors;
  for (const Complex& t : tps) {
    if (t.real() <= -1e-9 * scale) continue;  // use right-half representatives
    const Complex mirror = -std::conj(t);
    for (const Complex& u : tps) {
      if (std::abs(u - mirror) <= 1e-6 * scale && std::abs(u - t) > 1e-9) {
        anchors.push_back(0.5 * (t + u));
        break;
      }
    }
  }
  std::sort(anchors.begin(), anchors.end(),
            [](Complex a, Complex b) { return a.imag() > b.imag(); });
  if (anchors.empty()) {
    throw TurningPointError(
        "region_anchors: no left-right symmetric turning-point pairs");
  }
  return anchors;
}

std::vector<RegionVisit> classify_regions(const Trajectory& traj,
                                          const PotentialSpec& spec) {
  const auto& s = traj.samples;
  if (s.size() < 4) {
    throw std::invalid_argument("classify_regions: too few samples");
  }
  const std::vector<Complex> anchors = region_anchors(spec, traj.energy);

  std::vector<int> nearest(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < anchors.size(); ++k) {
      const double d = std::abs(s[i].x - anchors[k]);
      if (d < best) {
        best = d;
        nearest[i] = static_cast<int>(k);
      }
    }
  }

  // Accumulated |d arg(x - anchor)| over a sample range.
  const auto turn = [&](size_t lo, size_t hi, int k) {
    double sum = 0.0;
    for (size_t i = lo; i < hi; ++i) {
      const Complex a = s[i].x - anchors[static_cast<size_t>(k)];
      const Complex b = s[i + 1].x - anchors[static_cast<size_t>(k)];
      if (std::abs(a) < 1e-12 || std::abs(b) < 1e-12) continue;
      sum += std::abs(std::arg(b / a));
    }
    return sum;
  };

  struct Run {
    int region;
    size_t lo, hi;
  };
  std::vector<Run> runs;
  for (size_t i = 0; i < s.size();) {
    size_t j = i;
    while (j + 1 < s.size() && nearest[j + 1] == nearest[i]) ++j;
    runs.push_back({nearest[i], i, j});
    i = j + 1;
  }

  // A run is a genuine visit when at least one full turn (2 pi of
  // accumulated argument) is completed around its own anchor; anything
  // smaller is a transit arc and is attached to the previous visit.
  std::vector<Run> visits;
  for (const Run& r : runs) {
    const bool genuine = turn(r.lo, r.hi, r.region) >= 2.0 * kPi;
    if (genuine && (visits.empty() || visits.back().region != r.region)) {
      if (!visits.empty()) visits.back().hi = r.lo == 0 ? r.lo : r.lo - 1;
      visits.push_back(r);
    } else if (!visits.empty()) {
      visits.back().hi = r.hi;
    }
    // Leading transit arcs before the first genuine visit fold into it.
    if (visits.size() == 1 && visits.front().lo > 0 && genuine) {
      visits.front().lo = 0;
    }
  }

  std::vector<RegionVisit> result;
  for (const Run& v : visits) {
    RegionVisit rv;
    rv.region_id = v.region;
    rv.t_enter = s[v.lo].t;
    rv.t_exit = s[v.hi].t;
    rv.windings = static_cast<int>(std::floor(turn(v.lo, v.hi, v.region) /
                                              (2.0 * kPi)));
    result.push_back(rv);
  }
  return result;
}

std::vector<ResidenceStat> residence_statistics(const PotentialSpec& spec,
                                                const std::vector<Complex>& energies,
                                                PhasePoint start,
                                                const IntegratorConfig& config) {
  std::vector<ResidenceStat> stats;
  for (const Complex& E : energies) {
    if (!(E.imag() > 0.0)) {
      throw std::invalid_argument(
          "residence_statistics: requires Im E > 0 (closed orbits have no "
          "finite visits)");
    }
    PhasePoint sp = start;
    sp.p = momentum_from_energy(spec, sp.x, E);
    const Trajectory traj = integrate(spec, sp, config);
    const std::vector<RegionVisit> visits = classify_regions(traj, spec);

    // Completed visits exclude the truncated first and last stays.
    ResidenceStat st;
    st.im_energy = E.imag();
    double sum = 0.0;
    int n = 0;
    for (size_t i = 1; i + 1 < visits.size(); ++i) {
      sum += visits[i].t_exit - visits[i].t_enter;
      ++n;
    }
    st.completed_visits = n;
    st.mean_residence = n > 0 ? sum / n : 0.0;
    st.low_confidence = n < 3;
    stats.push_back(st);
  }
  return stats;
}

bool self_intersects(const Trajectory& traj, double tol) {
  const auto& s = traj.samples;
  if (s.size() < 4) {
    throw std::invalid_argument("self_intersects: need at least 4 samples");
  }
  const size_t nseg = s.size() - 1;

  double max_len = 0.0;
  for (size_t i = 0; i < nseg; ++i) {
    max_len = std::max(max_len, std::abs(s[i + 1].x - s[i].x));
  }
  if (max_len == 0.0) return false;
  const double cell = std::max(max_len, 16.0 * tol);

  const auto key = [&](double re, double im) {
    const long long kx = static_cast<long long>(std::floor(re / cell));
    const long long ky = static_cast<long long>(std::floor(im / cell));
    return (kx * 2654435761LL) ^ (ky * 40503LL);
  };

  std::unordered_map<long long, std::vector<size_t>> grid;
  const auto cells_of = [&](size_t i, auto&& fn) {
    const Complex a = s[i].x, b = s[i + 1].x;
    const double lo_re = std::min(a.real(), b.real()) - tol;
    const double hi_re = std::max(a.real(), b.real()) + tol;
    const double lo_im = std::min(a.imag(), b.imag()) - tol;
    const double hi_im = std::max(a.imag(), b.imag()) + tol;
    for (double re = lo_re; re < hi_re + cell; re += cell) {
      for (double im = lo_im; im < hi_im + cell; im += cell) {
        fn(key(re, im));
      }
    }
  };

  // Sine of the direction change between consecutive segments; retraced
  // chords of one smooth arc cross each other at angles of this order, so
  // only crossings well above the local turning rate are transversal.
  const auto seg_dir = [&](size_t i) { return s[i + 1].x - s[i].x; };
  std::vector<double> local_turn(nseg, 0.0);
  for (size_t i = 0; i < nseg; ++i) {
    for (size_t j : {i == 0 ? i : i - 1, std::min(i + 1, nseg - 1)}) {
      const Complex a = seg_dir(i), b = seg_dir(j);
      const double den = std::abs(a) * std::abs(b);
      if (den > 0.0) {
        local_turn[i] = std::max(local_turn[i], std::abs(cross2(a, b)) / den);
      }
    }
  }

  // Transversal crossing test: intersection parameters inside both
  // segments, crossing angle above the local sampling curvature, and each
  // segment extending beyond tol laterally from the other (coincident
  // retracing stays within tol of a common line).
  const auto crosses = [&](size_t i, size_t j) {
    const Complex a = s[i].x, b = s[i + 1].x;
    const Complex p = s[j].x, q = s[j + 1].x;
    const Complex d1 = b - a, d2 = q - p;
    const double denom = cross2(d1, d2);
    const double l1 = std::abs(d1), l2 = std::abs(d2);
    if (l1 == 0.0 || l2 == 0.0) return false;
    const double sin_angle = std::abs(denom) / (l1 * l2);
    if (sin_angle <= std::max({4.0 * local_turn[i], 4.0 * local_turn[j], 1e-9})) {
      return false;  // parallel or retraced
    }
    const double t1 = cross2(p - a, d2) / denom;
    const double t2 = cross2(p - a, d1) / denom;
    const double slack1 = tol / l1, slack2 = tol / l2;
    if (t1 < -slack1 || t1 > 1.0 + slack1) return false;
    if (t2 < -slack2 || t2 > 1.0 + slack2) return false;
    const double lat_pq =
        std::max(std::abs(cross2(p - a, d1)), std::abs(cross2(q - a, d1))) / l1;
    const double lat_ab =
        std::max(std::abs(cross2(a - p, d2)), std::abs(cross2(b - p, d2))) / l2;
    return lat_pq > tol && lat_ab > tol;
  };

  for (size_t i = 0; i < nseg; ++i) {
    bool found = false;
    std::vector<size_t> candidates;
    cells_of(i, [&](long long k) {
      const auto it = grid.find(k);
      if (it == grid.end()) return;
      for (size_t j : it->second) candidates.push_back(j);
    });
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    for (size_t j : candidates) {
      if (i - j <= 1) continue;  // adjacent segments share an endpoint
      if (crosses(j, i)) {
        found = true;
        break;
      }
    }
    if (found) return true;
    cells_of(i, [&](long long k) { grid[k].push_back(i); });
  }
  return false;
}

SpherePoint riemann_sphere_projection(Complex x) {
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
    return riemann_sphere_north_pole();
  }
  const double m = std::abs(x);
  if (m <= 1.0) {
    const double d = 1.0 + m * m;
    return {2.0 * x.real() / d, 2.0 * x.imag() / d, (m * m - 1.0) / d};
  }
  // Work with w = 1/x to keep precision near the north pole.
  const Complex w = 1.0 / x;
  const double mw = std::abs(w);
  const double d = 1.0 + mw * mw;
  return {2.0 * w.real() / d, -2.0 * w.imag() / d, (1.0 - mw * mw) / d};
}

SpherePoint riemann_sphere_north_pole() { return {0.0, 0.0, 1.0}; }

Complex stereographic_inverse(const SpherePoint& s) {
  if (s.z <= 0.0) {
    return Complex(s.x, s.y) / (1.0 - s.z);
  }
  const Complex w = Complex(s.x, -s.y) / (1.0 + s.z);
  if (std::abs(w) == 0.0) {
    return Complex(std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity());
  }
  return 1.0 / w;
}

}  // namespace cspec
