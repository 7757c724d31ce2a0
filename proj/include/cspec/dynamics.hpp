#ifndef CSPEC_DYNAMICS_HPP
#define CSPEC_DYNAMICS_HPP

#include <vector>

#include "cspec/potential.hpp"

namespace cspec {

struct PhasePoint {
  Complex x{0.0, 0.0};
  Complex p{0.0, 0.0};
  double t = 0.0;
};

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  double max_step = 0.01;
  double energy_drift_tol = 1e-8;  // relative to max(1, |E|)
  double escape_radius = 1e4;
  double t_max = 100.0;
};

enum class Termination { completed, escaped, error };

/// Complex phase-space samples of one solution of
///   dx/dt = 2p,  dp/dt = -V'(x)
/// with conserved energy E = p(0)^2 + V(x(0)).
struct Trajectory {
  std::vector<PhasePoint> samples;
  Complex energy{0.0, 0.0};
  PotentialSpec spec;
  Termination termination = Termination::completed;
};

struct OrbitResult {
  bool closed = false;
  double period = 0.0;
  double closure_distance = 0.0;
};

/// One stay inside the region of a left-right turning-point pair.
struct RegionVisit {
  int region_id = 0;
  double t_enter = 0.0;
  double t_exit = 0.0;
  int windings = 0;
};

struct ResidenceStat {
  double im_energy = 0.0;
  double mean_residence = 0.0;
  int completed_visits = 0;
  bool low_confidence = false;
};

struct SpherePoint {
  double x = 0.0, y = 0.0, z = 0.0;
};

/// Branch of sqrt(E - V(x)) with Re p > 0, ties broken by Im p > 0.
Complex momentum_from_energy(const PotentialSpec& spec, Complex x, Complex E);

/// Adaptive integration of the complex Hamilton equations.  Terminates at
/// t_max (completed), at |x| > escape_radius (escaped, crossing refined to
/// 1e-9 in t), or when the step size collapses / energy drift cannot be
/// held (error).
Trajectory integrate(const PotentialSpec& spec, PhasePoint start,
                     const IntegratorConfig& config);

/// Re-integrates from `from` by exactly dt with fixed fine steps; used for
/// refinement between adaptive samples.
PhasePoint advance(const PotentialSpec& spec, PhasePoint from, double dt);

OrbitResult detect_closed_orbit(const Trajectory& traj, double closure_tol = 1e-6);

/// Escape time extrapolated to |x| = infinity by adding the analytic tail
/// integral dx / (2 sqrt(E - V)) beyond the escape radius.
double escape_time(const PotentialSpec& spec, PhasePoint start,
                   const IntegratorConfig& config);

/// Loop integral of dx / (2 sqrt(E - V(x))) with continuous square-root
/// branch tracking, orientation-normalized so Re >= 0.  Independent period
/// oracle for closed orbits enclosing a turning-point pair.
Complex orbit_period_quadrature(const PotentialSpec& spec, Complex E,
                                const std::vector<Complex>& loop);

/// Centroids of the left-right symmetric turning-point pairs of V(x)=Re E,
/// sorted by descending imaginary part (region ids index this list).
std::vector<Complex> region_anchors(const PotentialSpec& spec, Complex E);

std::vector<RegionVisit> classify_regions(const Trajectory& traj,
                                          const PotentialSpec& spec);

/// Mean visit duration per energy; each start momentum is recomputed from
/// the energy at start.x.  Entries with fewer than 3 completed visits are
/// flagged low_confidence.
std::vector<ResidenceStat> residence_statistics(const PotentialSpec& spec,
                                                const std::vector<Complex>& energies,
                                                PhasePoint start,
                                                const IntegratorConfig& config);

/// True when two non-adjacent polyline segments of the x(t) path cross
/// transversally within tol.  Coincident retracing does not count.
bool self_intersects(const Trajectory& traj, double tol);

SpherePoint riemann_sphere_projection(Complex x);
SpherePoint riemann_sphere_north_pole();

/// Inverse stereographic map; the north pole maps to complex infinity.
Complex stereographic_inverse(const SpherePoint& s);

}  // namespace cspec

#endif
