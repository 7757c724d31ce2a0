#ifndef CSPEC_SPECTRAL_HPP
#define CSPEC_SPECTRAL_HPP

#include <map>
#include <string>
#include <vector>

#include "cspec/potential.hpp"

namespace cspec {

/// One eigenvalue problem: two inward shots along the sector-center rays,
/// matched at match_point by the Wronskian.
struct ShootingProblem {
  PotentialSpec spec;
  SectorPair pair;
  double ray_radius = 0.0;  // <= 0 resolves to default_ray_radius per call
  Complex match_point{0.0, 0.0};
  double ode_tol = 1e-12;
  double root_tol = 1e-10;
};

struct EigenvalueRecord {
  int index = 0;
  Complex E{0.0, 0.0};
  double residual = 0.0;  // |normalized Wronskian| at E
  std::string pair_label;
};

struct SpectrumScan {
  std::vector<double> epsilon_grid;
  std::vector<std::vector<EigenvalueRecord>> records;  // converged, per epsilon
  std::vector<std::vector<bool>> reality_flags;        // parallel to records
  bool include_harmonic = false;
  int n_max = 0;
};

struct PtTransition {
  double epsilon_star = 0.0;
  int lower_index = 0;
};

struct WavefunctionSample {
  std::vector<Complex> contour;
  std::vector<Complex> psi;
  Complex E{0.0, 0.0};
};

struct PhaseSpectra {
  std::map<std::string, std::vector<EigenvalueRecord>> spectra;
  std::map<std::string, std::string> failures;  // pair label -> reason
};

inline constexpr double kRealityTolRel = 1e-8;
inline constexpr double kDedupTolRel = 1e-6;
inline constexpr double kDecayBudget = 30.0;  // e-folds at the ray end

/// Smallest radius whose WKB decay exponent Re int_0^R sqrt(V - E) dr
/// reaches `budget` on both rays of the pair.
double default_ray_radius(const PotentialSpec& spec, const SectorPair& pair,
                          double energy_scale, double budget = kDecayBudget);

ShootingProblem make_shooting_problem(const PotentialSpec& spec,
                                      const SectorPair& pair,
                                      double energy_scale);

/// Normalized Wronskian psi_L psi_R' - psi_L' psi_R of the two inward
/// shots at the match point; zero signals an eigenvalue.
Complex wronskian_mismatch(const ShootingProblem& problem, Complex E);

/// Eigenvalues indexed 0..n_max by ascending Re E, each polished to
/// |mismatch| <= root_tol by complex secant iteration from WKB seeds.
std::vector<EigenvalueRecord> find_eigenvalues(const ShootingProblem& problem,
                                               int n_max);

/// Convenience single-level solver, signature-compatible with
/// wkb::EnergySolver.
Complex shooting_energy(const PotentialSpec& spec, const SectorPair& pair,
                        int n);

/// Eigenvalue continuation of the x^2 (i x)^epsilon family (optionally
/// plus x^2) over an epsilon grid, seeded point-to-point from the nearest
/// already-solved grid point (outward from epsilon ~ 0).
SpectrumScan scan_epsilon(bool include_harmonic,
                          const std::vector<double>& epsilon_grid, int n_max);

/// Pairwise real-branch terminations: for each adjacent index pair that
/// coalesces below epsilon = 0, the bracketing epsilon refined by
/// bisection.
std::vector<PtTransition> detect_pt_transition(const SpectrumScan& scan);

/// Spectra per sector pair (complex secant with rotated WKB seeds for the
/// non-PT pairs); per-pair failures are reported, not thrown.
PhaseSpectra phase_spectra(const PotentialSpec& spec,
                           const std::vector<SectorPair>& pairs, int n_max);

/// Sum of the n-th eigenvalue over the five phases of the cubic family.
Complex phase_sum_rule(int n);

/// psi sampled on both rays, normalized to psi(match_point) = 1 (or
/// psi'(match_point) = 1 when the eigenfunction has a node there).
WavefunctionSample wavefunction_samples(const ShootingProblem& problem,
                                        Complex E);

}  // namespace cspec

#endif
