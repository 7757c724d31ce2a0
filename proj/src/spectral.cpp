#include "cspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>

#include "cspec/ode.hpp"
#include "cspec/threading.hpp"
#include "cspec/wkb.hpp"

namespace cspec {

namespace {

constexpr double kPi = std::numbers::pi;

// Decaying WKB exponent along the ray beyond r_lo:
//   Re int_{r_lo}^R sqrt(V - E) e^{i theta} dr
// with the square-root sign chosen pointwise toward decay.  Only the
// stretch past the turning radius counts as suppression of the
// subdominant solution.
double decay_exponent(const PotentialSpec& spec, double theta, double r_lo,
                      double radius, double energy_scale) {
  if (radius <= r_lo) return 0.0;
  const Complex outward = std::polar(1.0, theta);
  const int n = 96;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double r = r_lo + (radius - r_lo) * (k + 0.5) / n;
    const Complex q =
        eval_potential(spec, r * outward) - Complex(energy_scale, 0.0);
    sum += std::abs((std::sqrt(q) * outward).real()) * ((radius - r_lo) / n);
  }
  return sum;
}

struct Shot {
  Complex psi;
  Complex dpsi;
};

struct RayRecorder {
  std::vector<Complex>* xs = nullptr;
  std::vector<Complex>* psis = nullptr;
};

Shot shoot_ray(const PotentialSpec& spec, Complex E, Complex x_end,
               Complex match_point, double sector_angle, double ode_tol,
               const RayRecorder& rec = {}) {
  const Complex span = match_point - x_end;
  const double length = std::abs(span);
  if (length == 0.0) {
    throw std::invalid_argument("shoot_ray: ray end coincides with match point");
  }
  const Complex u = span / length;
  // Interpolated form: lands exactly on the endpoints and keeps a ray to
  // the origin exactly radial (no roundoff drift onto a branch cut).
  const auto at = [&](double s) {
    const double tau = s / length;
    return x_end * (1.0 - tau) + match_point * tau;
  };

  const Complex q_end = eval_potential(spec, x_end) - E;
  Complex sq = std::sqrt(q_end);
  const Complex outward = std::polar(1.0, sector_angle);
  if ((sq * outward).real() < 0.0) sq = -sq;  // decay toward |x| -> infinity
  const Complex dq_end = -eval_force(spec, x_end);

  State2 y;
  y << Complex{1.0, 0.0}, -sq - dq_end / (4.0 * q_end);

  if (rec.xs != nullptr) {
    rec.xs->push_back(x_end);
    rec.psis->push_back(y(0));
  }

  const auto rhs = [&](double s, const State2& v) {
    State2 dv;
    dv(0) = u * v(1);
    dv(1) = u * (eval_potential(spec, at(s)) - E) * v(0);
    return dv;
  };
  const auto observer = [&](double s, State2& v, double) {
    const double m = std::max(std::abs(v(0)), std::abs(v(1)));
    if (!std::isfinite(m)) {
      throw ConvergenceError(
          "shoot_ray: overflow during inward integration; reduce ray_radius");
    }
    if (m > 1e150) v /= m;  // mismatch is scale invariant per ray
    if (rec.xs != nullptr) {
      rec.xs->push_back(at(s));
      rec.psis->push_back(v(0));
    }
    return StepVerdict::accept;
  };

  StepperOptions opt;
  opt.rel_tol = ode_tol;
  opt.abs_tol = ode_tol;
  const IntegrationStatus status =
      integrate_adaptive(rhs, 0.0, length, y, opt, observer);
  if (status != IntegrationStatus::reached_end) {
    throw ConvergenceError("shoot_ray: ray integration failed");
  }
  return {y(0), y(1)};
}

double resolve_ray_radius(const ShootingProblem& problem, Complex E) {
  if (problem.ray_radius > 0.0) return problem.ray_radius;
  return default_ray_radius(problem.spec, problem.pair,
                            std::max(1.0, std::abs(E)));
}

struct SecantResult {
  Complex root;
  double residual;
};

// Complex secant iteration.  Meeting the residual tolerance is necessary
// but not sufficient: where |dW/dE| is small the tolerance band is wide,
// so polishing continues until the iterate itself stops moving.
std::optional<SecantResult> secant_root(
    const std::function<Complex(Complex)>& fn, Complex e0, Complex e1,
    double tol, int max_iter = 60) {
  const double runaway = 1e8 * std::max(1.0, std::abs(e0));
  Complex f0, f1;
  try {
    f0 = fn(e0);
    f1 = fn(e1);
  } catch (const ConvergenceError&) {
    return std::nullopt;
  }
  std::optional<SecantResult> best;
  for (int it = 0; it < max_iter; ++it) {
    if (std::abs(f1) <= tol) {
      if (!best || std::abs(f1) < best->residual) best = {e1, std::abs(f1)};
    }
    const Complex df = f1 - f0;
    if (std::abs(df) == 0.0) break;
    const Complex e2 = e1 - f1 * (e1 - e0) / df;
    if (!std::isfinite(e2.real()) || !std::isfinite(e2.imag()) ||
        std::abs(e2) > runaway) {
      break;
    }
    const double step = std::abs(e2 - e1);
    e0 = e1;
    f0 = f1;
    e1 = e2;
    try {
      f1 = fn(e1);
    } catch (const ConvergenceError&) {
      break;
    }
    if (std::abs(f1) <= tol) {
      if (!best || std::abs(f1) < best->residual) best = {e1, std::abs(f1)};
      if (step <= 1e-11 * std::max(1.0, std::abs(e1))) break;
    }
  }
  return best;
}

Complex perturbed_seed(Complex seed) {
  const double scale = std::max(1.0, std::abs(seed));
  return seed * (1.0 + 1e-3) + Complex(0.0, 1e-3) * scale;
}

// Collect distinct roots; a candidate within the dedup tolerance of an
// accepted root is a collision (two indices on one root).
class RootSet {
 public:
  bool add(const SecantResult& r) {
    for (const SecantResult& s : roots_) {
      if (std::abs(s.root - r.root) <
          kDedupTolRel * std::max(1.0, std::abs(r.root))) {
        return false;
      }
    }
    roots_.push_back(r);
    return true;
  }
  const std::vector<SecantResult>& roots() const { return roots_; }

 private:
  std::vector<SecantResult> roots_;
};

// Index order: ascending modulus; levels of (nearly) equal modulus, such
// as a conjugate pair, are ordered by (Re, Im).  For real positive spectra
// this is plain ascending order; for complex phases it keeps the same n
// aligned with the level's magnitude, which is what the cross-phase
// identities compare.
void sort_roots(std::vector<SecantResult>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const SecantResult& a, const SecantResult& b) {
              return std::abs(a.root) < std::abs(b.root);
            });
  size_t i = 0;
  while (i < roots.size()) {
    size_t j = i + 1;
    while (j < roots.size() &&
           std::abs(roots[j].root) - std::abs(roots[i].root) <=
               kDedupTolRel * std::max(1.0, std::abs(roots[j].root))) {
      ++j;
    }
    std::sort(roots.begin() + static_cast<std::ptrdiff_t>(i),
              roots.begin() + static_cast<std::ptrdiff_t>(j),
              [](const SecantResult& a, const SecantResult& b) {
                if (a.root.real() != b.root.real()) {
                  return a.root.real() < b.root.real();
                }
                return a.root.imag() < b.root.imag();
              });
    i = j;
  }
}

std::vector<EigenvalueRecord> sorted_records(std::vector<SecantResult> roots,
                                             const std::string& label) {
  sort_roots(roots);
  std::vector<EigenvalueRecord> records;
  for (size_t i = 0; i < roots.size(); ++i) {
    records.push_back({static_cast<int>(i), roots[i].root, roots[i].residual,
                       label});
  }
  return records;
}

// Seeded multi-root solve shared by find_eigenvalues and the scan: runs
// one secant per seed in parallel, then tries conjugate partners for any
// collision (merged pairs come back as complex-conjugate roots).
std::vector<SecantResult> solve_from_seeds(const ShootingProblem& problem,
                                           const std::vector<Complex>& seeds) {
  const auto fn = [&](Complex E) { return wronskian_mismatch(problem, E); };

  std::vector<std::optional<SecantResult>> raw(seeds.size());
  parallel_for(static_cast<int>(seeds.size()), [&](int i) {
    const Complex s = seeds[static_cast<size_t>(i)];
    raw[static_cast<size_t>(i)] =
        secant_root(fn, s, perturbed_seed(s), problem.root_tol);
  });

  RootSet set;
  size_t lost = 0;
  for (const auto& r : raw) {
    if (!r || !set.add(*r)) ++lost;
  }

  // Conjugate recovery: a collision of two real seeds onto one complex
  // root means its partner is the complex conjugate.
  if (lost > 0) {
    std::vector<Complex> candidates;
    for (const SecantResult& r : set.roots()) {
      if (std::abs(r.root.imag()) >
          kRealityTolRel * std::max(1.0, std::abs(r.root))) {
        candidates.push_back(std::conj(r.root));
      }
    }
    for (const Complex& c : candidates) {
      bool near_existing = false;
      for (const SecantResult& s : set.roots()) {
        near_existing = near_existing ||
                        std::abs(s.root - c) <
                            kDedupTolRel * std::max(1.0, std::abs(c));
      }
      if (near_existing) continue;
      const auto rec = secant_root(fn, c, perturbed_seed(c), problem.root_tol);
      if (rec) set.add(*rec);
    }
  }
  return set.roots();
}

ShootingProblem with_radius(const ShootingProblem& problem, double radius) {
  ShootingProblem p = problem;
  p.ray_radius = radius;
  return p;
}

}  // namespace

double default_ray_radius(const PotentialSpec& spec, const SectorPair& pair,
                          double energy_scale, double budget) {
  const AsymptoticPower ap = asymptotic_power(spec);
  const double r_turn = std::pow(
      std::max(1.0, energy_scale) / std::abs(ap.coefficient), 1.0 / ap.degree);
  double radius = std::max(1.0, 1.5 * r_turn);
  for (int it = 0; it < 60; ++it) {
    const double left = decay_exponent(spec, pair.left.center_angle, r_turn,
                                       radius, energy_scale);
    const double right = decay_exponent(spec, pair.right.center_angle, r_turn,
                                        radius, energy_scale);
    if (std::min(left, right) >= budget) return radius;
    radius *= 1.25;
  }
  throw ConvergenceError("default_ray_radius: decay budget not reachable");
}

ShootingProblem make_shooting_problem(const PotentialSpec& spec,
                                      const SectorPair& pair,
                                      double energy_scale) {
  ShootingProblem p;
  p.spec = spec;
  p.pair = pair;
  p.ray_radius = default_ray_radius(spec, pair, energy_scale);
  return p;
}

Complex wronskian_mismatch(const ShootingProblem& problem, Complex E) {
  if (!std::isfinite(E.real()) || !std::isfinite(E.imag())) {
    throw std::invalid_argument("wronskian_mismatch: E must be finite");
  }
  const double radius = resolve_ray_radius(problem, E);
  const Complex xl = std::polar(radius, problem.pair.left.center_angle);
  const Complex xr = std::polar(radius, problem.pair.right.center_angle);

  const Shot left = shoot_ray(problem.spec, E, xl, problem.match_point,
                              problem.pair.left.center_angle, problem.ode_tol);
  const Shot right = shoot_ray(problem.spec, E, xr, problem.match_point,
                               problem.pair.right.center_angle, problem.ode_tol);

  const double kappa = std::max(
      1.0, std::sqrt(std::abs(eval_potential(problem.spec, problem.match_point) - E)));
  const Complex wronskian = left.psi * right.dpsi - left.dpsi * right.psi;
  const double norm_left = std::abs(left.psi) + std::abs(left.dpsi) / kappa;
  const double norm_right = std::abs(right.psi) + std::abs(right.dpsi) / kappa;
  return wronskian / (norm_left * norm_right);
}

std::vector<EigenvalueRecord> find_eigenvalues(const ShootingProblem& problem,
                                               int n_max) {
  if (n_max < 0) throw std::invalid_argument("find_eigenvalues: n_max >= 0");

  // Seed every index with the WKB estimate.
  std::vector<Complex> seeds(static_cast<size_t>(n_max) + 1);
  parallel_for(n_max + 1, [&](int n) {
    seeds[static_cast<size_t>(n)] =
        wkb_energy_estimate(problem.spec, problem.pair, n);
  });
  double scale = 1.0;
  for (const Complex& s : seeds) scale = std::max(scale, std::abs(s));

  const ShootingProblem solver =
      problem.ray_radius > 0.0
          ? problem
          : with_radius(problem,
                        default_ray_radius(problem.spec, problem.pair, scale));

  std::vector<SecantResult> roots = solve_from_seeds(solver, seeds);

  // Re-seed attempts for any still-missing index.
  for (int attempt = 0; attempt < 3 && roots.size() < seeds.size(); ++attempt) {
    std::vector<Complex> retry;
    for (const Complex& s : seeds) {
      const double shift = 0.02 * (attempt + 1);
      retry.push_back(s * (1.0 + shift));
      retry.push_back(s * (1.0 - shift));
    }
    RootSet merged;
    for (const SecantResult& r : roots) merged.add(r);
    for (const SecantResult& r : solve_from_seeds(solver, retry)) merged.add(r);
    roots = merged.roots();
  }
  if (roots.size() < seeds.size()) {
    throw ConvergenceError(
        "find_eigenvalues: index gap, found " + std::to_string(roots.size()) +
        " of " + std::to_string(seeds.size()) +
        " levels (WKB count mismatch) for pair " + pair_label(problem.pair));
  }
  std::vector<SecantResult> kept = roots;
  sort_roots(kept);
  kept.resize(seeds.size());
  return sorted_records(kept, pair_label(problem.pair));
}

Complex shooting_energy(const PotentialSpec& spec, const SectorPair& pair,
                        int n) {
  const ShootingProblem problem = make_shooting_problem(
      spec, pair, std::abs(wkb_energy_estimate(spec, pair, n)));
  return find_eigenvalues(problem, n)[static_cast<size_t>(n)].E;
}

namespace {

std::vector<EigenvalueRecord> scan_point(double eps, bool include_harmonic,
                                         const std::vector<Complex>& seeds,
                                         int n_max) {
  const PotentialSpec spec = deformed_monomial(eps, include_harmonic);
  const SectorPair pair = pt_sector_pair(spec);
  double scale = 1.0;
  for (const Complex& s : seeds) scale = std::max(scale, std::abs(s));
  ShootingProblem problem =
      make_shooting_problem(spec, pair, 1.3 * scale);

  std::vector<SecantResult> roots = solve_from_seeds(problem, seeds);

  // Try to reacquire missing levels from fresh WKB seeds (continuation
  // seeds can be lost across a coalescence).
  if (static_cast<int>(roots.size()) < n_max + 1) {
    std::vector<Complex> fresh;
    for (int n = 0; n <= n_max; ++n) {
      try {
        fresh.push_back(wkb_energy_estimate(spec, pair, n));
      } catch (const ConvergenceError&) {
      }
    }
    RootSet merged;
    for (const SecantResult& r : roots) merged.add(r);
    for (const SecantResult& r : solve_from_seeds(problem, fresh)) {
      merged.add(r);
    }
    roots = merged.roots();
  }
  if (static_cast<int>(roots.size()) > n_max + 1) {
    sort_roots(roots);
    roots.resize(static_cast<size_t>(n_max) + 1);
  }
  return sorted_records(roots, pair_label(pair));
}

std::vector<bool> reality_of(const std::vector<EigenvalueRecord>& records) {
  std::vector<bool> flags;
  for (const EigenvalueRecord& r : records) {
    flags.push_back(std::abs(r.E.imag()) <=
                    kRealityTolRel * std::max(1.0, std::abs(r.E)));
  }
  return flags;
}

}  // namespace

SpectrumScan scan_epsilon(bool include_harmonic,
                          const std::vector<double>& epsilon_grid, int n_max) {
  if (epsilon_grid.empty()) {
    throw std::invalid_argument("scan_epsilon: empty grid");
  }
  for (size_t i = 0; i + 1 < epsilon_grid.size(); ++i) {
    if (!(epsilon_grid[i] < epsilon_grid[i + 1])) {
      throw std::invalid_argument("scan_epsilon: grid must be strictly increasing");
    }
  }
  if (epsilon_grid.front() <= -1.0 || epsilon_grid.back() > 4.0) {
    throw std::invalid_argument("scan_epsilon: grid must lie in (-1, 4]");
  }
  for (size_t i = 0; i + 1 < epsilon_grid.size(); ++i) {
    const bool near_zero =
        std::abs(epsilon_grid[i]) <= 0.3 || std::abs(epsilon_grid[i + 1]) <= 0.3;
    if (near_zero && epsilon_grid[i + 1] - epsilon_grid[i] > 0.1 + 1e-12) {
      throw std::invalid_argument(
          "scan_epsilon: grid step must be <= 0.1 near epsilon = 0");
    }
  }

  const size_t m = epsilon_grid.size();
  SpectrumScan scan;
  scan.epsilon_grid = epsilon_grid;
  scan.records.resize(m);
  scan.reality_flags.resize(m);
  scan.include_harmonic = include_harmonic;
  scan.n_max = n_max;

  size_t start = 0;
  for (size_t i = 1; i < m; ++i) {
    if (std::abs(epsilon_grid[i]) < std::abs(epsilon_grid[start])) start = i;
  }

  // Anchor point: WKB seeds from scratch.
  {
    const PotentialSpec spec =
        deformed_monomial(epsilon_grid[start], include_harmonic);
    const SectorPair pair = pt_sector_pair(spec);
    std::vector<Complex> seeds;
    for (int n = 0; n <= n_max; ++n) {
      seeds.push_back(wkb_energy_estimate(spec, pair, n));
    }
    scan.records[start] = scan_point(epsilon_grid[start], include_harmonic,
                                     seeds, n_max);
  }

  const auto continue_to = [&](size_t from, size_t to) {
    std::vector<Complex> seeds;
    for (const EigenvalueRecord& r : scan.records[from]) seeds.push_back(r.E);
    scan.records[to] =
        scan_point(epsilon_grid[to], include_harmonic, seeds, n_max);
  };

  for (size_t i = start + 1; i < m; ++i) continue_to(i - 1, i);
  for (size_t i = start; i-- > 0;) continue_to(i + 1, i);

  for (size_t i = 0; i < m; ++i) {
    scan.reality_flags[i] = reality_of(scan.records[i]);
  }
  return scan;
}

namespace {

enum class PairState {
  real_split,        // two distinct real levels
  merged_conjugate,  // the pair has coalesced (conjugate partners or one
                     // collapsed double root)
  mixed,             // one level left the axis with a different partner;
                     // not a merge of this pair
};

// Continue the (n, n+1) pair to epsilon from the given seed values and
// classify the outcome.
PairState pair_state_at(double eps, bool include_harmonic, Complex seed_lo,
                        Complex seed_hi, Complex* out_lo, Complex* out_hi) {
  const PotentialSpec spec = deformed_monomial(eps, include_harmonic);
  const SectorPair pair = pt_sector_pair(spec);
  const double scale0 =
      std::max({1.0, std::abs(seed_lo), std::abs(seed_hi)});
  const ShootingProblem problem =
      make_shooting_problem(spec, pair, 1.3 * scale0);

  std::vector<SecantResult> roots =
      solve_from_seeds(problem, {seed_lo, seed_hi});
  if (roots.size() < 2) return PairState::merged_conjugate;
  sort_roots(roots);
  const Complex a = roots[0].root, b = roots[1].root;
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  const bool both_real = std::abs(a.imag()) <= kRealityTolRel * scale &&
                         std::abs(b.imag()) <= kRealityTolRel * scale;
  if (out_lo != nullptr) *out_lo = a;
  if (out_hi != nullptr) *out_hi = b;
  if (both_real && std::abs(b - a) > kDedupTolRel * scale) {
    return PairState::real_split;
  }
  if (std::abs(a - std::conj(b)) <= 1e-4 * scale) {
    return PairState::merged_conjugate;
  }
  return PairState::mixed;
}

}  // namespace

std::vector<PtTransition> detect_pt_transition(const SpectrumScan& scan) {
  std::vector<PtTransition> transitions;
  const size_t m = scan.epsilon_grid.size();
  if (m < 2) return transitions;

  std::vector<bool> claimed(static_cast<size_t>(scan.n_max) + 2, false);

  // Walk intervals from high epsilon down; each adjacent real pair that
  // fails to continue as a real split has merged inside the interval.
  // This family only loses real pairs below epsilon = 0.
  for (size_t i = m - 1; i-- > 0;) {
    if (scan.epsilon_grid[i] >= 0.0) continue;
    const auto& above = scan.records[i + 1];
    const auto& above_real = scan.reality_flags[i + 1];
    for (size_t n = 0; n + 1 < above.size(); ++n) {
      if (claimed[n] || claimed[n + 1]) continue;
      if (!above_real[n] || !above_real[n + 1]) continue;

      double lo = scan.epsilon_grid[i], hi = scan.epsilon_grid[i + 1];
      Complex seed_lo = above[n].E, seed_hi = above[n + 1].E;
      const PairState at_lo = pair_state_at(lo, scan.include_harmonic, seed_lo,
                                            seed_hi, nullptr, nullptr);
      if (at_lo != PairState::merged_conjugate) {
        continue;  // pair survives this interval (or merged elsewhere)
      }
      for (int it = 0; it < 40 && hi - lo > 1e-4; ++it) {
        const double mid = 0.5 * (lo + hi);
        Complex a, b;
        if (pair_state_at(mid, scan.include_harmonic, seed_lo, seed_hi, &a,
                          &b) == PairState::real_split) {
          hi = mid;
          seed_lo = a;
          seed_hi = b;
        } else {
          lo = mid;
        }
      }
      transitions.push_back({0.5 * (lo + hi), static_cast<int>(n)});
      claimed[n] = true;
      claimed[n + 1] = true;
    }
  }
  std::sort(transitions.begin(), transitions.end(),
            [](const PtTransition& a, const PtTransition& b) {
              return a.lower_index < b.lower_index;
            });
  return transitions;
}

PhaseSpectra phase_spectra(const PotentialSpec& spec,
                           const std::vector<SectorPair>& pairs, int n_max) {
  PhaseSpectra out;
  std::vector<std::optional<std::vector<EigenvalueRecord>>> results(pairs.size());
  std::vector<std::string> errors(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i) {
    try {
      ShootingProblem problem;
      problem.spec = spec;
      problem.pair = pairs[i];
      results[i] = find_eigenvalues(problem, n_max);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (size_t i = 0; i < pairs.size(); ++i) {
    const std::string label = pair_label(pairs[i]);
    if (results[i]) {
      out.spectra[label] = *results[i];
    } else {
      out.failures[label] = errors[i];
    }
  }
  return out;
}

Complex phase_sum_rule(int n) {
  if (n < 0) throw std::invalid_argument("phase_sum_rule: n >= 0");
  const PotentialSpec cubic = deformed_monomial(1.0, false);
  const std::vector<SectorPair> pairs = enumerate_sector_pairs(cubic);
  const PhaseSpectra spectra = phase_spectra(cubic, pairs, n);
  if (!spectra.failures.empty()) {
    std::string msg = "phase_sum_rule: unconverged phases:";
    for (const auto& [label, reason] : spectra.failures) {
      msg += " " + label + " (" + reason + ")";
    }
    throw ConvergenceError(msg);
  }
  Complex sum{0.0, 0.0};
  for (const auto& [label, records] : spectra.spectra) {
    sum += records[static_cast<size_t>(n)].E;
  }
  return sum;
}

WavefunctionSample wavefunction_samples(const ShootingProblem& problem,
                                        Complex E) {
  const Complex mismatch = wronskian_mismatch(problem, E);
  if (std::abs(mismatch) > 1e-6) {
    throw std::invalid_argument(
        "wavefunction_samples: E is not an eigenvalue (|mismatch| = " +
        std::to_string(std::abs(mismatch)) + ")");
  }
  const double radius = resolve_ray_radius(problem, E);

  const auto sample_ray = [&](const StokesSector& sector) {
    std::vector<Complex> xs, psis;
    RayRecorder rec{&xs, &psis};
    const Complex x_end = std::polar(radius, sector.center_angle);
    const Shot shot = shoot_ray(problem.spec, E, x_end, problem.match_point,
                                sector.center_angle, problem.ode_tol, rec);
    const double kappa = std::max(
        1.0,
        std::sqrt(std::abs(eval_potential(problem.spec, problem.match_point) - E)));
    const Complex norm = (std::abs(shot.psi) > 1e-10 * std::abs(shot.dpsi) / kappa)
                             ? shot.psi
                             : shot.dpsi;
    for (Complex& p : psis) p /= norm;
    return std::make_pair(std::move(xs), std::move(psis));
  };

  auto [xl, pl] = sample_ray(problem.pair.left);
  auto [xr, pr] = sample_ray(problem.pair.right);

  WavefunctionSample sample;
  sample.E = E;
  sample.contour = std::move(xl);
  sample.psi = std::move(pl);
  std::reverse(xr.begin(), xr.end());
  std::reverse(pr.begin(), pr.end());
  // Skip the duplicated match point at the junction.
  for (size_t i = 1; i < xr.size(); ++i) {
    sample.contour.push_back(xr[i]);
    sample.psi.push_back(pr[i]);
  }
  return sample;
}

}  // namespace cspec
