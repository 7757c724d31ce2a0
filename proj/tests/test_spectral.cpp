#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cspec/spectral.hpp"
#include "cspec/wkb.hpp"
#include "oracle_utils.hpp"

using namespace cspec;
using cspec_tests::cubic_basis_levels;
using cspec_tests::fd_real_line_levels;

namespace {
constexpr double kPi = std::numbers::pi;

ShootingProblem problem_for(const PotentialSpec& spec, const SectorPair& pair) {
  ShootingProblem p;
  p.spec = spec;
  p.pair = pair;
  return p;
}

SectorPair pair_of(const PotentialSpec& spec, const std::string& label) {
  for (const SectorPair& p : enumerate_sector_pairs(spec)) {
    if (pair_label(p) == label) return p;
  }
  throw std::logic_error("pair not found: " + label);
}
}  // namespace

TEST_CASE("harmonic mismatch separates eigenvalues from regular points") {
  const PotentialSpec h = deformed_monomial(0.0, false);
  const ShootingProblem prob = problem_for(h, pt_sector_pair(h));
  CHECK(std::abs(wronskian_mismatch(prob, {1.0, 0.0})) <= prob.root_tol);
  CHECK(std::abs(wronskian_mismatch(prob, {2.0, 0.0})) >= 10.0 * prob.root_tol);
}

TEST_CASE("cubic ground state agrees with the basis-diagonalization oracle") {
  const PotentialSpec c = deformed_monomial(1.0, false);
  const ShootingProblem prob = problem_for(c, pt_sector_pair(c));
  CHECK(std::abs(wronskian_mismatch(prob, {1.15627, 0.0})) < 1e-5);

  const auto oracle = cubic_basis_levels(140, 2.0, 2);
  CHECK(oracle[0] == doctest::Approx(1.15627).epsilon(1e-4));

  const auto records = find_eigenvalues(prob, 1);
  REQUIRE(records.size() == 2);
  CHECK(std::abs(records[0].E.real() - oracle[0]) < 1e-6);
  CHECK(std::abs(records[1].E.real() - oracle[1]) < 1e-6);
  CHECK(std::abs(records[0].E.imag()) < 1e-9);
  for (const auto& r : records) CHECK(r.residual <= prob.root_tol);
}

TEST_CASE("harmonic levels are odd integers") {
  const PotentialSpec h = deformed_monomial(0.0, false);
  const auto records = find_eigenvalues(problem_for(h, pt_sector_pair(h)), 3);
  REQUIRE(records.size() == 4);
  for (int n = 0; n <= 3; ++n) {
    CHECK(std::abs(records[n].E - Complex{2.0 * n + 1.0, 0.0}) < 1e-8);
    CHECK(records[n].index == n);
  }
}

TEST_CASE("hermitian spectra match the finite-difference oracle") {
  SUBCASE("harmonic") {
    const auto fd = fd_real_line_levels([](double x) { return x * x; }, 12.0,
                                        4000, 6);
    const PotentialSpec h = deformed_monomial(0.0, false);
    const auto records = find_eigenvalues(problem_for(h, pt_sector_pair(h)), 5);
    for (int n = 0; n <= 5; ++n) {
      CHECK(std::abs(records[n].E.real() - fd[n]) <= 1e-4 * fd[n]);
    }
  }
  SUBCASE("sextic AE") {
    const auto fd = fd_real_line_levels(
        [](double x) { return std::pow(x, 6); }, 12.0, 4000, 6);
    const PotentialSpec s6 = pure_monomial(6, {1.0, 0.0});
    const auto records =
        find_eigenvalues(problem_for(s6, pair_of(s6, "AE")), 5);
    for (int n = 0; n <= 5; ++n) {
      CHECK(std::abs(records[n].E.real() - fd[n]) <= 1e-4 * fd[n]);
    }
  }
}

TEST_CASE("sextic tables and pair identities") {
  const PotentialSpec s6 = pure_monomial(6, {1.0, 0.0});
  const auto ae = find_eigenvalues(problem_for(s6, pair_of(s6, "AE")), 2);
  const auto bd = find_eigenvalues(problem_for(s6, pair_of(s6, "BD")), 2);
  const auto fh = find_eigenvalues(problem_for(s6, pair_of(s6, "FH")), 2);
  const auto cg = find_eigenvalues(problem_for(s6, pair_of(s6, "CG")), 2);

  const std::vector<double> ae_table{1.145, 4.339, 9.073};
  const std::vector<double> bd_table{2.439, 11.882, 25.412};
  for (int n = 0; n <= 2; ++n) {
    CHECK(std::abs(ae[n].E.real() - ae_table[n]) < 5e-3);
    CHECK(std::abs(bd[n].E.real() - bd_table[n]) < 5e-3);
    // the up-down mirror pair has the identical spectrum
    CHECK(std::abs(bd[n].E - fh[n].E) < 1e-8 * std::max(1.0, std::abs(bd[n].E)));
    // the vertical pair maps to the negated Hermitian problem
    CHECK(std::abs(cg[n].E.real() + ae[n].E.real()) < 5e-3);
    CHECK(std::abs(cg[n].E.imag()) < 1e-8);
  }
}

TEST_CASE("PT reality holds along the deformation") {
  const PotentialSpec spec = deformed_monomial(1.5, false);
  const auto records = find_eigenvalues(problem_for(spec, pt_sector_pair(spec)), 6);
  for (const auto& r : records) {
    CHECK(std::abs(r.E.imag()) <= 1e-7 * std::max(1.0, std::abs(r.E.real())));
    CHECK(r.E.real() > 0.0);
  }
}

TEST_CASE("conjugate deformation reproduces the same real spectrum") {
  for (double eps : {1.0, 2.0}) {
    const PotentialSpec plus = deformed_monomial(eps, false);
    const PotentialSpec minus = deformed_monomial(eps, false, true);
    const auto a = find_eigenvalues(problem_for(plus, pt_sector_pair(plus)), 2);
    const auto b = find_eigenvalues(problem_for(minus, pt_sector_pair(minus)), 2);
    for (int n = 0; n <= 2; ++n) {
      CHECK(std::abs(a[n].E - b[n].E) <=
            1e-8 * std::max(1.0, std::abs(a[n].E)));
    }
  }
}

TEST_CASE("mirror pairs carry conjugate spectra") {
  const PotentialSpec c = deformed_monomial(1.0, false);
  const auto ac = find_eigenvalues(problem_for(c, pair_of(c, "AC")), 1);
  const auto bd = find_eigenvalues(problem_for(c, pair_of(c, "BD")), 1);
  for (int n = 0; n <= 1; ++n) {
    CHECK(std::abs(bd[n].E - std::conj(ac[n].E)) <
          1e-7 * std::max(1.0, std::abs(ac[n].E)));
    CHECK(std::abs(ac[n].E.imag()) > 0.1);  // genuinely complex phase
  }
}

TEST_CASE("eigenvalues are stable under doubling the ray radius") {
  const PotentialSpec c = deformed_monomial(1.0, false);
  ShootingProblem prob = problem_for(c, pt_sector_pair(c));
  prob.ray_radius = default_ray_radius(c, prob.pair, 5.0);
  const auto a = find_eigenvalues(prob, 1);
  prob.ray_radius *= 2.0;
  const auto b = find_eigenvalues(prob, 1);
  for (int n = 0; n <= 1; ++n) {
    CHECK(std::abs(a[n].E - b[n].E) <= 1e-8 * std::max(1.0, std::abs(a[n].E)));
  }
}

TEST_CASE("epsilon scan around zero") {
  const SpectrumScan scan = scan_epsilon(false, {-0.1, 0.0, 0.1}, 2);
  REQUIRE(scan.records.size() == 3);
  REQUIRE(scan.records[1].size() == 3);
  for (int n = 0; n <= 2; ++n) {
    CHECK(std::abs(scan.records[1][n].E - Complex{2.0 * n + 1.0, 0.0}) < 1e-8);
    CHECK(scan.reality_flags[1][n]);
    // monotone in epsilon above zero
    CHECK(scan.records[2][n].E.real() > scan.records[1][n].E.real());
  }
  SUBCASE("grid validation") {
    CHECK_THROWS_AS(scan_epsilon(false, {0.3, 0.2}, 1), std::invalid_argument);
    CHECK_THROWS_AS(scan_epsilon(false, {-1.2, 0.0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(scan_epsilon(false, {-0.5, 0.0, 0.5, 4.5}, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan_epsilon(false, {-0.25, 0.0, 0.25}, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("pt transition of the first excited pair") {
  std::vector<double> grid;
  for (int k = 0; k <= 14; ++k) grid.push_back(-0.65 + 0.05 * k);
  const SpectrumScan scan = scan_epsilon(false, grid, 2);

  const auto transitions = detect_pt_transition(scan);
  REQUIRE(transitions.size() >= 1);
  const PtTransition& first = transitions.front();
  CHECK(first.lower_index == 1);
  CHECK(first.epsilon_star < -0.4);
  CHECK(first.epsilon_star > -0.65);

  // conjugate pair just below the transition
  bool found_complex_pair = false;
  for (size_t i = 0; i < scan.epsilon_grid.size(); ++i) {
    if (scan.epsilon_grid[i] < first.epsilon_star - 0.02) {
      for (const auto& r : scan.records[i]) {
        if (std::abs(r.E.imag()) >
            kRealityTolRel * std::max(1.0, std::abs(r.E))) {
          found_complex_pair = true;
        }
      }
    }
  }
  CHECK(found_complex_pair);

  SUBCASE("no transition above zero") {
    const SpectrumScan upper = scan_epsilon(false, {0.0, 0.1, 0.2, 0.3}, 2);
    CHECK(detect_pt_transition(upper).empty());
  }
}

TEST_CASE("five cubic phases and the sum rule") {
  const PotentialSpec c = deformed_monomial(1.0, false);
  const auto pairs = enumerate_sector_pairs(c);
  const PhaseSpectra phases = phase_spectra(c, pairs, 0);
  REQUIRE(phases.failures.empty());
  REQUIRE(phases.spectra.size() == 5);

  int real_count = 0;
  double max_mod = 0.0;
  Complex sum{0.0, 0.0};
  for (const auto& [label, records] : phases.spectra) {
    const Complex e = records[0].E;
    max_mod = std::max(max_mod, std::abs(e));
    sum += e;
    if (std::abs(e.imag()) <= 1e-7 * std::max(1.0, std::abs(e))) {
      ++real_count;
      CHECK(label == "AD");
    }
  }
  CHECK(real_count == 1);
  CHECK(std::abs(sum) <= 1e-4 * max_mod);

  // moduli agree across phases level by level
  for (const auto& [label, records] : phases.spectra) {
    CHECK(std::abs(std::abs(records[0].E) - max_mod) < 1e-6 * max_mod);
  }
}

TEST_CASE("phase sum rule at the first two indices") {
  for (int n : {0, 1}) {
    const Complex sum = phase_sum_rule(n);
    // scale: the PT level at this index
    const PotentialSpec c = deformed_monomial(1.0, false);
    const double scale =
        std::abs(find_eigenvalues(problem_for(c, pt_sector_pair(c)), n)[n].E);
    CHECK(std::abs(sum) <= 1e-4 * scale);
    CHECK(std::abs(sum.imag()) <= 1e-6 * scale);
  }
}

TEST_CASE("wavefunction samples") {
  const PotentialSpec h = deformed_monomial(0.0, false);
  const ShootingProblem prob = problem_for(h, pt_sector_pair(h));

  SUBCASE("non-eigenvalue is rejected") {
    CHECK_THROWS_AS(wavefunction_samples(prob, {2.0, 0.0}),
                    std::invalid_argument);
  }
  SUBCASE("ground state is a Gaussian on the real contour") {
    const WavefunctionSample sample = wavefunction_samples(prob, {1.0, 0.0});
    REQUIRE(sample.contour.size() == sample.psi.size());
    REQUIRE(sample.contour.size() > 50);

    double previous = 1e300;
    for (size_t i = 0; i < sample.contour.size(); ++i) {
      const Complex x = sample.contour[i];
      // right ray, past the oscillatory region
      if (x.real() > 2.0 && std::abs(x.imag()) < 1e-9) {
        CHECK(std::abs(sample.psi[i]) < previous);
        previous = std::abs(sample.psi[i]);
      }
      // log|psi| = -x^2/2 within 1% for moderate x
      if (x.real() > 1.0 && x.real() < 3.0 && std::abs(x.imag()) < 1e-9) {
        const double want = -0.5 * x.real() * x.real();
        CHECK(std::abs(std::log(std::abs(sample.psi[i])) - want) <
              0.01 * std::abs(want));
      }
    }
  }
  SUBCASE("deformed ground state decays along both rotated rays") {
    const PotentialSpec d = deformed_monomial(2.0, false);
    ShootingProblem dp = problem_for(d, pt_sector_pair(d));
    const auto records = find_eigenvalues(dp, 0);
    const WavefunctionSample sample = wavefunction_samples(dp, records[0].E);
    CHECK(std::abs(sample.psi.front()) < 1e-6);
    CHECK(std::abs(sample.psi.back()) < 1e-6);
  }
}

TEST_CASE("shooting ratio approaches 2^{3/2} from below") {
  const double limit = std::pow(2.0, 1.5);
  const double r0 = pt_hermitian_ratio(0, shooting_energy);
  CHECK(std::abs(r0 - 2.439346 / 1.144802) < 5e-3);
  const double r10 = pt_hermitian_ratio(10, shooting_energy);
  const double r40 = pt_hermitian_ratio(40, shooting_energy);
  CHECK(std::abs(r40 - limit) < std::abs(r10 - limit));
}

TEST_CASE("wkb estimates track shooting values at high index") {
  struct Case {
    PotentialSpec spec;
    SectorPair pair;
    int n;
  };
  const PotentialSpec s6 = pure_monomial(6, {1.0, 0.0});
  const PotentialSpec cubic = deformed_monomial(1.0, false);
  for (const Case& c : {Case{s6, pair_of(s6, "AE"), 20},
                        Case{cubic, pt_sector_pair(cubic), 10}}) {
    const Complex wkb = wkb_energy_estimate(c.spec, c.pair, c.n);
    const Complex shot = shooting_energy(c.spec, c.pair, c.n);
    CHECK(std::abs(wkb - shot) < 0.01 * std::abs(shot));
  }
}

TEST_CASE("rotated quartic continuation in theta") {
  const auto fd = fd_real_line_levels(
      [](double x) { return x * x + std::pow(x, 4); }, 12.0, 4000, 1);
  const PotentialSpec at_zero = rotated_quartic(0.0);
  const auto base =
      find_eigenvalues(problem_for(at_zero, pt_sector_pair(at_zero)), 0);
  CHECK(std::abs(base[0].E.real() - fd[0]) < 1e-4 * fd[0]);
  CHECK(std::abs(base[0].E.imag()) < 1e-8);

  // on the parity-symmetric contour the levels move off the real axis
  for (double theta : {kPi / 2, kPi}) {
    const PotentialSpec spec = rotated_quartic(theta);
    const auto rec =
        find_eigenvalues(problem_for(spec, pt_sector_pair(spec)), 0);
    CHECK(std::abs(rec[0].E.imag()) > 1e-3);
  }
}
