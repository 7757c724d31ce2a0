// Test-only reference computations, kept independent of the library's
// solver paths: a dense real-line finite-difference eigensolver, a
// harmonic-oscillator-basis diagonalization of the cubic family, and a
// direct ray-decay profile for sector geometry checks.
#ifndef CSPEC_TESTS_ORACLE_UTILS_HPP
#define CSPEC_TESTS_ORACLE_UTILS_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "cspec/potential.hpp"

namespace cspec_tests {

using cspec::Complex;

/// Lowest eigenvalues of -psi'' + V(x) psi = E psi discretized with
/// 3-point finite differences on [-L, L].
inline std::vector<double> fd_real_line_levels(
    const std::function<double(double)>& potential, double half_width,
    int points, int count) {
  const double h = 2.0 * half_width / (points - 1);
  Eigen::VectorXd diag(points);
  Eigen::VectorXd sub(points - 1);
  for (int i = 0; i < points; ++i) {
    const double x = -half_width + i * h;
    diag(i) = 2.0 / (h * h) + potential(x);
  }
  sub.setConstant(-1.0 / (h * h));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  std::vector<double> levels(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + count);
  return levels;
}

/// Low real eigenvalues of p^2 + i x^3 from a harmonic-oscillator basis
/// expansion (x and p assembled from ladder operators at scale b).
inline std::vector<double> cubic_basis_levels(int basis, double b, int count) {
  using Matrix = Eigen::MatrixXcd;
  Matrix a = Matrix::Zero(basis, basis);
  for (int i = 1; i < basis; ++i) a(i - 1, i) = std::sqrt(double(i));
  const Matrix ad = a.adjoint();
  const Matrix x = (a + ad) / std::sqrt(2.0 * b);
  const Matrix p = Complex(0.0, 1.0) * std::sqrt(b / 2.0) * (ad - a);
  const Matrix h = p * p + Complex(0.0, 1.0) * x * x * x;
  Eigen::ComplexEigenSolver<Matrix> solver(h, false);
  std::vector<double> real_levels;
  for (int i = 0; i < basis; ++i) {
    const Complex e = solver.eigenvalues()(i);
    if (std::abs(e.imag()) < 1e-6 && e.real() > 0.0) {
      real_levels.push_back(e.real());
    }
  }
  std::sort(real_levels.begin(), real_levels.end());
  real_levels.resize(static_cast<size_t>(count));
  return real_levels;
}

/// |Re int_0^R sqrt(V(r e^{i theta})) e^{i theta} dr| with continuous
/// branch tracking along the ray.
inline double ray_decay_exponent(const cspec::PotentialSpec& spec, double theta,
                                 double radius, int n = 4000) {
  const Complex dir = std::polar(1.0, theta);
  Complex prev{0.0, 0.0};
  bool first = true;
  Complex sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) {
    const double r = radius * (k + 0.5) / n;
    Complex q = std::sqrt(cspec::eval_potential(spec, r * dir));
    if (first) {
      first = false;
    } else if ((q * std::conj(prev)).real() < 0.0) {
      q = -q;
    }
    prev = q;
    sum += q * dir * (radius / n);
  }
  return std::abs(sum.real());
}

inline std::mt19937& test_rng() {
  static std::mt19937 rng(20240817u);
  return rng;
}

inline Complex random_point(double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  return {u(test_rng()), u(test_rng())};
}

}  // namespace cspec_tests

#endif
