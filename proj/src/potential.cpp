#include "cspec/potential.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace cspec {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double v) { return v == std::round(v); }

// x^n for integer n (n may be negative; x != 0 in that case).
Complex ipow(Complex x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  Complex r{1.0, 0.0};
  Complex b = x;
  for (unsigned int e = static_cast<unsigned int>(n); e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

// (s i x)^eps with the principal logarithm; s = -1 for the conjugate family.
// Integer eps is evaluated as a plain power so it never touches the cut.
Complex rotated_power(Complex x, double eps, int s) {
  const Complex w = (s > 0) ? Complex(-x.imag(), x.real())   //  i x
                            : Complex(x.imag(), -x.real());  // -i x
  if (is_integer(eps)) return ipow(w, static_cast<int>(std::lround(eps)));
  if (w.real() < 0.0 && w.imag() == 0.0) {
    throw BranchCutError(
        "rotated power: non-integer exponent on the branch cut (x on the " +
        std::string(s > 0 ? "positive" : "negative") + " imaginary axis)");
  }
  return std::exp(eps * std::log(w));
}

const DeformedMonomial* as_deformed(const PotentialSpec& spec) {
  return std::get_if<DeformedMonomial>(&spec);
}

// Polynomial coefficients c[0] + c[1] x + ... for the polynomial families;
// empty when the spec is not polynomial (non-integer epsilon).
std::vector<Complex> polynomial_coefficients(const PotentialSpec& spec) {
  std::vector<Complex> c;
  if (const auto* d = as_deformed(spec)) {
    if (!is_integer(d->epsilon)) return c;
    const int k = static_cast<int>(std::lround(d->epsilon));
    const int s = d->conjugate ? -1 : 1;
    const int deg = 2 + k;  // k >= -1, so deg >= 1
    c.assign(static_cast<size_t>(std::max(deg, 2)) + 1, Complex{0.0, 0.0});
    c[static_cast<size_t>(deg)] += ipow(Complex(0.0, s), k);
    if (d->include_harmonic) c[2] += 1.0;
  } else if (const auto* r = std::get_if<RotatedQuartic>(&spec)) {
    c.assign(5, Complex{0.0, 0.0});
    c[2] = 1.0;
    c[4] = std::polar(1.0, r->theta);
  } else {
    const auto& m = std::get<PureMonomial>(spec);
    c.assign(static_cast<size_t>(m.degree) + 1, Complex{0.0, 0.0});
    c[static_cast<size_t>(m.degree)] = m.coefficient;
  }
  return c;
}

std::vector<Complex> companion_roots(std::vector<Complex> c) {
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) throw TurningPointError("turning points: constant polynomial");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[static_cast<size_t>(i)] / c.back();
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<Complex> roots(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return roots;
}

// A few Newton steps of f = V - E; polishes companion-matrix output and
// the closed-form non-integer seeds to full precision.
Complex polish_root(const PotentialSpec& spec, Complex x, Complex E) {
  for (int it = 0; it < 8; ++it) {
    const Complex f = eval_potential(spec, x) - E;
    const Complex df = -eval_force(spec, x);
    if (std::abs(df) == 0.0) break;
    const Complex step = f / df;
    x -= step;
    if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

std::string letter_label(int index) {
  std::string s;
  s.push_back(static_cast<char>('A' + index));
  return s;
}

StokesSector sector_for_k(const AsymptoticPower& ap, int k) {
  StokesSector s;
  s.opening = 2.0 * kPi / (ap.degree + 2.0);
  s.center_angle =
      wrap_angle((2.0 * kPi * k - ap.coefficient_arg) / (ap.degree + 2.0));
  s.label = "k" + std::to_string(k);
  return s;
}

bool same_angle(double a, double b) {
  return std::abs(wrap_angle(a - b)) <= kAngularTol;
}

}  // namespace

double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

PotentialSpec deformed_monomial(double epsilon, bool include_harmonic,
                                bool conjugate) {
  if (!(epsilon > -2.0)) {
    throw std::invalid_argument(
        "deformed_monomial: epsilon must exceed -2, got " +
        std::to_string(epsilon));
  }
  return DeformedMonomial{epsilon, include_harmonic, conjugate};
}

PotentialSpec rotated_quartic(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("rotated_quartic: theta must be finite");
  }
  return RotatedQuartic{theta};
}

PotentialSpec pure_monomial(int degree, Complex coefficient) {
  if (degree < 2) {
    throw std::invalid_argument("pure_monomial: degree must be >= 2");
  }
  if (std::abs(coefficient) == 0.0) {
    throw std::invalid_argument("pure_monomial: coefficient must be nonzero");
  }
  return PureMonomial{degree, coefficient};
}

Complex eval_potential(const PotentialSpec& spec, Complex x) {
  if (const auto* d = as_deformed(spec)) {
    const int s = d->conjugate ? -1 : 1;
    Complex v = d->include_harmonic ? x * x : Complex{0.0, 0.0};
    if (x == Complex{0.0, 0.0}) return v;  // eps > -2, so the tail vanishes
    return v + x * x * rotated_power(x, d->epsilon, s);
  }
  if (const auto* r = std::get_if<RotatedQuartic>(&spec)) {
    const Complex x2 = x * x;
    return x2 + std::polar(1.0, r->theta) * x2 * x2;
  }
  const auto& m = std::get<PureMonomial>(spec);
  return m.coefficient * ipow(x, m.degree);
}

Complex eval_force(const PotentialSpec& spec, Complex x) {
  if (const auto* d = as_deformed(spec)) {
    // d/dx [x^2 (s i x)^eps] = (2 + eps) x (s i x)^eps
    const int s = d->conjugate ? -1 : 1;
    const double eps = d->epsilon;
    Complex dv = d->include_harmonic ? 2.0 * x : Complex{0.0, 0.0};
    if (x == Complex{0.0, 0.0}) {
      if (eps > -1.0) return -dv;
      if (eps == -1.0) return -(dv + (2.0 + eps) * Complex(0.0, -s));
      throw BranchCutError("eval_force: derivative singular at x = 0");
    }
    dv += (2.0 + eps) * x * rotated_power(x, eps, s);
    return -dv;
  }
  if (const auto* r = std::get_if<RotatedQuartic>(&spec)) {
    return -(2.0 * x + 4.0 * std::polar(1.0, r->theta) * x * x * x);
  }
  const auto& m = std::get<PureMonomial>(spec);
  return -m.coefficient * static_cast<double>(m.degree) * ipow(x, m.degree - 1);
}

AsymptoticPower asymptotic_power(const PotentialSpec& spec) {
  if (const auto* d = as_deformed(spec)) {
    const double s = d->conjugate ? -1.0 : 1.0;
    const double arg = s * d->epsilon * kPi / 2.0;
    return {2.0 + d->epsilon, std::polar(1.0, arg), arg};
  }
  if (const auto* r = std::get_if<RotatedQuartic>(&spec)) {
    return {4.0, std::polar(1.0, r->theta), r->theta};
  }
  const auto& m = std::get<PureMonomial>(spec);
  return {static_cast<double>(m.degree), m.coefficient, std::arg(m.coefficient)};
}

std::vector<StokesSector> stokes_sectors(const PotentialSpec& spec) {
  const AsymptoticPower ap = asymptotic_power(spec);
  std::vector<StokesSector> sectors;
  if (!is_integer(ap.degree)) {
    const auto* d = as_deformed(spec);
    const bool conj = d != nullptr && d->conjugate;
    for (int k : conj ? std::vector<int>{0, 1, 2} : std::vector<int>{0, -1, -2}) {
      sectors.push_back(sector_for_k(ap, k));
    }
    return sectors;
  }

  const int n_sectors = static_cast<int>(std::lround(ap.degree)) + 2;
  for (int k = 0; k < n_sectors; ++k) sectors.push_back(sector_for_k(ap, k));

  // Label A, B, C, ... counterclockwise from the sector containing (or
  // with center nearest to) the positive real axis.
  std::sort(sectors.begin(), sectors.end(),
            [](const StokesSector& a, const StokesSector& b) {
              return a.center_angle < b.center_angle;
            });
  size_t first = 0;
  for (size_t i = 1; i < sectors.size(); ++i) {
    if (std::abs(sectors[i].center_angle) <
        std::abs(sectors[first].center_angle)) {
      first = i;
    }
  }
  std::rotate(sectors.begin(),
              sectors.begin() + static_cast<std::ptrdiff_t>(first),
              sectors.end());
  for (size_t i = 0; i < sectors.size(); ++i) {
    sectors[i].label = letter_label(static_cast<int>(i));
  }
  return sectors;
}

std::string pair_label(const SectorPair& pair) {
  const std::string &a = pair.left.label, &b = pair.right.label;
  return (a < b) ? a + b : b + a;
}

bool updown_symmetric(const SectorPair& pair) {
  return std::abs(wrap_angle(pair.left.center_angle +
                             pair.right.center_angle)) <= kAngularTol;
}

namespace {

SectorPair make_pair(StokesSector a, StokesSector b) {
  SectorPair p;
  // "right" is the sector nearer the positive real axis.
  const double ca = std::cos(a.center_angle), cb = std::cos(b.center_angle);
  const bool a_right =
      (std::abs(ca - cb) > 1e-12) ? (ca > cb) : (a.center_angle < b.center_angle);
  p.right = a_right ? a : b;
  p.left = a_right ? b : a;
  p.pt_symmetric = std::abs(wrap_angle(kPi - p.left.center_angle -
                                       p.right.center_angle)) <= kAngularTol;
  return p;
}

}  // namespace

SectorPair pt_sector_pair(const PotentialSpec& spec) {
  const AsymptoticPower ap = asymptotic_power(spec);
  int k_right = 0, k_left = 0;
  if (const auto* d = as_deformed(spec)) {
    k_left = d->conjugate ? 2 : -2;
  } else if (std::holds_alternative<RotatedQuartic>(spec)) {
    k_left = 3;  // the antipodal sector: centers -theta/6 and pi - theta/6
  } else {
    throw std::invalid_argument(
        "pt_sector_pair: defined for DeformedMonomial and RotatedQuartic only");
  }
  StokesSector right = sector_for_k(ap, k_right);
  StokesSector left = sector_for_k(ap, k_left);

  // Reuse letter labels when the full sector list exists.
  if (is_integer(ap.degree)) {
    for (const StokesSector& s : stokes_sectors(spec)) {
      if (same_angle(s.center_angle, right.center_angle)) right.label = s.label;
      if (same_angle(s.center_angle, left.center_angle)) left.label = s.label;
    }
  }
  return make_pair(left, right);
}

std::vector<SectorPair> enumerate_sector_pairs(const PotentialSpec& spec) {
  const AsymptoticPower ap = asymptotic_power(spec);
  if (!is_integer(ap.degree)) {
    throw std::invalid_argument(
        "enumerate_sector_pairs: unsupported for non-integer asymptotic degree");
  }
  const std::vector<StokesSector> sectors = stokes_sectors(spec);
  const int m = static_cast<int>(sectors.size());
  std::vector<SectorPair> pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int gap = j - i;
      if (gap == 1 || gap == m - 1) continue;  // contiguous
      pairs.push_back(make_pair(sectors[static_cast<size_t>(i)],
                                sectors[static_cast<size_t>(j)]));
    }
  }
  return pairs;
}

std::vector<Complex> turning_points(const PotentialSpec& spec, Complex E) {
  std::vector<Complex> roots;
  const auto* d = as_deformed(spec);
  const bool polynomial = d == nullptr || is_integer(d->epsilon);

  if (std::holds_alternative<PureMonomial>(spec) && std::abs(E) == 0.0) {
    throw TurningPointError("turning_points: E = 0 gives a degenerate root at 0");
  }

  if (polynomial) {
    std::vector<Complex> c = polynomial_coefficients(spec);
    c[0] -= E;
    roots = companion_roots(std::move(c));
  } else {
    // Principal-sheet solutions of x^2 (s i x)^eps = E:
    //   Log x = (Log E - eps Log(s i) + 2 pi i m) / (2 + eps)
    // keeping candidates whose argument stays on the principal sheet and
    // off the wrap zone of Log(s i x).  With the harmonic term present the
    // closed form seeds a Newton polish instead of solving exactly.
    const double s = d->conjugate ? -1.0 : 1.0;
    const Complex log_si{0.0, s * kPi / 2.0};
    if (std::abs(E) == 0.0) {
      throw TurningPointError("turning_points: E = 0 gives a degenerate root at 0");
    }
    for (int m = -6; m <= 6; ++m) {
      const Complex log_x =
          (std::log(E) - d->epsilon * log_si + Complex(0.0, 2.0 * kPi * m)) /
          (2.0 + d->epsilon);
      const double arg = log_x.imag();
      if (arg <= -kPi || arg > kPi) continue;
      if (arg + s * kPi / 2.0 <= -kPi || arg + s * kPi / 2.0 > kPi) continue;
      roots.push_back(std::exp(log_x));
    }
  }

  for (Complex& r : roots) r = polish_root(spec, r, E);

  // Drop non-converged candidates, then deduplicate.
  const double scale = std::max(1.0, std::abs(E));
  std::erase_if(roots, [&](Complex r) {
    return !(std::abs(eval_potential(spec, r) - E) <= 1e-9 * scale);
  });
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return std::arg(a) < std::arg(b);
  });
  if (roots.empty()) throw TurningPointError("turning_points: no roots found");

  std::vector<Complex> unique;
  for (const Complex& r : roots) {
    bool duplicate = false;
    for (const Complex& u : unique) {
      duplicate = duplicate ||
                  std::abs(r - u) <= 1e-8 * std::max(1.0, std::abs(r));
    }
    if (!duplicate) unique.push_back(r);
  }
  for (size_t i = 0; i < unique.size(); ++i) {
    for (size_t j = i + 1; j < unique.size(); ++j) {
      const double limit =
          1e-6 * std::max({1.0, std::abs(unique[i]), std::abs(unique[j])});
      if (std::abs(unique[i] - unique[j]) <= limit) {
        throw TurningPointError("turning_points: degenerate (multiple) roots");
      }
    }
  }
  if (polynomial && unique.size() != roots.size()) {
    throw TurningPointError("turning_points: degenerate (multiple) roots");
  }
  return unique;
}

}  // namespace cspec
