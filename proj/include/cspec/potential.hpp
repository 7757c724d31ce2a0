#ifndef CSPEC_POTENTIAL_HPP
#define CSPEC_POTENTIAL_HPP

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "cspec/errors.hpp"

namespace cspec {

using Complex = std::complex<double>;

/// V(x) = [x^2] + x^2 (i x)^epsilon, or x^2 (-i x)^epsilon when conjugate
/// is set.  The optional harmonic term is controlled by include_harmonic.
/// Powers use the principal logarithm, Arg in (-pi, pi], so the branch cut
/// in x lies on the positive imaginary axis (negative imaginary axis for
/// the conjugate family).
struct DeformedMonomial {
  double epsilon = 0.0;
  bool include_harmonic = false;
  bool conjugate = false;
};

/// V(x) = x^2 + e^{i theta} x^4, the quartic continued in g = e^{i theta}.
struct RotatedQuartic {
  double theta = 0.0;
};

/// V(x) = coefficient * x^degree.
struct PureMonomial {
  int degree = 2;
  Complex coefficient{1.0, 0.0};
};

using PotentialSpec = std::variant<DeformedMonomial, RotatedQuartic, PureMonomial>;

/// Checked constructors.  epsilon must exceed -2 (asymptotic degree > 0),
/// pure monomials need degree >= 2 and a nonzero coefficient.
PotentialSpec deformed_monomial(double epsilon, bool include_harmonic,
                                bool conjugate = false);
PotentialSpec rotated_quartic(double theta);
PotentialSpec pure_monomial(int degree, Complex coefficient);

Complex eval_potential(const PotentialSpec& spec, Complex x);

/// -V'(x), the complex derivative.
Complex eval_force(const PotentialSpec& spec, Complex x);

/// Leading behaviour V ~ coefficient * x^degree as |x| -> infinity.
/// coefficient_arg is the continuation-unwrapped argument (epsilon pi / 2
/// for the deformed family, theta for the rotated quartic); sector
/// positions follow it continuously rather than its principal value.
struct AsymptoticPower {
  double degree;
  Complex coefficient;
  double coefficient_arg;
};
AsymptoticPower asymptotic_power(const PotentialSpec& spec);

/// Angular wedge at |x| -> infinity in which solutions of the Schrodinger
/// ODE decay exponentially.
struct StokesSector {
  double center_angle = 0.0;  // radians, in (-pi, pi]
  double opening = 0.0;       // radians, in (0, pi]
  std::string label;
};

/// Two non-contiguous sectors defining one eigenvalue problem.
/// pt_symmetric is set when reflecting one center across the imaginary
/// axis (theta -> pi - theta) yields the other within 1e-9 rad.
struct SectorPair {
  StokesSector left;
  StokesSector right;
  bool pt_symmetric = false;
};

std::string pair_label(const SectorPair& pair);

/// Reflection theta -> -theta maps one sector of the pair onto the other.
bool updown_symmetric(const SectorPair& pair);

/// All sectors for integer asymptotic degree N (N+2 of them, opening
/// 2 pi/(N+2), centers (2 k pi - arg c)/(N+2)), labeled A, B, C, ...
/// counterclockwise from the sector nearest the positive real axis.
/// For non-integer degree only k in {0,-1,-2} (or {0,1,2} for the
/// conjugate family) are enumerated, labeled "k0", "k-1", ...
std::vector<StokesSector> stokes_sectors(const PotentialSpec& spec);

/// The pair continuously connected to the harmonic-oscillator pair.
/// Defined for DeformedMonomial and RotatedQuartic only.
SectorPair pt_sector_pair(const PotentialSpec& spec);

/// All unordered non-contiguous pairs for integer asymptotic degree,
/// (N+2)(N+1)/2 - (N+2) of them, ordered by label.
std::vector<SectorPair> enumerate_sector_pairs(const PotentialSpec& spec);

/// Principal-sheet solutions of V(x) = E, sorted by argument.
/// Degenerate (multiple) roots and empty results raise TurningPointError.
std::vector<Complex> turning_points(const PotentialSpec& spec, Complex E);

/// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

/// Tolerance used for the pt_symmetric / up-down flags.
inline constexpr double kAngularTol = 1e-9;

}  // namespace cspec

#endif
