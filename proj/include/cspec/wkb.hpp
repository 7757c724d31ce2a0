#ifndef CSPEC_WKB_HPP
#define CSPEC_WKB_HPP

#include <functional>
#include <utility>
#include <vector>

#include "cspec/potential.hpp"

namespace cspec {

struct QuantizationResult {
  double n_effective = 0.0;  // (1/pi) Re integral - 1/2
  std::vector<Complex> path;
  Complex E{0.0, 0.0};
};

/// The two turning points of V(x) = E whose arguments lie closest to the
/// pair's sector centers; the quantization path connects them.
std::pair<Complex, Complex> turning_point_pair_for(const PotentialSpec& spec,
                                                   const SectorPair& pair,
                                                   Complex E);

/// Integral of sqrt(E - V(x)) between the turning points with continuous
/// branch tracking, the branch fixed so the result has positive real part.
/// The path is the straight segment unless another turning point comes
/// within clearance, in which case a smooth bulge detour is used.
Complex quantization_integral(const PotentialSpec& spec, Complex E,
                              std::pair<Complex, Complex> tp_pair);

QuantizationResult quantization_result(const PotentialSpec& spec, Complex E,
                                       std::pair<Complex, Complex> tp_pair);

/// Solves quantization_integral(spec, E, tp(E)) = (n + 1/2) pi for E by
/// Newton iteration, seeded on the scaling ansatz E ~ a (n + 1/2)^{2N/(N+2)}
/// with the argument of the seed scanned over the sector-rotation lattice.
Complex wkb_energy_estimate(const PotentialSpec& spec, const SectorPair& pair,
                            int n);

/// Optional replacement energy source for pt_hermitian_ratio (e.g. the
/// shooting solver).
using EnergySolver =
    std::function<Complex(const PotentialSpec&, const SectorPair&, int)>;

/// E_PT(n) / E_Herm(n) for the x^6 potential (the BD pair against the AE
/// pair), WKB estimates by default.
double pt_hermitian_ratio(int n, const EnergySolver& solver = {});

}  // namespace cspec

#endif
