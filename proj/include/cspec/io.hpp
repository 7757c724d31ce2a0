#ifndef CSPEC_IO_HPP
#define CSPEC_IO_HPP

#include <ostream>
#include <string>
#include <vector>

#include "cspec/dynamics.hpp"
#include "cspec/spectral.hpp"

namespace cspec {

/// Full round-trip decimal formatting (17 significant digits).
std::string format_double(double v);

/// Columns t, re_x, im_x, re_p, im_p.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// One JSON record per line: {"t": ..., "x": [re, im], "p": [re, im]}.
void write_trajectory_jsonl(std::ostream& os, const Trajectory& traj);

/// Columns t, X, Y, Z (unit-sphere stereographic image of x(t)).
void write_sphere_csv(std::ostream& os, const Trajectory& traj);

/// Columns label, center_rad, opening_rad, center_deg, opening_deg.
void write_sectors_csv(std::ostream& os, const std::vector<StokesSector>& sectors);

/// Spectrum schema: <key>, n, re_E, im_E, residual, source.
struct SpectrumRow {
  std::string key;  // pair label or epsilon value
  int n = 0;
  Complex E{0.0, 0.0};
  double residual = 0.0;
  std::string source;  // "shooting" or "wkb"
};
void write_spectrum_csv(std::ostream& os, const std::string& key_column,
                        const std::vector<SpectrumRow>& rows);

std::vector<SpectrumRow> scan_rows(const SpectrumScan& scan);
std::vector<SpectrumRow> record_rows(const std::vector<EigenvalueRecord>& records,
                                     const std::string& source);

/// Columns r, re_x, im_x, re_psi, im_psi.
void write_wavefunction_csv(std::ostream& os, const WavefunctionSample& sample);

/// Columns region_id, t_enter, t_exit, windings.
void write_visits_csv(std::ostream& os, const std::vector<RegionVisit>& visits);

}  // namespace cspec

#endif
