#include "cspec/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace cspec {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,re_x,im_x,re_p,im_p\n";
  for (const PhasePoint& q : traj.samples) {
    os << format_double(q.t) << ',' << format_double(q.x.real()) << ','
       << format_double(q.x.imag()) << ',' << format_double(q.p.real()) << ','
       << format_double(q.p.imag()) << '\n';
  }
}

void write_trajectory_jsonl(std::ostream& os, const Trajectory& traj) {
  for (const PhasePoint& q : traj.samples) {
    nlohmann::ordered_json record;
    record["t"] = q.t;
    record["x"] = {q.x.real(), q.x.imag()};
    record["p"] = {q.p.real(), q.p.imag()};
    os << record.dump() << '\n';
  }
}

void write_sphere_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,X,Y,Z\n";
  for (const PhasePoint& q : traj.samples) {
    const SpherePoint s = riemann_sphere_projection(q.x);
    os << format_double(q.t) << ',' << format_double(s.x) << ','
       << format_double(s.y) << ',' << format_double(s.z) << '\n';
  }
}

void write_sectors_csv(std::ostream& os,
                       const std::vector<StokesSector>& sectors) {
  constexpr double kDegPerRad = 180.0 / 3.14159265358979323846;
  os << "label,center_rad,opening_rad,center_deg,opening_deg\n";
  for (const StokesSector& s : sectors) {
    os << s.label << ',' << format_double(s.center_angle) << ','
       << format_double(s.opening) << ','
       << format_double(s.center_angle * kDegPerRad) << ','
       << format_double(s.opening * kDegPerRad) << '\n';
  }
}

void write_spectrum_csv(std::ostream& os, const std::string& key_column,
                        const std::vector<SpectrumRow>& rows) {
  os << key_column << ",n,re_E,im_E,residual,source\n";
  for (const SpectrumRow& r : rows) {
    os << r.key << ',' << r.n << ',' << format_double(r.E.real()) << ','
       << format_double(r.E.imag()) << ',' << format_double(r.residual) << ','
       << r.source << '\n';
  }
}

std::vector<SpectrumRow> scan_rows(const SpectrumScan& scan) {
  std::vector<SpectrumRow> rows;
  for (size_t i = 0; i < scan.epsilon_grid.size(); ++i) {
    for (const EigenvalueRecord& r : scan.records[i]) {
      rows.push_back({format_double(scan.epsilon_grid[i]), r.index, r.E,
                      r.residual, "shooting"});
    }
  }
  return rows;
}

std::vector<SpectrumRow> record_rows(const std::vector<EigenvalueRecord>& records,
                                     const std::string& source) {
  std::vector<SpectrumRow> rows;
  for (const EigenvalueRecord& r : records) {
    rows.push_back({r.pair_label, r.index, r.E, r.residual, source});
  }
  return rows;
}

void write_wavefunction_csv(std::ostream& os, const WavefunctionSample& sample) {
  os << "r,re_x,im_x,re_psi,im_psi\n";
  for (size_t i = 0; i < sample.contour.size(); ++i) {
    const Complex x = sample.contour[i];
    const Complex p = sample.psi[i];
    os << format_double(std::abs(x)) << ',' << format_double(x.real()) << ','
       << format_double(x.imag()) << ',' << format_double(p.real()) << ','
       << format_double(p.imag()) << '\n';
  }
}

void write_visits_csv(std::ostream& os, const std::vector<RegionVisit>& visits) {
  os << "region_id,t_enter,t_exit,windings\n";
  for (const RegionVisit& v : visits) {
    os << v.region_id << ',' << format_double(v.t_enter) << ','
       << format_double(v.t_exit) << ',' << v.windings << '\n';
  }
}

}  // namespace cspec
