#include "linwave/io/report.hpp"

#include <cstdio>
#include <fstream>

namespace linwave::io {

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string diagnostics_csv(const evolution::DiagnosticsSeries& d) {
  std::string s = "t,gauge_res,dphi1_res,dphi2_res";
  for (int j = 0; j <= d.J; ++j) s += ",energy_j" + std::to_string(j);
  s += '\n';
  for (std::size_t i = 0; i < d.times.size(); ++i) {
    s += format_real(d.times[i]) + ',' + format_real(d.gauge_res[i]) + ',' + format_real(d.dphi1_res[i]) + ',' +
         format_real(d.dphi2_res[i]);
    for (double e : d.energy[i]) s += ',' + format_real(e);
    s += '\n';
  }
  return s;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + p.string());
  out << text;
  if (!out) fail(ErrorCode::IoFailure, "short write to " + p.string());
}

}  // namespace linwave::io
