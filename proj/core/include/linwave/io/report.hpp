#pragma once

#include <filesystem>
#include <string>

#include "linwave/evolution/diagnostics.hpp"

namespace linwave::io {

/// Round-trip formatting with 17 significant digits ("%.17g").
std::string format_real(double v);

/// Diagnostics table with columns t, gauge_res, dphi1_res, dphi2_res,
/// energy_j0 .. energy_jJ.
std::string diagnostics_csv(const evolution::DiagnosticsSeries& d);

/// Writes `text` to `p`, creating parent directories.
void write_text(const std::filesystem::path& p, const std::string& text);

}  // namespace linwave::io
