#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "linwave/spectral/field.hpp"

namespace linwave::io {

/// Metadata kept in the JSON sidecar next to a snapshot.
struct SnapshotMeta {
  std::string background;      // slice or spacetime id, e.g. "flat-torus"
  double sobolev_order = 0.0;
  std::map<std::string, std::string> parameters;  // creation parameters

  bool operator==(const SnapshotMeta&) const = default;
};

/// Binary record: "LWF1", little-endian u32 rank code (0/1/2), n, nmax and
/// component count, then (re, im) float64 pairs, modes in lattice order
/// with components innermost. A pair file holds two records (h~ then m~).
std::vector<std::uint8_t> encode_field(const spectral::SpectralField& f);
/// Decodes one record starting at `offset` and advances it.
spectral::SpectralField decode_field(const std::vector<std::uint8_t>& bytes, std::size_t& offset);

/// Sidecar path: the snapshot path with ".json" appended.
std::filesystem::path sidecar_path(const std::filesystem::path& p);

void write_snapshot(const std::filesystem::path& p, const spectral::SpectralField& f, const SnapshotMeta& meta);
void write_pair_snapshot(const std::filesystem::path& p, const spectral::SpectralField& h,
                         const spectral::SpectralField& m, const SnapshotMeta& meta);

struct Snapshot {
  std::vector<spectral::SpectralField> records;  // one field, or h~ and m~
  SnapshotMeta meta;                             // empty when no sidecar exists
};

/// Reads every record of the file; the sidecar is optional.
Snapshot read_snapshot(const std::filesystem::path& p);

}  // namespace linwave::io
