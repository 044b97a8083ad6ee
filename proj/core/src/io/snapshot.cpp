#include "linwave/io/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include <json.hpp>

namespace linwave::io {

using spectral::ModeLattice;
using spectral::Rank;
using spectral::SpectralField;

namespace {

constexpr char kMagic[4] = {'L', 'W', 'F', '1'};

void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_f64(std::vector<std::uint8_t>& b, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint64_t get_le(const std::vector<std::uint8_t>& b, std::size_t at, int bytes) {
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= static_cast<std::uint64_t>(b[at + static_cast<std::size_t>(i)]) << (8 * i);
  return v;
}

Rank rank_from_code(std::uint32_t code) {
  switch (code) {
    case 0: return Rank::Scalar;
    case 1: return Rank::OneForm;
    case 2: return Rank::Sym2;
  }
  fail(ErrorCode::CountMismatch, "snapshot: unknown rank code " + std::to_string(code));
}

std::uint32_t rank_code(Rank r) {
  switch (r) {
    case Rank::Scalar: return 0;
    case Rank::OneForm: return 1;
    case Rank::Sym2: return 2;
  }
  return 0;
}

std::vector<std::uint8_t> read_all(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorCode::IoFailure, "cannot open " + p.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::filesystem::path& p, const std::vector<std::uint8_t>& bytes) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + p.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::IoFailure, "short write to " + p.string());
}

void write_sidecar(const std::filesystem::path& p, const SnapshotMeta& meta, const SpectralField& f, int records) {
  nlohmann::json j;
  j["background"] = meta.background;
  j["sobolev_order"] = meta.sobolev_order;
  j["parameters"] = meta.parameters;
  j["rank"] = spectral::to_string(f.rank());
  j["n"] = f.lattice().dim();
  j["nmax"] = f.lattice().nmax();
  j["records"] = records;
  std::ofstream out(sidecar_path(p));
  if (!out) fail(ErrorCode::IoFailure, "cannot write " + sidecar_path(p).string());
  out << j.dump(2) << '\n';
}

}  // namespace

std::vector<std::uint8_t> encode_field(const SpectralField& f) {
  std::vector<std::uint8_t> b(kMagic, kMagic + 4);
  put_u32(b, rank_code(f.rank()));
  put_u32(b, static_cast<std::uint32_t>(f.lattice().dim()));
  put_u32(b, static_cast<std::uint32_t>(f.lattice().nmax()));
  put_u32(b, static_cast<std::uint32_t>(f.components()));
  b.reserve(b.size() + f.data().size() * 16);
  for (const cplx& c : f.data()) {
    put_f64(b, c.real());
    put_f64(b, c.imag());
  }
  return b;
}

SpectralField decode_field(const std::vector<std::uint8_t>& b, std::size_t& offset) {
  if (b.size() < offset + 4) fail(ErrorCode::TruncatedFile, "snapshot: file ends before the magic bytes");
  if (std::memcmp(b.data() + offset, kMagic, 4) != 0) fail(ErrorCode::BadMagic, "snapshot: bad magic (expected LWF1)");
  if (b.size() < offset + 20) fail(ErrorCode::TruncatedFile, "snapshot: truncated header");
  const auto code = static_cast<std::uint32_t>(get_le(b, offset + 4, 4));
  const auto n = static_cast<int>(get_le(b, offset + 8, 4));
  const auto nmax = static_cast<int>(get_le(b, offset + 12, 4));
  const auto comps = static_cast<int>(get_le(b, offset + 16, 4));
  const Rank rank = rank_from_code(code);
  if (n < 1 || n > 3 || nmax < 0 || nmax > 4096) fail(ErrorCode::CountMismatch, "snapshot: implausible lattice header");
  if (comps != spectral::component_count(rank, n)) {
    fail(ErrorCode::CountMismatch, "snapshot: component count " + std::to_string(comps) + " does not match rank " +
                                       spectral::to_string(rank) + " in dimension " + std::to_string(n));
  }
  const ModeLattice L(n, nmax);
  const std::size_t count = L.size() * static_cast<std::size_t>(comps);
  offset += 20;
  if (b.size() < offset + 16 * count) fail(ErrorCode::TruncatedFile, "snapshot: coefficient block is truncated");
  std::vector<cplx> c(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double re = std::bit_cast<double>(get_le(b, offset + 16 * i, 8));
    const double im = std::bit_cast<double>(get_le(b, offset + 16 * i + 8, 8));
    c[i] = cplx(re, im);
  }
  offset += 16 * count;
  return SpectralField(L, rank, std::move(c));
}

std::filesystem::path sidecar_path(const std::filesystem::path& p) {
  std::filesystem::path s = p;
  s += ".json";
  return s;
}

void write_snapshot(const std::filesystem::path& p, const SpectralField& f, const SnapshotMeta& meta) {
  write_all(p, encode_field(f));
  write_sidecar(p, meta, f, 1);
}

void write_pair_snapshot(const std::filesystem::path& p, const SpectralField& h, const SpectralField& m,
                         const SnapshotMeta& meta) {
  auto bytes = encode_field(h);
  const auto mb = encode_field(m);
  bytes.insert(bytes.end(), mb.begin(), mb.end());
  write_all(p, bytes);
  write_sidecar(p, meta, h, 2);
}

Snapshot read_snapshot(const std::filesystem::path& p) {
  const auto bytes = read_all(p);
  Snapshot s;
  std::size_t off = 0;
  do {
    s.records.push_back(decode_field(bytes, off));
  } while (off < bytes.size());
  const auto side = sidecar_path(p);
  if (std::filesystem::exists(side)) {
    std::ifstream in(side);
    nlohmann::json j;
    try {
      in >> j;
      s.meta.background = j.value("background", "");
      s.meta.sobolev_order = j.value("sobolev_order", 0.0);
      if (j.contains("parameters")) s.meta.parameters = j["parameters"].get<std::map<std::string, std::string>>();
      if (j.contains("records") && j["records"].get<std::size_t>() != s.records.size()) {
        fail(ErrorCode::CountMismatch, "snapshot: sidecar declares " + j["records"].dump() + " records, file holds " +
                                           std::to_string(s.records.size()));
      }
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::ParseError, "snapshot sidecar " + side.string() + ": " + e.what());
    }
  }
  return s;
}

}  // namespace linwave::io
