#include <cstring>
#include <filesystem>
#include <fstream>

#include "linwave/io/config.hpp"
#include "linwave/io/generators.hpp"
#include "linwave/io/report.hpp"
#include "linwave/io/snapshot.hpp"
#include "test_support.hpp"

using namespace linwave;
using namespace linwave::io;
using spectral::ModeLattice;
using spectral::Rank;
using spectral::SpectralField;

namespace {

bool bit_equal(const SpectralField& a, const SpectralField& b) {
  return a.lattice() == b.lattice() && a.rank() == b.rank() &&
         std::memcmp(a.data().data(), b.data().data(), a.data().size() * sizeof(cplx)) == 0;
}

std::filesystem::path scratch_dir() {
  auto p = std::filesystem::temp_directory_path() / "linwave_io_test";
  std::filesystem::create_directories(p);
  return p;
}

std::string error_message(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("minimal config gets defaults") {
  const auto c = parse_config("background.kind = flat-torus\n");
  CHECK(c.nmax == 8);
  CHECK_FALSE(c.dt.has_value());
  CHECK(c.start_time() == 0.0);
  CHECK(parse_config("# nothing\n\n") == RunConfig{});
}

TEST_CASE("config strictness") {
  CHECK_ERROR_CODE(parse_config("lattice.nmaxx = 4\n"), ErrorCode::UnknownKey);
  CHECK_ERROR_CODE(parse_config("lattice.nmax 4\n"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse_config("lattice.nmax = four\n"), ErrorCode::ParseError);
  CHECK(error_message("background.kind = kasner\n\nlattice.bogus = 1\n").find("line 3") != std::string::npos);
  CHECK_ERROR_CODE(parse_config("lattice.nmax = 4\nlattice.nmax = 5\n"), ErrorCode::ParseError);
  CHECK_ERROR_CODE(parse_config("evolve.dt = -1\n"), ErrorCode::DomainViolation);
}

TEST_CASE("Kasner exponents are validated") {
  const std::string text = "background.kind = kasner\nbackground.p = 0.5, 0.5, 0.5\nevolve.dt = 0.01\n";
  CHECK_ERROR_CODE(parse_config(text), ErrorCode::DomainViolation);
  CHECK(error_message(text).find("sum p^2") != std::string::npos);
}

TEST_CASE("config round trip") {
  RunConfig c;
  c.background = "kasner";
  c.nmax = 5;
  c.seed = 123456789012345ULL;
  c.t0 = 1.25;
  c.t1 = 2.0 / 3.0 + 1.0;
  c.dt = 1.0 / 300.0;
  c.samples = {1.3, 1.4};
  c.J = 2;
  c.sobolev_k = 0.5;
  c.tol_gauge = 3e-9;
  CHECK(parse_config(save_config(c)) == c);
  CHECK(parse_config(save_config(RunConfig{})) == RunConfig{});
}

TEST_CASE("snapshot round trips are bit exact") {
  const auto dir = scratch_dir();
  const ModeLattice L(3, 3);
  for (const auto& f : {SpectralField(L, Rank::Sym2), random_field(L, Rank::Sym2, 77),
                        random_field(ModeLattice(2, 4), Rank::OneForm, 5)}) {
    const SnapshotMeta meta{"flat-torus", 1.5, {{"seed", "77"}}};
    write_snapshot(dir / "f.lwf", f, meta);
    const auto s = read_snapshot(dir / "f.lwf");
    REQUIRE(s.records.size() == 1);
    CHECK(bit_equal(s.records[0], f));
    CHECK(s.meta == meta);
  }
  const auto h = random_field(L, Rank::Sym2, 1), m = random_field(L, Rank::Sym2, 2);
  write_pair_snapshot(dir / "p.lwf", h, m, {"kasner", 0.0, {}});
  const auto s = read_snapshot(dir / "p.lwf");
  REQUIRE(s.records.size() == 2);
  CHECK(bit_equal(s.records[0], h));
  CHECK(bit_equal(s.records[1], m));
}

TEST_CASE("snapshot corruption is detected") {
  const ModeLattice L(2, 2);
  const auto bytes = encode_field(random_field(L, Rank::Scalar, 3));
  CHECK(bytes.size() == 20 + 16 * L.size());
  std::size_t off = 0;

  auto bad = bytes;
  bad[0] = 'X';
  CHECK_ERROR_CODE(decode_field(bad, off), ErrorCode::BadMagic);

  auto shortened = bytes;
  shortened.resize(bytes.size() - 8);
  off = 0;
  CHECK_ERROR_CODE(decode_field(shortened, off), ErrorCode::TruncatedFile);

  auto wrong = bytes;
  wrong[16] = 7;  // component count
  off = 0;
  CHECK_ERROR_CODE(decode_field(wrong, off), ErrorCode::CountMismatch);

  // sidecar record count disagreeing with the file
  const auto dir = scratch_dir();
  write_snapshot(dir / "c.lwf", random_field(L, Rank::Scalar, 3), {});
  {
    std::ofstream side(sidecar_path(dir / "c.lwf"));
    side << R"({"background": "", "sobolev_order": 0, "parameters": {}, "records": 2})";
  }
  CHECK_ERROR_CODE(read_snapshot(dir / "c.lwf"), ErrorCode::CountMismatch);
}

TEST_CASE("diagnostics CSV format") {
  evolution::DiagnosticsSeries d;
  d.J = 1;
  d.times = {0.1};
  d.gauge_res = {1.0 / 3.0};
  d.dphi1_res = {0.0};
  d.dphi2_res = {1e-300};
  d.energy = {{2.0, 0.1}};
  const auto csv = diagnostics_csv(d);
  CHECK(csv ==
        "t,gauge_res,dphi1_res,dphi2_res,energy_j0,energy_j1\n"
        "0.10000000000000001,0.33333333333333331,0,1e-300,2,0.10000000000000001\n");
  CHECK(std::stod(format_real(0.1)) == 0.1);
}

TEST_CASE("generators are deterministic") {
  const auto s = geometry::SliceGeometry::flat_torus(3);
  const auto L = s.lattice(3);
  CHECK(bit_equal(random_field(L, Rank::Sym2, 5), random_field(L, Rank::Sym2, 5)));
  CHECK_FALSE(bit_equal(random_field(L, Rank::Sym2, 5), random_field(L, Rank::Sym2, 6)));
  CHECK(random_field(L, Rank::Sym2, 5).is_hermitian());
  CHECK_ERROR_CODE(generate_pair("nonsense", s, L), ErrorCode::InvalidArgument);
}
