#include "linwave/io/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "linwave/decomposition/gauge_data.hpp"
#include "linwave/spectral/transform.hpp"

namespace linwave::io {

using spectral::ModeLattice;
using spectral::Rank;
using spectral::SpectralField;

SpectralField random_field(const ModeLattice& L, Rank rank, std::uint64_t seed, double decay, double amplitude) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  SpectralField f(L, rank);
  for (std::size_t q = 0; q < L.size(); ++q) {
    const auto k = L.mode(q);
    const double w = amplitude * std::exp(-decay * double(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]));
    for (int c = 0; c < f.components(); ++c) {
      const double re = g(rng), im = g(rng);
      f.coeff(q, c) = w * cplx(re, im);
    }
  }
  f.symmetrize();
  return f;
}

SpectralField sparse_random_field(const ModeLattice& L, Rank rank, std::uint64_t seed, int modes) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, L.size() - 1);
  SpectralField f(L, rank);
  for (int i = 0; i < modes; ++i) {
    const std::size_t q = pick(rng);
    for (int c = 0; c < f.components(); ++c) {
      const double re = g(rng), im = g(rng);
      f.coeff(q, c) += cplx(re, im);
    }
  }
  f.symmetrize();
  return f;
}

constraints::InitialDataPair random_pair(const geometry::SliceGeometry& slice, const ModeLattice& L,
                                         const GeneratorParams& p) {
  return {random_field(L, Rank::Sym2, p.seed, p.decay, p.amplitude),
          random_field(L, Rank::Sym2, p.seed ^ 0x9e3779b97f4a7c15ULL, p.decay, p.amplitude), slice};
}

constraints::InitialDataPair constrained_pair(const geometry::SliceGeometry& slice, const ModeLattice& L,
                                              const GeneratorParams& p) {
  return constraints::project_to_constraints(random_pair(slice, L, p));
}

GaugePair gauge_pair(const geometry::SliceGeometry& slice, const ModeLattice& L, const GeneratorParams& p) {
  SpectralField N = random_field(L, Rank::Scalar, p.seed, p.decay, p.amplitude);
  SpectralField beta = random_field(L, Rank::OneForm, p.seed ^ 0x9e3779b97f4a7c15ULL, p.decay, p.amplitude);
  auto pair = decomposition::gauge_producing_data(N, beta, slice);
  return {std::move(N), std::move(beta), std::move(pair)};
}

constraints::InitialDataPair standing_wave_pair(const geometry::SliceGeometry& slice, const ModeLattice& L,
                                                double amplitude) {
  if (!slice.is_torus() || L.dim() != 3 || L.nmax() < 1) {
    fail(ErrorCode::Unsupported, "standing wave data need a 3-torus lattice with nmax >= 1");
  }
  SpectralField h(L, Rank::Sym2);
  const std::array<int, 3> e1{1, 0, 0};
  const std::size_t q = L.index(e1), m = L.mirror(q);
  const int c22 = spectral::sym_index(1, 1, 3), c33 = spectral::sym_index(2, 2, 3);
  for (std::size_t idx : {q, m}) {
    h.coeff(idx, c22) = 0.5 * amplitude;
    h.coeff(idx, c33) = -0.5 * amplitude;
  }
  return {h, SpectralField(L, Rank::Sym2), slice};
}

constraints::InitialDataPair bump_pair(const geometry::SliceGeometry& slice, const ModeLattice& L, double width,
                                       double amplitude) {
  if (!slice.is_torus()) fail(ErrorCode::Unsupported, "bump data need a torus slice");
  const int n = L.dim();
  const int grid = L.side();
  spectral::GridSamples s;
  s.n = n;
  s.grid = grid;
  s.rank = Rank::Sym2;
  const std::size_t npts = s.points();
  const int nc = spectral::component_count(Rank::Sym2, n);
  s.values.assign(npts * static_cast<std::size_t>(nc), 0.0);
  const double h = 2.0 * std::numbers::pi / grid;
  for (std::size_t p = 0; p < npts; ++p) {
    std::size_t rest = p;
    double r2 = 0.0;
    for (int a = n - 1; a >= 0; --a) {
      const double x = h * static_cast<double>(rest % static_cast<std::size_t>(grid)) - std::numbers::pi;
      rest /= static_cast<std::size_t>(grid);
      r2 += x * x;
    }
    s.values[p] = amplitude * std::exp(-r2 / (2.0 * width * width));  // component 0 is h_11
  }
  SpectralField f = spectral::analyze(s, L);
  f.symmetrize();
  return {f, SpectralField(L, Rank::Sym2), slice};
}

constraints::InitialDataPair generate_pair(const std::string& name, const geometry::SliceGeometry& slice,
                                           const ModeLattice& L, const GeneratorParams& p) {
  if (name == "random") return random_pair(slice, L, p);
  if (name == "constrained") return constrained_pair(slice, L, p);
  if (name == "gauge") return gauge_pair(slice, L, p).pair;
  if (name == "standing-wave") return standing_wave_pair(slice, L, p.amplitude);
  if (name == "bump") return bump_pair(slice, L, p.width, p.amplitude);
  fail(ErrorCode::InvalidArgument, "unknown data generator '" + name + "'");
}

}  // namespace linwave::io
