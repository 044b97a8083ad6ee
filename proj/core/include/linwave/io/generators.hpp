#pragma once

#include <cstdint>
#include <string>

#include "linwave/constraints/constraints.hpp"

namespace linwave::io {

struct GeneratorParams {
  std::uint64_t seed = 1;
  double amplitude = 1.0;
  double decay = 0.3;  // random spectra fall off like exp(-decay |k|^2)
  double width = 0.3;  // Gaussian bump radius parameter
};

/// Real random field with coefficients amplitude * exp(-decay |k|^2) * N(0,1).
spectral::SpectralField random_field(const spectral::ModeLattice& lattice, spectral::Rank rank, std::uint64_t seed,
                                     double decay = 0.3, double amplitude = 1.0);

/// Real random field supported on `modes` random wave vectors (and their
/// mirrors), N(0,1) coefficients. Cheap input for pointwise oracles.
spectral::SpectralField sparse_random_field(const spectral::ModeLattice& lattice, spectral::Rank rank,
                                            std::uint64_t seed, int modes = 4);

constraints::InitialDataPair random_pair(const geometry::SliceGeometry& slice, const spectral::ModeLattice& lattice,
                                         const GeneratorParams& p = {});
/// random_pair projected onto the kernel of D Phi.
constraints::InitialDataPair constrained_pair(const geometry::SliceGeometry& slice,
                                              const spectral::ModeLattice& lattice, const GeneratorParams& p = {});

struct GaugePair {
  spectral::SpectralField N;
  spectral::SpectralField beta;
  constraints::InitialDataPair pair;
};
/// Data induced by L_V g for random (N, beta).
GaugePair gauge_pair(const geometry::SliceGeometry& slice, const spectral::ModeLattice& lattice,
                     const GeneratorParams& p = {});

/// h~ = amplitude cos(x^1) (dx^2 dx^2 - dx^3 dx^3), m~ = 0 on the 3-torus.
constraints::InitialDataPair standing_wave_pair(const geometry::SliceGeometry& slice,
                                                const spectral::ModeLattice& lattice, double amplitude = 1.0);

/// h~_11 = amplitude exp(-|x - c|^2 / (2 width^2)) centred at c = (pi, ..., pi), m~ = 0.
constraints::InitialDataPair bump_pair(const geometry::SliceGeometry& slice, const spectral::ModeLattice& lattice,
                                       double width = 0.3, double amplitude = 1.0);

/// Dispatch by name: random, constrained, gauge, standing-wave, bump.
constraints::InitialDataPair generate_pair(const std::string& name, const geometry::SliceGeometry& slice,
                                           const spectral::ModeLattice& lattice, const GeneratorParams& p = {});

}  // namespace linwave::io
