#include "linwave/spectral/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace linwave::spectral {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Apply `mat` (rows x cols, row-major) along `axis` of a complex array with
// extents `dims`; dims[axis] must equal cols and becomes rows.
std::vector<cplx> apply_along_axis(const std::vector<cplx>& in,
                                   std::vector<int>& dims, int axis,
                                   const std::vector<cplx>& mat, int rows) {
  const int cols = dims[static_cast<std::size_t>(axis)];
  std::size_t outer = 1, inner = 1;
  for (int a = 0; a < axis; ++a) outer *= static_cast<std::size_t>(dims[static_cast<std::size_t>(a)]);
  for (std::size_t a = static_cast<std::size_t>(axis) + 1; a < dims.size(); ++a) {
    inner *= static_cast<std::size_t>(dims[a]);
  }
  std::vector<cplx> out(outer * static_cast<std::size_t>(rows) * inner);
  for (std::size_t o = 0; o < outer; ++o) {
    for (int r = 0; r < rows; ++r) {
      cplx* dst = &out[(o * static_cast<std::size_t>(rows) + static_cast<std::size_t>(r)) * inner];
      for (int c = 0; c < cols; ++c) {
        const cplx w = mat[static_cast<std::size_t>(r * cols + c)];
        const cplx* src = &in[(o * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)) * inner];
        for (std::size_t i = 0; i < inner; ++i) dst[i] += w * src[i];
      }
    }
  }
  dims[static_cast<std::size_t>(axis)] = rows;
  return out;
}

// Row k (= -nmax..nmax), column x_j: exp(sign * i k x_j).
std::vector<cplx> fourier_matrix(int nmax, int grid, double sign,
                                 bool grid_rows) {
  const int side = 2 * nmax + 1;
  std::vector<cplx> m(static_cast<std::size_t>(side * grid));
  for (int kk = 0; kk < side; ++kk) {
    const int k = kk - nmax;
    for (int j = 0; j < grid; ++j) {
      // reduce k*j mod grid for accurate phases
      const long kj = (static_cast<long>(k) * j) % grid;
      const double phase = sign * kTwoPi * static_cast<double>(kj) / grid;
      const cplx w(std::cos(phase), std::sin(phase));
      if (grid_rows) {
        m[static_cast<std::size_t>(j * side + kk)] = w;
      } else {
        m[static_cast<std::size_t>(kk * grid + j)] = w;
      }
    }
  }
  return m;
}

}  // namespace

std::size_t GridSamples::points() const {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= static_cast<std::size_t>(grid);
  return p;
}

SpectralField analyze(const GridSamples& samples, const ModeLattice& lattice) {
  const int n = lattice.dim();
  if (samples.n != n) {
    fail(ErrorCode::BackendMismatch, "analyze: sample dimension differs from lattice");
  }
  if (samples.grid < lattice.side()) {
    fail(ErrorCode::GridTooSmall,
         "analyze: grid of " + std::to_string(samples.grid) +
             " points per axis cannot resolve nmax=" +
             std::to_string(lattice.nmax()) + " (need >= " +
             std::to_string(lattice.side()) + ")");
  }
  const int ncomp = component_count(samples.rank, n);
  const std::size_t npts = samples.points();
  if (samples.values.size() != npts * static_cast<std::size_t>(ncomp)) {
    fail(ErrorCode::CountMismatch, "analyze: sample count does not match grid and rank");
  }
  const auto fwd = fourier_matrix(lattice.nmax(), samples.grid, -1.0, false);
  const double norm = 1.0 / static_cast<double>(npts);

  SpectralField out(lattice, samples.rank);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<cplx> work(npts);
    for (std::size_t p = 0; p < npts; ++p) {
      work[p] = samples.values[static_cast<std::size_t>(c) * npts + p];
    }
    std::vector<int> dims(static_cast<std::size_t>(n), samples.grid);
    for (int a = 0; a < n; ++a) {
      work = apply_along_axis(work, dims, a, fwd, lattice.side());
    }
    for (std::size_t m = 0; m < lattice.size(); ++m) out.coeff(m, c) = norm * work[m];
  }
  return out;
}

std::vector<cplx> synthesize_complex(const SpectralField& field, int grid) {
  const auto& lat = field.lattice();
  const int n = lat.dim();
  if (grid < 1) fail(ErrorCode::InvalidArgument, "synthesize: grid must be positive");
  const auto inv = fourier_matrix(lat.nmax(), grid, +1.0, true);
  std::size_t npts = 1;
  for (int i = 0; i < n; ++i) npts *= static_cast<std::size_t>(grid);

  std::vector<cplx> out(npts * static_cast<std::size_t>(field.components()));
  for (int c = 0; c < field.components(); ++c) {
    std::vector<cplx> work(lat.size());
    bool any = false;
    for (std::size_t m = 0; m < lat.size(); ++m) {
      work[m] = field.coeff(m, c);
      any = any || work[m] != cplx(0.0, 0.0);
    }
    if (!any) continue;  // out is already zero
    std::vector<int> dims(static_cast<std::size_t>(n), lat.side());
    for (int a = 0; a < n; ++a) work = apply_along_axis(work, dims, a, inv, grid);
    std::copy(work.begin(), work.end(),
              out.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(c) * npts));
  }
  return out;
}

GridSamples synthesize(const SpectralField& field, int grid,
                       double hermitian_tol) {
  const double defect = field.hermitian_defect();
  if (defect > hermitian_tol) {
    fail(ErrorCode::SymmetryViolated,
         "synthesize: coefficients are not Hermitian (defect " +
             std::to_string(defect) + ")");
  }
  const auto z = synthesize_complex(field, grid);
  GridSamples s;
  s.n = field.lattice().dim();
  s.grid = grid;
  s.rank = field.rank();
  s.values.resize(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) s.values[i] = z[i].real();
  return s;
}

std::vector<double> evaluate(const SpectralField& field,
                             std::span<const double> x) {
  const auto& lat = field.lattice();
  const int n = lat.dim();
  // per-axis phase tables exp(i k x_a)
  std::vector<std::vector<cplx>> phase(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    auto& row = phase[static_cast<std::size_t>(a)];
    row.resize(static_cast<std::size_t>(lat.side()));
    for (int kk = 0; kk < lat.side(); ++kk) {
      const double arg = static_cast<double>(kk - lat.nmax()) * x[static_cast<std::size_t>(a)];
      row[static_cast<std::size_t>(kk)] = cplx(std::cos(arg), std::sin(arg));
    }
  }
  std::vector<double> out(static_cast<std::size_t>(field.components()), 0.0);
  for (std::size_t m = 0; m < lat.size(); ++m) {
    const auto k = lat.mode(m);
    cplx e(1.0, 0.0);
    for (int a = 0; a < n; ++a) {
      e *= phase[static_cast<std::size_t>(a)]
                [static_cast<std::size_t>(k[static_cast<std::size_t>(a)] + lat.nmax())];
    }
    for (int c = 0; c < field.components(); ++c) {
      out[static_cast<std::size_t>(c)] += (field.coeff(m, c) * e).real();
    }
  }
  return out;
}

double grid_inner(const GridSamples& a, const GridSamples& b) {
  if (a.n != b.n || a.grid != b.grid || a.rank != b.rank) {
    fail(ErrorCode::BackendMismatch, "grid_inner: incompatible sample sets");
  }
  const std::size_t npts = a.points();
  const int ncomp = component_count(a.rank, a.n);
  double sum = 0.0;
  for (int c = 0; c < ncomp; ++c) {
    const double w = flat_component_weight(a.rank, a.n, c);
    double part = 0.0;
    for (std::size_t p = 0; p < npts; ++p) {
      part += a.values[static_cast<std::size_t>(c) * npts + p] *
              b.values[static_cast<std::size_t>(c) * npts + p];
    }
    sum += w * part;
  }
  return sum * std::pow(kTwoPi, a.n) / static_cast<double>(npts);
}

}  // namespace linwave::spectral
