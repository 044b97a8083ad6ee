#include "linwave/spectral/lattice.hpp"

#include <string>

#include "linwave/common.hpp"

namespace linwave {

const char* version() noexcept { return LINWAVE_VERSION_STRING; }

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::DomainViolation: return "domain-violation";
    case ErrorCode::BackendMismatch: return "backend-mismatch";
    case ErrorCode::RankMismatch: return "rank-mismatch";
    case ErrorCode::GridTooSmall: return "grid-too-small";
    case ErrorCode::SymmetryViolated: return "symmetry-violated";
    case ErrorCode::BadMagic: return "bad-magic";
    case ErrorCode::TruncatedFile: return "truncated-file";
    case ErrorCode::CountMismatch: return "count-mismatch";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::UnknownKey: return "unknown-key";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::SingularMetric: return "singular-metric";
    case ErrorCode::IoFailure: return "io-failure";
  }
  return "unknown";
}

}  // namespace linwave

namespace linwave::spectral {

const char* to_string(Rank rank) noexcept {
  switch (rank) {
    case Rank::Scalar: return "scalar";
    case Rank::OneForm: return "oneform";
    case Rank::Sym2: return "sym2";
  }
  return "unknown";
}

int component_count(Rank rank, int n) {
  switch (rank) {
    case Rank::Scalar: return 1;
    case Rank::OneForm: return n;
    case Rank::Sym2: return n * (n + 1) / 2;
  }
  return 0;
}

int sym_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  // rows 0..i-1 contribute n, n-1, ..., n-i+1 entries
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::array<int, 2> sym_pair(int c, int n) {
  for (int i = 0; i < n; ++i) {
    const int row = n - i;
    if (c < row) return {i, i + c};
    c -= row;
  }
  fail(ErrorCode::OutOfRange, "sym_pair: component index out of range");
}

ModeLattice::ModeLattice(int n, int nmax) : n_(n), nmax_(nmax), size_(1) {
  if (n < 2 || n > 3) {
    fail(ErrorCode::InvalidArgument,
         "ModeLattice: dimension must be 2 or 3, got " + std::to_string(n));
  }
  if (nmax < 0) {
    fail(ErrorCode::InvalidArgument, "ModeLattice: nmax must be >= 0");
  }
  for (int i = 0; i < n; ++i) size_ *= static_cast<std::size_t>(side());
}

std::array<int, 3> ModeLattice::mode(std::size_t idx) const {
  std::array<int, 3> k{0, 0, 0};
  const auto s = static_cast<std::size_t>(side());
  for (int i = n_ - 1; i >= 0; --i) {
    k[static_cast<std::size_t>(i)] = static_cast<int>(idx % s) - nmax_;
    idx /= s;
  }
  return k;
}

std::size_t ModeLattice::index(std::span<const int> k) const {
  std::size_t idx = 0;
  for (int i = 0; i < n_; ++i) {
    const int ki = k[static_cast<std::size_t>(i)];
    if (ki < -nmax_ || ki > nmax_) {
      fail(ErrorCode::OutOfRange, "ModeLattice::index: mode outside lattice");
    }
    idx = idx * static_cast<std::size_t>(side()) +
          static_cast<std::size_t>(ki + nmax_);
  }
  return idx;
}

double ModeLattice::norm2(std::size_t idx) const {
  const auto k = mode(idx);
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    s += static_cast<double>(k[static_cast<std::size_t>(i)]) *
         k[static_cast<std::size_t>(i)];
  }
  return s;
}

}  // namespace linwave::spectral
