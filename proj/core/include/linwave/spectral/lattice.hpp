#pragma once

#include <array>
#include <cstddef>
#include <span>

namespace linwave::spectral {

/// Tensor rank of a field on a slice.
enum class Rank { Scalar = 0, OneForm = 1, Sym2 = 2 };

const char* to_string(Rank rank) noexcept;

/// Number of stored components: 1, n, or n(n+1)/2.
int component_count(Rank rank, int n);

/// Upper-triangle storage position of the symmetric pair (i, j).
int sym_index(int i, int j, int n);

/// Inverse of `sym_index`: the pair (i, j), i <= j, stored at `c`.
std::array<int, 2> sym_pair(int c, int n);

/// Truncated Fourier lattice {k in Z^n : |k_i| <= nmax} on the torus
/// (R / 2 pi Z)^n.
///
/// Modes are enumerated lexicographically with k_1 varying slowest, each
/// coordinate running from -nmax to nmax. With this order the mirror mode
/// -k of index i sits at index size() - 1 - i.
class ModeLattice {
 public:
  ModeLattice(int n, int nmax);

  int dim() const noexcept { return n_; }
  int nmax() const noexcept { return nmax_; }
  int side() const noexcept { return 2 * nmax_ + 1; }
  std::size_t size() const noexcept { return size_; }

  /// Integer wave vector of mode `idx`; unused trailing entries are 0.
  std::array<int, 3> mode(std::size_t idx) const;
  std::size_t index(std::span<const int> k) const;
  std::size_t mirror(std::size_t idx) const noexcept { return size_ - 1 - idx; }
  std::size_t zero_mode() const noexcept { return size_ / 2; }
  double norm2(std::size_t idx) const;

  bool operator==(const ModeLattice&) const = default;

 private:
  int n_;
  int nmax_;
  std::size_t size_;
};

}  // namespace linwave::spectral
