#pragma once

#include <array>
#include <vector>

#include "linwave/common.hpp"

namespace linwave::geometry {

/// Time derivatives d^j f / dt^j, j = 0..order, of one component at a fixed
/// time. Products follow the Leibniz rule; d/dt shifts and drops one order.
struct Jet {
  static constexpr int kMax = 8;

  std::array<cplx, kMax + 1> d{};
  int order = -1;  // highest valid derivative; -1 means empty

  static Jet zero(int order);
  static Jet constant(cplx v, int order);

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet& operator*=(cplx s);
  Jet dt() const;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator*(cplx s, Jet a);
Jet operator*(const Jet& a, const Jet& b);
/// a += s * b without temporaries.
void axpy(Jet& a, cplx s, const Jet& b);
/// a += b * c (Leibniz product accumulated).
void fma(Jet& a, const Jet& b, const Jet& c);

/// Jet of t^power at time t.
Jet power_jet(double t, double power, int order);

/// Full (unpacked) spacetime tensor of rank r in D dimensions with jet
/// entries, first index slowest.
struct JetTensor {
  int D = 4;
  int rank = 0;
  std::vector<Jet> c;

  JetTensor() = default;
  JetTensor(int D_, int rank_, int order);

  std::size_t size() const noexcept { return c.size(); }
  Jet& operator[](std::size_t i) { return c[i]; }
  const Jet& operator[](std::size_t i) const { return c[i]; }
  int order() const;
};

}  // namespace linwave::geometry
