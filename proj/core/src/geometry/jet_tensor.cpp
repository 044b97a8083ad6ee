#include "linwave/geometry/jet_tensor.hpp"

#include <algorithm>
#include <cmath>

namespace linwave::geometry {

namespace {

constexpr auto binomials() {
  std::array<std::array<double, Jet::kMax + 1>, Jet::kMax + 1> b{};
  for (int n = 0; n <= Jet::kMax; ++n) {
    b[static_cast<std::size_t>(n)][0] = 1.0;
    for (int k = 1; k <= n; ++k) {
      b[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
          b[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)] +
          (k <= n - 1 ? b[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)] : 0.0);
    }
  }
  return b;
}

constexpr auto kBinom = binomials();

}  // namespace

Jet Jet::zero(int order) {
  Jet j;
  j.order = std::min(order, kMax);
  return j;
}

Jet Jet::constant(cplx v, int order) {
  Jet j = zero(order);
  j.d[0] = v;
  return j;
}

Jet& Jet::operator+=(const Jet& o) {
  order = std::min(order, o.order);
  for (int i = 0; i <= order; ++i) d[static_cast<std::size_t>(i)] += o.d[static_cast<std::size_t>(i)];
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  order = std::min(order, o.order);
  for (int i = 0; i <= order; ++i) d[static_cast<std::size_t>(i)] -= o.d[static_cast<std::size_t>(i)];
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (int i = 0; i <= order; ++i) d[static_cast<std::size_t>(i)] *= s;
  return *this;
}

Jet Jet::dt() const {
  Jet j = zero(order - 1);
  for (int i = 0; i <= j.order; ++i) j.d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i + 1)];
  return j;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator*(cplx s, Jet a) { return a *= s; }

void axpy(Jet& a, cplx s, const Jet& b) {
  a.order = std::min(a.order, b.order);
  for (int i = 0; i <= a.order; ++i) a.d[static_cast<std::size_t>(i)] += s * b.d[static_cast<std::size_t>(i)];
}

void fma(Jet& a, const Jet& b, const Jet& c) {
  a.order = std::min({a.order, b.order, c.order});
  for (int j = 0; j <= a.order; ++j) {
    cplx s = 0.0;
    const auto& row = kBinom[static_cast<std::size_t>(j)];
    for (int i = 0; i <= j; ++i) {
      s += row[static_cast<std::size_t>(i)] * b.d[static_cast<std::size_t>(i)] *
           c.d[static_cast<std::size_t>(j - i)];
    }
    a.d[static_cast<std::size_t>(j)] += s;
  }
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet out = Jet::zero(std::min(a.order, b.order));
  fma(out, a, b);
  return out;
}

Jet power_jet(double t, double power, int order) {
  Jet j = Jet::zero(order);
  double coef = 1.0;
  for (int i = 0; i <= j.order; ++i) {
    j.d[static_cast<std::size_t>(i)] = coef * std::pow(t, power - i);
    coef *= (power - i);
  }
  return j;
}

JetTensor::JetTensor(int D_, int rank_, int order) : D(D_), rank(rank_) {
  std::size_t s = 1;
  for (int i = 0; i < rank_; ++i) s *= static_cast<std::size_t>(D_);
  c.assign(s, Jet::zero(order));
}

int JetTensor::order() const {
  int o = Jet::kMax;
  for (const auto& j : c) o = std::min(o, j.order);
  return o;
}

}  // namespace linwave::geometry
