#pragma once

#include <complex>
#include <vector>

#include "hyperconv/rational.hpp"

namespace hyperconv {

using cplx = std::complex<double>;

// Dense univariate polynomial, coefficients in ascending degree order.
// Trailing zero coefficients are trimmed by normalize().
template <class T>
struct poly {
  std::vector<T> c;

  poly() = default;
  explicit poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }
  static poly constant(T v) { return poly(std::vector<T>{v}); }

  int degree() const { return (int)c.size() - 1; }  // -1 for the zero poly
  bool is_zero() const { return c.empty(); }

  void normalize() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }

  T eval(const T& x) const {
    T acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  friend poly operator+(const poly& a, const poly& b) {
    std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return poly(std::move(r));
  }
  friend poly operator-(const poly& a, const poly& b) {
    std::vector<T> r(std::max(a.c.size(), b.c.size()), T(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return poly(std::move(r));
  }
  friend poly operator*(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero()) return poly();
    std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return poly(std::move(r));
  }
  friend poly operator*(const T& s, const poly& a) {
    std::vector<T> r = a.c;
    for (auto& v : r) v *= s;
    return poly(std::move(r));
  }

  poly derivative() const {
    if (c.size() <= 1) return poly();
    std::vector<T> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * T((long long)i);
    return poly(std::move(r));
  }
};

using rat_poly = poly<rat>;

inline poly<cplx> to_complex(const rat_poly& p) {
  std::vector<cplx> c(p.c.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = cplx(p.c[i].to_double(), 0.0);
  return poly<cplx>(std::move(c));
}

// All complex roots of a polynomial of degree >= 1 (Durand-Kerner with
// Newton polishing). Degrees here never exceed ~8.
std::vector<cplx> find_roots(const poly<cplx>& p);

}  // namespace hyperconv
