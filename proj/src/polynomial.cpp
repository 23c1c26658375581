#include "hyperconv/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperconv {

std::vector<cplx> find_roots(const poly<cplx>& p) {
  if (p.degree() < 1)
    throw std::invalid_argument("find_roots: degree must be at least 1");

  // Monic copy.
  std::vector<cplx> a = p.c;
  const cplx lead = a.back();
  for (auto& v : a) v /= lead;
  const int n = (int)a.size() - 1;

  auto eval = [&](cplx x) {
    cplx acc(0);
    for (int i = n; i >= 0; --i) acc = acc * x + a[i];
    return acc;
  };

  // Cauchy-style radius bound for the initial ring of guesses.
  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(a[i]));
  radius = 1.0 + radius;

  std::vector<cplx> z(n);
  for (int i = 0; i < n; ++i) {
    double ang = 2.0 * M_PI * i / n + 0.4;  // offset avoids real-axis symmetry traps
    z[i] = 0.5 * radius * cplx(std::cos(ang), std::sin(ang));
  }

  for (int iter = 0; iter < 600; ++iter) {
    double shift = 0.0;
    for (int i = 0; i < n; ++i) {
      cplx denom(1);
      for (int j = 0; j < n; ++j)
        if (j != i) denom *= z[i] - z[j];
      if (std::abs(denom) == 0.0) { denom = cplx(1e-12, 1e-12); }
      cplx d = eval(z[i]) / denom;
      z[i] -= d;
      shift = std::max(shift, std::abs(d));
    }
    if (shift < 1e-14 * (1.0 + radius)) break;
  }

  // Newton polishing against the original (better-conditioned) coefficients.
  poly<cplx> dp = p.derivative();
  for (auto& root : z) {
    for (int it = 0; it < 40; ++it) {
      cplx f = p.eval(root);
      cplx fd = dp.eval(root);
      if (std::abs(fd) < 1e-300) break;
      cplx step = f / fd;
      root -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(root))) break;
    }
  }
  return z;
}

}  // namespace hyperconv
