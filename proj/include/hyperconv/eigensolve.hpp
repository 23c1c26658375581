#pragma once

#include "hyperconv/tensor.hpp"

namespace hyperconv {

struct eigensystem_solutions {
  // Each vector is reported in chart form: first nonzero coordinate is 1,
  // so the eigen-equation holds for the given theta with this exact scaling.
  std::vector<std::vector<cplx>> vectors;
  // True when a chart system vanished identically (continuum of solutions);
  // representative solutions are returned in that case.
  bool degenerate = false;
};

// All projective solutions f of (A o f)(x) = theta f(x)^2 for a
// 3-dimensional tensor of order 2, via the charts f = (1, t) and f = (0, 1).
eigensystem_solutions solve_eigensystem_order2(const tensor<cplx>& a,
                                               cplx theta, double tol = 1e-9);

// Order-3 analog, charts f = (1, t, u), (0, 1, u), (0, 0, 1); the two-variable
// quadratic systems are reduced by resultant elimination of u.
eigensystem_solutions solve_eigensystem_order3(const tensor<cplx>& a,
                                               cplx theta, double tol = 1e-9);

}  // namespace hyperconv
