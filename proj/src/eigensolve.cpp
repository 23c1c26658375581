#include "hyperconv/eigensolve.hpp"

#include <algorithm>
#include <cmath>

#include "hyperconv/polynomial.hpp"

namespace hyperconv {

namespace {

// Roots of c0 + c1 x + c2 x^2 in complex arithmetic. `identically_zero`
// reports the degenerate all-zero polynomial.
std::vector<cplx> quadratic_roots(cplx c0, cplx c1, cplx c2, double zero_eps,
                                  bool* identically_zero) {
  *identically_zero = false;
  if (std::abs(c2) <= zero_eps) {
    if (std::abs(c1) <= zero_eps) {
      if (std::abs(c0) <= zero_eps) *identically_zero = true;
      return {};
    }
    return {-c0 / c1};
  }
  cplx disc = std::sqrt(c1 * c1 - 4.0 * c0 * c2);
  // Pick the subtraction-safe branch first.
  cplx q = (std::real(std::conj(c1) * disc) >= 0) ? -(c1 + disc) : -(c1 - disc);
  q *= 0.5;
  std::vector<cplx> roots;
  roots.push_back(q / c2);
  if (std::abs(q) > zero_eps) roots.push_back(c0 / q);
  else roots.push_back(q / c2);
  return roots;
}

double scale_of(const tensor<cplx>& a, cplx theta) {
  double s = std::abs(theta);
  for (const auto& v : a.entries()) s = std::max(s, std::abs(v));
  return s + 1.0;
}

void push_unique(std::vector<std::vector<cplx>>& out,
                 const std::vector<cplx>& v) {
  for (const auto& w : out) {
    double d = 0.0;
    for (size_t i = 0; i < v.size(); ++i) d = std::max(d, std::abs(v[i] - w[i]));
    if (d < 1e-7) return;
  }
  out.push_back(v);
}

}  // namespace

eigensystem_solutions solve_eigensystem_order2(const tensor<cplx>& a,
                                               cplx theta, double tol) {
  if (a.dim() != 3 || a.order() != 2)
    throw std::invalid_argument("solve_eigensystem_order2: need dim 3, order 2");

  const double scale = scale_of(a, theta);
  const double zero_eps = 1e-12 * scale;
  auto e = [&](int x, int y, int z) { return a.at({x, y, z}); };

  // Chart f = (1, t): two quadratics in t that must vanish simultaneously.
  //   E_0 = (a000 - theta) + (a001 + a010) t + a011 t^2
  //   E_1 = a100 + (a101 + a110) t + (a111 - theta) t^2
  cplx p0[3] = {e(0, 0, 0) - theta, e(0, 0, 1) + e(0, 1, 0), e(0, 1, 1)};
  cplx p1[3] = {e(1, 0, 0), e(1, 0, 1) + e(1, 1, 0), e(1, 1, 1) - theta};

  auto eval2 = [](const cplx* p, cplx t) { return p[0] + p[1] * t + p[2] * t * t; };

  eigensystem_solutions sol;
  bool z0 = false, z1 = false;
  std::vector<cplx> cand = quadratic_roots(p0[0], p0[1], p0[2], zero_eps, &z0);
  std::vector<cplx> cand1 = quadratic_roots(p1[0], p1[1], p1[2], zero_eps, &z1);
  cand.insert(cand.end(), cand1.begin(), cand1.end());
  if (z0 && z1) {
    sol.degenerate = true;
    cand = {cplx(0), cplx(1)};
  }

  for (cplx t : cand) {
    // Newton polish on whichever equation has the stronger derivative.
    for (int it = 0; it < 30; ++it) {
      cplx d0 = p0[1] + 2.0 * p0[2] * t;
      cplx d1 = p1[1] + 2.0 * p1[2] * t;
      cplx f, d;
      if (std::abs(d0) >= std::abs(d1)) { f = eval2(p0, t); d = d0; }
      else { f = eval2(p1, t); d = d1; }
      if (std::abs(d) < 1e-300) break;
      cplx step = f / d;
      if (std::abs(step) > 0.5 * (1.0 + std::abs(t))) break;
      t -= step;
      if (std::abs(step) < 1e-16 * (1.0 + std::abs(t))) break;
    }
    double res = std::max(std::abs(eval2(p0, t)), std::abs(eval2(p1, t)));
    double growth = (1.0 + std::abs(t)) * (1.0 + std::abs(t));
    if (res <= tol * growth) push_unique(sol.vectors, {cplx(1), t});
  }

  // Chart f = (0, 1): both equations are constants.
  if (std::abs(e(0, 1, 1)) <= tol && std::abs(e(1, 1, 1) - theta) <= tol)
    push_unique(sol.vectors, {cplx(0), cplx(1)});

  return sol;
}

namespace {

// Quadratic in u with polynomial-in-t coefficients: A(t) u^2 + B(t) u + C(t).
struct u_quadratic {
  poly<cplx> A, B, C;
};

// Classical resultant of two quadratics in u:
//   Res = (A0*C1 - C0*A1)^2 - (A0*B1 - B0*A1)(B0*C1 - C0*B1).
poly<cplx> resultant_u(const u_quadratic& P, const u_quadratic& Q) {
  poly<cplx> ac = P.A * Q.C - P.C * Q.A;
  poly<cplx> ab = P.A * Q.B - P.B * Q.A;
  poly<cplx> bc = P.B * Q.C - P.C * Q.B;
  return ac * ac - ab * bc;
}

}  // namespace

eigensystem_solutions solve_eigensystem_order3(const tensor<cplx>& a,
                                               cplx theta, double tol) {
  if (a.dim() != 3 || a.order() != 3)
    throw std::invalid_argument("solve_eigensystem_order3: need dim 3, order 3");

  const double scale = scale_of(a, theta);
  const double zero_eps = 1e-12 * scale;
  auto e = [&](int x, int y, int z) { return a.at({x, y, z}); };

  // E_x(t, u) for the chart f = (1, t, u), as coefficients of
  // {1, t, u, t^2, tu, u^2}; the -theta f_x^2 term lands per equation.
  struct q2 { cplx c00, c10, c01, c20, c11, c02; };
  auto form = [&](int x) {
    q2 q;
    q.c00 = e(x, 0, 0);
    q.c10 = e(x, 0, 1) + e(x, 1, 0);
    q.c01 = e(x, 0, 2) + e(x, 2, 0);
    q.c20 = e(x, 1, 1);
    q.c11 = e(x, 1, 2) + e(x, 2, 1);
    q.c02 = e(x, 2, 2);
    return q;
  };
  q2 E[3] = {form(0), form(1), form(2)};
  E[0].c00 -= theta;
  E[1].c20 -= theta;
  E[2].c02 -= theta;

  auto eval_q2 = [](const q2& q, cplx t, cplx u) {
    return q.c00 + q.c10 * t + q.c01 * u + q.c20 * t * t + q.c11 * t * u +
           q.c02 * u * u;
  };
  auto residual = [&](cplx t, cplx u) {
    double r = 0.0;
    for (int x = 0; x < 3; ++x) r = std::max(r, std::abs(eval_q2(E[x], t, u)));
    return r;
  };

  auto as_u_quadratic = [](const q2& q) {
    u_quadratic w;
    w.A = poly<cplx>({q.c02});
    w.B = poly<cplx>({q.c01, q.c11});
    w.C = poly<cplx>({q.c00, q.c10, q.c20});
    return w;
  };

  eigensystem_solutions sol;
  std::vector<std::pair<cplx, cplx>> cands;

  int zero_resultants = 0;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto& pr : pairs) {
    u_quadratic P = as_u_quadratic(E[pr[0]]);
    u_quadratic Q = as_u_quadratic(E[pr[1]]);
    poly<cplx> res = resultant_u(P, Q);
    // Trim numerically negligible leading coefficients.
    while (!res.c.empty() && std::abs(res.c.back()) <= zero_eps * scale * scale * scale)
      res.c.pop_back();
    if (res.is_zero() || res.degree() < 1) {
      if (res.is_zero()) ++zero_resultants;
      continue;
    }
    for (cplx t : find_roots(res)) {
      for (int x = 0; x < 3; ++x) {
        bool ident = false;
        const q2& q = E[x];
        for (cplx u : quadratic_roots(q.c00 + q.c10 * t + q.c20 * t * t,
                                      q.c01 + q.c11 * t, q.c02, zero_eps,
                                      &ident))
          cands.emplace_back(t, u);
      }
    }
  }
  if (zero_resultants == 3) {
    sol.degenerate = true;
    for (int ti = 0; ti <= 1; ++ti)
      for (int ui = 0; ui <= 1; ++ui)
        cands.emplace_back(cplx(ti), cplx(ui));
  }

  for (auto& [t0, u0] : cands) {
    cplx t = t0, u = u0;
    // Newton polish on the (E_0, E_1) pair; fall back through pairs if the
    // Jacobian degenerates.
    for (int it = 0; it < 40; ++it) {
      int best_i = 0, best_j = 1;
      cplx jtt, jtu, jut, juu, det_best(0);
      for (auto& pr : pairs) {
        const q2& P = E[pr[0]];
        const q2& Q = E[pr[1]];
        cplx a11 = P.c10 + 2.0 * P.c20 * t + P.c11 * u;
        cplx a12 = P.c01 + P.c11 * t + 2.0 * P.c02 * u;
        cplx a21 = Q.c10 + 2.0 * Q.c20 * t + Q.c11 * u;
        cplx a22 = Q.c01 + Q.c11 * t + 2.0 * Q.c02 * u;
        cplx det = a11 * a22 - a12 * a21;
        if (std::abs(det) > std::abs(det_best)) {
          det_best = det;
          jtt = a11; jtu = a12; jut = a21; juu = a22;
          best_i = pr[0]; best_j = pr[1];
        }
      }
      if (std::abs(det_best) < 1e-200) break;
      cplx f1 = eval_q2(E[best_i], t, u);
      cplx f2 = eval_q2(E[best_j], t, u);
      cplx dt = (f1 * juu - f2 * jtu) / det_best;
      cplx du = (jtt * f2 - jut * f1) / det_best;
      if (std::abs(dt) + std::abs(du) > 1.0 + std::abs(t) + std::abs(u)) break;
      t -= dt;
      u -= du;
      if (std::abs(dt) + std::abs(du) < 1e-16 * (1.0 + std::abs(t) + std::abs(u)))
        break;
    }
    double growth = (1.0 + std::abs(t) + std::abs(u));
    if (residual(t, u) <= tol * growth * growth)
      push_unique(sol.vectors, {cplx(1), t, u});
  }

  // Chart f = (0, 1, u): E_x become univariate quadratics in u.
  {
    std::vector<cplx> ucands;
    int ident_count = 0;
    for (int x = 0; x < 3; ++x) {
      cplx c0 = e(x, 1, 1) - (x == 1 ? theta : cplx(0));
      cplx c1 = e(x, 1, 2) + e(x, 2, 1);
      cplx c2 = e(x, 2, 2) - (x == 2 ? theta : cplx(0));
      bool ident = false;
      for (cplx u : quadratic_roots(c0, c1, c2, zero_eps, &ident))
        ucands.push_back(u);
      if (ident) ++ident_count;
    }
    if (ident_count == 3) {
      sol.degenerate = true;
      ucands.push_back(cplx(0));
      ucands.push_back(cplx(1));
    }
    for (cplx u : ucands) {
      double r = 0.0;
      for (int x = 0; x < 3; ++x) {
        cplx v = e(x, 1, 1) + (e(x, 1, 2) + e(x, 2, 1)) * u + e(x, 2, 2) * u * u;
        cplx rhs = (x == 1 ? theta : (x == 2 ? theta * u * u : cplx(0)));
        r = std::max(r, std::abs(v - rhs));
      }
      double growth = (1.0 + std::abs(u)) * (1.0 + std::abs(u));
      if (r <= tol * growth) push_unique(sol.vectors, {cplx(0), cplx(1), u});
    }
  }

  // Chart f = (0, 0, 1).
  {
    double r = std::max({std::abs(e(0, 2, 2)), std::abs(e(1, 2, 2)),
                         std::abs(e(2, 2, 2) - theta)});
    if (r <= tol) push_unique(sol.vectors, {cplx(0), cplx(0), cplx(1)});
  }

  return sol;
}

}  // namespace hyperconv
