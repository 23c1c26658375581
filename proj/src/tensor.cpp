#include "hyperconv/tensor.hpp"

#include <cmath>

namespace hyperconv {

eigen_pair verify_eigenpair(const tensor<cplx>& a, const std::vector<cplx>& f,
                            cplx theta, double tol) {
  if ((int)f.size() != a.order())
    throw std::invalid_argument("verify_eigenpair: vector length mismatch");
  if (tol <= 0) throw std::invalid_argument("verify_eigenpair: tol must be positive");
  bool nonzero = false;
  for (const auto& v : f) nonzero |= (v != cplx(0));
  if (!nonzero)
    throw std::invalid_argument("verify_eigenpair: eigenvector must be nonzero");

  std::vector<cplx> lhs = apply(a, f);
  double res = 0.0;
  for (int x = 0; x < a.order(); ++x) {
    cplx fpow(1);
    for (int i = 0; i < a.dim() - 1; ++i) fpow *= f[x];
    res = std::max(res, std::abs(lhs[x] - theta * fpow));
  }
  eigen_pair p;
  p.value = theta;
  p.vector = f;
  p.residual = res;
  p.ok = res <= tol;
  return p;
}

}  // namespace hyperconv
