#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperconv/rational.hpp"

namespace hyperconv {

using cplx = std::complex<double>;

// Entry budget for dense storage: order^dim must stay within desk scale.
inline constexpr std::int64_t kMaxDenseEntries = std::int64_t(1) << 26;

inline std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > kMaxDenseEntries / base)
      throw std::length_error("dense tensor exceeds the 2^26 entry budget");
    r *= base;
  }
  return r;
}

// Dense d-dimensional matrix of order n, row-major over index tuples
// (x_1, ..., x_d), all indices 0-based.
template <class T>
class tensor {
 public:
  tensor(int dim, int order)
      : dim_(dim), order_(order), entries_(size_checked(dim, order), T(0)) {
    if (dim < 1 || order < 1)
      throw std::invalid_argument("tensor: dim and order must be positive");
  }

  int dim() const { return dim_; }
  int order() const { return order_; }
  std::int64_t size() const { return (std::int64_t)entries_.size(); }

  const std::vector<T>& entries() const { return entries_; }
  std::vector<T>& entries() { return entries_; }

  T& operator[](std::int64_t flat) { return entries_[flat]; }
  const T& operator[](std::int64_t flat) const { return entries_[flat]; }

  T& at(const std::vector<int>& idx) { return entries_[flatten(idx)]; }
  const T& at(const std::vector<int>& idx) const { return entries_[flatten(idx)]; }

  std::int64_t flatten(const std::vector<int>& idx) const {
    if ((int)idx.size() != dim_)
      throw std::invalid_argument("tensor: index tuple has wrong length");
    std::int64_t flat = 0;
    for (int i = 0; i < dim_; ++i) {
      if (idx[i] < 0 || idx[i] >= order_)
        throw std::out_of_range("tensor: index out of range");
      flat = flat * order_ + idx[i];
    }
    return flat;
  }

  std::vector<int> unflatten(std::int64_t flat) const {
    std::vector<int> idx(dim_);
    for (int i = dim_ - 1; i >= 0; --i) {
      idx[i] = int(flat % order_);
      flat /= order_;
    }
    return idx;
  }

  friend bool operator==(const tensor& a, const tensor& b) {
    return a.dim_ == b.dim_ && a.order_ == b.order_ && a.entries_ == b.entries_;
  }

 private:
  static std::int64_t size_checked(int dim, int order) {
    return checked_pow(order, dim);
  }

  int dim_;
  int order_;
  std::vector<T> entries_;
};

template <class T>
tensor<T> identity_tensor(int dim, int order) {
  tensor<T> id(dim, order);
  for (int x = 0; x < order; ++x) {
    std::int64_t flat = 0;
    for (int i = 0; i < dim; ++i) flat = flat * order + x;
    id[flat] = T(1);
  }
  return id;
}

// A . (f_1, ..., f_{d-1}); the result g has g(x) = sum over all index
// tuples of a_{x,x_1,...,x_{d-1}} f_1(x_1) ... f_{d-1}(x_{d-1}).
template <class T>
std::vector<T> combined_product(const tensor<T>& a,
                                const std::vector<std::vector<T>>& fs) {
  const int d = a.dim();
  const int n = a.order();
  if ((int)fs.size() != d - 1)
    throw std::invalid_argument("combined_product: expected " +
                                std::to_string(d - 1) + " vectors, got " +
                                std::to_string(fs.size()));
  for (size_t i = 0; i < fs.size(); ++i)
    if ((int)fs[i].size() != n)
      throw std::invalid_argument("combined_product: vector " +
                                  std::to_string(i) + " has length " +
                                  std::to_string(fs[i].size()) +
                                  ", expected " + std::to_string(n));

  std::vector<T> out(n, T(0));
  const std::int64_t inner = a.size() / n;
  for (int x = 0; x < n; ++x) {
    T acc(0);
    for (std::int64_t rest = 0; rest < inner; ++rest) {
      const T& entry = a[(std::int64_t)x * inner + rest];
      if (entry == T(0)) continue;
      T prod = entry;
      std::int64_t r = rest;
      for (int i = d - 2; i >= 0; --i) {
        prod *= fs[i][r % n];
        r /= n;
      }
      acc += prod;
    }
    out[x] = acc;
  }
  return out;
}

template <class T>
std::vector<T> apply(const tensor<T>& a, const std::vector<T>& f) {
  return combined_product(a, std::vector<std::vector<T>>(a.dim() - 1, f));
}

// A o B for a d-dimensional A and t-dimensional B of the same order;
// the result is ((d-1)(t-1)+1)-dimensional with
//   c_{x, y^2, ..., y^d} = sum_{x_2..x_d} a_{x,x_2..x_d} b_{x_2,y^2} ... b_{x_d,y^d},
// each block y^i running over (t-1)-tuples.
template <class T>
tensor<T> tensor_product(const tensor<T>& a, const tensor<T>& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("tensor_product: order mismatch");
  const int d = a.dim();
  const int t = b.dim();
  const int n = a.order();
  const int rdim = (d - 1) * (t - 1) + 1;
  tensor<T> c(rdim, n);

  const std::int64_t block = checked_pow(n, t - 1);   // size of one y^i block
  const std::int64_t a_inner = a.size() / n;          // tuples (x_2..x_d)
  const std::int64_t r_inner = c.size() / n;          // all blocks combined

  for (int x = 0; x < n; ++x) {
    for (std::int64_t rest = 0; rest < r_inner; ++rest) {
      // Decode block offsets off_2..off_d (row-major, y^d varies fastest).
      std::int64_t offs[16];
      std::int64_t r = rest;
      for (int i = d - 2; i >= 0; --i) {
        offs[i] = r % block;
        r /= block;
      }
      T acc(0);
      for (std::int64_t xs = 0; xs < a_inner; ++xs) {
        const T& av = a[(std::int64_t)x * a_inner + xs];
        if (av == T(0)) continue;
        T prod = av;
        std::int64_t q = xs;
        for (int i = d - 2; i >= 0; --i) {
          int xi = int(q % n);
          q /= n;
          prod *= b[(std::int64_t)xi * block + offs[i]];
          if (prod == T(0)) break;
        }
        acc += prod;
      }
      c[(std::int64_t)x * r_inner + rest] = acc;
    }
  }
  return c;
}

// Kronecker product: z_i = x_i * n2 + y_i in 0-based indexing (the 1-based
// formula z_i = (x_i - 1) n2 + y_i translated once, here).
template <class T>
tensor<T> kronecker(const tensor<T>& a, const tensor<T>& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("kronecker: dimension mismatch");
  const int d = a.dim();
  const int n1 = a.order();
  const int n2 = b.order();
  tensor<T> c(d, n1 * n2);
  const std::int64_t csize = c.size();
  for (std::int64_t flat = 0; flat < csize; ++flat) {
    std::int64_t af = 0, bf = 0, r = flat;
    // Decode digits of the result tuple from the least significant side.
    std::int64_t apow = 1, bpow = 1;
    for (int i = 0; i < d; ++i) {
      int zi = int(r % (n1 * n2));
      r /= (std::int64_t)n1 * n2;
      af += (std::int64_t)(zi / n2) * apow;
      bf += (std::int64_t)(zi % n2) * bpow;
      apow *= n1;
      bpow *= n2;
    }
    c[flat] = a[af] * b[bf];
  }
  return c;
}

template <class T>
tensor<T> kronecker_power(const tensor<T>& a, int copies) {
  if (copies < 1) throw std::invalid_argument("kronecker_power: copies >= 1");
  tensor<T> r = a;
  for (int i = 1; i < copies; ++i) r = kronecker(r, a);
  return r;
}

inline tensor<cplx> to_complex(const tensor<rat>& a) {
  tensor<cplx> c(a.dim(), a.order());
  for (std::int64_t i = 0; i < a.size(); ++i)
    c[i] = cplx(a[i].to_double(), 0.0);
  return c;
}

struct eigen_pair {
  cplx value;
  std::vector<cplx> vector;
  double residual = 0.0;
  bool ok = false;  // residual <= the tolerance it was checked against
};

// Residual of A o f = theta (I o f), i.e. max |(A o f)(x) - theta f(x)^{d-1}|.
eigen_pair verify_eigenpair(const tensor<cplx>& a, const std::vector<cplx>& f,
                            cplx theta, double tol);

}  // namespace hyperconv
