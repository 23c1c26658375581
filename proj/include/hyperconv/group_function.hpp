#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hyperconv/group.hpp"
#include "hyperconv/tensor.hpp"

namespace hyperconv {

// Complex-valued function on a group; the universal carrier for indicators,
// sign functions and eigenfunctions.
struct group_function {
  group g;
  std::vector<cplx> values;

  group_function(group gr, std::vector<cplx> v) : g(gr), values(std::move(v)) {
    if ((long long)values.size() != g.size())
      throw std::invalid_argument("group_function: length must equal group size");
  }
  explicit group_function(group gr) : g(gr), values(gr.size(), cplx(0)) {}

  cplx& operator[](long long x) { return values[x]; }
  const cplx& operator[](long long x) const { return values[x]; }
};

// Tagged constructors. Indicators are 0/1, sign functions are +-1.
group_function indicator(const group& g, const std::vector<long long>& set);
group_function delta_zero(const group& g);
group_function all_one(const group& g);
// Truth table of a Boolean function on F_2^n -> the +-1 function (-1)^f.
group_function sign_function(const group& g, const std::vector<int>& truth_table);

// (f * g)(x) = sum_y f(y) g(x - y).
group_function convolve_direct(const group_function& f, const group_function& h);
group_function convolve_fast(const group_function& f, const group_function& h);
// Direct summation, except the fast XOR path takes over above |G| = 256.
group_function convolve(const group_function& f, const group_function& h);

// Convolution of t+1 copies of f.
group_function t_fold_convolve(const group_function& f, int t);

// Exact integer paths (used by the design checkers, where no floating
// error may enter a verdict).
std::vector<long long> convolve_int(const group& g,
                                    const std::vector<long long>& f,
                                    const std::vector<long long>& h);
std::vector<long long> t_fold_convolve_int(const group& g,
                                           const std::vector<long long>& f,
                                           int t);

// In-place unnormalized Walsh-Hadamard transform, W(x) = sum_z f(z)(-1)^(x,z).
void walsh_in_place(std::vector<long long>& f);
void walsh_in_place(std::vector<cplx>& f);

// Linear transform g -> 2^{-n/2} sum_z g(z) (-1)^{(x,z)}; an involution.
group_function sign_fourier(const group_function& f);
// Fourier transform of a Boolean 0/1 truth table, i.e. the sign transform
// of (-1)^f.
group_function boolean_fourier(const group& g, const std::vector<int>& truth_table);

// (t+2)-dimensional 0/1 convolution tensor: entry 1 iff x_1 = x_2 + ... + x_{t+2}.
template <class T>
tensor<T> dense_convolution_tensor(const group& g, int t) {
  if (t < 1) throw std::invalid_argument("dense_convolution_tensor: t >= 1");
  const int n = (int)g.size();
  tensor<T> a(t + 2, n);
  const std::int64_t inner = a.size() / n;
  for (std::int64_t rest = 0; rest < inner; ++rest) {
    long long sum = 0;
    std::int64_t r = rest;
    for (int i = 0; i < t + 1; ++i) {
      sum = g.add(sum, (long long)(r % n));
      r /= n;
    }
    a[sum * inner + rest] = T(1);
  }
  return a;
}

}  // namespace hyperconv
