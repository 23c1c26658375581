#include "hyperconv/group_function.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperconv {

group_function indicator(const group& g, const std::vector<long long>& set) {
  group_function f(g);
  for (long long x : set) {
    if (x < 0 || x >= g.size())
      throw std::out_of_range("indicator: element out of range");
    f[x] = cplx(1);
  }
  return f;
}

group_function delta_zero(const group& g) { return indicator(g, {0}); }

group_function all_one(const group& g) {
  group_function f(g);
  for (auto& v : f.values) v = cplx(1);
  return f;
}

group_function sign_function(const group& g, const std::vector<int>& tt) {
  if (g.prime != 2)
    throw std::domain_error("sign_function: truth tables live on F_2^n");
  if ((long long)tt.size() != g.size())
    throw std::invalid_argument("sign_function: truth table length mismatch");
  group_function f(g);
  for (long long x = 0; x < g.size(); ++x) {
    if (tt[x] != 0 && tt[x] != 1)
      throw std::invalid_argument("sign_function: truth table values must be 0/1");
    f[x] = tt[x] ? cplx(-1) : cplx(1);
  }
  return f;
}

group_function convolve_direct(const group_function& f, const group_function& h) {
  if (f.g != h.g) throw std::invalid_argument("convolve: group mismatch");
  const group& g = f.g;
  group_function out(g);
  for (long long x = 0; x < g.size(); ++x) {
    cplx acc(0);
    for (long long y = 0; y < g.size(); ++y) acc += f[y] * h[g.sub(x, y)];
    out[x] = acc;
  }
  return out;
}

void walsh_in_place(std::vector<long long>& f) {
  const size_t n = f.size();
  for (size_t len = 1; len < n; len <<= 1)
    for (size_t i = 0; i < n; i += len << 1)
      for (size_t j = i; j < i + len; ++j) {
        long long u = f[j], v = f[j + len];
        f[j] = u + v;
        f[j + len] = u - v;
      }
}

void walsh_in_place(std::vector<cplx>& f) {
  const size_t n = f.size();
  for (size_t len = 1; len < n; len <<= 1)
    for (size_t i = 0; i < n; i += len << 1)
      for (size_t j = i; j < i + len; ++j) {
        cplx u = f[j], v = f[j + len];
        f[j] = u + v;
        f[j + len] = u - v;
      }
}

group_function convolve_fast(const group_function& f, const group_function& h) {
  if (f.g != h.g) throw std::invalid_argument("convolve: group mismatch");
  if (f.g.prime != 2)
    throw std::domain_error("convolve_fast: fast path exists only for p = 2");
  std::vector<cplx> a = f.values, b = h.values;
  walsh_in_place(a);
  walsh_in_place(b);
  for (size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
  walsh_in_place(a);
  const double inv = 1.0 / double(f.g.size());
  for (auto& v : a) v *= inv;
  return group_function(f.g, std::move(a));
}

group_function convolve(const group_function& f, const group_function& h) {
  if (f.g != h.g) throw std::invalid_argument("convolve: group mismatch");
  if (f.g.prime == 2 && f.g.size() > 256) return convolve_fast(f, h);
  return convolve_direct(f, h);
}

group_function t_fold_convolve(const group_function& f, int t) {
  if (t < 1) throw std::invalid_argument("t_fold_convolve: t >= 1");
  group_function acc = f;
  for (int i = 0; i < t; ++i) acc = convolve(acc, f);
  return acc;
}

std::vector<long long> convolve_int(const group& g,
                                    const std::vector<long long>& f,
                                    const std::vector<long long>& h) {
  if ((long long)f.size() != g.size() || (long long)h.size() != g.size())
    throw std::invalid_argument("convolve_int: length mismatch");
  std::vector<long long> out(g.size(), 0);
  for (long long x = 0; x < g.size(); ++x) {
    long long acc = 0;
    for (long long y = 0; y < g.size(); ++y) acc += f[y] * h[g.sub(x, y)];
    out[x] = acc;
  }
  return out;
}

std::vector<long long> t_fold_convolve_int(const group& g,
                                           const std::vector<long long>& f,
                                           int t) {
  if (t < 1) throw std::invalid_argument("t_fold_convolve_int: t >= 1");
  if (g.prime == 2) {
    // Exact via the integer Walsh transform; every value stays integral.
    std::vector<long long> w = f;
    walsh_in_place(w);
    std::vector<long long> pw(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
      long long p = 1;
      for (int j = 0; j < t + 1; ++j) p *= w[i];
      pw[i] = p;
    }
    walsh_in_place(pw);
    for (auto& v : pw) {
      if (v % g.size() != 0)
        throw std::logic_error("t_fold_convolve_int: non-integral transform result");
      v /= g.size();
    }
    return pw;
  }
  std::vector<long long> acc = f;
  for (int i = 0; i < t; ++i) acc = convolve_int(g, acc, f);
  return acc;
}

group_function sign_fourier(const group_function& f) {
  if (f.g.prime != 2)
    throw std::domain_error("sign_fourier: only defined over F_2^n");
  std::vector<cplx> a = f.values;
  walsh_in_place(a);
  const double scale = std::pow(2.0, -0.5 * f.g.rank);
  for (auto& v : a) v *= scale;
  return group_function(f.g, std::move(a));
}

group_function boolean_fourier(const group& g, const std::vector<int>& tt) {
  return sign_fourier(sign_function(g, tt));
}

}  // namespace hyperconv
