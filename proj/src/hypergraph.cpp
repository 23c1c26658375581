#include "hyperconv/hypergraph.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace hyperconv {

std::vector<cplx> adjacency_apply(const hypergraph& h,
                                  const std::vector<std::vector<cplx>>& fs) {
  const int d = h.uniformity();
  const long long nv = h.vertex_count();
  if ((int)fs.size() != d - 1)
    throw std::invalid_argument("adjacency_apply: expected " +
                                std::to_string(d - 1) + " vectors");
  for (size_t i = 0; i < fs.size(); ++i)
    if ((long long)fs[i].size() != nv)
      throw std::invalid_argument("adjacency_apply: vector " + std::to_string(i) +
                                  " has wrong length");

  long long fact = 1;
  for (int i = 2; i < d; ++i) fact *= i;
  const double inv_fact = 1.0 / double(fact);

  std::vector<cplx> out(nv, cplx(0));
  std::vector<int> rest(d - 1);
  h.for_each_edge([&](const std::vector<int>& e) {
    for (int j = 0; j < d; ++j) {
      int x = e[j];
      int m = 0;
      for (int i = 0; i < d; ++i)
        if (i != j) rest[m++] = e[i];
      std::sort(rest.begin(), rest.end());
      cplx perm_sum(0);
      do {
        cplx prod(1);
        for (int i = 0; i < d - 1; ++i) prod *= fs[i][rest[i]];
        perm_sum += prod;
      } while (std::next_permutation(rest.begin(), rest.end()));
      out[x] += perm_sum * inv_fact;
    }
  });
  return out;
}

std::vector<long long> adjacency_apply_int(const hypergraph& h,
                                           const std::vector<long long>& f) {
  const int d = h.uniformity();
  if ((long long)f.size() != h.vertex_count())
    throw std::invalid_argument("adjacency_apply_int: vector length mismatch");
  std::vector<long long> out(h.vertex_count(), 0);
  h.for_each_edge([&](const std::vector<int>& e) {
    for (int j = 0; j < d; ++j) {
      long long prod = 1;
      for (int i = 0; i < d; ++i)
        if (i != j) prod *= f[e[i]];
      out[e[j]] += prod;
    }
  });
  return out;
}

std::vector<vertex_census> color_census(const hypergraph& h, const coloring& c) {
  if ((long long)c.color.size() != h.vertex_count())
    throw std::invalid_argument("color_census: coloring does not cover all vertices");
  std::vector<vertex_census> census(h.vertex_count());
  const int d = h.uniformity();
  color_range range(d);
  h.for_each_edge([&](const std::vector<int>& e) {
    for (int i = 0; i < d; ++i) range[i] = c.color[e[i]];
    std::sort(range.begin(), range.end());
    for (int v : e) ++census[v][range];
  });
  return census;
}

namespace {

long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// S from the censuses of one representative per color: s_i = v_{i_1,i}
// divided by the multinomial coefficient of the multiset {i_2..i_d}.
tensor<rat> parameter_tensor_from_census(const std::vector<vertex_census>& census,
                                         const coloring& c, int d,
                                         const std::vector<long long>& reps) {
  const int k = c.k;
  tensor<rat> s(d, k);
  std::vector<int> idx(d), sorted_range(d), mult(k);
  const long long total = s.size();
  for (long long flat = 0; flat < total; ++flat) {
    long long r = flat;
    for (int i = d - 1; i >= 0; --i) {
      idx[i] = int(r % k);
      r /= k;
    }
    if (reps[idx[0]] < 0) continue;  // vacuous row: color class empty
    sorted_range = idx;
    std::sort(sorted_range.begin(), sorted_range.end());
    const vertex_census& vc = census[reps[idx[0]]];
    auto it = vc.find(sorted_range);
    long long v = it == vc.end() ? 0 : it->second;
    if (v == 0) continue;
    std::fill(mult.begin(), mult.end(), 0);
    for (int i = 1; i < d; ++i) ++mult[idx[i]];
    long long num = v;
    for (int j = 0; j < k; ++j) num *= factorial(mult[j]);
    s[flat] = rat(num, factorial(d - 1));
  }
  return s;
}

}  // namespace

perfect_check_result check_perfect(const hypergraph& h, const coloring& c) {
  perfect_check_result res;
  std::vector<vertex_census> census = color_census(h, c);

  std::vector<long long> reps(c.k, -1);
  for (long long v = 0; v < h.vertex_count(); ++v) {
    int col = c.color[v];
    if (reps[col] < 0) {
      reps[col] = v;
      continue;
    }
    if (census[v] != census[reps[col]]) {
      res.perfect = false;
      res.witness_u = reps[col];
      res.witness_v = v;
      // First range on which the two censuses disagree.
      const auto &a = census[reps[col]], &b = census[v];
      for (const auto& [range, cnt] : a) {
        auto it = b.find(range);
        if (it == b.end() || it->second != cnt) {
          res.witness_range = range;
          break;
        }
      }
      if (res.witness_range.empty())
        for (const auto& [range, cnt] : b)
          if (a.find(range) == a.end()) {
            res.witness_range = range;
            break;
          }
      return res;
    }
  }

  res.perfect = true;
  res.color_used.resize(c.k);
  for (int i = 0; i < c.k; ++i) res.color_used[i] = reps[i] >= 0;
  res.s = parameter_tensor_from_census(census, c, h.uniformity(), reps);
  return res;
}

conv_perfect_result check_perfect_via_convolution(int n, const coloring& c) {
  const group g(2, n);
  const long long size = g.size();
  if ((long long)c.color.size() != size - 1)
    throw std::invalid_argument(
        "check_perfect_via_convolution: expected a coloring of H_n");

  conv_perfect_result res;
  const int k = c.k;

  // Indicators on the full group, extended by F_i(0) = 0.
  std::vector<std::vector<long long>> F(k, std::vector<long long>(size, 0));
  std::vector<long long> reps(k, -1);
  for (long long x = 1; x < size; ++x) {
    int col = c.color[x - 1];
    F[col][x] = 1;
    if (reps[col] < 0) reps[col] = x;
  }

  tensor<rat> s(3, k);
  for (int j = 0; j < k; ++j)
    for (int l = j; l < k; ++l) {
      std::vector<long long> conv = convolve_int(g, F[j], F[l]);
      std::vector<long long> value(k, -1);
      for (long long x = 1; x < size; ++x) {
        int i = c.color[x - 1];
        if (value[i] < 0) value[i] = conv[x];
        else if (value[i] != conv[x]) {
          res.perfect = false;
          res.witness_j = j;
          res.witness_l = l;
          res.witness_x = x;
          return res;
        }
      }
      for (int i = 0; i < k; ++i) {
        if (reps[i] < 0) continue;
        rat sv(value[i], 2);
        s.at({i, j, l}) = sv;
        s.at({i, l, j}) = sv;
      }
    }

  res.perfect = true;
  res.s = std::move(s);
  return res;
}

eigen_pair lift_parameter_eigenvector(const hypergraph& h, const coloring& c,
                                      const tensor<rat>& s,
                                      const std::vector<cplx>& g, cplx theta,
                                      double tol) {
  if ((long long)c.color.size() != h.vertex_count())
    throw std::invalid_argument("lift: coloring does not match hypergraph");
  eigen_pair base = verify_eigenpair(to_complex(s), g, theta, tol);
  if (!base.ok)
    throw std::invalid_argument(
        "lift: (theta, g) is not an eigenpair of the parameter tensor "
        "(residual " + std::to_string(base.residual) + ")");

  std::vector<cplx> fg(h.vertex_count());
  for (long long v = 0; v < h.vertex_count(); ++v) fg[v] = g[c.color[v]];

  const int d = h.uniformity();
  std::vector<cplx> lhs =
      adjacency_apply(h, std::vector<std::vector<cplx>>(d - 1, fg));
  double resid = 0.0;
  for (long long v = 0; v < h.vertex_count(); ++v) {
    cplx pw(1);
    for (int i = 0; i < d - 1; ++i) pw *= fg[v];
    resid = std::max(resid, std::abs(lhs[v] - theta * pw));
  }
  eigen_pair p;
  p.value = theta;
  p.vector = std::move(fg);
  p.residual = resid;
  p.ok = resid <= tol;
  return p;
}

namespace {

// All i-subsets of 0..v-1 in lexicographic order.
template <class Fn>
void for_each_subset(long long v, int i, Fn&& fn) {
  std::vector<int> idx(i);
  for (int j = 0; j < i; ++j) idx[j] = j;
  while (true) {
    fn(idx);
    int j = i - 1;
    while (j >= 0 && idx[j] == v - i + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (int l = j + 1; l < i; ++l) idx[l] = idx[l - 1] + 1;
  }
}

}  // namespace

regularity_result total_regularity_profile(const hypergraph& h,
                                           long long exhaustive_vertex_bound) {
  regularity_result res;
  const int d = h.uniformity();
  const long long nv = h.vertex_count();

  if (nv > exhaustive_vertex_bound) {
    if (h.kind() == hypergraph_kind::subspace_h) {
      res.regular = true;
      res.r = {(1LL << (h.rank() - 1)) - 1, 1};
      return res;
    }
    if (h.kind() == hypergraph_kind::subspace_d) {
      long long m = 1LL << h.rank();
      res.regular = true;
      res.r = {(m - 1) * (m - 2) / 6, (1LL << (h.rank() - 1)) - 1, 1};
      return res;
    }
    throw std::length_error(
        "total_regularity_profile: explicit hypergraph above exhaustive bound");
  }

  res.r.assign(d - 1, 0);
  for (int i = 1; i <= d - 1; ++i) {
    std::map<std::vector<int>, long long> deg;
    std::vector<int> key;
    h.for_each_edge([&](const std::vector<int>& e) {
      for_each_subset(d, i, [&](const std::vector<int>& pick) {
        key.clear();
        for (int p : pick) key.push_back(e[p]);
        std::sort(key.begin(), key.end());
        ++deg[key];
      });
    });
    long long expected = -1;
    bool ok = true;
    for_each_subset(nv, i, [&](const std::vector<int>& subset) {
      if (!ok) return;
      auto it = deg.find(subset);
      long long dval = it == deg.end() ? 0 : it->second;
      if (expected < 0) expected = dval;
      else if (dval != expected) {
        ok = false;
        res.witness_size = i;
        res.witness_subset = subset;
        res.witness_degree = dval;
        res.expected_degree = expected;
      }
    });
    if (!ok) {
      res.regular = false;
      return res;
    }
    res.r[i - 1] = expected;
  }
  res.regular = true;
  return res;
}

eigen_coloring_result eigenfunction_to_coloring(const hypergraph& h,
                                                const std::vector<cplx>& f,
                                                cplx theta, double tol) {
  if ((long long)f.size() != h.vertex_count())
    throw std::invalid_argument("eigenfunction_to_coloring: length mismatch");

  // The function must take exactly two distinct values.
  std::vector<cplx> vals;
  for (const auto& v : f) {
    bool seen = false;
    for (const auto& w : vals) seen |= std::abs(v - w) <= 1e-9;
    if (!seen) vals.push_back(v);
  }
  if (vals.size() != 2)
    throw std::invalid_argument(
        "eigenfunction_to_coloring: function takes " +
        std::to_string(vals.size()) + " distinct values, need exactly 2");

  regularity_result reg = total_regularity_profile(h);
  if (!reg.regular)
    throw std::invalid_argument(
        "eigenfunction_to_coloring: hypergraph is not totally regular");

  const int d = h.uniformity();
  std::vector<cplx> lhs =
      adjacency_apply(h, std::vector<std::vector<cplx>>(d - 1, f));
  double resid = 0.0;
  for (long long v = 0; v < h.vertex_count(); ++v) {
    cplx pw(1);
    for (int i = 0; i < d - 1; ++i) pw *= f[v];
    resid = std::max(resid, std::abs(lhs[v] - theta * pw));
  }
  if (resid > tol)
    throw std::invalid_argument(
        "eigenfunction_to_coloring: (theta, f) fails eigen-verification, residual " +
        std::to_string(resid));

  std::vector<int> color(h.vertex_count());
  for (long long v = 0; v < h.vertex_count(); ++v)
    color[v] = std::abs(f[v] - vals[0]) <= 1e-9 ? 0 : 1;

  eigen_coloring_result out;
  out.c = coloring(2, std::move(color));
  out.values[0] = vals[0];
  out.values[1] = vals[1];
  perfect_check_result pc = check_perfect(h, out.c);
  if (!pc.perfect)
    throw std::logic_error(
        "eigenfunction_to_coloring: induced 2-coloring is not perfect");
  out.s = pc.s;
  return out;
}

}  // namespace hyperconv
