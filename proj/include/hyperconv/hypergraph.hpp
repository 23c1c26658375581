#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "hyperconv/group.hpp"
#include "hyperconv/group_function.hpp"
#include "hyperconv/rational.hpp"
#include "hyperconv/tensor.hpp"

namespace hyperconv {

enum class hypergraph_kind { explicit_edges, subspace_h, subspace_d };

// d-uniform hypergraph. The subspace families are generated implicitly:
//   H_n: vertices F_2^n \ {0}, edges {x,y,z} with x+y+z = 0
//   D_n: vertices F_2^n, edges {x,y,z,v} with x+y+z+v = 0, all distinct
// Vertices are 0-based rows; for H_n row v is group element v+1, for D_n
// row v is element v.
class hypergraph {
 public:
  static hypergraph subspace_h(int n) {
    hypergraph h;
    h.kind_ = hypergraph_kind::subspace_h;
    h.rank_ = n;
    h.uniformity_ = 3;
    h.vertex_count_ = (1LL << n) - 1;
    return h;
  }

  static hypergraph subspace_d(int n) {
    hypergraph h;
    h.kind_ = hypergraph_kind::subspace_d;
    h.rank_ = n;
    h.uniformity_ = 4;
    h.vertex_count_ = 1LL << n;
    return h;
  }

  static hypergraph from_edges(long long vertex_count, int uniformity,
                               std::vector<std::vector<int>> edges) {
    hypergraph h;
    h.kind_ = hypergraph_kind::explicit_edges;
    h.uniformity_ = uniformity;
    h.vertex_count_ = vertex_count;
    for (auto& e : edges) {
      if ((int)e.size() != uniformity)
        throw std::invalid_argument("hypergraph: edge size != uniformity");
      std::sort(e.begin(), e.end());
      if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw std::invalid_argument("hypergraph: repeated vertex in edge");
      for (int v : e)
        if (v < 0 || v >= vertex_count)
          throw std::invalid_argument("hypergraph: vertex out of range");
    }
    h.edges_ = std::move(edges);
    return h;
  }

  hypergraph_kind kind() const { return kind_; }
  int uniformity() const { return uniformity_; }
  long long vertex_count() const { return vertex_count_; }
  int rank() const { return rank_; }

  long long vertex_to_element(long long v) const {
    return kind_ == hypergraph_kind::subspace_h ? v + 1 : v;
  }
  long long element_to_vertex(long long e) const {
    return kind_ == hypergraph_kind::subspace_h ? e - 1 : e;
  }

  // Streams each hyperedge once, as sorted vertex rows.
  template <class Fn>
  void for_each_edge(Fn&& fn) const {
    switch (kind_) {
      case hypergraph_kind::explicit_edges:
        for (const auto& e : edges_) fn(e);
        break;
      case hypergraph_kind::subspace_h: {
        const long long m = vertex_count_;  // elements 1..m
        std::vector<int> e(3);
        for (long long x = 1; x <= m; ++x)
          for (long long y = x + 1; y <= m; ++y) {
            long long z = x ^ y;
            if (z > y) {
              e[0] = int(x - 1);
              e[1] = int(y - 1);
              e[2] = int(z - 1);
              fn(e);
            }
          }
        break;
      }
      case hypergraph_kind::subspace_d: {
        const long long m = vertex_count_;  // elements 0..m-1
        std::vector<int> e(4);
        for (long long x = 0; x < m; ++x)
          for (long long y = x + 1; y < m; ++y)
            for (long long z = y + 1; z < m; ++z) {
              long long v = x ^ y ^ z;
              if (v > z) {
                e[0] = int(x);
                e[1] = int(y);
                e[2] = int(z);
                e[3] = int(v);
                fn(e);
              }
            }
        break;
      }
    }
  }

  long long edge_count() const {
    long long c = 0;
    for_each_edge([&](const std::vector<int>&) { ++c; });
    return c;
  }

 private:
  hypergraph() = default;

  hypergraph_kind kind_ = hypergraph_kind::explicit_edges;
  int rank_ = 0;
  int uniformity_ = 0;
  long long vertex_count_ = 0;
  std::vector<std::vector<int>> edges_;
};

// Adjacency entries are 1/(d-1)! at every permutation of each hyperedge.
template <class T>
tensor<T> adjacency_tensor(const hypergraph& h) {
  const int d = h.uniformity();
  tensor<T> m(d, (int)h.vertex_count());
  long long fact = 1;
  for (int i = 2; i < d; ++i) fact *= i;
  T w = T(1) / T(fact);
  h.for_each_edge([&](const std::vector<int>& e) {
    std::vector<int> idx = e;
    std::sort(idx.begin(), idx.end());
    do {
      m.at(idx) = w;
    } while (std::next_permutation(idx.begin(), idx.end()));
  });
  return m;
}

// M . (f_1, ..., f_{d-1}) by streaming edges; each edge contributes its
// permutation sum with the 1/(d-1)! weight collapsed analytically.
std::vector<cplx> adjacency_apply(const hypergraph& h,
                                  const std::vector<std::vector<cplx>>& fs);

// (M o f)(x) for integer-valued f, exact: the (d-1)! permutations of each
// edge cancel the 1/(d-1)! weight, leaving sum of products over edges.
std::vector<long long> adjacency_apply_int(const hypergraph& h,
                                           const std::vector<long long>& f);

// k-coloring of the vertex rows; colors are 0-based 0..k-1. Classes may be
// declared yet empty (needed for degenerate indicator colorings).
struct coloring {
  int k = 0;
  std::vector<int> color;

  coloring() = default;
  coloring(int colors, std::vector<int> per_vertex)
      : k(colors), color(std::move(per_vertex)) {
    for (int c : color)
      if (c < 0 || c >= k)
        throw std::invalid_argument("coloring: color id out of range");
  }

  std::vector<long long> class_sizes() const {
    std::vector<long long> s(k, 0);
    for (int c : color) ++s[c];
    return s;
  }
};

// Multiset of color ranges of incident hyperedges, per vertex. Ranges are
// canonicalized as sorted d-tuples (including the vertex's own color).
using color_range = std::vector<int>;
using vertex_census = std::map<color_range, long long>;

std::vector<vertex_census> color_census(const hypergraph& h, const coloring& c);

struct perfect_check_result {
  bool perfect = false;
  tensor<rat> s{1, 1};                 // dim d, order k when perfect
  std::vector<char> color_used;        // empty classes give vacuous S rows
  long long witness_u = -1, witness_v = -1;  // same-color pair, differing censuses
  color_range witness_range;                 // a range they disagree on
};

// Census-based perfectness check; S entries follow the multinomial scaling
// s_i = v_{i_1,i} / C(d-1; d_1,...,d_k).
perfect_check_result check_perfect(const hypergraph& h, const coloring& c);

struct conv_perfect_result {
  bool perfect = false;
  tensor<rat> s{3, 1};
  int witness_j = -1, witness_l = -1;
  long long witness_x = -1;  // group element with the inconsistent value
};

// Perfectness of a coloring of H_n through F_j * F_l = sum_i 2 s_{i,j,l} F_i,
// with indicators extended by F_i(0) = 0; exact integer convolutions.
conv_perfect_result check_perfect_via_convolution(int n, const coloring& c);

// Lifts an eigenpair (theta, g) of the parameter tensor S to the eigenpair
// (theta, Fg) of the hypergraph.
eigen_pair lift_parameter_eigenvector(const hypergraph& h, const coloring& c,
                                      const tensor<rat>& s,
                                      const std::vector<cplx>& g, cplx theta,
                                      double tol);

struct regularity_result {
  bool regular = false;
  std::vector<long long> r;  // r_1..r_{d-1} when regular
  int witness_size = 0;
  std::vector<int> witness_subset;  // subset whose degree breaks regularity
  long long witness_degree = -1, expected_degree = -1;
};

// deg(S) = r_i for every i-subset, i = 1..d-1. Implicit subspace hypergraphs
// above the exhaustive bound return their closed-form profile.
regularity_result total_regularity_profile(const hypergraph& h,
                                           long long exhaustive_vertex_bound = 32);

struct eigen_coloring_result {
  coloring c;
  tensor<rat> s{1, 1};
  cplx values[2];  // value of color 0, value of color 1
};

// Two-valued verified eigenfunction of a totally regular hypergraph ->
// perfect 2-coloring with its parameter tensor.
eigen_coloring_result eigenfunction_to_coloring(const hypergraph& h,
                                                const std::vector<cplx>& f,
                                                cplx theta, double tol);

}  // namespace hyperconv
