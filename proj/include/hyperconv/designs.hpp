#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hyperconv/group_function.hpp"
#include "hyperconv/hypergraph.hpp"
#include "hyperconv/polynomial.hpp"

namespace hyperconv {

// ---------------------------------------------------------------------------
// Partial difference sets

struct pds_params {
  long long v = 0, k = 0, lambda = 0, mu = 0;

  bool is_difference_set() const { return lambda == mu; }
  // lambda*k + mu*(v-1-k) = k(k-1) bookkeeping for 0-free sets.
  bool arithmetic_consistent() const {
    return lambda * k + mu * (v - 1 - k) == k * (k - 1);
  }
};

struct pds_check_result {
  bool is_pds = false;
  pds_params params;
  long long witness = -1;  // element where chi_D * chi_D is off-profile
  std::vector<long long> conv;  // chi_D * chi_D, kept for reports
};

// Computes chi_D * chi_D once; lambda read on D, mu off D, success iff the
// convolution is constant on each region (the displayed identity
// chi_D*chi_D = (lambda-mu) chi_D + mu 1 + (k-mu) chi_0 is re-checked
// entrywise). When no nonzero element lies outside D, mu is reported as
// lambda (the mu-region is empty, so any value is consistent).
pds_check_result pds_check(int n, const std::vector<long long>& d_set);

struct pds_eigen_candidate {
  char branch = 'a';  // which branch of the eigenfunction system produced it
  cplx alpha, beta, theta;
  double residual = 0.0;
  bool verified = false;
};

struct pds_eigen_result {
  std::vector<pds_eigen_candidate> accepted;  // oracle-verified pairs
  std::vector<pds_eigen_candidate> rejected;  // candidates that failed the oracle
  rat_poly elimination_poly;  // branch (a) polynomial, exact coefficients
};

// Eigenfunctions f = chi_D + beta 1 + alpha chi_0 of the convolution matrix.
// Branch (a): generic beta via exact symbolic elimination, numeric roots,
// beta in {0,-1} discarded. Branch (b): beta = 0 (needs mu = 0). Branch (c):
// beta = -1. Every candidate is verified against the convolution oracle
// (residual of f*f - theta f^2); only verified pairs are accepted.
pds_eigen_result pds_eigenfunctions(int n, const std::vector<long long>& d_set,
                                    const pds_params& params, double tol);

struct pds_coloring_result {
  bool perfect = false;
  bool matches_closed_form = false;
  bool outside_theorem_scope = false;  // lambda == mu: the iff was stated for lambda != mu
  tensor<rat> s_census{3, 2};
  tensor<rat> s_closed{3, 2};
  perfect_check_result check;
  std::vector<std::array<int, 3>> diff;  // index tuples where the two S differ
};

// 2-coloring of H_n by chi_D; the census-extracted S is compared entry by
// entry against the closed-form parameter matrix (exact rationals). Rows of
// an empty color class are vacuous and skipped.
pds_coloring_result pds_to_coloring(int n, const std::vector<long long>& d_set,
                                    const pds_params& params);

// ---------------------------------------------------------------------------
// Bent and plateaued Boolean functions

enum class function_class { bent, plateaued, neither };

struct spectrum_report {
  int n = 0;
  function_class cls = function_class::neither;
  int s = -1;         // plateau parameter; 0 for bent
  long long weight = 0;
  std::map<long long, long long> spectrum;  // unnormalized Walsh value -> multiplicity
  bool triple_convolution_ok = false;  // exact-integer second oracle
  bool weight_ok = false;              // bent weight is 2^{n-1} +- 2^{n/2-1}
};

// Classification from the Walsh spectrum of (-1)^f, cross-checked for
// plateaued functions by the triple-convolution identity in exact integers.
spectrum_report classify_function(const std::vector<int>& truth_table, int n);

struct plateaued_eigen_result {
  long long theta = 0;     // 2^{n+s}
  long long residual = 0;  // exact integer max-norm; must be 0
};

// (-1)^f as eigenfunction of A^(2): triple convolution equals 2^{n+s} (-1)^f.
plateaued_eigen_result plateaued_eigen_check(const std::vector<int>& truth_table,
                                             int n, int s);

struct plateaued_coloring_result {
  bool perfect = false;
  int s = -1;
  rat m_d_eigenvalue{0};  // (2^{n+s} - 3*2^n + 2)/6
  bool eigenvalue_ok = false;  // exact verification against M_D
  perfect_check_result check;
};

// Perfect 2-coloring of D_n induced by a plateaued function, with the lifted
// adjacency eigenvalue verified in exact arithmetic.
plateaued_coloring_result plateaued_to_coloring(const std::vector<int>& truth_table,
                                                int n);

// ---------------------------------------------------------------------------
// Spreads

struct spread {
  int n = 0;
  std::vector<std::vector<long long>> classes;  // 2^{n/2}+1 classes of nonzero vectors
};

// Field-based construction: F_2^n viewed as a 2-dimensional space over
// GF(2^{n/2}); the classes are the lines through the origin. The reduction
// polynomials are fixed, so output is reproducible bit for bit.
spread spread_construct(int n);

struct spread_check_result {
  bool ok = false;
  bool is_partition = false;
  bool classes_closed = false;  // every class + {0} closed under addition
  bool s_matches = false;       // coloring S equals the spread parameter matrix
  tensor<rat> s{3, 1};
  std::string failure;          // witness description when not ok
};

// Both directions: subspace closure => theorem S, and (converse) a coloring
// with exactly the theorem S must have subspace classes.
spread_check_result spread_check(int n,
                                 const std::vector<std::vector<long long>>& classes);

struct bound_result {
  long long count = 0;  // 2-dimensional subspaces inside P
  rat bound{0};         // (|P|-1)(|P|/2-1)/3
  bool tight = false;
  bool is_subspace = false;
};

// Counting bound for 2-dimensional subspaces inside a set containing 0;
// tight exactly on linear subspaces.
bound_result subspace_count_bound(int n, const std::vector<long long>& p_set);

struct majority_witness {
  long long z = 0;  // nonzero direction with positive Fourier coefficient
  long long inside = 0, outside = 0;  // |Gamma_z cap P| vs |P \ Gamma_z|
};

// For a proper subset P containing 0, some hyperplane contains more of P
// than its complement does; returns the witness direction.
majority_witness hyperspace_majority_witness(int n,
                                             const std::vector<long long>& p_set);

// ---------------------------------------------------------------------------
// Bent partitions

struct bent_partition {
  int n = 0;
  int k = 0;             // depth exponent, K = 2^k classes
  long long offset = 0;  // translation that made U linear
  std::vector<long long> u;                      // linear subspace, contains 0
  std::vector<std::vector<long long>> classes;   // P_1..P_{2^k}
  bool normal_verified = false;
  bool strong_verified = false;
};

struct bent_partition_check_result {
  bool structure_ok = false;
  bool normal_ok = false;
  bool strong_ok = false;
  bent_partition bp;
  std::string failure;
  std::vector<int> witness_split;  // classes mapped to 1 in a non-bent split
  long long witness_z = -1;        // Fourier point breaking the strong pattern
};

// Verifies a partition {U, P_1..P_K} of F_2^n: normality by enumerating all
// C(K, K/2) balanced splits x 2 constants on U (K <= 16), strength by the
// Fourier value pattern of the class indicators in exact integers. An affine
// U is translated to linear first; the offset is recorded and all reported
// sets are in translated coordinates.
bent_partition_check_result bent_partition_check(
    int n, const std::vector<long long>& u,
    const std::vector<std::vector<long long>>& classes);

struct dual_partition_result {
  bool ok = false;
  bent_partition dual;
  std::string failure;
  long long witness_z = -1;  // point matching no class or two classes
};

// Dual partition {U^perp, R_1..R_K} extracted from the Fourier transforms of
// the class indicators; itself strong, and an involution.
dual_partition_result dual_bent_partition(const bent_partition& bp);

struct bent_partition_coloring_result {
  bool perfect = false;
  bool identities_ok = false;  // the convolution identities, exact integers
  tensor<rat> s{3, 1};
  perfect_check_result check;
  std::string failure;
};

// Perfect (2^k+1)-coloring {U \ {0}, P_1..P_K} of H_n.
bent_partition_coloring_result bent_partition_to_coloring(const bent_partition& bp);

// ---------------------------------------------------------------------------
// Small helpers shared by the checkers

// Is P (which must contain 0) closed under addition?
bool is_linear_subspace(int n, const std::vector<long long>& p_set);

// All C(m, r) subsets of {0..m-1} in lexicographic order.
std::vector<std::vector<int>> combinations(int m, int r);

}  // namespace hyperconv
