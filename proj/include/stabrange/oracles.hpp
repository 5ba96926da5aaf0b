#pragma once

#include <vector>

#include "stabrange/partition.hpp"

namespace stabrange {
// Independent brute-force computations used by the verification suites and
// the tests. None of these share an algorithm with the implementation path
// they are used to check.
namespace oracles {

// p(n) via the bounded-largest-part recurrence (no explicit enumeration).
long long partition_count_recursive(int n);

// Number of standard Young tableaux by recursive corner removal (no hook
// lengths, no fillings).
long long syt_count_corners(const Partition& mu);

// Coefficients of the q-factorial [n]_q! = prod_{i=1}^{n} (1+q+...+q^{i-1}).
std::vector<long long> qfactorial_coeffs(int n);

// Coefficients of prod_{m=1}^{n-1} (1 + m t): unsigned Stirling numbers of
// the first kind c(n, n-i) at t^i.
std::vector<long long> stirling_product_coeffs(int n);

// [t^0..t^J] of prod_i (1 - t^i)^(-a_i) for the cycle type lambda: the trace
// of a permutation of type lambda on Sym^j of the defining representation.
std::vector<long long> sym_trace_series(const Partition& lambda, int J);

// Fixed-point-free permutations of r letters with exactly l cycles, by
// exhaustive enumeration of S_r.
long long derangements_by_cycles_bruteforce(int r, int l);

// Number of sigma-stable g-subsets for sigma of cycle type lambda, read off
// the cycle generating function prod_j (1 + y^j)^{a_j}.
long long stable_subset_count_gf(const Partition& lambda, int g);

}  // namespace oracles
}  // namespace stabrange
