#pragma once

#include "stabrange/ranges.hpp"

namespace stabrange {

// Input data for the configuration-space bounds. The topological hypotheses
// are caller-asserted: d-manifold, u-connected, and plane_exception asserts
// d = 2 with the manifold not of the form S^2 minus a closed subset.
struct ConfigParams {
  int d = 2;
  int u = 0;
  int k = 0;
  bool plane_exception = false;
};

// Generation-degree bound delta_k for H^k of ordered configuration spaces.
// Requires k >= d-1 (below that the cohomology of the configuration space
// agrees with the cohomology of the product M^bullet and is handled by
// classical means); raises LowDegreeRegime otherwise.
//
// The higher-connectivity special cases all reduce to the same three-way
// formula with specific (d, u):
//   - u+1 < d/2 with H_{u+1} != 0: the floor(k/(u+1)) branch;
//   - highly connected d = 2u+2: 2 q_k when r_k <= u, else 2 q_k + 1, for
//     k = q_k (2u+1) + r_k;
//   - u+1 > d/2 (sphere or contractible): u = d-2 gives 2 floor(k/(d-1)).
long config_delta(const ConfigParams& p);

// (2 delta, 2 delta + 1, 2 delta - 1, 2 delta - 2, delta, 2 delta).
StableRanges config_ranges(const ConfigParams& p);

// Number of fixed-point-free permutations of r letters with exactly l
// cycles. Brute-force enumeration for r <= 9, the associated-Stirling
// recurrence D(r,l) = (r-1) (D(r-2,l-1) + D(r-1,l)) above.
long long derangement_count(int r, int l);

// sum_{r=i+1}^{2i} D(r, r-i) binom(n, r): the dimension of
// H^{i(d-1)} of n ordered points in R^d.
long long hersh_reiner_dim(int i, long long n);

// dim of H^{d-1} of n ordered points in an even-dimensional sphere:
// binom(n-1, 2) - 1 for n >= 3, and 0 for n <= 2.
long long sphere_dim(long long n);

// Sharp tuples for ordered configurations of R^d in degree i(d-1):
// (2i, -1, 4i-1, -1, 2i, 3i) for odd d and (..., 3i+1) for even d.
StableRanges rd_sharp_ranges(int i, bool d_even);

}  // namespace stabrange
