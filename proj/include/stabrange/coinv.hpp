#pragma once

#include <map>
#include <vector>

#include "stabrange/rational.hpp"
#include "stabrange/symchar.hpp"

namespace stabrange {

// Multi-degree over a finite ordered variable basis: degrees[x] is the total
// exponent of basis variable x across all slots.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> degrees);

  const std::vector<int>& degrees() const { return degrees_; }
  int basis_size() const { return static_cast<int>(degrees_.size()); }
  int total() const;

  bool contains(const MultiDegree& other) const;  // componentwise >=
  MultiDegree minus(const MultiDegree& other) const;
  bool is_zero() const { return total() == 0; }

  friend auto operator<=>(const MultiDegree&, const MultiDegree&) = default;

 private:
  std::vector<int> degrees_;
};

// Number of S_n-orbits of monomials of multidegree J in basis_size * n
// variables; the rank of the degree-J invariants.
long long orbit_count(const MultiDegree& J, int n, bool override_caps = false);

// Same count by the blunt route: enumerate every monomial and group by the
// sorted-slot canonical form. Test oracle for orbit_count.
long long orbit_count_bruteforce(const MultiDegree& J, int n);

// dim of the degree-j invariants of n univariate slots: partitions of j into
// at most n parts.
long long univariate_invariant_dim(int j, int n);

enum class ExecutionMode { serial, parallel };

// Exact graded dimensions of the diagonal coinvariant algebra on n slots
// with b_size basis variables, for every multidegree of total degree
// <= j_bound: dim Sym^J minus the rank of the span of
// (monomial of degree J-I) * (orbit sum of degree I) over all 0 != I <= J,
// by exact rational row reduction.
std::map<MultiDegree, long long> coinv_graded_dims(
    int n, int b_size, int j_bound, bool override_caps = false,
    ExecutionMode mode = ExecutionMode::parallel);

// Serial reference implementation kept for testing; same contract.
std::map<MultiDegree, long long> coinv_graded_dims_serial(
    int n, int b_size, int j_bound, bool override_caps = false);

// Character of S_n on the degree-j piece of the univariate coinvariant
// algebra: sum over mu of u^j(mu) chi^mu.
ClassFunction coinv_character_univariate(int j, int n,
                                         bool override_caps = false);

// Sparse exact row-reduction kernel, exposed for the benchmark target.
// Rows are (column, value) lists sorted by column; returns the rank.
using SparseRow = std::vector<std::pair<int, Rat>>;
long rank_of_span(std::vector<SparseRow> rows, ExecutionMode mode);

}  // namespace stabrange
