#pragma once

#include <compare>
#include <map>
#include <vector>

#include "stabrange/errors.hpp"

namespace stabrange {

// Integer partition: weakly decreasing positive parts. The empty partition
// (of 0) is valid. Trailing zeros are never stored, so equality is canonical.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const {  // 1-based, 0 beyond the last row
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// All partitions of n, each exactly once, in lexicographically decreasing
// order: partitions_of(4) = [(4),(3,1),(2,2),(2,1,1),(1,1,1,1)].
std::vector<Partition> partitions_of(int n);

// lambda[n] = (n - |lambda|, lambda_1, lambda_2, ...). Requires
// n >= |lambda| + lambda_1.
Partition pad(const Partition& lambda, int n);

// p-regularity: true iff p = 0 or every part multiplicity is < p.
// p must be 0 or prime.
bool is_regular(const Partition& lambda, int p);

// a_j(lambda) for every j with a_j > 0.
std::map<int, int> part_counts(const Partition& lambda);

// Number of parts of size j.
int part_count(const Partition& lambda, int j);

// dim of the Specht module S^mu over Q, by the hook length formula; equals
// the number of standard Young tableaux of shape mu.
long long specht_dim(const Partition& mu);

// j -> number of standard Young tableaux of shape mu with major index j
// (sum of descent positions). Enumeration capped at |mu| <= 12.
std::map<int, long long> syt_major_counts(const Partition& mu,
                                          bool override_caps = false);

bool is_prime(int p);

}  // namespace stabrange
