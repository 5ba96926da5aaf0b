#pragma once

#include <map>

#include "stabrange/partition.hpp"
#include "stabrange/rational.hpp"

namespace stabrange {

// Exact class function on S_n: cycle type -> rational. Absent keys read as 0.
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n) : n_(n) {}

  int n() const { return n_; }

  Rat value(const Partition& cycle_type) const {
    auto it = values_.find(cycle_type);
    return it == values_.end() ? Rat(0) : it->second;
  }

  void set(const Partition& cycle_type, Rat v);

  const std::map<Partition, Rat>& values() const { return values_; }

  ClassFunction& operator+=(const ClassFunction& other);
  ClassFunction& operator-=(const ClassFunction& other);
  ClassFunction& operator*=(const Rat& scalar);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) {
    return a += b;
  }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) {
    return a -= b;
  }
  bool operator==(const ClassFunction& other) const;

 private:
  int n_ = 0;
  std::map<Partition, Rat> values_;
};

long long factorial(int n);
long long binomial(int n, int k);

// z_lambda = prod_j j^{a_j} a_j!
long long centralizer_order(const Partition& lambda);

// Conjugacy class size n!/z_lambda.
long long class_size(const Partition& lambda);

// chi^mu(lambda) by the Murnaghan-Nakayama rule. Requires |mu| = |lambda|.
long long specht_character(const Partition& mu, const Partition& lambda);

ClassFunction specht_class_function(const Partition& mu);
ClassFunction trivial_character(int n);
ClassFunction zero_class_function(int n);

// Character of S_n acting on g-element subsets, each value found by direct
// enumeration of the subsets stabilized by a permutation of the given type.
ClassFunction induced_trivial_character(int g, int n,
                                        bool override_caps = false);

// Multiplicities m with f = sum m(mu) chi^mu, via <f, chi^mu>. Errors with
// NotVirtualCharacter when any inner product is non-integral.
std::map<Partition, long long> decompose_class_function(
    const ClassFunction& f, bool override_caps = false);

}  // namespace stabrange
