#include "stabrange/symchar.hpp"

#include <algorithm>
#include <mutex>

#include "stabrange/caps.hpp"

namespace stabrange {

void ClassFunction::set(const Partition& cycle_type, Rat v) {
  if (cycle_type.size() != n_)
    fail(errc::size_mismatch, "cycle type is not a partition of n");
  if (v == 0)
    values_.erase(cycle_type);
  else
    values_[cycle_type] = std::move(v);
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
  if (other.n_ != n_) fail(errc::size_mismatch, "class function degree mismatch");
  for (const auto& [ct, v] : other.values_) set(ct, value(ct) + v);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
  if (other.n_ != n_) fail(errc::size_mismatch, "class function degree mismatch");
  for (const auto& [ct, v] : other.values_) set(ct, value(ct) - v);
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    values_.clear();
    return *this;
  }
  for (auto& [ct, v] : values_) v *= scalar;
  return *this;
}

bool ClassFunction::operator==(const ClassFunction& other) const {
  return n_ == other.n_ && values_ == other.values_;
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  k = std::min(k, n - k);
  Int acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc *= n - k + i;
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  if (!acc.fits_slong_p())
    fail(errc::size_cap_exceeded, "binomial exceeds 64 bits");
  return acc.get_si();
}

long long centralizer_order(const Partition& lambda) {
  long long z = 1;
  for (auto [j, a] : part_counts(lambda)) {
    for (int t = 0; t < a; ++t) z *= j;
    z *= factorial(a);
  }
  return z;
}

long long class_size(const Partition& lambda) {
  return factorial(lambda.size()) / centralizer_order(lambda);
}

namespace {

// Beta-set form of the Murnaghan-Nakayama recursion: removing a rim hook of
// length l corresponds to lowering one beta number by l.
long long mn_recurse(std::vector<int> beta, const std::vector<int>& cycles,
                     size_t next_cycle) {
  if (next_cycle == cycles.size()) return 1;
  int l = cycles[next_cycle];
  long long total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - l;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (target < b && b < beta[i]) ++height;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<>());
    long long sub = mn_recurse(std::move(next), cycles, next_cycle + 1);
    total += (height % 2 == 0) ? sub : -sub;
  }
  return total;
}

}  // namespace

long long specht_character(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size())
    fail(errc::size_mismatch, "specht_character needs |mu| = |lambda|");
  static std::map<std::pair<Partition, Partition>, long long> cache;
  static std::mutex cache_mutex;
  auto key = std::make_pair(mu, lambda);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  int m = mu.length();
  std::vector<int> beta(m);
  for (int i = 0; i < m; ++i) beta[i] = mu.parts()[i] + (m - 1 - i);
  // Larger cycles first keeps the recursion shallow.
  std::vector<int> cycles = lambda.parts();
  long long chi = mn_recurse(std::move(beta), cycles, 0);
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[key] = chi;
  return chi;
}

ClassFunction specht_class_function(const Partition& mu) {
  ClassFunction f(mu.size());
  for (const auto& lambda : partitions_of(mu.size()))
    f.set(lambda, Rat(static_cast<long>(specht_character(mu, lambda))));
  return f;
}

ClassFunction trivial_character(int n) {
  ClassFunction f(n);
  for (const auto& lambda : partitions_of(n)) f.set(lambda, Rat(1));
  return f;
}

ClassFunction zero_class_function(int n) { return ClassFunction(n); }

namespace {

std::vector<int> permutation_of_type(const Partition& lambda) {
  // Cycles laid out left to right: (1 2 .. l1)(l1+1 ..) ...
  std::vector<int> perm(lambda.size());
  int start = 0;
  for (int l : lambda.parts()) {
    for (int i = 0; i < l; ++i) perm[start + i] = start + (i + 1) % l;
    start += l;
  }
  return perm;
}

}  // namespace

ClassFunction induced_trivial_character(int g, int n, bool override_caps) {
  if (g < 0 || g > n)
    fail(errc::invalid_params, "induced_trivial_character needs 0 <= g <= n");
  check_cap(n, kOracleCapN, override_caps, errc::size_cap_exceeded,
            "oracle degree n");
  ClassFunction f(n);
  for (const auto& lambda : partitions_of(n)) {
    std::vector<int> perm = permutation_of_type(lambda);
    long long stable = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != g) continue;
      unsigned image = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) image |= 1u << perm[i];
      if (image == mask) ++stable;
    }
    f.set(lambda, Rat(static_cast<long>(stable)));
  }
  return f;
}

std::map<Partition, long long> decompose_class_function(const ClassFunction& f,
                                                        bool override_caps) {
  int n = f.n();
  check_cap(n, kOracleCapN, override_caps, errc::size_cap_exceeded,
            "oracle degree n");
  std::map<Partition, long long> mult;
  Rat order(static_cast<long>(factorial(n)));
  for (const auto& mu : partitions_of(n)) {
    Rat acc(0);
    for (const auto& lambda : partitions_of(n)) {
      Rat fv = f.value(lambda);
      if (fv == 0) continue;
      acc += Rat(static_cast<long>(class_size(lambda))) * fv *
             Rat(static_cast<long>(specht_character(mu, lambda)));
    }
    Rat m = acc / order;
    if (m == 0) continue;
    if (!is_integer(m))
      fail(errc::not_virtual_character,
           "inner product with chi^mu is not an integer: " + rat_to_string(m));
    mult[mu] = m.get_num().get_si();
  }
  return mult;
}

}  // namespace stabrange
