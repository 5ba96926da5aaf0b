#include "stabrange/partition.hpp"

#include <algorithm>
#include <numeric>

#include "stabrange/caps.hpp"
#include "stabrange/rational.hpp"

namespace stabrange {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      fail(errc::invalid_params, "partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      fail(errc::invalid_params, "partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) fail(errc::invalid_params, "partitions_of needs n >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(n, n, prefix, out);
  if (n == 0) out.assign(1, Partition{});
  return out;
}

Partition pad(const Partition& lambda, int n) {
  int first = lambda.empty() ? 0 : lambda.parts()[0];
  if (n < lambda.size() + first)
    fail(errc::pad_too_small,
         "pad needs n >= |lambda| + lambda_1 = " +
             std::to_string(lambda.size() + first) + ", got " +
             std::to_string(n));
  std::vector<int> parts;
  int head = n - lambda.size();
  if (head > 0) parts.push_back(head);
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(parts);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_regular(const Partition& lambda, int p) {
  if (p != 0 && !is_prime(p))
    fail(errc::invalid_characteristic,
         "characteristic must be 0 or prime, got " + std::to_string(p));
  if (p == 0) return true;
  for (auto [part, mult] : part_counts(lambda))
    if (mult >= p) return false;
  return true;
}

std::map<int, int> part_counts(const Partition& lambda) {
  std::map<int, int> counts;
  for (int p : lambda.parts()) ++counts[p];
  return counts;
}

int part_count(const Partition& lambda, int j) {
  int c = 0;
  for (int p : lambda.parts()) c += (p == j);
  return c;
}

long long specht_dim(const Partition& mu) {
  // n! / prod(hooks), computed in exact big integers.
  int n = mu.size();
  std::vector<int> conj(mu.empty() ? 0 : mu.parts()[0], 0);
  for (int p : mu.parts())
    for (int j = 0; j < p; ++j) ++conj[j];
  Int dim = factorial_int(n);
  for (int i = 0; i < mu.length(); ++i) {
    for (int j = 0; j < mu.parts()[i]; ++j) {
      long hook = (mu.parts()[i] - j) + (conj[j] - i) - 1;
      mpz_divexact_ui(dim.get_mpz_t(),
                      dim.get_mpz_t(), static_cast<unsigned long>(hook));
    }
  }
  if (!dim.fits_slong_p())
    fail(errc::size_cap_exceeded, "Specht dimension exceeds 64 bits");
  return dim.get_si();
}

namespace {

// Walks every standard filling; row_of[k] remembers where entry k+1 landed so
// descents (k+1 strictly below k) can be read off at the leaves.
void walk_syt(const Partition& mu, std::vector<int>& rows, int placed,
              std::vector<int>& row_of, std::map<int, long long>& out) {
  int n = mu.size();
  if (placed == n) {
    int maj = 0;
    for (int k = 1; k < n; ++k)
      if (row_of[k] > row_of[k - 1]) maj += k;
    ++out[maj];
    return;
  }
  for (int r = 0; r < mu.length(); ++r) {
    if (rows[r] >= mu.parts()[r]) continue;
    if (r > 0 && rows[r] >= rows[r - 1]) continue;
    ++rows[r];
    row_of[placed] = r;
    walk_syt(mu, rows, placed + 1, row_of, out);
    --rows[r];
  }
}

}  // namespace

std::map<int, long long> syt_major_counts(const Partition& mu,
                                          bool override_caps) {
  check_cap(mu.size(), kSytCap, override_caps, errc::size_cap_exceeded,
            "|mu| for tableau enumeration");
  std::map<int, long long> out;
  if (mu.empty()) {
    out[0] = 1;
    return out;
  }
  std::vector<int> rows(mu.length(), 0), row_of(mu.size(), 0);
  walk_syt(mu, rows, 0, row_of, out);
  return out;
}

}  // namespace stabrange
