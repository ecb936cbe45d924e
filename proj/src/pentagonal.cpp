#include "lambert/pentagonal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lambert {

namespace {

void check_sign_selector(int b) {
  if (b != 1 && b != -1) {
    throw std::invalid_argument("pentagonal sign selector must be -1 or +1");
  }
}

}  // namespace

std::int64_t pentagonal_number(std::int64_t k, int b) {
  check_sign_selector(b);
  return k * (3 * k + b) / 2;
}

std::int64_t pentagonal_bound(std::int64_t n, int b) {
  check_sign_selector(b);
  if (n < 0) throw std::invalid_argument("pentagonal_bound: n must be nonnegative");
  if (n > (INT64_MAX - 1) / 24) throw std::overflow_error("pentagonal_bound: n too large");
  const std::int64_t s =
      static_cast<std::int64_t>(isqrt_u64(24 * static_cast<std::uint64_t>(n) + 1));
  // s >= 1, so s - b >= 0 and signed division floors correctly.
  return (s - b) / 6;
}

std::vector<PentagonalTerm> enumerate_pentagonal(std::int64_t n) {
  std::vector<PentagonalTerm> terms;
  if (n < 1) return terms;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t lo = pentagonal_number(k, -1);
    if (lo > n) break;
    terms.push_back({k, -1, lo});
    const std::int64_t hi = pentagonal_number(k, +1);
    if (hi <= n) terms.push_back({k, +1, hi});
  }
  return terms;
}

int euler_coefficient(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("euler_coefficient: n must be nonnegative");
  if (n == 0) return 1;
  const std::uint64_t target = 24 * static_cast<std::uint64_t>(n) + 1;
  const std::uint64_t s = isqrt_u64(target);
  if (s * s != target) return 0;
  const std::int64_t si = static_cast<std::int64_t>(s);
  for (int b : {-1, +1}) {
    if ((si - b) % 6 == 0) {
      const std::int64_t k = (si - b) / 6;
      if (k >= 1 && pentagonal_number(k, b) == n) return (k & 1) ? -1 : 1;
    }
  }
  return 0;
}

PartitionTable::PartitionTable() : values_{BigInt(1)} {}

BigInt PartitionTable::value(std::int64_t n) {
  if (n < 0) return BigInt(0);
  std::lock_guard<std::mutex> lock(mu_);
  if (static_cast<std::size_t>(n) >= values_.size()) {
    values_.reserve(std::max<std::size_t>(values_.size() * 2, static_cast<std::size_t>(n) + 1));
    for (std::int64_t m = static_cast<std::int64_t>(values_.size()); m <= n; ++m) {
      BigInt acc = 0;
      for (std::int64_t k = 1;; ++k) {
        const std::int64_t lo = k * (3 * k - 1) / 2;
        if (lo > m) break;
        const int sgn = (k & 1) ? 1 : -1;  // (-1)^{k+1}
        acc += sgn * values_[m - lo];
        const std::int64_t hi = lo + k;  // k(3k+1)/2
        if (hi <= m) acc += sgn * values_[m - hi];
      }
      values_.push_back(std::move(acc));
    }
  }
  return values_[static_cast<std::size_t>(n)];
}

std::int64_t PartitionTable::capacity() const {
  std::lock_guard<std::mutex> lock(mu_);
  return static_cast<std::int64_t>(values_.size()) - 1;
}

BigInt partition_number(std::int64_t n) {
  static PartitionTable table;
  return table.value(n);
}

}  // namespace lambert
