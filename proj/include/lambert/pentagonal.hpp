#pragma once

#include "lambert/bigint.hpp"

#include <cstdint>
#include <mutex>
#include <vector>

namespace lambert {

// Generalized pentagonal number omega_{k,b} = k(3k+b)/2 with k >= 1, b = +-1.
struct PentagonalTerm {
  std::int64_t k = 0;
  int b = 0;
  std::int64_t omega = 0;

  // (-1)^k, the sign this term carries in pentagonal expansions.
  int sign() const { return (k & 1) ? -1 : 1; }

  bool operator==(const PentagonalTerm&) const = default;
};

// k(3k+b)/2; requires b in {-1, +1}.  The product k(3k+b) is always even.
std::int64_t pentagonal_number(std::int64_t k, int b);

// Largest k >= 0 with k(3k+b)/2 <= n, i.e. floor((sqrt(24n+1) - b)/6)
// evaluated entirely in integer arithmetic.
std::int64_t pentagonal_bound(std::int64_t n, int b);

// All terms with 1 <= omega <= n, in strictly ascending omega order
// (omega_{k,-1} < omega_{k,+1} < omega_{k+1,-1}).
std::vector<PentagonalTerm> enumerate_pentagonal(std::int64_t n);

// Coefficient of q^n in the product (1-q)(1-q^2)(1-q^3)...:
// +1 for n = 0, (-1)^k when n = k(3k+-1)/2, otherwise 0.
int euler_coefficient(std::int64_t n);

// Memoized partition numbers p(0..capacity), grown on demand via the
// pentagonal recurrence p(n) = sum_k (-1)^{k+1} [p(n - k(3k-1)/2) +
// p(n - k(3k+1)/2)].  Internally synchronized: concurrent readers never
// observe torn or partially computed values.
class PartitionTable {
 public:
  PartitionTable();

  // p(n).  Negative arguments yield 0, matching the recurrence convention.
  BigInt value(std::int64_t n);

  // Largest n currently stored.
  std::int64_t capacity() const;

 private:
  mutable std::mutex mu_;
  std::vector<BigInt> values_;
};

// p(n) through a process-wide shared PartitionTable.
BigInt partition_number(std::int64_t n);

}  // namespace lambert
