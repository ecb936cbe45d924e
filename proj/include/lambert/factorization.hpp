#pragma once

#include "lambert/arithmetic.hpp"
#include "lambert/bigint.hpp"
#include "lambert/pentagonal.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lambert {

// Thrown when two supposedly equivalent computations disagree; it always
// indicates an internal defect, never bad user input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Dense unit-lower-triangular integer matrix, 1-based indexing, rows packed
// row-major (row r stores columns 1..r).  The diagonal starts at 1 but is
// stored explicitly so products and identity checks stay honest.
class UnitLowerTriangular {
 public:
  explicit UnitLowerTriangular(std::int64_t n);

  std::int64_t size() const { return n_; }

  // Mutable/const access to entry (row, col) with 1 <= col <= row <= size().
  BigInt& entry(std::int64_t row, std::int64_t col);
  const BigInt& entry(std::int64_t row, std::int64_t col) const;

  // Value including the implicit upper zeros: at(r, c) == 0 for c > r.
  BigInt at(std::int64_t row, std::int64_t col) const;

  bool is_identity() const;

  bool operator==(const UnitLowerTriangular&) const = default;

 private:
  std::size_t index(std::int64_t row, std::int64_t col) const;

  std::int64_t n_;
  std::vector<BigInt> packed_;
};

// Product of two lower-triangular matrices of equal size (itself lower
// triangular, computed exactly).
UnitLowerTriangular multiply(const UnitLowerTriangular& a, const UnitLowerTriangular& b);

// Entry (n, i) of the factor matrix: the signed count
// sum_{s >= 0, (s+1) i <= n} euler_coefficient(n - (s+1) i).
// Row n depends only on the pentagonal structure, never on the pair.
std::int64_t entry_a(std::int64_t n, std::int64_t i);

// The n x n factor matrix with entry_a below the diagonal and units on it.
UnitLowerTriangular build_A(std::int64_t n);

// Its exact inverse, assembled from the closed form
// inverse(n, i) = sum_{d | n, d >= i} p(d - i) mu(n / d).
UnitLowerTriangular build_A_inverse(std::int64_t n);

// The length-n column vector with
// values[m] = g(m+1) + sum_{omega <= m} (-1)^k g(m+1-omega), m = 0..n-1.
struct BVector {
  std::vector<BigInt> values;
  bool operator==(const BVector&) const = default;
};

BVector compute_B(const FunctionPair& pair, std::int64_t n);
BVector compute_B(const ArithmeticFn& g, std::int64_t n);

// Reconstructs f(1..n) from g alone.  Runs two independent solves -- the
// explicit inverse times compute_B, and forward substitution against
// build_A -- and throws InconsistencyError if they ever disagree.
std::vector<BigInt> recover_f(const FunctionPair& pair, std::int64_t n);
std::vector<BigInt> recover_f(const ArithmeticFn& g, std::int64_t n);

// values[n] = sum_{i=1}^{n} f(i) entry_a(n, i) for n >= 1, and values[0] = 1.
struct AfSequence {
  std::vector<BigInt> values;
  bool operator==(const AfSequence&) const = default;
};

AfSequence a_f_sequence(const FunctionPair& pair, std::int64_t max_n);

// g(1..max_n) rebuilt from the recurrence
// g(t) = sum_{omega <= t-1} (-1)^{k+1} g(t - omega) + a_f(t),
// returned as values for n = 1..max_n (index 0 holds g(1)).
std::vector<BigInt> g_recurrence(const FunctionPair& pair, std::int64_t max_n);

// Where the a_f partial sum sits in the summatory recurrence below.  The
// `outside` placement adds sum_{j=1..x} a_f(j) once, after the pentagonal
// part; `inside` doubles the tail sum_{j=2..x} a_f(j) instead (one copy per
// sign branch) and omits j = 1.  Only `outside` reproduces the prefix sums
// of g; `inside` is kept so verification can demonstrate the failure.
enum class AfSumPlacement { outside, inside };

// Prefix sums S(x) = g(1) + ... + g(x) rebuilt from
// S(x) = sum_{omega <= x-1} (-1)^{k+1} S(x - omega) + (a_f partial sum),
// values[x] = S(x) for x = 1..max_x, values[0] = 0.
struct AverageOrderTable {
  std::vector<BigInt> values;
  bool operator==(const AverageOrderTable&) const = default;
};

AverageOrderTable sigma_recurrence(const FunctionPair& pair, std::int64_t max_x,
                                   AfSumPlacement placement = AfSumPlacement::outside);

// Closed forms for compute_B of the three parameter-free builtin pairs.
// Each is a finite pentagonal-bounded sum evaluated in pure integers.
std::int64_t closed_B_mu(std::int64_t m);
std::int64_t closed_B_phi(std::int64_t m);
std::int64_t closed_B_lambda(std::int64_t m);

// Coefficients 0..n of Q_n(q) = 1 - sum_{omega <= n} (-1)^k q^omega, the
// polynomial the g- and sigma-recurrences implicitly divide by.  Its
// nonconstant coefficients are the negated euler coefficients.
std::vector<std::int64_t> q_polynomial(std::int64_t n);

// Combinatorial route to entry_a: over partitions of n into distinct parts
// that contain i, count those with an odd number of parts minus those with
// an even number.  Exponential; intended for small cross-checks only.
std::int64_t distinct_partition_stat(std::int64_t n, std::int64_t i);

}  // namespace lambert
