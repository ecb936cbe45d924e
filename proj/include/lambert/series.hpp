#pragma once

#include "lambert/arithmetic.hpp"
#include "lambert/bigint.hpp"

#include <cstdint>
#include <vector>

namespace lambert {

// Formal power series in q over exact integers, truncated at a fixed order:
// coefficients of q^0..q^order are tracked and everything beyond is dropped.
// Binary operations on mixed orders carry the minimum operand order, so a
// result never claims coefficients it cannot know exactly.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::int64_t order);

  static TruncatedSeries constant(const BigInt& value, std::int64_t order);

  // value * q^degree; degrees beyond the order are dropped by truncation.
  static TruncatedSeries monomial(const BigInt& value, std::int64_t degree,
                                  std::int64_t order);

  std::int64_t order() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

  // Coefficient of q^n.  Out-of-range access throws std::out_of_range rather
  // than returning a silent zero, so truncation-order bugs stay loud.
  const BigInt& coefficient(std::int64_t n) const;

  void set_coefficient(std::int64_t n, BigInt value);
  void add_to_coefficient(std::int64_t n, const BigInt& value);

  // Copy restricted to q^0..q^new_order; requires new_order <= order().
  TruncatedSeries truncated(std::int64_t new_order) const;

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

// Cauchy product truncated at the minimum operand order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return mul(a, b);
}

// 1/(1 - q^i) = 1 + q^i + q^{2i} + ..., i >= 1.
TruncatedSeries geometric_reciprocal(std::int64_t i, std::int64_t order);

// (1-q)(1-q^2)...(1-q^n); factors whose exponent exceeds the order cannot
// affect the truncation and are skipped.
TruncatedSeries pochhammer_finite(std::int64_t n, std::int64_t order);

// sum_{k=1}^{m+1} f(k) q^k / (1 - q^k): the partial sum whose coefficients
// at q^1..q^{m+1} equal the divisor sums g(1..m+1).  Requires order >= m.
TruncatedSeries lambert_partial_sum(const FunctionPair& pair, std::int64_t m,
                                    std::int64_t order);

// Coefficient of q^n in q^i/(1-q^i) * (1-q)(1-q^2)...(1-q^n): the series
// route to the factor-matrix entries, kept independent of the direct
// solution-count evaluation so the two can be cross-checked.
std::int64_t series_a_ni(std::int64_t n, std::int64_t i);

}  // namespace lambert
