#include "lambert/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace lambert {

namespace {

void check_order(std::int64_t order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::int64_t order) {
  check_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::constant(const BigInt& value, std::int64_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = value;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const BigInt& value, std::int64_t degree,
                                          std::int64_t order) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  TruncatedSeries s(order);
  if (degree <= order) s.coeffs_[static_cast<std::size_t>(degree)] = value;
  return s;
}

const BigInt& TruncatedSeries::coefficient(std::int64_t n) const {
  if (n < 0 || n > order()) {
    throw std::out_of_range("coefficient " + std::to_string(n) +
                            " requested from series of order " + std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set_coefficient(std::int64_t n, BigInt value) {
  if (n < 0 || n > order()) {
    throw std::out_of_range("coefficient " + std::to_string(n) +
                            " set on series of order " + std::to_string(order()));
  }
  coeffs_[static_cast<std::size_t>(n)] = std::move(value);
}

void TruncatedSeries::add_to_coefficient(std::int64_t n, const BigInt& value) {
  if (n < 0 || n > order()) {
    throw std::out_of_range("coefficient " + std::to_string(n) +
                            " updated on series of order " + std::to_string(order()));
  }
  coeffs_[static_cast<std::size_t>(n)] += value;
}

TruncatedSeries TruncatedSeries::truncated(std::int64_t new_order) const {
  if (new_order < 0 || new_order > order()) {
    throw std::out_of_range("truncation order " + std::to_string(new_order) +
                            " outside series of order " + std::to_string(order()));
  }
  TruncatedSeries out(new_order);
  for (std::int64_t n = 0; n <= new_order; ++n) {
    out.coeffs_[static_cast<std::size_t>(n)] = coeffs_[static_cast<std::size_t>(n)];
  }
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (std::int64_t n = 0; n <= order; ++n) {
    out.set_coefficient(n, a.coefficient(n) + b.coefficient(n));
  }
  return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (std::int64_t n = 0; n <= order; ++n) {
    out.set_coefficient(n, a.coefficient(n) - b.coefficient(n));
  }
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::int64_t order = std::min(a.order(), b.order());
  TruncatedSeries out(order);
  for (std::int64_t i = 0; i <= order; ++i) {
    const BigInt& ai = a.coefficient(i);
    if (ai.is_zero()) continue;
    for (std::int64_t j = 0; i + j <= order; ++j) {
      const BigInt& bj = b.coefficient(j);
      if (bj.is_zero()) continue;
      out.add_to_coefficient(i + j, ai * bj);
    }
  }
  return out;
}

TruncatedSeries geometric_reciprocal(std::int64_t i, std::int64_t order) {
  if (i < 1) throw std::invalid_argument("geometric_reciprocal: exponent must be >= 1");
  TruncatedSeries out(order);
  for (std::int64_t t = 0; t <= order; t += i) out.set_coefficient(t, 1);
  return out;
}

TruncatedSeries pochhammer_finite(std::int64_t n, std::int64_t order) {
  if (n < 0) throw std::invalid_argument("pochhammer_finite: n must be nonnegative");
  TruncatedSeries out = TruncatedSeries::constant(1, order);
  // Multiply by (1 - q^i) in place, highest coefficient first.
  for (std::int64_t i = 1; i <= std::min(n, order); ++i) {
    for (std::int64_t j = order; j >= i; --j) {
      out.add_to_coefficient(j, -out.coefficient(j - i));
    }
  }
  return out;
}

TruncatedSeries lambert_partial_sum(const FunctionPair& pair, std::int64_t m,
                                    std::int64_t order) {
  if (m < 0) throw std::invalid_argument("lambert_partial_sum: m must be nonnegative");
  if (order < m) {
    throw std::invalid_argument("lambert_partial_sum: order must be at least m");
  }
  TruncatedSeries out(order);
  for (std::int64_t k = 1; k <= m + 1; ++k) {
    const BigInt fk = pair.f(k);
    if (fk.is_zero()) continue;
    // f(k) q^k / (1 - q^k) contributes f(k) at every positive multiple of k.
    for (std::int64_t t = k; t <= order; t += k) out.add_to_coefficient(t, fk);
  }
  return out;
}

std::int64_t series_a_ni(std::int64_t n, std::int64_t i) {
  if (n < 1 || i < 1 || i > n) {
    throw std::invalid_argument("series_a_ni: need 1 <= i <= n");
  }
  const TruncatedSeries numerator =
      mul(TruncatedSeries::monomial(1, i, n), geometric_reciprocal(i, n));
  const TruncatedSeries product = mul(numerator, pochhammer_finite(n, n));
  return product.coefficient(n).convert_to<std::int64_t>();
}

}  // namespace lambert
